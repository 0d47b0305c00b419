// Copyright 2026 The gec-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GECLAB_NOISING_HPP_
#define GECLAB_NOISING_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "geclab/rng.hpp"
#include "geclab/types.hpp"

namespace geclab {

// Token -> candidate replacements, ordered by (edit distance,
// lexicographic). No token maps to itself.
using ConfusionSet = std::map<std::string, std::vector<std::string>>;

// Neighbors within character edit distance <= max_distance drawn from the
// vocabulary itself; tokens without neighbors are absent.
ConfusionSet build_confusion_set(const std::vector<std::string>& vocabulary,
                                 int max_distance);

// Confusion file format: token<TAB>cand1 cand2 ...
ConfusionSet load_confusion_file(const std::string& path);
void save_confusion_file(const ConfusionSet& confusion, const std::string& path);

struct NoiseConfig {
  double word_error_rate = 0.15;
  double char_error_rate = 0.02;
  // substitute, delete, insert, swap; must sum to 1 within 1e-9.
  std::array<double, 4> op_weights = {0.7, 0.1, 0.1, 0.1};
  ConfusionSet confusion;
  std::vector<std::string> vocabulary;  // insertion candidates

  void validate() const;  // throws ValidationError
};

// Flat "key = value" config file with '#' comments. Recognized keys:
// word_error_rate, char_error_rate, weight_substitute, weight_delete,
// weight_insert, weight_swap, confusion_file, vocab_file. File paths are
// resolved relative to the config file's directory.
NoiseConfig load_noise_config(const std::string& path);

struct NoiseStats {
  long long tokens_in = 0;
  long long word_ops_drawn = 0;
  long long word_ops_applied = 0;
  long long char_ops_drawn = 0;
  long long char_ops_applied = 0;
};

// Injects pseudo errors into one sentence. The number of word-level
// operations is Binomial(len, word_error_rate); each drawn operation picks
// its kind by op_weights and a uniform position (substitutions skip tokens
// without confusion candidates). Character-level operations then run at
// char_error_rate over the surviving characters, drawing replacement
// characters from the sentence's own alphabet. Deterministic in (input,
// config, rng state).
TokenSeq noise_sentence(const TokenSeq& tokens, const NoiseConfig& config, Rng& rng,
                        NoiseStats* stats = nullptr);

// Streams a one-sentence-per-line corpus: line i is noised with the
// generator split(seed, i), preserving order, with memory independent of
// corpus size. Writes the noised side to out_src and the original to
// out_tgt. Returns the number of lines processed.
std::size_t noise_corpus_stream(std::istream& input, std::ostream& out_src,
                                std::ostream& out_tgt, const NoiseConfig& config,
                                uint64_t seed, NoiseStats* stats = nullptr);
std::size_t noise_corpus_files(const std::string& input_path,
                               const std::string& out_src_path,
                               const std::string& out_tgt_path,
                               const NoiseConfig& config, uint64_t seed,
                               NoiseStats* stats = nullptr);

struct DenoiseConfig {
  double mask_ratio = 0.3;
  double span_lambda = 3.0;
  bool shuffle_sentences = true;
  std::string mask_token = "<mask>";

  void validate() const;
};

struct DenoiseStats {
  long long tokens_in = 0;
  long long spans_placed = 0;   // includes zero-length spans
  long long tokens_covered = 0;
  long long zero_length_spans = 0;
};

// Produces one (noised, original) document pair. Sentence order is
// uniformly permuted when shuffle_sentences; Poisson(span_lambda) spans at
// uniform positions are each replaced by one mask token until mask_ratio
// of the tokens are covered (zero-length draws insert a bare mask). Spans
// never overlap. The original document keeps the input sentence order.
std::pair<TokenSeq, TokenSeq> bart_denoise(const std::vector<TokenSeq>& sentences,
                                           const DenoiseConfig& config, Rng& rng,
                                           DenoiseStats* stats = nullptr);

// File-level denoising: consecutive blocks of sentences_per_doc lines form
// one document; each block emits one noised / original line pair, with the
// block's generator split from the seed by block index.
std::size_t denoise_corpus_files(const std::string& input_path,
                                 const std::string& out_src_path,
                                 const std::string& out_tgt_path,
                                 const DenoiseConfig& config, int sentences_per_doc,
                                 uint64_t seed, DenoiseStats* stats = nullptr);

}  // namespace geclab

#endif  // GECLAB_NOISING_HPP_
