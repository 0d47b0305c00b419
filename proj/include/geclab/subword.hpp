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

#ifndef GECLAB_SUBWORD_HPP_
#define GECLAB_SUBWORD_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "geclab/types.hpp"

namespace geclab {

// Byte-pair encoding over whitespace tokens. Words are segmented into
// code-point symbols plus a trailing end-of-word symbol; learned merges
// replay in order on application. Emitted subwords carry a continuation
// suffix ("@@") on every non-final piece, so "subword" might become
// "sub@@ word". Input tokens that themselves end with the continuation
// marker are ambiguous under this scheme and will not round-trip; that is
// a property of the marker convention, not of this implementation.
struct BpeModel {
  std::vector<std::pair<std::string, std::string>> merges;
  std::string end_marker = "</w>";
  std::string continuation = "@@";
};

// Learns num_merges merges: at each step the most frequent adjacent symbol
// pair wins; frequency ties go to the lexicographically smallest pair,
// with the end-of-word symbol ordered after every ordinary symbol.
// Learning stops early once no pair occurs twice.
BpeModel bpe_learn(const std::map<std::string, long long>& frequencies, int num_merges);

// Builds the frequency table from a token-per-whitespace corpus file and
// learns from it.
BpeModel bpe_learn_file(const std::string& corpus_path, int num_merges);

// Segments a word / a sentence. Application replays merges in learned
// order; each merge pass combines occurrences left to right.
std::vector<std::string> bpe_segment_word(const BpeModel& model, const std::string& word);
TokenSeq bpe_apply(const BpeModel& model, const TokenSeq& tokens);

// Joins continuation-marked pieces back into words. Throws ValidationError
// on a dangling continuation marker or a piece that restores to nothing.
TokenSeq bpe_restore(const TokenSeq& subwords, const std::string& continuation = "@@");

// Model file: one merge per line, "left<SPACE>right", order significant.
void save_bpe_model(const BpeModel& model, const std::string& path);
BpeModel load_bpe_model(const std::string& path);

// Streaming file transforms (one sentence per line).
void bpe_apply_file(const BpeModel& model, const std::string& input_path,
                    const std::string& output_path);
void bpe_restore_file(const std::string& input_path, const std::string& output_path);

}  // namespace geclab

#endif  // GECLAB_SUBWORD_HPP_
