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

#ifndef GECLAB_GLEU_HPP_
#define GECLAB_GLEU_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "geclab/types.hpp"

namespace geclab {

inline constexpr int kGleuDefaultNMax = 4;
inline constexpr int kGleuDefaultIterations = 500;

// Per-sentence n-gram statistics against one reference. For each n the
// numerator rewards hypothesis n-grams found in the reference and deducts
// n-grams the hypothesis shares with the source beyond their reference
// count (floored at zero); the denominator is the hypothesis n-gram count.
struct GleuStats {
  std::vector<long long> numerators;    // index 0 is n = 1
  std::vector<long long> denominators;
  long long hyp_length = 0;
  long long ref_length = 0;
};

GleuStats gleu_stats(const TokenSeq& source, const TokenSeq& hypothesis,
                     const TokenSeq& reference, int n_max);

// Corpus GLEU. Each iteration samples one reference per sentence with the
// stream split(iteration) of the seeded generator (sentences drawn in
// order), accumulates corpus-level stats, and scores
//   BP * exp(sum_n log(num_n / den_n) / n_max),
// with brevity penalty min(1, exp(1 - ref_len / hyp_len)). A zero
// numerator (or an empty denominator) zeroes the iteration. The result is
// the mean over iterations.
//
// When every sentence has exactly one reference the sampling is
// degenerate: the score is computed once and neither `iterations` nor
// `seed` affects it (seed may then be omitted). Otherwise a seed is
// required. Throws ValidationError on an empty corpus, a sentence without
// references, misaligned inputs, or a missing seed.
double gleu_corpus(const std::vector<TokenSeq>& sources,
                   const std::vector<TokenSeq>& hypotheses,
                   const std::vector<std::vector<TokenSeq>>& reference_sets,
                   int n_max, int iterations, std::optional<uint64_t> seed);

}  // namespace geclab

#endif  // GECLAB_GLEU_HPP_
