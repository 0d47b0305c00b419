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

#ifndef GECLAB_ALIGNMENT_HPP_
#define GECLAB_ALIGNMENT_HPP_

#include "geclab/types.hpp"

namespace geclab {

// Token-level alignment costs, in half-units so everything stays integral:
// match 0, case-insensitive substitution 1 (0.5), substitution 2 (1.0),
// insertion/deletion 2 (1.0), adjacent transposition of exactly equal
// tokens 2 (1.0).
inline constexpr int kCostMatch = 0;
inline constexpr int kCostCaseSub = 1;
inline constexpr int kCostSub = 2;
inline constexpr int kCostIndel = 2;
inline constexpr int kCostTranspose = 2;

// Minimum alignment cost between two token sequences under the costs
// above, in half-units.
int alignment_cost(const TokenSeq& source, const TokenSeq& hypothesis);

// Extracts the span-edit script turning `source` into `hypothesis`:
// a minimum-cost Damerau-Levenshtein alignment is computed, then maximal
// runs of adjacent non-match operations are merged into single span edits
// (any matching token breaks a run). Equal-cost alignments are resolved by
// preferring substitution > transposition > deletion > insertion at the
// earliest position, which also places floating edits leftmost.
//
// The result is sorted, non-overlapping, labeled "UNK", and satisfies
// apply_edits(source, result) == hypothesis.
std::vector<Edit> extract_edits(const TokenSeq& source, const TokenSeq& hypothesis);

// Applies an edit script to a source sentence. Edits must be sorted by
// (start, end), non-overlapping, and within bounds; offsets refer to the
// original source. Multiple insertions at the same point apply in sequence
// order. Throws ValidationError on malformed scripts.
TokenSeq apply_edits(const TokenSeq& source, const std::vector<Edit>& edits);

}  // namespace geclab

#endif  // GECLAB_ALIGNMENT_HPP_
