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

#ifndef GECLAB_ERROR_TYPES_HPP_
#define GECLAB_ERROR_TYPES_HPP_

#include <string>
#include <unordered_set>
#include <vector>

#include "geclab/m2_scorer.hpp"
#include "geclab/types.hpp"

namespace geclab {

// Rule-based edit classification without a POS tagger. POS-dependent
// categories are out of reach and land in OTHER.
struct TypeLexicons {
  std::unordered_set<std::string> determiners;   // case-folded
  std::unordered_set<std::string> prepositions;  // case-folded
  std::unordered_set<std::string> vocabulary;    // case-folded

  bool is_determiner(const std::string& token) const;
  bool is_preposition(const std::string& token) const;
  bool in_vocabulary(const std::string& token) const;
};

// Loads determiners.txt, prepositions.txt and vocab.txt (one token per
// line, UTF-8) from a directory, case-folding entries.
TypeLexicons load_lexicons(const std::string& dir);

// First matching rule wins:
//   PUNCT - both sides all punctuation (one side may be empty)
//   ORTH  - sides equal after case folding and whitespace removal
//   WO    - sides are equal as token multisets (pure reordering)
//   SPELL - 1:1 edit, source token out of vocabulary, replacement in
//           vocabulary within character edit distance 2
//   DET   - all tokens the sides do not share are determiners
//   PREP  - likewise for prepositions
//   OTHER - anything else
std::string classify_edit(const Edit& edit, const TokenSeq& source,
                          const TypeLexicons& lexicons);

// Scores the corpus exactly as score_corpus and distributes every tp, fp
// and fn over error types: gold edits keep their annotated label unless it
// is "UNK" (then the rules run); hypothesis-side fp edits are always rule
// classified. Per-type counts sum to the overall counts.
ScoreReport score_by_type(const std::vector<CorpusEntry>& entries,
                          const TypeLexicons& lexicons, double beta,
                          int max_unchanged);

// Per-type table rows sorted by gold-edit frequency (tp + fn, descending,
// alphabetical on ties): "TYPE P R F<beta>" as percentages.
std::string render_type_table(const ScoreReport& report);

}  // namespace geclab

#endif  // GECLAB_ERROR_TYPES_HPP_
