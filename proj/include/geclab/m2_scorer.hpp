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

#ifndef GECLAB_M2_SCORER_HPP_
#define GECLAB_M2_SCORER_HPP_

#include <map>
#include <string>
#include <vector>

#include "geclab/types.hpp"

namespace geclab {

// MaxMatch scoring.
//
// For one sentence the scorer considers every hypothesis edit sequence:
// non-overlapping span edits, sorted by position, whose application turns
// the source into the hypothesis, where each candidate edit may keep at
// most `max_unchanged` unchanged tokens inside its span (measured as the
// longest common subsequence of the replaced span and its replacement)
// and no candidate edit rewrites a span to itself. Among these it selects
// the sequence matching the most gold edits — span and replacement must
// be exactly equal, consumed in monotone order so a gold edit is credited
// at most once — breaking ties by fewest total edits. tp = matched edits,
// fp = chosen edits left unmatched, fn = gold edits left unmatched.
//
// Hypotheses longer than the source by more than kSpuriousTokenGuard
// tokens are not aligned at all and score (0, 0, |gold|), mirroring the
// stock scorer's guard against degenerate candidates.

inline constexpr int kDefaultMaxUnchanged = 2;
inline constexpr double kDefaultBeta = 0.5;
inline constexpr int kSpuriousTokenGuard = 32;

// (1 + beta^2) * p * r / (beta^2 * p + r); 0 when p == r == 0.
double f_beta(double p, double r, double beta);

// Precision/recall from counts with the 0/0 -> 1.0 convention.
double precision_from_counts(long long tp, long long fp);
double recall_from_counts(long long tp, long long fn);

struct SentenceCounts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  int chosen_annotator = 0;
};

struct ScoredEdit {
  Edit edit;
  bool matched = false;
};

struct SentenceDetail {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  std::vector<ScoredEdit> chosen;            // hypothesis edits, sorted
  std::vector<std::size_t> matched_gold;     // indices into the annotation's edits
};

// Scores one hypothesis against one annotator. Throws ValidationError on
// invalid gold spans.
SentenceDetail score_sentence_detail(const TokenSeq& source, const TokenSeq& hypothesis,
                                     const GoldAnnotation& gold, int max_unchanged);
SentenceCounts score_sentence(const TokenSeq& source, const TokenSeq& hypothesis,
                              const GoldAnnotation& gold, int max_unchanged);

struct CorpusEntry {
  TokenSeq source;
  TokenSeq hypothesis;
  std::vector<GoldAnnotation> annotations;
};

struct SentenceSelection {
  int chosen_annotator = 0;
  std::size_t annotation_index = 0;
  SentenceDetail detail;
};

// The multi-annotator protocol: sentences are folded in corpus order and,
// per sentence, the annotator maximizing the cumulative F_beta up to and
// including that sentence wins. Ties prefer more cumulative tp, then lower
// proposed + beta^2 * gold, then the earliest annotator.
std::vector<SentenceSelection> select_annotators(const std::vector<CorpusEntry>& entries,
                                                 double beta, int max_unchanged);

struct PerTypeCounts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f = 1.0;
};

struct ScoreReport {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f = 1.0;
  double beta = kDefaultBeta;
  std::vector<SentenceCounts> per_sentence;
  std::map<std::string, PerTypeCounts> per_type;  // filled by score_by_type
  bool has_per_type = false;
};

// Micro-averaged corpus score under the annotator-selection protocol.
ScoreReport score_corpus(const std::vector<CorpusEntry>& entries, double beta,
                         int max_unchanged);

// Pairs a hypothesis file (one sentence per line) with a gold document.
// Throws ValidationError when the line count differs from the entry count.
std::vector<CorpusEntry> make_corpus(const M2Document& gold,
                                     const std::vector<TokenSeq>& hypotheses);

}  // namespace geclab

#endif  // GECLAB_M2_SCORER_HPP_
