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

#include "geclab/m2_scorer.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "geclab/m2_format.hpp"

namespace geclab {

double f_beta(double p, double r, double beta) {
  const double b2 = beta * beta;
  const double denom = b2 * p + r;
  if (denom == 0.0) return 0.0;
  return (1.0 + b2) * p * r / denom;
}

double precision_from_counts(long long tp, long long fp) {
  const long long proposed = tp + fp;
  return proposed == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(proposed);
}

double recall_from_counts(long long tp, long long fn) {
  const long long gold = tp + fn;
  return gold == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(gold);
}

namespace {

// F_beta straight from cumulative counts, with the stock scorer's
// conventions baked in (0 proposed and 0 gold is a perfect score).
double f_from_counts(long long correct, long long proposed, long long gold, double beta) {
  return f_beta(precision_from_counts(correct, proposed - correct),
                recall_from_counts(correct, gold - correct), beta);
}

// One lattice state: source offset i, hypothesis offset j, index g of the
// first gold edit not yet consumed by the monotone matcher.
struct StateValue {
  // Packed objective: tp * kEditBase - edits. Higher is better.
  int64_t score = std::numeric_limits<int64_t>::min();
  int prev_i = -1, prev_j = -1, prev_g = -1;
  // Arc that produced this value. For edit arcs, matched_gold is the gold
  // index or -1.
  bool via_edit = false;
  int matched_gold = -1;
};

constexpr int64_t kEditBase = 1 << 20;

class SentenceScorer {
 public:
  SentenceScorer(const TokenSeq& src, const TokenSeq& hyp, std::vector<Edit> gold,
                 int max_unchanged)
      : src_(src), hyp_(hyp), gold_(std::move(gold)), max_unchanged_(max_unchanged),
        n_(static_cast<int>(src.size())), m_(static_cast<int>(hyp.size())),
        g_count_(static_cast<int>(gold_.size())) {}

  SentenceDetail run() {
    const std::size_t states =
        static_cast<std::size_t>(n_ + 1) * (m_ + 1) * (g_count_ + 1);
    values_.assign(states, StateValue{});
    values_[index(0, 0, 0)].score = 0;

    for (int i = 0; i <= n_; ++i) {
      for (int j = 0; j <= m_; ++j) {
        bool any_live = false;
        for (int g = 0; g <= g_count_; ++g) {
          if (values_[index(i, j, g)].score != std::numeric_limits<int64_t>::min()) {
            any_live = true;
            break;
          }
        }
        if (!any_live) continue;
        relax_match(i, j);
        relax_edits(i, j);
      }
    }

    // Best terminal state over g.
    int best_g = 0;
    int64_t best = std::numeric_limits<int64_t>::min();
    for (int g = 0; g <= g_count_; ++g) {
      const int64_t s = values_[index(n_, m_, g)].score;
      if (s > best) {
        best = s;
        best_g = g;
      }
    }

    SentenceDetail detail;
    const long long tp = best / kEditBase;
    detail.tp = tp;
    detail.fn = g_count_ - tp;

    // Backtrace.
    int i = n_, j = m_, g = best_g;
    while (i != 0 || j != 0 || g != 0) {
      const StateValue& v = values_[index(i, j, g)];
      if (v.via_edit) {
        Edit e;
        e.start = v.prev_i;
        e.end = i;
        e.replacement.assign(hyp_.begin() + v.prev_j, hyp_.begin() + j);
        ScoredEdit se{std::move(e), v.matched_gold >= 0};
        detail.chosen.push_back(std::move(se));
        if (v.matched_gold >= 0) {
          detail.matched_gold.push_back(static_cast<std::size_t>(v.matched_gold));
        }
      }
      i = v.prev_i;
      const int pj = v.prev_j;
      const int pg = v.prev_g;
      j = pj;
      g = pg;
    }
    std::reverse(detail.chosen.begin(), detail.chosen.end());
    std::reverse(detail.matched_gold.begin(), detail.matched_gold.end());
    detail.fp = static_cast<long long>(detail.chosen.size()) - detail.tp;
    return detail;
  }

 private:
  std::size_t index(int i, int j, int g) const {
    return (static_cast<std::size_t>(i) * (m_ + 1) + j) * (g_count_ + 1) + g;
  }

  void offer(int i, int j, int g, int64_t score, int pi, int pj, int pg, bool via_edit,
             int matched_gold) {
    StateValue& slot = values_[index(i, j, g)];
    if (score > slot.score) {
      slot.score = score;
      slot.prev_i = pi;
      slot.prev_j = pj;
      slot.prev_g = pg;
      slot.via_edit = via_edit;
      slot.matched_gold = matched_gold;
    }
  }

  void relax_match(int i, int j) {
    if (i >= n_ || j >= m_ || src_[i] != hyp_[j]) return;
    for (int g = 0; g <= g_count_; ++g) {
      const int64_t s = values_[index(i, j, g)].score;
      if (s == std::numeric_limits<int64_t>::min()) continue;
      offer(i + 1, j + 1, g, s, i, j, g, false, -1);
    }
  }

  // Finds the unique gold edit with exactly this span and replacement at
  // or after position g, or -1.
  int find_gold(int g, int start, int end, int j, int j2) const {
    for (int k = g; k < g_count_; ++k) {
      const Edit& ge = gold_[k];
      if (ge.start > start) break;
      if (ge.start != start || ge.end != end) continue;
      const auto len = static_cast<std::size_t>(j2 - j);
      if (ge.replacement.size() != len) continue;
      if (std::equal(ge.replacement.begin(), ge.replacement.end(), hyp_.begin() + j)) {
        return k;
      }
    }
    return -1;
  }

  void relax_edits(int i, int j) {
    // lcs_row[d] = LCS(src[i, i2), hyp[j, j + d)), updated as i2 grows.
    const int width = m_ - j;
    lcs_row_.assign(width + 1, 0);
    for (int i2 = i; i2 <= n_; ++i2) {
      if (i2 > i) {
        // Extend the span by src[i2 - 1].
        int diag = 0;  // lcs of previous row at d - 1
        for (int d = 1; d <= width; ++d) {
          const int up = lcs_row_[d];
          const int took = (src_[i2 - 1] == hyp_[j + d - 1]) ? diag + 1 : 0;
          lcs_row_[d] = std::max({took, up, lcs_row_[d - 1]});
          diag = up;
        }
      }
      for (int d = 0; d <= width; ++d) {
        const int j2 = j + d;
        if (i2 == i && j2 == j) continue;
        const int lcs = lcs_row_[d];
        if (lcs > max_unchanged_) continue;
        if (i2 - i == d && lcs == d) continue;  // span rewrites to itself
        const int matched = find_gold(0, i, i2, j, j2);
        for (int g = 0; g <= g_count_; ++g) {
          const int64_t s = values_[index(i, j, g)].score;
          if (s == std::numeric_limits<int64_t>::min()) continue;
          if (matched >= 0 && matched >= g) {
            offer(i2, j2, matched + 1, s + kEditBase - 1, i, j, g, true, matched);
          } else {
            offer(i2, j2, g, s - 1, i, j, g, true, -1);
          }
        }
      }
    }
  }

  const TokenSeq& src_;
  const TokenSeq& hyp_;
  std::vector<Edit> gold_;
  int max_unchanged_;
  int n_, m_, g_count_;
  std::vector<StateValue> values_;
  std::vector<int> lcs_row_;
};

}  // namespace

SentenceDetail score_sentence_detail(const TokenSeq& source, const TokenSeq& hypothesis,
                                     const GoldAnnotation& gold, int max_unchanged) {
  validate_annotation(gold, source.size());
  std::vector<Edit> gold_edits = gold.plain_edits();

  SentenceDetail detail;
  if (hypothesis.size() > source.size() + kSpuriousTokenGuard) {
    detail.fn = static_cast<long long>(gold_edits.size());
    return detail;
  }
  SentenceScorer scorer(source, hypothesis, std::move(gold_edits), max_unchanged);
  return scorer.run();
}

SentenceCounts score_sentence(const TokenSeq& source, const TokenSeq& hypothesis,
                              const GoldAnnotation& gold, int max_unchanged) {
  const SentenceDetail d = score_sentence_detail(source, hypothesis, gold, max_unchanged);
  return SentenceCounts{d.tp, d.fp, d.fn, gold.annotator_id};
}

std::vector<SentenceSelection> select_annotators(const std::vector<CorpusEntry>& entries,
                                                 double beta, int max_unchanged) {
  std::vector<SentenceSelection> selections;
  selections.reserve(entries.size());
  long long correct = 0, proposed = 0, gold_total = 0;

  for (const auto& entry : entries) {
    if (entry.annotations.empty()) {
      throw ValidationError("corpus entry without annotations");
    }
    // Evaluate annotators in ascending id so ties resolve to the earliest.
    std::vector<std::size_t> order(entry.annotations.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return entry.annotations[a].annotator_id < entry.annotations[b].annotator_id;
    });

    bool have_best = false;
    double best_f = -1.0;
    long long best_correct = -1;
    double best_size = 0.0;
    SentenceSelection best;
    const double b2 = beta * beta;

    for (std::size_t k : order) {
      const GoldAnnotation& ann = entry.annotations[k];
      SentenceDetail detail =
          score_sentence_detail(entry.source, entry.hypothesis, ann, max_unchanged);
      const long long c = correct + detail.tp;
      const long long p = proposed + detail.tp + detail.fp;
      const long long g = gold_total + detail.tp + detail.fn;
      const double f = f_from_counts(c, p, g, beta);
      const double size = static_cast<double>(p) + b2 * static_cast<double>(g);
      const bool wins = !have_best || f > best_f ||
                        (f == best_f && c > best_correct) ||
                        (f == best_f && c == best_correct && size < best_size);
      if (wins) {
        have_best = true;
        best_f = f;
        best_correct = c;
        best_size = size;
        best.chosen_annotator = ann.annotator_id;
        best.annotation_index = k;
        best.detail = std::move(detail);
      }
    }

    correct += best.detail.tp;
    proposed += best.detail.tp + best.detail.fp;
    gold_total += best.detail.tp + best.detail.fn;
    selections.push_back(std::move(best));
  }
  return selections;
}

ScoreReport score_corpus(const std::vector<CorpusEntry>& entries, double beta,
                         int max_unchanged) {
  ScoreReport report;
  report.beta = beta;
  const auto selections = select_annotators(entries, beta, max_unchanged);
  for (const auto& sel : selections) {
    report.tp += sel.detail.tp;
    report.fp += sel.detail.fp;
    report.fn += sel.detail.fn;
    report.per_sentence.push_back(SentenceCounts{sel.detail.tp, sel.detail.fp,
                                                 sel.detail.fn, sel.chosen_annotator});
  }
  report.precision = precision_from_counts(report.tp, report.fp);
  report.recall = recall_from_counts(report.tp, report.fn);
  report.f = f_beta(report.precision, report.recall, beta);
  return report;
}

std::vector<CorpusEntry> make_corpus(const M2Document& gold,
                                     const std::vector<TokenSeq>& hypotheses) {
  if (gold.entries.size() != hypotheses.size()) {
    throw ValidationError("hypothesis count " + std::to_string(hypotheses.size()) +
                          " does not match gold entry count " +
                          std::to_string(gold.entries.size()));
  }
  std::vector<CorpusEntry> entries;
  entries.reserve(gold.entries.size());
  for (std::size_t i = 0; i < gold.entries.size(); ++i) {
    entries.push_back(CorpusEntry{gold.entries[i].source, hypotheses[i],
                                  gold.entries[i].annotations});
  }
  return entries;
}

}  // namespace geclab
