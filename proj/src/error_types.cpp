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

#include "geclab/error_types.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "geclab/corpus.hpp"
#include "geclab/text.hpp"

namespace geclab {

namespace {

// Multiset difference in both directions: tokens not shared between the
// two sides, counting multiplicity.
std::vector<std::string> uncommon_tokens(const TokenSeq& a, const TokenSeq& b) {
  std::map<std::string, int> balance;
  for (const auto& t : a) ++balance[t];
  for (const auto& t : b) --balance[t];
  std::vector<std::string> out;
  for (const auto& [token, n] : balance) {
    for (int k = 0; k < std::abs(n); ++k) out.push_back(token);
  }
  return out;
}

bool multiset_equal(const TokenSeq& a, const TokenSeq& b) {
  if (a.size() != b.size()) return false;
  TokenSeq sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace

bool TypeLexicons::is_determiner(const std::string& token) const {
  return determiners.count(fold_case(token)) > 0;
}

bool TypeLexicons::is_preposition(const std::string& token) const {
  return prepositions.count(fold_case(token)) > 0;
}

bool TypeLexicons::in_vocabulary(const std::string& token) const {
  return vocabulary.count(fold_case(token)) > 0;
}

TypeLexicons load_lexicons(const std::string& dir) {
  TypeLexicons lex;
  const auto load = [&](const char* name, std::unordered_set<std::string>& into) {
    for_each_line(dir + "/" + name, [&](std::size_t, const std::string& line) {
      for (const auto& tok : split_tokens(line)) into.insert(fold_case(tok));
    });
  };
  load("determiners.txt", lex.determiners);
  load("prepositions.txt", lex.prepositions);
  load("vocab.txt", lex.vocabulary);
  return lex;
}

std::string classify_edit(const Edit& edit, const TokenSeq& source,
                          const TypeLexicons& lexicons) {
  TokenSeq src_side;
  if (edit.start >= 0 && edit.end <= static_cast<int>(source.size())) {
    src_side.assign(source.begin() + edit.start, source.begin() + edit.end);
  }
  const TokenSeq& repl_side = edit.replacement;

  const bool src_punct = all_punct(src_side);
  const bool repl_punct = all_punct(repl_side);
  if ((src_punct || src_side.empty()) && (repl_punct || repl_side.empty()) &&
      (src_punct || repl_punct)) {
    return "PUNCT";
  }

  if (!src_side.empty() && !repl_side.empty() &&
      fold_concat(src_side) == fold_concat(repl_side)) {
    return "ORTH";
  }

  if (src_side.size() >= 2 && multiset_equal(src_side, repl_side)) {
    return "WO";
  }

  if (src_side.size() == 1 && repl_side.size() == 1 &&
      !lexicons.in_vocabulary(src_side[0]) && lexicons.in_vocabulary(repl_side[0]) &&
      char_edit_distance(src_side[0], repl_side[0], 2) <= 2) {
    return "SPELL";
  }

  const auto uncommon = uncommon_tokens(src_side, repl_side);
  if (!uncommon.empty()) {
    const auto all_in = [&](bool (TypeLexicons::*pred)(const std::string&) const) {
      return std::all_of(uncommon.begin(), uncommon.end(),
                         [&](const std::string& t) { return (lexicons.*pred)(t); });
    };
    if (all_in(&TypeLexicons::is_determiner)) return "DET";
    if (all_in(&TypeLexicons::is_preposition)) return "PREP";
  }
  return "OTHER";
}

namespace {

std::string gold_label_or_rules(const Edit& gold_edit, const TokenSeq& source,
                                const TypeLexicons& lexicons) {
  if (!gold_edit.type_label.empty() && gold_edit.type_label != "UNK") {
    return gold_edit.type_label;
  }
  return classify_edit(gold_edit, source, lexicons);
}

}  // namespace

ScoreReport score_by_type(const std::vector<CorpusEntry>& entries,
                          const TypeLexicons& lexicons, double beta,
                          int max_unchanged) {
  ScoreReport report;
  report.beta = beta;
  report.has_per_type = true;

  const auto selections = select_annotators(entries, beta, max_unchanged);
  for (std::size_t s = 0; s < entries.size(); ++s) {
    const CorpusEntry& entry = entries[s];
    const SentenceSelection& sel = selections[s];
    const GoldAnnotation& ann = entry.annotations[sel.annotation_index];

    report.tp += sel.detail.tp;
    report.fp += sel.detail.fp;
    report.fn += sel.detail.fn;
    report.per_sentence.push_back(SentenceCounts{sel.detail.tp, sel.detail.fp,
                                                 sel.detail.fn, sel.chosen_annotator});

    // Matched hypothesis edits take the gold label; unmatched ones are
    // rule classified.
    std::size_t next_match = 0;
    for (const auto& scored : sel.detail.chosen) {
      if (scored.matched) {
        const std::size_t gold_idx = sel.detail.matched_gold[next_match++];
        const Edit& gold_edit = ann.edits[gold_idx].edit;
        ++report.per_type[gold_label_or_rules(gold_edit, entry.source, lexicons)].tp;
      } else {
        ++report.per_type[classify_edit(scored.edit, entry.source, lexicons)].fp;
      }
    }
    std::size_t m = 0;
    for (std::size_t gold_idx = 0; gold_idx < ann.edits.size(); ++gold_idx) {
      if (m < sel.detail.matched_gold.size() && sel.detail.matched_gold[m] == gold_idx) {
        ++m;
        continue;
      }
      const Edit& gold_edit = ann.edits[gold_idx].edit;
      ++report.per_type[gold_label_or_rules(gold_edit, entry.source, lexicons)].fn;
    }
  }

  report.precision = precision_from_counts(report.tp, report.fp);
  report.recall = recall_from_counts(report.tp, report.fn);
  report.f = f_beta(report.precision, report.recall, beta);
  for (auto& [label, counts] : report.per_type) {
    counts.precision = precision_from_counts(counts.tp, counts.fp);
    counts.recall = recall_from_counts(counts.tp, counts.fn);
    counts.f = f_beta(counts.precision, counts.recall, beta);
  }
  return report;
}

std::string render_type_table(const ScoreReport& report) {
  std::vector<std::pair<std::string, const PerTypeCounts*>> rows;
  for (const auto& [label, counts] : report.per_type) {
    rows.emplace_back(label, &counts);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const long long ga = a.second->tp + a.second->fn;
    const long long gb = b.second->tp + b.second->fn;
    if (ga != gb) return ga > gb;
    return a.first < b.first;
  });

  std::size_t width = 4;  // "TYPE"
  for (const auto& [label, counts] : rows) width = std::max(width, label.size());

  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-*s %6s %6s F%-5.2g\n", static_cast<int>(width),
                "TYPE", "P", "R", report.beta);
  std::string out = buf;
  for (const auto& [label, counts] : rows) {
    std::snprintf(buf, sizeof(buf), "%-*s %6.2f %6.2f %6.2f\n", static_cast<int>(width),
                  label.c_str(), 100.0 * counts->precision, 100.0 * counts->recall,
                  100.0 * counts->f);
    out += buf;
  }
  return out;
}

}  // namespace geclab
