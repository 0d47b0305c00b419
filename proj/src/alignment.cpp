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

#include "geclab/alignment.hpp"

#include <algorithm>
#include <limits>

#include "geclab/text.hpp"

namespace geclab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int substitution_cost(const std::string& a, const std::string& b) {
  if (a == b) return kCostMatch;
  if (fold_case(a) == fold_case(b)) return kCostCaseSub;
  return kCostSub;
}

// suffix[i][j] = minimal cost of aligning source[i..] with hypothesis[j..].
std::vector<std::vector<int>> suffix_costs(const TokenSeq& src, const TokenSeq& hyp) {
  const int n = static_cast<int>(src.size());
  const int m = static_cast<int>(hyp.size());
  std::vector<std::vector<int>> suffix(n + 1, std::vector<int>(m + 1, kInf));
  suffix[n][m] = 0;
  for (int i = n; i >= 0; --i) {
    for (int j = m; j >= 0; --j) {
      if (i == n && j == m) continue;
      int best = kInf;
      if (i < n && j < m) {
        best = std::min(best, substitution_cost(src[i], hyp[j]) + suffix[i + 1][j + 1]);
      }
      if (i + 1 < n && j + 1 < m && src[i] == hyp[j + 1] && src[i + 1] == hyp[j] &&
          src[i] != src[i + 1]) {
        best = std::min(best, kCostTranspose + suffix[i + 2][j + 2]);
      }
      if (i < n) best = std::min(best, kCostIndel + suffix[i + 1][j]);
      if (j < m) best = std::min(best, kCostIndel + suffix[i][j + 1]);
      suffix[i][j] = best;
    }
  }
  return suffix;
}

enum class Op { kMatch, kSub, kTranspose, kDelete, kInsert };

struct Step {
  Op op;
  int src_adv;
  int hyp_adv;
};

}  // namespace

int alignment_cost(const TokenSeq& source, const TokenSeq& hypothesis) {
  return suffix_costs(source, hypothesis)[0][0];
}

std::vector<Edit> extract_edits(const TokenSeq& source, const TokenSeq& hypothesis) {
  const int n = static_cast<int>(source.size());
  const int m = static_cast<int>(hypothesis.size());
  const auto suffix = suffix_costs(source, hypothesis);

  // Walk forward, always taking the highest-priority operation that stays
  // on a minimum-cost path. Edit operations rank above match so that when
  // an edit can float (e.g. deleting one of two equal adjacent tokens) it
  // lands at the leftmost position.
  std::vector<Step> steps;
  int i = 0;
  int j = 0;
  while (i < n || j < m) {
    const int here = suffix[i][j];
    if (i < n && j < m && source[i] != hypothesis[j] &&
        substitution_cost(source[i], hypothesis[j]) + suffix[i + 1][j + 1] == here) {
      steps.push_back({Op::kSub, 1, 1});
      ++i;
      ++j;
    } else if (i + 1 < n && j + 1 < m && source[i] == hypothesis[j + 1] &&
               source[i + 1] == hypothesis[j] && source[i] != source[i + 1] &&
               kCostTranspose + suffix[i + 2][j + 2] == here) {
      steps.push_back({Op::kTranspose, 2, 2});
      i += 2;
      j += 2;
    } else if (i < n && kCostIndel + suffix[i + 1][j] == here) {
      steps.push_back({Op::kDelete, 1, 0});
      ++i;
    } else if (j < m && kCostIndel + suffix[i][j + 1] == here) {
      steps.push_back({Op::kInsert, 0, 1});
      ++j;
    } else {
      // Only a match can remain on the optimal path now.
      steps.push_back({Op::kMatch, 1, 1});
      ++i;
      ++j;
    }
  }

  // Merge maximal runs of non-match operations into span edits.
  std::vector<Edit> edits;
  i = 0;
  j = 0;
  std::size_t k = 0;
  while (k < steps.size()) {
    if (steps[k].op == Op::kMatch) {
      ++i;
      ++j;
      ++k;
      continue;
    }
    const int edit_start = i;
    const int hyp_start = j;
    while (k < steps.size() && steps[k].op != Op::kMatch) {
      i += steps[k].src_adv;
      j += steps[k].hyp_adv;
      ++k;
    }
    Edit e;
    e.start = edit_start;
    e.end = i;
    e.replacement.assign(hypothesis.begin() + hyp_start, hypothesis.begin() + j);
    edits.push_back(std::move(e));
  }
  return edits;
}

TokenSeq apply_edits(const TokenSeq& source, const std::vector<Edit>& edits) {
  const int n = static_cast<int>(source.size());
  const Edit* prev = nullptr;
  for (const auto& e : edits) {
    if (e.start < 0 || e.end < e.start || e.end > n) {
      throw ValidationError("edit span [" + std::to_string(e.start) + ", " +
                            std::to_string(e.end) + ") out of range for " +
                            std::to_string(n) + " tokens");
    }
    if (e.start == e.end && e.replacement.empty()) {
      throw ValidationError("empty insertion at " + std::to_string(e.start));
    }
    if (prev != nullptr && e.start < prev->end) {
      throw ValidationError("overlapping or unsorted edits at [" +
                            std::to_string(e.start) + ", " +
                            std::to_string(e.end) + ")");
    }
    prev = &e;
  }

  TokenSeq out;
  out.reserve(source.size());
  std::size_t next = 0;
  int pos = 0;
  while (pos <= n) {
    while (next < edits.size() && edits[next].start == pos && edits[next].end == pos) {
      out.insert(out.end(), edits[next].replacement.begin(), edits[next].replacement.end());
      ++next;
    }
    if (next < edits.size() && edits[next].start == pos && edits[next].end > pos) {
      out.insert(out.end(), edits[next].replacement.begin(), edits[next].replacement.end());
      pos = edits[next].end;
      ++next;
      continue;
    }
    if (pos == n) break;
    out.push_back(source[pos]);
    ++pos;
  }
  return out;
}

}  // namespace geclab
