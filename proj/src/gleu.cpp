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

#include "geclab/gleu.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "geclab/rng.hpp"

namespace geclab {

namespace {

using NgramCounts = std::unordered_map<std::string, long long>;

// n-grams keyed as tokens joined with an unlikely separator byte.
NgramCounts count_ngrams(const TokenSeq& tokens, int n) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (int k = 0; k < n; ++k) {
      if (k) key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

long long lookup(const NgramCounts& counts, const std::string& key) {
  const auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace

GleuStats gleu_stats(const TokenSeq& source, const TokenSeq& hypothesis,
                     const TokenSeq& reference, int n_max) {
  if (n_max < 1) throw ValidationError("n_max must be >= 1");
  GleuStats stats;
  stats.numerators.assign(n_max, 0);
  stats.denominators.assign(n_max, 0);
  stats.hyp_length = static_cast<long long>(hypothesis.size());
  stats.ref_length = static_cast<long long>(reference.size());
  for (int n = 1; n <= n_max; ++n) {
    const NgramCounts hyp_counts = count_ngrams(hypothesis, n);
    const NgramCounts src_counts = count_ngrams(source, n);
    const NgramCounts ref_counts = count_ngrams(reference, n);
    long long numerator = 0;
    for (const auto& [gram, hyp_count] : hyp_counts) {
      const long long ref_count = lookup(ref_counts, gram);
      numerator += std::min(hyp_count, ref_count);
      const long long in_source = std::min(hyp_count, lookup(src_counts, gram));
      numerator -= std::max(0LL, in_source - ref_count);
    }
    stats.numerators[n - 1] = std::max(0LL, numerator);
    stats.denominators[n - 1] =
        std::max(0LL, static_cast<long long>(hypothesis.size()) - n + 1);
  }
  return stats;
}

double gleu_corpus(const std::vector<TokenSeq>& sources,
                   const std::vector<TokenSeq>& hypotheses,
                   const std::vector<std::vector<TokenSeq>>& reference_sets,
                   int n_max, int iterations, std::optional<uint64_t> seed) {
  if (n_max < 1) throw ValidationError("n_max must be >= 1");
  if (iterations < 1) throw ValidationError("iterations must be >= 1");
  const std::size_t count = sources.size();
  if (count == 0) throw ValidationError("empty corpus");
  if (hypotheses.size() != count || reference_sets.size() != count) {
    throw ValidationError("sources, hypotheses and references must align");
  }
  std::size_t max_refs = 0;
  for (std::size_t s = 0; s < count; ++s) {
    if (reference_sets[s].empty()) {
      throw ValidationError("sentence " + std::to_string(s + 1) + " has no reference");
    }
    max_refs = std::max(max_refs, reference_sets[s].size());
  }

  // Stats are precomputed per (sentence, reference); iterations only
  // sample and sum them.
  std::vector<std::vector<GleuStats>> stats(count);
  for (std::size_t s = 0; s < count; ++s) {
    stats[s].reserve(reference_sets[s].size());
    for (const auto& ref : reference_sets[s]) {
      stats[s].push_back(gleu_stats(sources[s], hypotheses[s], ref, n_max));
    }
  }

  const auto iteration_score = [&](const std::vector<std::size_t>& picks) {
    std::vector<long long> num(n_max, 0), den(n_max, 0);
    long long hyp_len = 0, ref_len = 0;
    for (std::size_t s = 0; s < count; ++s) {
      const GleuStats& st = stats[s][picks[s]];
      for (int n = 0; n < n_max; ++n) {
        num[n] += st.numerators[n];
        den[n] += st.denominators[n];
      }
      hyp_len += st.hyp_length;
      ref_len += st.ref_length;
    }
    double log_sum = 0.0;
    for (int n = 0; n < n_max; ++n) {
      if (num[n] == 0 || den[n] == 0) return 0.0;
      log_sum += std::log(static_cast<double>(num[n]) / static_cast<double>(den[n]));
    }
    double bp = 1.0;
    if (hyp_len == 0) return 0.0;
    if (hyp_len < ref_len) {
      bp = std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
    }
    return bp * std::exp(log_sum / n_max);
  };

  std::vector<std::size_t> picks(count, 0);
  if (max_refs <= 1) {
    // Single-reference corpora: sampling is degenerate; one pass suffices.
    return iteration_score(picks);
  }
  if (!seed.has_value()) {
    throw ValidationError("a seed is required when sentences have multiple references");
  }

  const Rng root = Rng::seeded(*seed);
  double total = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Rng rng = root.split(static_cast<uint64_t>(it));
    for (std::size_t s = 0; s < count; ++s) {
      picks[s] = rng.index(reference_sets[s].size());
    }
    total += iteration_score(picks);
  }
  return total / iterations;
}

}  // namespace geclab
