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

#include "geclab/subword.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "geclab/corpus.hpp"
#include "geclab/text.hpp"

namespace geclab {

namespace {

using Symbols = std::vector<std::string>;
using Pair = std::pair<std::string, std::string>;

Symbols word_symbols(const std::string& word, const std::string& end_marker) {
  Symbols symbols;
  for (char32_t cp : utf8_decode(word)) {
    symbols.push_back(utf8_encode(std::u32string(1, cp)));
  }
  symbols.push_back(end_marker);
  return symbols;
}

// One merge pass: combine adjacent (left, right) occurrences, left to
// right, without re-merging the freshly combined symbol.
void merge_pass(Symbols& symbols, const Pair& merge, const std::string& joined) {
  Symbols out;
  out.reserve(symbols.size());
  std::size_t i = 0;
  while (i < symbols.size()) {
    if (i + 1 < symbols.size() && symbols[i] == merge.first &&
        symbols[i + 1] == merge.second) {
      out.push_back(joined);
      i += 2;
    } else {
      out.push_back(std::move(symbols[i]));
      ++i;
    }
  }
  symbols = std::move(out);
}

// Collation for tie-breaking: the end-of-word symbol sorts after every
// ordinary symbol.
bool symbol_less(const std::string& a, const std::string& b, const std::string& marker) {
  const bool am = (a == marker);
  const bool bm = (b == marker);
  if (am != bm) return bm;
  return a < b;
}

bool pair_less(const Pair& a, const Pair& b, const std::string& marker) {
  if (a.first != b.first) return symbol_less(a.first, b.first, marker);
  return symbol_less(a.second, b.second, marker);
}

}  // namespace

BpeModel bpe_learn(const std::map<std::string, long long>& frequencies, int num_merges) {
  if (num_merges < 0) throw ValidationError("num_merges must be >= 0");
  BpeModel model;

  std::vector<std::pair<Symbols, long long>> words;
  words.reserve(frequencies.size());
  for (const auto& [word, count] : frequencies) {
    if (word.empty() || count <= 0) continue;
    words.emplace_back(word_symbols(word, model.end_marker), count);
  }

  for (int step = 0; step < num_merges; ++step) {
    std::map<Pair, long long> counts;
    for (const auto& [symbols, count] : words) {
      for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
        counts[Pair(symbols[i], symbols[i + 1])] += count;
      }
    }
    const Pair* best = nullptr;
    long long best_count = 0;
    for (const auto& [pair, count] : counts) {
      if (count > best_count ||
          (count == best_count && best != nullptr &&
           pair_less(pair, *best, model.end_marker))) {
        best = &pair;
        best_count = count;
      }
    }
    if (best == nullptr || best_count < 2) break;  // no pair repeats

    const Pair merge = *best;
    const std::string joined = merge.first + merge.second;
    for (auto& [symbols, count] : words) merge_pass(symbols, merge, joined);
    model.merges.push_back(merge);
  }
  return model;
}

BpeModel bpe_learn_file(const std::string& corpus_path, int num_merges) {
  std::map<std::string, long long> frequencies;
  for_each_line(corpus_path, [&](std::size_t, const std::string& line) {
    for (const auto& tok : split_tokens(line)) ++frequencies[tok];
  });
  return bpe_learn(frequencies, num_merges);
}

std::vector<std::string> bpe_segment_word(const BpeModel& model, const std::string& word) {
  Symbols symbols = word_symbols(word, model.end_marker);
  for (const auto& merge : model.merges) {
    if (symbols.size() < 2) break;
    merge_pass(symbols, merge, merge.first + merge.second);
  }

  // Drop the end-of-word marker (it is either a standalone trailing symbol
  // or a suffix merged into the final symbol) and mark continuations.
  if (!symbols.empty() && symbols.back() == model.end_marker) {
    symbols.pop_back();
  } else if (!symbols.empty()) {
    std::string& last = symbols.back();
    last.resize(last.size() - model.end_marker.size());
  }
  for (std::size_t i = 0; i + 1 < symbols.size(); ++i) symbols[i] += model.continuation;
  return symbols;
}

TokenSeq bpe_apply(const BpeModel& model, const TokenSeq& tokens) {
  TokenSeq out;
  for (const auto& token : tokens) {
    for (auto& piece : bpe_segment_word(model, token)) out.push_back(std::move(piece));
  }
  return out;
}

TokenSeq bpe_restore(const TokenSeq& subwords, const std::string& continuation) {
  TokenSeq out;
  std::string pending;
  bool open = false;
  for (const auto& piece : subwords) {
    const bool continues = piece.size() >= continuation.size() &&
                           piece.compare(piece.size() - continuation.size(),
                                         continuation.size(), continuation) == 0;
    if (continues) {
      pending += piece.substr(0, piece.size() - continuation.size());
      open = true;
    } else {
      pending += piece;
      if (pending.empty()) {
        throw ValidationError("subword restores to an empty token");
      }
      out.push_back(std::move(pending));
      pending.clear();
      open = false;
    }
  }
  if (open) {
    throw ValidationError("dangling continuation marker at end of sequence");
  }
  return out;
}

void save_bpe_model(const BpeModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (const auto& [left, right] : model.merges) {
    out << left << ' ' << right << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

BpeModel load_bpe_model(const std::string& path) {
  BpeModel model;
  for_each_line(path, [&](std::size_t line_no, const std::string& line) {
    if (line.empty()) return;
    const std::size_t space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 >= line.size() ||
        line.find(' ', space + 1) != std::string::npos) {
      throw ParseError("expected 'left right'", line_no);
    }
    model.merges.emplace_back(line.substr(0, space), line.substr(space + 1));
  });
  return model;
}

void bpe_apply_file(const BpeModel& model, const std::string& input_path,
                    const std::string& output_path) {
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + output_path + " for writing");
  // Corpora repeat words constantly; memoize segmentations per type.
  std::unordered_map<std::string, std::vector<std::string>> cache;
  for_each_line(input_path, [&](std::size_t, const std::string& line) {
    TokenSeq pieces;
    for (const auto& tok : split_tokens(line)) {
      auto it = cache.find(tok);
      if (it == cache.end()) {
        it = cache.emplace(tok, bpe_segment_word(model, tok)).first;
      }
      pieces.insert(pieces.end(), it->second.begin(), it->second.end());
    }
    out << join_tokens(pieces) << '\n';
  });
  if (!out) throw IoError("failed writing " + output_path);
}

void bpe_restore_file(const std::string& input_path, const std::string& output_path) {
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + output_path + " for writing");
  for_each_line(input_path, [&](std::size_t line_no, const std::string& line) {
    try {
      out << join_tokens(bpe_restore(split_tokens(line))) << '\n';
    } catch (const ValidationError& err) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + err.what());
    }
  });
  if (!out) throw IoError("failed writing " + output_path);
}

}  // namespace geclab
