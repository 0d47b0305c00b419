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

#include "geclab/noising.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "geclab/text.hpp"

namespace geclab {

namespace {

uint64_t binomial_draw(Rng& rng, std::size_t n, double p) {
  uint64_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.bernoulli(p)) ++k;
  }
  return k;
}

enum class NoiseOp { kSubstitute = 0, kDelete = 1, kInsert = 2, kSwap = 3 };

NoiseOp draw_op(Rng& rng, const std::array<double, 4>& weights) {
  const double u = rng.next_unit();
  double acc = 0.0;
  for (int k = 0; k < 3; ++k) {
    acc += weights[k];
    if (u < acc) return static_cast<NoiseOp>(k);
  }
  return NoiseOp::kSwap;
}

}  // namespace

ConfusionSet build_confusion_set(const std::vector<std::string>& vocabulary,
                                 int max_distance) {
  if (max_distance < 1) throw ValidationError("max_distance must be >= 1");
  std::vector<std::string> vocab(vocabulary.begin(), vocabulary.end());
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());

  // Bucket by code-point length; only pairs within max_distance in length
  // can be neighbors.
  std::vector<std::size_t> lengths(vocab.size());
  std::size_t max_len = 0;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    lengths[i] = utf8_decode(vocab[i]).size();
    max_len = std::max(max_len, lengths[i]);
  }
  std::vector<std::vector<std::size_t>> by_length(max_len + 1);
  for (std::size_t i = 0; i < vocab.size(); ++i) by_length[lengths[i]].push_back(i);

  std::map<std::string, std::vector<std::pair<int, std::string>>> scored;
  const auto note_pair = [&](std::size_t a, std::size_t b, int dist) {
    scored[vocab[a]].emplace_back(dist, vocab[b]);
    scored[vocab[b]].emplace_back(dist, vocab[a]);
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::size_t co = len;
         co <= std::min(max_len, len + static_cast<std::size_t>(max_distance)); ++co) {
      for (std::size_t a : by_length[len]) {
        for (std::size_t b : by_length[co]) {
          if (co == len && b <= a) continue;
          const int d = char_edit_distance(vocab[a], vocab[b], max_distance);
          if (d <= max_distance) note_pair(a, b, d);
        }
      }
    }
  }

  ConfusionSet out;
  for (auto& [token, candidates] : scored) {
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::string> plain;
    plain.reserve(candidates.size());
    for (auto& [dist, cand] : candidates) plain.push_back(std::move(cand));
    out.emplace(token, std::move(plain));
  }
  return out;
}

ConfusionSet load_confusion_file(const std::string& path) {
  ConfusionSet out;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected 'token<TAB>candidates'", line_no);
    }
    const std::string token = line.substr(0, tab);
    TokenSeq candidates = split_tokens(std::string_view(line).substr(tab + 1));
    if (token.empty() || candidates.empty()) {
      throw ParseError("empty token or candidate list", line_no);
    }
    for (const auto& cand : candidates) {
      if (cand == token) {
        throw ParseError("token '" + token + "' lists itself as a candidate", line_no);
      }
    }
    out[token] = std::move(candidates);
  }
  return out;
}

void save_confusion_file(const ConfusionSet& confusion, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (const auto& [token, candidates] : confusion) {
    out << token << '\t' << join_tokens(candidates) << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

void NoiseConfig::validate() const {
  if (word_error_rate < 0.0 || word_error_rate > 1.0) {
    throw ValidationError("word_error_rate must be in [0, 1]");
  }
  if (char_error_rate < 0.0 || char_error_rate > 1.0) {
    throw ValidationError("char_error_rate must be in [0, 1]");
  }
  double sum = 0.0;
  for (double w : op_weights) {
    if (w < 0.0) throw ValidationError("operation weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("operation weights must sum to 1");
  }
  for (const auto& [token, candidates] : confusion) {
    for (const auto& cand : candidates) {
      if (cand == token) {
        throw ValidationError("confusion set maps '" + token + "' to itself");
      }
    }
  }
}

NoiseConfig load_noise_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();

  NoiseConfig config;
  std::string confusion_file, vocab_file;
  bool confusion_from_vocab = false;
  int confusion_max_distance = 1;

  const auto trim = [](std::string s) {
    const auto issp = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
  };
  const auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto as_double = [&]() {
      try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        throw ParseError("invalid number '" + value + "' for " + key, line_no);
      }
    };
    if (key == "word_error_rate") {
      config.word_error_rate = as_double();
    } else if (key == "char_error_rate") {
      config.char_error_rate = as_double();
    } else if (key == "weight_substitute") {
      config.op_weights[0] = as_double();
    } else if (key == "weight_delete") {
      config.op_weights[1] = as_double();
    } else if (key == "weight_insert") {
      config.op_weights[2] = as_double();
    } else if (key == "weight_swap") {
      config.op_weights[3] = as_double();
    } else if (key == "confusion_file") {
      confusion_file = resolve(value);
    } else if (key == "vocab_file") {
      vocab_file = resolve(value);
    } else if (key == "confusion_from_vocab") {
      confusion_from_vocab = (value == "true" || value == "1");
    } else if (key == "confusion_max_distance") {
      confusion_max_distance = static_cast<int>(as_double());
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }

  if (!vocab_file.empty()) {
    std::set<std::string> vocab;
    std::ifstream vin(vocab_file, std::ios::binary);
    if (!vin) throw IoError("cannot open " + vocab_file);
    std::string vline;
    while (std::getline(vin, vline)) {
      strip_cr(vline);
      for (const auto& tok : split_tokens(vline)) vocab.insert(tok);
    }
    config.vocabulary.assign(vocab.begin(), vocab.end());
  }
  if (!confusion_file.empty()) {
    config.confusion = load_confusion_file(confusion_file);
  } else if (confusion_from_vocab) {
    if (config.vocabulary.empty()) {
      throw ValidationError("confusion_from_vocab requires vocab_file");
    }
    config.confusion = build_confusion_set(config.vocabulary, confusion_max_distance);
  }
  if (config.vocabulary.empty() && !config.confusion.empty()) {
    // Fall back to the confusion keys as insertion candidates.
    std::set<std::string> vocab;
    for (const auto& [token, candidates] : config.confusion) {
      vocab.insert(token);
      for (const auto& cand : candidates) vocab.insert(cand);
    }
    config.vocabulary.assign(vocab.begin(), vocab.end());
  }
  config.validate();
  return config;
}

namespace {

void apply_char_noise(std::vector<std::u32string>& toks, const NoiseConfig& config,
                      Rng& rng, NoiseStats* stats) {
  std::size_t total = 0;
  for (const auto& t : toks) total += t.size();
  if (total == 0) return;

  // The insertion/substitution alphabet is whatever script the sentence
  // already uses, fixed before any character edits.
  std::set<char32_t> alpha_set;
  for (const auto& t : toks) alpha_set.insert(t.begin(), t.end());
  const std::vector<char32_t> alphabet(alpha_set.begin(), alpha_set.end());

  const uint64_t ops = binomial_draw(rng, total, config.char_error_rate);
  if (stats != nullptr) stats->char_ops_drawn += static_cast<long long>(ops);

  const auto locate = [&](std::size_t flat) {
    std::size_t t = 0;
    while (flat >= toks[t].size()) {
      flat -= toks[t].size();
      ++t;
    }
    return std::pair<std::size_t, std::size_t>(t, flat);
  };

  for (uint64_t op = 0; op < ops; ++op) {
    const NoiseOp kind = draw_op(rng, config.op_weights);
    bool applied = false;
    switch (kind) {
      case NoiseOp::kSubstitute: {
        if (total == 0 || alphabet.size() < 2) break;
        const auto [t, p] = locate(rng.index(total));
        const char32_t cur = toks[t][p];
        // Uniform over the alphabet minus the current character.
        std::size_t pick = rng.index(alphabet.size() - 1);
        if (alphabet[pick] == cur) pick = alphabet.size() - 1;
        toks[t][p] = alphabet[pick];
        applied = true;
        break;
      }
      case NoiseOp::kDelete: {
        if (total == 0) break;
        const auto [t, p] = locate(rng.index(total));
        toks[t].erase(toks[t].begin() + p);
        if (toks[t].empty()) toks.erase(toks.begin() + t);
        --total;
        applied = true;
        break;
      }
      case NoiseOp::kInsert: {
        if (alphabet.empty()) break;
        const char32_t c = alphabet[rng.index(alphabet.size())];
        const std::size_t slot = rng.index(total + 1);
        if (toks.empty()) {
          toks.push_back(std::u32string(1, c));
        } else if (slot == total) {
          toks.back().push_back(c);
        } else {
          const auto [t, p] = locate(slot);
          toks[t].insert(toks[t].begin() + p, c);
        }
        ++total;
        applied = true;
        break;
      }
      case NoiseOp::kSwap: {
        if (total == 0) break;
        const auto [t, p] = locate(rng.index(total));
        const std::size_t len = toks[t].size();
        if (len < 2) break;
        const std::size_t a = (p + 1 == len) ? p - 1 : p;
        if (toks[t][a] == toks[t][a + 1]) break;
        std::swap(toks[t][a], toks[t][a + 1]);
        applied = true;
        break;
      }
    }
    if (applied && stats != nullptr) ++stats->char_ops_applied;
  }
}

}  // namespace

TokenSeq noise_sentence(const TokenSeq& tokens, const NoiseConfig& config, Rng& rng,
                        NoiseStats* stats) {
  config.validate();
  if (stats != nullptr) stats->tokens_in += static_cast<long long>(tokens.size());

  TokenSeq current = tokens;
  const uint64_t ops = binomial_draw(rng, tokens.size(), config.word_error_rate);
  if (stats != nullptr) stats->word_ops_drawn += static_cast<long long>(ops);

  for (uint64_t op = 0; op < ops; ++op) {
    const NoiseOp kind = draw_op(rng, config.op_weights);
    bool applied = false;
    switch (kind) {
      case NoiseOp::kSubstitute: {
        if (current.empty()) break;
        const std::size_t idx = rng.index(current.size());
        const auto it = config.confusion.find(current[idx]);
        if (it == config.confusion.end() || it->second.empty()) break;
        current[idx] = it->second[rng.index(it->second.size())];
        applied = true;
        break;
      }
      case NoiseOp::kDelete: {
        if (current.empty()) break;
        current.erase(current.begin() + rng.index(current.size()));
        applied = true;
        break;
      }
      case NoiseOp::kInsert: {
        if (config.vocabulary.empty()) break;
        const std::string& word = config.vocabulary[rng.index(config.vocabulary.size())];
        current.insert(current.begin() + rng.index(current.size() + 1), word);
        applied = true;
        break;
      }
      case NoiseOp::kSwap: {
        if (current.size() < 2) break;
        const std::size_t idx = rng.index(current.size() - 1);
        std::swap(current[idx], current[idx + 1]);
        applied = true;
        break;
      }
    }
    if (applied && stats != nullptr) ++stats->word_ops_applied;
  }

  if (config.char_error_rate > 0.0) {
    std::vector<std::u32string> toks;
    toks.reserve(current.size());
    for (const auto& t : current) toks.push_back(utf8_decode(t));
    apply_char_noise(toks, config, rng, stats);
    current.clear();
    for (const auto& t : toks) current.push_back(utf8_encode(t));
  }
  return current;
}

std::size_t noise_corpus_stream(std::istream& input, std::ostream& out_src,
                                std::ostream& out_tgt, const NoiseConfig& config,
                                uint64_t seed, NoiseStats* stats) {
  config.validate();
  const Rng root = Rng::seeded(seed);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    strip_cr(line);
    const TokenSeq tokens = split_tokens(line);
    Rng rng = root.split(static_cast<uint64_t>(line_no));
    const TokenSeq noised = noise_sentence(tokens, config, rng, stats);
    out_src << join_tokens(noised) << '\n';
    out_tgt << join_tokens(tokens) << '\n';
    ++line_no;
    if (!out_src || !out_tgt) {
      throw IoError("write failure at line " + std::to_string(line_no));
    }
  }
  if (input.bad()) {
    throw IoError("read failure at line " + std::to_string(line_no + 1));
  }
  return line_no;
}

std::size_t noise_corpus_files(const std::string& input_path,
                               const std::string& out_src_path,
                               const std::string& out_tgt_path,
                               const NoiseConfig& config, uint64_t seed,
                               NoiseStats* stats) {
  std::ifstream in(input_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + input_path);
  std::ofstream src(out_src_path, std::ios::binary);
  if (!src) throw IoError("cannot open " + out_src_path + " for writing");
  std::ofstream tgt(out_tgt_path, std::ios::binary);
  if (!tgt) throw IoError("cannot open " + out_tgt_path + " for writing");
  return noise_corpus_stream(in, src, tgt, config, seed, stats);
}

void DenoiseConfig::validate() const {
  if (mask_ratio < 0.0 || mask_ratio > 1.0) {
    throw ValidationError("mask_ratio must be in [0, 1]");
  }
  if (!(span_lambda > 0.0)) {
    throw ValidationError("span_lambda must be > 0");
  }
  if (mask_token.empty()) {
    throw ValidationError("mask_token must be non-empty");
  }
}

std::pair<TokenSeq, TokenSeq> bart_denoise(const std::vector<TokenSeq>& sentences,
                                           const DenoiseConfig& config, Rng& rng,
                                           DenoiseStats* stats) {
  config.validate();

  TokenSeq original;
  for (const auto& s : sentences) original.insert(original.end(), s.begin(), s.end());
  if (stats != nullptr) stats->tokens_in += static_cast<long long>(original.size());

  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (config.shuffle_sentences && order.size() > 1) {
    for (std::size_t i = order.size() - 1; i > 0; --i) {
      std::swap(order[i], order[rng.index(i + 1)]);
    }
  }

  TokenSeq stream;
  stream.reserve(original.size());
  for (std::size_t idx : order) {
    stream.insert(stream.end(), sentences[idx].begin(), sentences[idx].end());
  }

  const std::size_t total = stream.size();
  std::vector<char> masked(total, 0);
  std::vector<char> span_start(total, 0);
  std::vector<int> point_inserts(total + 1, 0);

  const double target = config.mask_ratio * static_cast<double>(total);
  long long covered = 0;
  if (total > 0 && config.mask_ratio > 0.0) {
    // Draw budget bounds pathological configurations (e.g. a tiny lambda
    // that mostly yields zero-length spans).
    std::size_t budget = 4 * total + 64;
    while (static_cast<double>(covered) < target && budget-- > 0) {
      const uint64_t raw_len = rng.poisson(config.span_lambda);
      if (raw_len == 0) {
        const std::size_t pos = rng.index(total + 1);
        const bool inside =
            pos > 0 && pos < total && masked[pos - 1] && masked[pos] && !span_start[pos];
        if (inside) continue;
        ++point_inserts[pos];
        if (stats != nullptr) {
          ++stats->spans_placed;
          ++stats->zero_length_spans;
        }
        continue;
      }
      const std::size_t len = static_cast<std::size_t>(raw_len);
      if (len > total) continue;
      std::size_t pos = 0;
      bool found = false;
      for (int attempt = 0; attempt < 32 && !found; ++attempt) {
        pos = rng.index(total - len + 1);
        found = true;
        for (std::size_t k = pos; k < pos + len; ++k) {
          if (masked[k]) {
            found = false;
            break;
          }
        }
      }
      if (!found) {
        // Deterministic fallback: first free slot from the left.
        std::size_t run = 0;
        for (std::size_t k = 0; k < total && !found; ++k) {
          run = masked[k] ? 0 : run + 1;
          if (run >= len) {
            pos = k + 1 - len;
            found = true;
          }
        }
        if (!found) break;  // no room left for this length
      }
      span_start[pos] = 1;
      for (std::size_t k = pos; k < pos + len; ++k) masked[k] = 1;
      covered += static_cast<long long>(len);
      if (stats != nullptr) {
        ++stats->spans_placed;
        stats->tokens_covered += static_cast<long long>(len);
      }
    }
  }

  TokenSeq noised;
  noised.reserve(stream.size());
  for (std::size_t pos = 0; pos <= total; ++pos) {
    for (int k = 0; k < point_inserts[pos]; ++k) noised.push_back(config.mask_token);
    if (pos == total) break;
    if (masked[pos]) {
      if (span_start[pos]) noised.push_back(config.mask_token);
      continue;
    }
    noised.push_back(stream[pos]);
  }
  return {std::move(noised), std::move(original)};
}

std::size_t denoise_corpus_files(const std::string& input_path,
                                 const std::string& out_src_path,
                                 const std::string& out_tgt_path,
                                 const DenoiseConfig& config, int sentences_per_doc,
                                 uint64_t seed, DenoiseStats* stats) {
  config.validate();
  if (sentences_per_doc < 1) {
    throw ValidationError("sentences_per_doc must be >= 1");
  }
  std::ifstream in(input_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + input_path);
  std::ofstream src(out_src_path, std::ios::binary);
  if (!src) throw IoError("cannot open " + out_src_path + " for writing");
  std::ofstream tgt(out_tgt_path, std::ios::binary);
  if (!tgt) throw IoError("cannot open " + out_tgt_path + " for writing");

  const Rng root = Rng::seeded(seed);
  std::vector<TokenSeq> block;
  std::string line;
  std::size_t line_no = 0;
  std::size_t block_no = 0;

  const auto flush = [&]() {
    if (block.empty()) return;
    Rng rng = root.split(static_cast<uint64_t>(block_no));
    auto [noised, orig] = bart_denoise(block, config, rng, stats);
    src << join_tokens(noised) << '\n';
    tgt << join_tokens(orig) << '\n';
    if (!src || !tgt) {
      throw IoError("write failure near line " + std::to_string(line_no));
    }
    block.clear();
    ++block_no;
  };

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    block.push_back(split_tokens(line));
    if (block.size() == static_cast<std::size_t>(sentences_per_doc)) flush();
  }
  if (in.bad()) throw IoError("read failure at line " + std::to_string(line_no + 1));
  flush();
  return line_no;
}

}  // namespace geclab
