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

#include "geclab/corpus.hpp"

#include <algorithm>
#include <fstream>

#include "geclab/text.hpp"

namespace geclab {

std::vector<SentencePair> filter_unchanged(const std::vector<SentencePair>& pairs) {
  std::vector<SentencePair> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    if (pair.first != pair.second) out.push_back(pair);
  }
  return out;
}

const std::vector<std::string>& language_registry() {
  static const std::vector<std::string> kCodes = {
      "ar_AR", "cs_CZ", "de_DE", "en_XX", "es_XX", "et_EE", "fi_FI",
      "fr_XX", "gu_IN", "hi_IN", "it_IT", "ja_XX", "kk_KZ", "ko_KR",
      "lt_LT", "lv_LV", "my_MM", "ne_NP", "nl_XX", "ro_RO", "ru_RU",
      "si_LK", "tr_TR", "vi_VN", "zh_CN"};
  return kCodes;
}

bool language_registered(const std::string& code) {
  const auto& reg = language_registry();
  return std::find(reg.begin(), reg.end(), code) != reg.end();
}

TokenSeq tag_language(const TokenSeq& sentence, const std::string& code,
                      TagPosition position) {
  if (!language_registered(code)) {
    std::string known;
    for (const auto& c : language_registry()) {
      if (!known.empty()) known += ", ";
      known += c;
    }
    throw ValidationError("unknown language code '" + code +
                          "'; registry: " + known);
  }
  const std::string tag = "<" + code + ">";
  TokenSeq out;
  out.reserve(sentence.size() + 1);
  if (position == TagPosition::kInitial) out.push_back(tag);
  out.insert(out.end(), sentence.begin(), sentence.end());
  if (position == TagPosition::kFinal) out.push_back(tag);
  return out;
}

void for_each_line(const std::string& path,
                   const std::function<void(std::size_t, const std::string&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    strip_cr(line);
    fn(++line_no, line);
  }
  if (in.bad()) throw IoError("read failure in " + path + " after line " +
                              std::to_string(line_no));
}

std::vector<TokenSeq> read_token_lines(const std::string& path) {
  std::vector<TokenSeq> out;
  for_each_line(path, [&](std::size_t, const std::string& line) {
    out.push_back(split_tokens(line));
  });
  return out;
}

void write_token_lines(const std::vector<TokenSeq>& lines, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (const auto& tokens : lines) {
    out << join_tokens(tokens) << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

FilterOutcome filter_parallel_files(const std::string& src_path,
                                    const std::string& tgt_path,
                                    const std::string& out_src_path,
                                    const std::string& out_tgt_path,
                                    const FilterOptions& options) {
  std::ifstream src_in(src_path, std::ios::binary);
  if (!src_in) throw IoError("cannot open " + src_path);
  std::ifstream tgt_in(tgt_path, std::ios::binary);
  if (!tgt_in) throw IoError("cannot open " + tgt_path);
  std::ofstream src_out(out_src_path, std::ios::binary);
  if (!src_out) throw IoError("cannot open " + out_src_path + " for writing");
  std::ofstream tgt_out(out_tgt_path, std::ios::binary);
  if (!tgt_out) throw IoError("cannot open " + out_tgt_path + " for writing");

  if (!options.tag_lang.empty() && !language_registered(options.tag_lang)) {
    // Fail before touching output files.
    tag_language({}, options.tag_lang, options.tag_position);
  }

  FilterOutcome outcome;
  std::string src_line;
  std::string tgt_line;
  std::size_t line_no = 0;
  while (true) {
    const bool src_ok = static_cast<bool>(std::getline(src_in, src_line));
    const bool tgt_ok = static_cast<bool>(std::getline(tgt_in, tgt_line));
    if (src_ok != tgt_ok) {
      throw ValidationError("parallel files differ in length: " + src_path +
                            " vs " + tgt_path + " at line " +
                            std::to_string(line_no + 1));
    }
    if (!src_ok) break;
    ++line_no;
    strip_cr(src_line);
    strip_cr(tgt_line);
    TokenSeq src = split_tokens(src_line);
    TokenSeq tgt = split_tokens(tgt_line);
    if (options.drop_unchanged && src == tgt) {
      ++outcome.dropped;
      continue;
    }
    if (!options.tag_lang.empty()) {
      if (options.tag_source) src = tag_language(src, options.tag_lang, options.tag_position);
      if (options.tag_target) tgt = tag_language(tgt, options.tag_lang, options.tag_position);
    }
    src_out << join_tokens(src) << '\n';
    tgt_out << join_tokens(tgt) << '\n';
    ++outcome.kept;
  }
  if (!src_out || !tgt_out) throw IoError("failed writing filtered corpus");
  return outcome;
}

}  // namespace geclab
