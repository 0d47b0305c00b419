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

#ifndef GECLAB_CORPUS_HPP_
#define GECLAB_CORPUS_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "geclab/types.hpp"

namespace geclab {

using SentencePair = std::pair<TokenSeq, TokenSeq>;

// Drops pairs whose source equals the target token-for-token; order is
// preserved. Idempotent, never grows the input.
std::vector<SentencePair> filter_unchanged(const std::vector<SentencePair>& pairs);

// The language codes accepted by tag_language ("<code>" becomes the tag
// token). The set used by multilingual pretrained seq2seq checkpoints.
const std::vector<std::string>& language_registry();
bool language_registered(const std::string& code);

enum class TagPosition { kFinal, kInitial };

// Appends (or prepends) the "<code>" tag token. Throws ValidationError
// naming the registry when the code is unknown.
TokenSeq tag_language(const TokenSeq& sentence, const std::string& code,
                      TagPosition position = TagPosition::kFinal);

// Line-oriented corpus IO. Lines are tokenized on whitespace; CR is
// stripped. IO failures throw IoError; the visitor's line numbers are
// 1-based.
std::vector<TokenSeq> read_token_lines(const std::string& path);
void write_token_lines(const std::vector<TokenSeq>& lines, const std::string& path);
void for_each_line(const std::string& path,
                   const std::function<void(std::size_t, const std::string&)>& fn);

struct FilterOptions {
  bool drop_unchanged = true;
  std::string tag_lang;  // empty: no tagging
  TagPosition tag_position = TagPosition::kFinal;
  bool tag_source = false;
  bool tag_target = true;
};

struct FilterOutcome {
  std::size_t kept = 0;
  std::size_t dropped = 0;
};

// Streams an aligned pair of files through filter_unchanged/tag_language.
// Throws ValidationError if the files have different line counts.
FilterOutcome filter_parallel_files(const std::string& src_path,
                                    const std::string& tgt_path,
                                    const std::string& out_src_path,
                                    const std::string& out_tgt_path,
                                    const FilterOptions& options);

}  // namespace geclab

#endif  // GECLAB_CORPUS_HPP_
