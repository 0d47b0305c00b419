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

#ifndef GECLAB_TEXT_HPP_
#define GECLAB_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "geclab/types.hpp"

namespace geclab {

// UTF-8 <-> code point conversion. Invalid byte sequences decode as the
// replacement character U+FFFD, one per offending byte, so no input can
// make decoding fail.
std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(const std::u32string& cps);

// Case folding for ASCII and the Latin-1 supplement; other code points are
// returned unchanged. Enough for the lexicon lookups and ORTH detection
// this toolkit performs; full Unicode folding is out of scope.
char32_t fold_case(char32_t c);
std::string fold_case(std::string_view s);

// True when the code point is punctuation: ASCII punctuation and symbols,
// the General Punctuation block, and common quotation/dash characters.
bool is_punct_char(char32_t c);

// True when every character of every token is punctuation. Empty input
// yields false.
bool all_punct(const TokenSeq& tokens);

// Whitespace tokenization (space, tab; the caller strips line endings).
TokenSeq split_tokens(std::string_view line);
std::string join_tokens(const TokenSeq& tokens);

// Tokens joined with no separator, case-folded. Used for ORTH detection.
std::string fold_concat(const TokenSeq& tokens);

// Plain Levenshtein distance over code points, early-exiting once the
// distance provably exceeds `cutoff` (returns cutoff + 1 in that case).
int char_edit_distance(std::string_view a, std::string_view b, int cutoff);

// Strips one trailing '\r' (CRLF input) in place.
void strip_cr(std::string& line);

}  // namespace geclab

#endif  // GECLAB_TEXT_HPP_
