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

#ifndef GECLAB_M2_FORMAT_HPP_
#define GECLAB_M2_FORMAT_HPP_

#include <string>
#include <string_view>

#include "geclab/types.hpp"

namespace geclab {

// M2 gold-file grammar:
//
//   entry      := s-line a-line*
//   s-line     := "S " token (" " token)*
//   a-line     := "A " start " " end "|||" type "|||" correction
//                 "|||" required "|||" comment "|||" annotator
//   noop a-line has start = end = -1 and type "noop"
//
// Entries are separated by blank lines. Offsets are 0-based token
// positions, end-exclusive; start == end is an insertion point. The
// correction "-NONE-" (or an empty field) means deletion. An entry with no
// A-lines parses as a noop annotation by annotator 0.
//
// CRLF line endings are normalized to LF before parsing. emit_m2 writes
// the canonical form: one blank line between entries, trailing newline,
// "-NONE-" for empty corrections, and an explicit noop line for noop
// annotations, so parse_m2(emit_m2(doc)) == doc.

// Throws ParseError (with line number) on malformed lines and
// ValidationError on out-of-range or overlapping edit spans.
M2Document parse_m2(std::string_view text);

std::string emit_m2(const M2Document& doc);

M2Document parse_m2_file(const std::string& path);
void write_m2_file(const M2Document& doc, const std::string& path);

// Enforces the per-annotation invariants: edits sorted by (start, end),
// non-overlapping, spans within [0, source_len], no two insertions at the
// same point, no empty insertion, and noop implies no edits. Throws
// ValidationError.
void validate_annotation(const GoldAnnotation& ann, std::size_t source_len);

}  // namespace geclab

#endif  // GECLAB_M2_FORMAT_HPP_
