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

#ifndef GECLAB_TYPES_HPP_
#define GECLAB_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace geclab {

// A tokenized sentence. Tokens are non-empty UTF-8 strings without
// whitespace; the sequence itself may be empty.
using TokenSeq = std::vector<std::string>;

// A span replacement on a tokenized source sentence. Offsets are 0-based
// token positions, end-exclusive. start == end denotes an insertion before
// token `start`; an empty replacement with start < end is a deletion.
// An insertion with an empty replacement is invalid.
struct Edit {
  int start = 0;
  int end = 0;
  TokenSeq replacement;
  std::string type_label = "UNK";

  bool is_insertion() const { return start == end; }
  bool is_deletion() const { return replacement.empty() && start < end; }

  friend bool operator==(const Edit& a, const Edit& b) {
    return a.start == b.start && a.end == b.end &&
           a.replacement == b.replacement && a.type_label == b.type_label;
  }
};

// Returns true when the two edits propose the same rewrite, ignoring the
// type label. This is the notion of equality used for gold matching.
inline bool same_span_and_replacement(const Edit& a, const Edit& b) {
  return a.start == b.start && a.end == b.end && a.replacement == b.replacement;
}

// An edit as carried by an M2 file: the rewrite itself plus the two fields
// the scorer ignores but the format round-trips.
struct AnnotatedEdit {
  Edit edit;
  std::string required = "REQUIRED";
  std::string comment = "-NONE-";

  friend bool operator==(const AnnotatedEdit& a, const AnnotatedEdit& b) {
    return a.edit == b.edit && a.required == b.required && a.comment == b.comment;
  }
};

// One annotator's edit set for a sentence. is_noop marks an explicit
// "this sentence needs no correction" annotation; it implies no edits.
struct GoldAnnotation {
  int annotator_id = 0;
  std::vector<AnnotatedEdit> edits;
  bool is_noop = false;
  // Round-trip fields of the noop line itself.
  std::string noop_required = "REQUIRED";
  std::string noop_comment = "-NONE-";

  std::vector<Edit> plain_edits() const {
    std::vector<Edit> out;
    out.reserve(edits.size());
    for (const auto& e : edits) out.push_back(e.edit);
    return out;
  }

  friend bool operator==(const GoldAnnotation& a, const GoldAnnotation& b) {
    return a.annotator_id == b.annotator_id && a.edits == b.edits &&
           a.is_noop == b.is_noop && a.noop_required == b.noop_required &&
           a.noop_comment == b.noop_comment;
  }
};

struct M2Entry {
  TokenSeq source;
  std::vector<GoldAnnotation> annotations;

  friend bool operator==(const M2Entry& a, const M2Entry& b) {
    return a.source == b.source && a.annotations == b.annotations;
  }
};

struct M2Document {
  std::vector<M2Entry> entries;

  friend bool operator==(const M2Document& a, const M2Document& b) {
    return a.entries == b.entries;
  }
};

// Error taxonomy. Parse errors carry the 1-based line number of the
// offending input line; validation errors flag semantically invalid data;
// IO errors wrap filesystem failures.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geclab

#endif  // GECLAB_TYPES_HPP_
