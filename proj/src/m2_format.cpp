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

#include "geclab/m2_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "geclab/text.hpp"

namespace geclab {

namespace {

int parse_int(std::string_view field, std::size_t line_no, const char* what) {
  int value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(std::string("expected integer ") + what + ", got '" +
                         std::string(field) + "'",
                     line_no);
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find("|||", pos);
    if (next == std::string_view::npos) {
      fields.push_back(s.substr(pos));
      break;
    }
    fields.push_back(s.substr(pos, next - pos));
    pos = next + 3;
  }
  return fields;
}

struct PendingEntry {
  TokenSeq source;
  std::vector<GoldAnnotation> annotations;
  std::unordered_map<int, std::size_t> by_annotator;
  std::size_t s_line = 0;
  bool has_source = false;

  GoldAnnotation& annotation(int id) {
    auto it = by_annotator.find(id);
    if (it != by_annotator.end()) return annotations[it->second];
    by_annotator.emplace(id, annotations.size());
    annotations.push_back(GoldAnnotation{id, {}, false});
    return annotations.back();
  }
};

void finish_entry(PendingEntry& pending, M2Document& doc) {
  if (!pending.has_source) return;
  if (pending.annotations.empty()) {
    // An S-line with no A-lines is an implicit noop by annotator 0.
    pending.annotations.push_back(GoldAnnotation{0, {}, true});
  }
  for (const auto& ann : pending.annotations) {
    validate_annotation(ann, pending.source.size());
  }
  doc.entries.push_back(M2Entry{std::move(pending.source), std::move(pending.annotations)});
  pending = PendingEntry{};
}

}  // namespace

void validate_annotation(const GoldAnnotation& ann, std::size_t source_len) {
  if (ann.annotator_id < 0) {
    throw ValidationError("negative annotator id");
  }
  if (ann.is_noop && !ann.edits.empty()) {
    throw ValidationError("noop annotation carries edits (annotator " +
                          std::to_string(ann.annotator_id) + ")");
  }
  const int len = static_cast<int>(source_len);
  const Edit* prev = nullptr;
  for (const auto& ae : ann.edits) {
    const Edit& e = ae.edit;
    if (e.start < 0 || e.end < e.start || e.end > len) {
      throw ValidationError("edit span [" + std::to_string(e.start) + ", " +
                            std::to_string(e.end) + ") out of bounds for a " +
                            std::to_string(len) + "-token sentence");
    }
    if (e.start == e.end && e.replacement.empty()) {
      throw ValidationError("insertion at " + std::to_string(e.start) +
                            " with empty replacement");
    }
    if (prev != nullptr) {
      if (e.start < prev->end) {
        throw ValidationError("edits overlap or are out of order near [" +
                              std::to_string(e.start) + ", " +
                              std::to_string(e.end) + ")");
      }
      if (prev->start == prev->end && e.start == e.end && e.start == prev->start) {
        throw ValidationError("two insertions at the same point " +
                              std::to_string(e.start));
      }
    }
    prev = &e;
  }
}

M2Document parse_m2(std::string_view text) {
  M2Document doc;
  PendingEntry pending;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    const bool last = (eol == std::string_view::npos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      finish_entry(pending, doc);
    } else if (line.rfind("S ", 0) == 0 || line == "S") {
      if (pending.has_source) {
        throw ParseError("unexpected second S line within entry (missing blank line?)",
                         line_no);
      }
      pending.has_source = true;
      pending.s_line = line_no;
      pending.source = split_tokens(line.size() > 1 ? line.substr(2) : std::string_view());
    } else if (line.rfind("A ", 0) == 0) {
      if (!pending.has_source) {
        throw ParseError("A line before any S line", line_no);
      }
      const auto fields = split_fields(line.substr(2));
      if (fields.size() != 6) {
        throw ParseError("A line must have 6 '|||'-separated fields, got " +
                             std::to_string(fields.size()),
                         line_no);
      }
      const auto offsets = split_tokens(fields[0]);
      if (offsets.size() != 2) {
        throw ParseError("expected 'start end' offsets, got '" + std::string(fields[0]) + "'",
                         line_no);
      }
      const int start = parse_int(offsets[0], line_no, "start offset");
      const int end = parse_int(offsets[1], line_no, "end offset");
      const std::string type(fields[1]);
      const std::string correction(fields[2]);
      const std::string required(fields[3]);
      const std::string comment(fields[4]);
      const int annotator = parse_int(fields[5], line_no, "annotator id");
      if (annotator < 0) {
        throw ParseError("negative annotator id", line_no);
      }

      GoldAnnotation& ann = pending.annotation(annotator);
      if (type == "noop") {
        if (start != -1 || end != -1) {
          throw ParseError("noop line must use offsets -1 -1", line_no);
        }
        if (ann.is_noop || !ann.edits.empty()) {
          throw ParseError("noop conflicts with earlier lines for annotator " +
                               std::to_string(annotator),
                           line_no);
        }
        ann.is_noop = true;
        ann.noop_required = required;
        ann.noop_comment = comment;
      } else {
        if (ann.is_noop) {
          throw ParseError("edit follows a noop line for annotator " +
                               std::to_string(annotator),
                           line_no);
        }
        AnnotatedEdit ae;
        ae.edit.start = start;
        ae.edit.end = end;
        ae.edit.type_label = type;
        if (correction != "-NONE-") ae.edit.replacement = split_tokens(correction);
        ae.required = required;
        ae.comment = comment;
        try {
          ann.edits.push_back(std::move(ae));
          validate_annotation(ann, pending.source.size());
        } catch (const ValidationError& err) {
          throw ParseError(err.what(), line_no);
        }
      }
    } else {
      throw ParseError("expected 'S ', 'A ' or blank line", line_no);
    }

    if (last) break;
    pos = eol + 1;
  }
  finish_entry(pending, doc);
  return doc;
}

std::string emit_m2(const M2Document& doc) {
  std::string out;
  bool first = true;
  for (const auto& entry : doc.entries) {
    if (entry.annotations.empty()) {
      throw ValidationError("entry without annotations cannot be emitted");
    }
    for (const auto& ann : entry.annotations) {
      validate_annotation(ann, entry.source.size());
    }
    if (!first) out.push_back('\n');
    first = false;
    out += "S ";
    out += join_tokens(entry.source);
    out.push_back('\n');
    for (const auto& ann : entry.annotations) {
      if (ann.is_noop) {
        out += "A -1 -1|||noop|||-NONE-|||" + ann.noop_required + "|||" +
               ann.noop_comment + "|||" + std::to_string(ann.annotator_id) + "\n";
        continue;
      }
      for (const auto& ae : ann.edits) {
        const std::string corr =
            ae.edit.replacement.empty() ? "-NONE-" : join_tokens(ae.edit.replacement);
        out += "A " + std::to_string(ae.edit.start) + " " +
               std::to_string(ae.edit.end) + "|||" + ae.edit.type_label + "|||" +
               corr + "|||" + ae.required + "|||" + ae.comment + "|||" +
               std::to_string(ann.annotator_id) + "\n";
      }
    }
  }
  return out;
}

M2Document parse_m2_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_m2(buf.str());
}

void write_m2_file(const M2Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << emit_m2(doc);
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace geclab
