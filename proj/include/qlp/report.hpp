//
//   Copyright 2026 The qlp Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qlp/aggregate.hpp"
#include "qlp/assess.hpp"
#include "qlp/checklist.hpp"
#include "qlp/errors.hpp"

namespace qlp {

enum class Format { text, markdown, json, csv };

/// Accepts "text", "md", "markdown", "json", "csv".
std::optional<Format> format_from_string(std::string_view token);
std::string_view to_string(Format f);

/// Default status glyphs: check mark, ballot cross, en dash, tilde.
std::map<Status, std::string> default_symbols();

struct RenderOptions {
  Format format = Format::text;
  /// Glyphs for text and markdown cells. Must be non-empty and pairwise
  /// distinct; CSV and JSON always use the canonical status tokens instead
  /// so their output stays machine-recoverable.
  std::map<Status, std::string> symbols = default_symbols();
  /// Group rows under section headings (text, markdown).
  bool group_by_section = true;
  /// Emit footnote anchors and the note table (text, markdown).
  bool include_footnotes = true;
};

/// Render a full matrix with its margins. All formats are deterministic:
/// same inputs, same bytes, always ending in exactly one newline.
/// Invalid symbol sets throw OptionError.
std::string render_matrix(const ComplianceMatrix& matrix,
                          const AggregateReport& report,
                          const RenderOptions& options);

/// Render a single-package lint report: structural violations first, then
/// every checklist item with its status, provenance, evidence and notes,
/// then a met/applicable/total summary.
std::string render_lint(const Checklist& checklist, const AssessmentRow& row,
                        const std::vector<Violation>& violations,
                        const RenderOptions& options);

/// RFC-4180-style field quoting for the CSV writers.
std::string csv_escape(const std::string& field);

/// Display width of a UTF-8 string in codepoints (the glyphs used here are
/// all single-column).
size_t display_width(std::string_view s);

}  // namespace qlp
