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

#include "qlp/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace qlp {

using nlohmann::json;

namespace {

void check_symbols(const RenderOptions& options) {
  std::set<std::string> seen;
  for (Status s : kAllStatuses) {
    auto it = options.symbols.find(s);
    if (it == options.symbols.end() || it->second.empty()) {
      throw OptionError("missing symbol for status '" +
                        std::string(to_string(s)) + "'");
    }
    if (!seen.insert(it->second).second) {
      throw OptionError("status symbols must be distinct, '" + it->second +
                        "' is reused");
    }
  }
}

std::string anchored(std::string base, const StatusEntry& entry,
                     const RenderOptions& options) {
  if (options.include_footnotes && entry.footnote) {
    base += "[" + std::to_string(*entry.footnote) + "]";
  }
  return base;
}

// Glyph form for text/markdown cells.
std::string cell_glyph(const StatusEntry& entry, const RenderOptions& options) {
  return anchored(options.symbols.at(entry.status), entry, options);
}

// Token form for CSV cells; anchors always included so nothing is lost.
std::string cell_token(const StatusEntry& entry) {
  std::string base{to_string(entry.status)};
  if (entry.footnote) base += "[" + std::to_string(*entry.footnote) + "]";
  return base;
}

std::string met_of(const MetCount& mc, bool spaced) {
  return std::to_string(mc.met) + (spaced ? " / " : "/") + std::to_string(mc.total);
}

std::string distribution_line(const AggregateReport& report) {
  std::string out = "Distribution: ";
  bool first = true;
  for (Status s : kAllStatuses) {
    const auto& entry = report.distribution.at(s);
    if (!first) out += ", ";
    first = false;
    out += std::string(to_string(s)) + " " + std::to_string(entry.count) + " (" +
           entry.percent.str() + "%)";
  }
  return out;
}

std::string footnote_block(const std::map<int, std::string>& notes) {
  std::string out;
  for (const auto& [num, text] : notes) {
    out += "[" + std::to_string(num) + "] " + text + "\n";
  }
  return out;
}

std::string score_text(double score) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", score);
  return buf;
}

struct SummaryCounts {
  int met = 0;
  int applicable = 0;
  int total = 0;
};

SummaryCounts summarize(const AssessmentRow& row) {
  SummaryCounts s;
  for (const auto& [id, entry] : row.entries) {
    (void)id;
    ++s.total;
    if (entry.status == Status::not_applicable) continue;
    ++s.applicable;
    if (entry.status == Status::met) ++s.met;
  }
  return s;
}

// The matrix as ordered cell rows: (section title on first row of its
// section, item, per-target cells). Shared by the table renderers.
struct GridRow {
  std::string section;  // empty when continuing the previous section
  const ChecklistItem* item = nullptr;
  std::vector<std::string> cells;
  std::string total;
};

std::vector<GridRow> grid_rows(const ComplianceMatrix& matrix,
                               const AggregateReport& report,
                               const RenderOptions& options, bool glyphs) {
  std::vector<GridRow> rows;
  std::string last_section;
  for (size_t i = 0; i < matrix.checklist.items.size(); ++i) {
    const auto& item = matrix.checklist.items[i];
    GridRow row;
    if (options.group_by_section) {
      const auto* section = matrix.checklist.find_section(item.section_id);
      const std::string title = section ? section->title : item.section_id;
      if (title != last_section) {
        row.section = title;
        last_section = title;
      }
    }
    row.item = &item;
    for (size_t t = 0; t < matrix.targets.size(); ++t) {
      const auto& entry = matrix.cells[t][i];
      row.cells.push_back(glyphs ? cell_glyph(entry, options) : cell_token(entry));
    }
    row.total = met_of(report.per_item[i].second, glyphs);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_matrix_markdown(const ComplianceMatrix& matrix,
                                   const AggregateReport& report,
                                   const RenderOptions& options) {
  std::string out = "# " + matrix.checklist.id + " compliance matrix\n\n";

  std::vector<std::string> header;
  if (options.group_by_section) header.push_back("Section");
  header.push_back("Item");
  for (const auto& t : matrix.targets) header.push_back(t.id);
  header.push_back("Total");

  auto emit_row = [&out](const std::vector<std::string>& cols) {
    out += "|";
    for (const auto& c : cols) out += " " + c + " |";
    out += "\n";
  };

  emit_row(header);
  std::vector<std::string> rule(header.size(), "---");
  emit_row(rule);

  for (const auto& row : grid_rows(matrix, report, options, /*glyphs=*/true)) {
    std::vector<std::string> cols;
    if (options.group_by_section) cols.push_back(row.section);
    cols.push_back(row.item->title);
    for (const auto& c : row.cells) cols.push_back(c);
    cols.push_back(row.total);
    emit_row(cols);
  }

  std::vector<std::string> totals;
  if (options.group_by_section) totals.push_back("Total");
  totals.push_back(options.group_by_section ? "" : "Total");
  for (const auto& [id, mc] : report.per_target) {
    (void)id;
    totals.push_back(met_of(mc, true));
  }
  totals.push_back("");
  emit_row(totals);

  out += "\n" + distribution_line(report) + "\n";
  if (options.include_footnotes && !matrix.notes.empty()) {
    out += "\n" + footnote_block(matrix.notes);
  }
  return out;
}

std::string pad(const std::string& s, size_t width) {
  std::string out = s;
  const size_t have = display_width(s);
  if (have < width) out.append(width - have, ' ');
  return out;
}

std::string render_matrix_text(const ComplianceMatrix& matrix,
                               const AggregateReport& report,
                               const RenderOptions& options) {
  std::string out = matrix.checklist.id + " compliance matrix (" +
                    std::to_string(matrix.targets.size()) + " targets, " +
                    std::to_string(matrix.checklist.items.size()) + " items)\n\n";

  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header;
  if (options.group_by_section) header.push_back("Section");
  header.push_back("Item");
  for (const auto& t : matrix.targets) header.push_back(t.id);
  header.push_back("Total");
  table.push_back(header);

  for (const auto& row : grid_rows(matrix, report, options, /*glyphs=*/true)) {
    std::vector<std::string> cols;
    if (options.group_by_section) cols.push_back(row.section);
    cols.push_back(row.item->title);
    for (const auto& c : row.cells) cols.push_back(c);
    cols.push_back(row.total);
    table.push_back(std::move(cols));
  }
  {
    std::vector<std::string> totals;
    if (options.group_by_section) totals.push_back("Total");
    totals.push_back(options.group_by_section ? "" : "Total");
    for (const auto& [id, mc] : report.per_target) {
      (void)id;
      totals.push_back(met_of(mc, true));
    }
    totals.push_back("");
    table.push_back(std::move(totals));
  }

  std::vector<size_t> widths(header.size(), 0);
  for (const auto& row : table) {
    for (size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], display_width(row[c]));
    }
  }
  size_t total_width = 0;
  for (size_t c = 0; c < widths.size(); ++c) {
    total_width += widths[c] + (c + 1 < widths.size() ? 2 : 0);
  }

  for (size_t r = 0; r < table.size(); ++r) {
    std::string line;
    for (size_t c = 0; c < table[r].size(); ++c) {
      const bool last = c + 1 == table[r].size();
      line += last ? table[r][c] : pad(table[r][c], widths[c] + 2);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
    if (r == 0) out += std::string(total_width, '-') + "\n";
  }

  out += "\n" + distribution_line(report) + "\n";
  if (options.include_footnotes && !matrix.notes.empty()) {
    out += "\n" + footnote_block(matrix.notes);
  }
  return out;
}

std::string render_matrix_csv(const ComplianceMatrix& matrix,
                              const AggregateReport& report) {
  std::string out = "section,item_id,item_title";
  for (const auto& t : matrix.targets) out += "," + csv_escape(t.id);
  out += ",total_met\n";

  for (size_t i = 0; i < matrix.checklist.items.size(); ++i) {
    const auto& item = matrix.checklist.items[i];
    const auto* section = matrix.checklist.find_section(item.section_id);
    out += csv_escape(section ? section->title : item.section_id);
    out += "," + csv_escape(item.id);
    out += "," + csv_escape(item.title);
    for (size_t t = 0; t < matrix.targets.size(); ++t) {
      out += "," + csv_escape(cell_token(matrix.cells[t][i]));
    }
    out += "," + met_of(report.per_item[i].second, false);
    out += "\n";
  }

  out += ",,total_met";
  for (const auto& [id, mc] : report.per_target) {
    (void)id;
    out += "," + met_of(mc, false);
  }
  int met_total = report.distribution.at(Status::met).count;
  out += "," + std::to_string(met_total) + "/" + std::to_string(report.cell_count);
  out += "\n";
  return out;
}

std::string render_matrix_json(const ComplianceMatrix& matrix,
                               const AggregateReport& report) {
  json doc = aggregate_to_json(report);
  doc["title"] = matrix.checklist.title;
  doc["citations"] = json::object();
  for (const auto& t : matrix.targets) doc["citations"][t.id] = t.citation;
  doc["grid"] = json::object();
  for (size_t t = 0; t < matrix.targets.size(); ++t) {
    json row = json::object();
    for (size_t i = 0; i < matrix.checklist.items.size(); ++i) {
      row[matrix.checklist.items[i].id] = entry_to_json(matrix.cells[t][i]);
    }
    doc["grid"][matrix.targets[t].id] = std::move(row);
  }
  doc["notes"] = json::object();
  for (const auto& [num, text] : matrix.notes) {
    doc["notes"][std::to_string(num)] = text;
  }
  return doc.dump(2) + "\n";
}

std::string render_lint_text(const Checklist& checklist, const AssessmentRow& row,
                             const std::vector<Violation>& violations,
                             const RenderOptions& options) {
  std::string out = "lint: " + row.target.id + " (" + checklist.id + ")\n\n";
  if (violations.empty()) {
    out += "violations: none\n";
  } else {
    out += "violations:\n";
    for (const auto& v : violations) {
      out += "  " + v.code + " " + v.subject + ": " + v.message + "\n";
    }
  }

  std::string last_section;
  for (const auto& item : checklist.items) {
    if (options.group_by_section) {
      const auto* section = checklist.find_section(item.section_id);
      const std::string title = section ? section->title : item.section_id;
      if (title != last_section) {
        out += "\n" + title + "\n";
        last_section = title;
      }
    }
    const StatusEntry& entry = row.at(item.id);
    out += "  " + cell_glyph(entry, options) + " " + item.id + " " + item.title +
           " [" + std::string(to_string(entry.provenance)) + "]\n";
    for (const auto& e : entry.evidence) {
      out += "      evidence: " + e + "\n";
    }
    if (!entry.note.empty()) out += "      note: " + entry.note + "\n";
  }

  const SummaryCounts s = summarize(row);
  out += "\nmet " + std::to_string(s.met) + " / applicable " +
         std::to_string(s.applicable) + " / total " + std::to_string(s.total) +
         " (score " + score_text(compliance_score(row)) + ")\n";
  if (options.include_footnotes && !row.notes.empty()) {
    out += "\n" + footnote_block(row.notes);
  }
  return out;
}

std::string render_lint_markdown(const Checklist& checklist, const AssessmentRow& row,
                                 const std::vector<Violation>& violations,
                                 const RenderOptions& options) {
  std::string out = "# lint: " + row.target.id + "\n\nChecklist: " + checklist.id + "\n\n";
  if (violations.empty()) {
    out += "**Violations:** none\n";
  } else {
    out += "**Violations:**\n\n";
    for (const auto& v : violations) {
      out += "- " + v.code + " `" + v.subject + "`: " + v.message + "\n";
    }
  }

  std::string last_section;
  for (const auto& item : checklist.items) {
    if (options.group_by_section) {
      const auto* section = checklist.find_section(item.section_id);
      const std::string title = section ? section->title : item.section_id;
      if (title != last_section) {
        out += "\n## " + title + "\n\n";
        last_section = title;
      }
    }
    const StatusEntry& entry = row.at(item.id);
    out += "- " + cell_glyph(entry, options) + " `" + item.id + "` " + item.title +
           " [" + std::string(to_string(entry.provenance)) + "]";
    if (!entry.evidence.empty()) {
      out += " (evidence: ";
      for (size_t i = 0; i < entry.evidence.size(); ++i) {
        if (i) out += "; ";
        out += entry.evidence[i];
      }
      out += ")";
    }
    if (!entry.note.empty()) out += "; note: " + entry.note;
    out += "\n";
  }

  const SummaryCounts s = summarize(row);
  out += "\n**Summary:** met " + std::to_string(s.met) + " / applicable " +
         std::to_string(s.applicable) + " / total " + std::to_string(s.total) +
         " (score " + score_text(compliance_score(row)) + ")\n";
  if (options.include_footnotes && !row.notes.empty()) {
    out += "\n" + footnote_block(row.notes);
  }
  return out;
}

std::string render_lint_json(const Checklist& checklist, const AssessmentRow& row,
                             const std::vector<Violation>& violations) {
  json doc;
  doc["checklist"] = checklist.id;
  doc["target"]["id"] = row.target.id;
  if (!row.target.citation.empty()) doc["target"]["citation"] = row.target.citation;
  doc["violations"] = json::array();
  for (const auto& v : violations) {
    doc["violations"].push_back(
        {{"code", v.code}, {"subject", v.subject}, {"message", v.message}});
  }
  doc["entries"] = json::object();
  for (const auto& item : checklist.items) {
    doc["entries"][item.id] = entry_to_json(row.at(item.id));
  }
  if (!row.notes.empty()) {
    doc["notes"] = json::object();
    for (const auto& [num, text] : row.notes) doc["notes"][std::to_string(num)] = text;
  }
  const SummaryCounts s = summarize(row);
  doc["summary"] = {{"met", s.met},
                    {"applicable", s.applicable},
                    {"total", s.total},
                    {"score", compliance_score(row)}};
  return doc.dump(2) + "\n";
}

std::string render_lint_csv(const Checklist& checklist, const AssessmentRow& row,
                            const std::vector<Violation>& violations) {
  std::string out = "kind,section,item_id,item_title,status,provenance,footnote,note,evidence\n";
  for (const auto& v : violations) {
    out += "violation,," + csv_escape(v.subject) + ",," + csv_escape(v.code) +
           ",,," + csv_escape(v.message) + ",\n";
  }
  for (const auto& item : checklist.items) {
    const StatusEntry& entry = row.at(item.id);
    const auto* section = checklist.find_section(item.section_id);
    std::string evidence;
    for (size_t i = 0; i < entry.evidence.size(); ++i) {
      if (i) evidence += "; ";
      evidence += entry.evidence[i];
    }
    out += "entry,";
    out += csv_escape(section ? section->title : item.section_id) + ",";
    out += csv_escape(item.id) + ",";
    out += csv_escape(item.title) + ",";
    out += std::string(to_string(entry.status)) + ",";
    out += std::string(to_string(entry.provenance)) + ",";
    out += (entry.footnote ? std::to_string(*entry.footnote) : "") + ",";
    out += csv_escape(entry.note) + ",";
    out += csv_escape(evidence) + "\n";
  }
  return out;
}

}  // namespace

std::optional<Format> format_from_string(std::string_view token) {
  if (token == "text") return Format::text;
  if (token == "md" || token == "markdown") return Format::markdown;
  if (token == "json") return Format::json;
  if (token == "csv") return Format::csv;
  return std::nullopt;
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::text:
      return "text";
    case Format::markdown:
      return "md";
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
  }
  return "text";
}

std::map<Status, std::string> default_symbols() {
  return {{Status::met, "✓"},
          {Status::unmet, "✗"},
          {Status::not_applicable, "–"},
          {Status::partial, "~"}};
}

size_t display_width(std::string_view s) {
  size_t width = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::string render_matrix(const ComplianceMatrix& matrix,
                          const AggregateReport& report,
                          const RenderOptions& options) {
  check_symbols(options);
  switch (options.format) {
    case Format::markdown:
      return render_matrix_markdown(matrix, report, options);
    case Format::csv:
      return render_matrix_csv(matrix, report);
    case Format::json:
      return render_matrix_json(matrix, report);
    case Format::text:
      break;
  }
  return render_matrix_text(matrix, report, options);
}

std::string render_lint(const Checklist& checklist, const AssessmentRow& row,
                        const std::vector<Violation>& violations,
                        const RenderOptions& options) {
  check_symbols(options);
  switch (options.format) {
    case Format::markdown:
      return render_lint_markdown(checklist, row, violations, options);
    case Format::csv:
      return render_lint_csv(checklist, row, violations);
    case Format::json:
      return render_lint_json(checklist, row, violations);
    case Format::text:
      break;
  }
  return render_lint_text(checklist, row, violations, options);
}

}  // namespace qlp
