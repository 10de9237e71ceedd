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
// qlp - compliance engine for quantum software experiment reporting and
// laboratory packages.
//
// Exit codes: 0 success, 1 checklist findings, 2 operational error.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlp/aggregate.hpp"
#include "qlp/assess.hpp"
#include "qlp/checklist.hpp"
#include "qlp/detect.hpp"
#include "qlp/manifest.hpp"
#include "qlp/report.hpp"
#include "qlp/scaffold.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kErrored = 2;

struct InitArgs {
  std::string dir;
  std::string title = "Laboratory package";
  std::vector<std::string> authors;
  std::string license;
  std::string doi;
  bool force = false;
};

struct RenderArgs {
  std::string format = "text";
  std::string out;
  bool no_sections = false;
  bool no_footnotes = false;
  std::string met_symbol;
  std::string unmet_symbol;
  std::string na_symbol;
  std::string partial_symbol;
};

struct LintArgs {
  std::string dir;
  std::string checklist = "labpack-v1";
  RenderArgs render;
  double min_score = -1.0;
  bool strict = false;
  bool parallel_detectors = false;
};

struct AggregateArgs {
  std::vector<std::string> files;
  std::string checklist;
  RenderArgs render;
};

struct ChecklistShowArgs {
  std::string id;
  std::string format = "text";
};

void add_render_options(CLI::App* cmd, RenderArgs& args) {
  cmd->add_option("-f,--format", args.format, "Output format: text, md, json, csv");
  cmd->add_option("-o,--out", args.out, "Write the report to a file instead of stdout");
  cmd->add_flag("--no-sections", args.no_sections, "Do not group rows by section");
  cmd->add_flag("--no-footnotes", args.no_footnotes, "Drop footnote anchors and notes");
  cmd->add_option("--met-symbol", args.met_symbol, "Override the met glyph");
  cmd->add_option("--unmet-symbol", args.unmet_symbol, "Override the unmet glyph");
  cmd->add_option("--na-symbol", args.na_symbol, "Override the not-applicable glyph");
  cmd->add_option("--partial-symbol", args.partial_symbol, "Override the partial glyph");
}

qlp::RenderOptions render_options(const RenderArgs& args) {
  qlp::RenderOptions options;
  auto format = qlp::format_from_string(args.format);
  if (!format) throw qlp::OptionError("unknown format '" + args.format + "'");
  options.format = *format;
  options.group_by_section = !args.no_sections;
  options.include_footnotes = !args.no_footnotes;
  if (!args.met_symbol.empty()) options.symbols[qlp::Status::met] = args.met_symbol;
  if (!args.unmet_symbol.empty()) options.symbols[qlp::Status::unmet] = args.unmet_symbol;
  if (!args.na_symbol.empty()) {
    options.symbols[qlp::Status::not_applicable] = args.na_symbol;
  }
  if (!args.partial_symbol.empty()) {
    options.symbols[qlp::Status::partial] = args.partial_symbol;
  }
  return options;
}

void emit(const std::string& payload, const RenderArgs& args) {
  if (args.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
  if (!out) throw qlp::IoError("cannot write " + args.out);
  out << payload;
  if (!out) throw qlp::IoError("cannot write " + args.out);
}

void emit_warnings(const std::vector<qlp::Warning>& warnings) {
  for (const auto& w : warnings) {
    std::cerr << "warning: " << w.subject << ": " << w.message << "\n";
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qlp::IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

qlp::Checklist resolve_checklist(const std::string& ref) {
  if (const qlp::Checklist* builtin = qlp::find_builtin(ref)) return *builtin;
  std::error_code ec;
  if (fs::exists(ref, ec) && !ec) return qlp::load_checklist_file(ref);
  throw qlp::IoError("unknown checklist '" + ref +
                     "': not a builtin id and no such file");
}

bool detectors_disabled() {
  const char* value = std::getenv("QLP_NO_DETECT");
  return value != nullptr && *value != '\0' && std::strcmp(value, "0") != 0;
}

std::string target_id_for(const std::string& dir) {
  fs::path p = fs::path(dir).lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  std::string id = p.filename().string();
  return id.empty() || id == "." ? "package" : id;
}

int run_init(const InitArgs& args) {
  qlp::ScaffoldOptions options;
  options.title = args.title;
  for (const auto& name : args.authors) options.authors.push_back({name, "", ""});
  if (!args.license.empty()) options.license = args.license;
  if (!args.doi.empty()) options.doi = args.doi;
  options.force = args.force;

  qlp::ScaffoldReport report = qlp::scaffold(args.dir, options);
  std::cout << "initialized laboratory package at " << args.dir << " ("
            << report.created_dirs.size() << " directories, "
            << report.created_files.size() << " files)\n";
  for (const auto& d : report.created_dirs) std::cout << "  " << d << "/\n";
  for (const auto& f : report.created_files) std::cout << "  " << f << "\n";
  return kOk;
}

int run_lint(const LintArgs& args) {
  const fs::path root = args.dir;
  qlp::Checklist checklist = resolve_checklist(args.checklist);

  qlp::ParsedManifest parsed = qlp::parse_manifest(read_file(root / qlp::kManifestFilename));
  emit_warnings(parsed.warnings);

  std::vector<qlp::Violation> violations =
      qlp::validate_manifest(parsed.manifest, root);

  // Checklist-level sanity: an automated item without a registered
  // detector can never be evaluated automatically.
  for (const auto& item : checklist.items) {
    if (qlp::automated(item) && !qlp::has_detector(item.id)) {
      violations.push_back({"auto-without-detector", item.id,
                            "item is marked " +
                                std::string(qlp::to_string(item.automation)) +
                                " but no detector is registered"});
    }
  }

  std::vector<qlp::DetectorResult> detected;
  if (!detectors_disabled()) {
    qlp::DetectorConfig config = qlp::load_detector_config(root);
    detected = qlp::run_detectors(root, parsed.manifest, config,
                                  args.parallel_detectors);
  }

  qlp::AssessmentTarget target{target_id_for(args.dir), parsed.manifest.metadata.title};
  qlp::MergeResult merged =
      qlp::merge(detected, parsed.manifest.attestations, checklist, target);
  emit_warnings(merged.conflicts);

  emit(qlp::render_lint(checklist, merged.row, violations, render_options(args.render)),
       args.render);

  bool findings = !violations.empty();
  if (args.strict && !merged.conflicts.empty()) findings = true;
  if (args.min_score >= 0.0 && qlp::compliance_score(merged.row) < args.min_score) {
    findings = true;
  }
  return findings ? kFindings : kOk;
}

int run_aggregate(const AggregateArgs& args) {
  if (args.files.empty()) throw qlp::EmptyMatrixError("no assessment documents given");

  std::vector<nlohmann::json> docs;
  for (const auto& file : args.files) {
    try {
      docs.push_back(nlohmann::json::parse(read_file(file)));
    } catch (const nlohmann::json::parse_error& e) {
      throw qlp::ParseError(file + ": invalid JSON: " + e.what());
    }
  }

  // The checklist comes from --checklist or from the documents themselves.
  std::string ref = args.checklist;
  if (ref.empty()) {
    const auto& first = docs.front();
    if (!first.is_object() || !first.contains("checklist") ||
        !first["checklist"].is_string()) {
      throw qlp::ParseError(args.files.front() +
                            ": no 'checklist' field; pass --checklist");
    }
    ref = first["checklist"].get<std::string>();
  }
  qlp::Checklist checklist = resolve_checklist(ref);

  std::vector<qlp::AssessmentRow> rows;
  for (size_t i = 0; i < docs.size(); ++i) {
    qlp::ParsedAssessment parsed;
    try {
      parsed = qlp::parse_assessment_json(docs[i], checklist);
    } catch (const qlp::MixedChecklistsError& e) {
      throw qlp::MixedChecklistsError(args.files[i] + ": " + e.what());
    } catch (const qlp::ParseError& e) {
      throw qlp::ParseError(args.files[i] + ": " + e.what());
    }
    emit_warnings(parsed.warnings);
    rows.push_back(std::move(parsed.row));
  }

  qlp::ComplianceMatrix matrix = qlp::build_matrix(rows, checklist);
  qlp::AggregateReport report = qlp::aggregate(matrix);
  emit(qlp::render_matrix(matrix, report, render_options(args.render)), args.render);
  return kOk;
}

int run_checklist_list() {
  for (const auto& c : qlp::builtin_checklists()) {
    std::cout << c.id << "  " << c.title << " (" << c.items.size() << " items)\n";
  }
  return kOk;
}

int run_checklist_show(const ChecklistShowArgs& args) {
  qlp::Checklist checklist = resolve_checklist(args.id);
  if (args.format == "json") {
    std::cout << qlp::serialize_checklist(checklist);
    return kOk;
  }
  if (args.format != "text") {
    throw qlp::OptionError("unknown format '" + args.format + "' (text or json)");
  }
  std::cout << checklist.id << ": " << checklist.title << " ("
            << checklist.items.size() << " items)\n";
  for (const auto& section : checklist.sections) {
    std::cout << "\n" << section.title << "\n";
    for (const auto* item : checklist.section_items(section.id)) {
      std::cout << "  " << item->id << "  " << item->title << " ["
                << qlp::to_string(item->automation) << "]";
      if (item->applicability.kind != qlp::Applicability::always) {
        std::cout << " (" << qlp::to_string(item->applicability) << ")";
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

int run_checklist_validate(const std::string& file) {
  qlp::Checklist checklist = qlp::checklist_from_json([&] {
    try {
      return nlohmann::json::parse(read_file(file));
    } catch (const nlohmann::json::parse_error& e) {
      throw qlp::ParseError(file + ": invalid JSON: " + e.what());
    }
  }());
  std::vector<qlp::Violation> violations = qlp::validate_checklist(checklist);
  if (violations.empty()) {
    std::cout << file << ": ok (" << checklist.items.size() << " items)\n";
    return kOk;
  }
  for (const auto& v : violations) {
    std::cout << v.code << " " << v.subject << ": " << v.message << "\n";
  }
  return kFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlp - compliance engine for quantum software experiments and "
               "laboratory packages"};
  app.require_subcommand(1);

  InitArgs init_args;
  CLI::App* init = app.add_subcommand("init", "Scaffold a new laboratory package");
  init->add_option("dir", init_args.dir, "Target directory")->required();
  init->add_option("--title", init_args.title, "Package title");
  init->add_option("--author", init_args.authors, "Author name (repeatable)");
  init->add_option("--license", init_args.license, "SPDX license identifier");
  init->add_option("--doi", init_args.doi, "Digital object identifier");
  init->add_flag("--force", init_args.force, "Write into a non-empty directory");

  LintArgs lint_args;
  CLI::App* lint = app.add_subcommand("lint", "Check a laboratory package");
  lint->add_option("dir", lint_args.dir, "Package root directory")->required();
  lint->add_option("--checklist", lint_args.checklist,
                   "Checklist id or file (default labpack-v1)");
  lint->add_option("--min-score", lint_args.min_score,
                   "Fail when the compliance score drops below this value");
  lint->add_flag("--strict", lint_args.strict,
                 "Treat detector/attestation conflicts as findings");
  lint->add_flag("--parallel-detectors", lint_args.parallel_detectors,
                 "Run the detectors concurrently");
  add_render_options(lint, lint_args.render);

  AggregateArgs agg_args;
  CLI::App* agg = app.add_subcommand("aggregate",
                                     "Combine assessment documents into a matrix");
  agg->add_option("files", agg_args.files, "Assessment documents (JSON)")->required();
  agg->add_option("--checklist", agg_args.checklist, "Checklist id or file");
  add_render_options(agg, agg_args.render);

  CLI::App* checklist = app.add_subcommand("checklist", "Inspect checklists");
  checklist->require_subcommand(1);
  checklist->add_subcommand("list", "List builtin checklists");
  ChecklistShowArgs show_args;
  CLI::App* show = checklist->add_subcommand("show", "Print one checklist");
  show->add_option("id", show_args.id, "Checklist id or file")->required();
  show->add_option("-f,--format", show_args.format, "Output format: text, json");
  std::string validate_file;
  CLI::App* validate = checklist->add_subcommand("validate", "Validate a checklist file");
  validate->add_option("file", validate_file, "Checklist document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qlp: " << e.what() << "\n";
    return kErrored;
  }

  try {
    if (init->parsed()) return run_init(init_args);
    if (lint->parsed()) return run_lint(lint_args);
    if (agg->parsed()) return run_aggregate(agg_args);
    if (checklist->parsed()) {
      if (checklist->get_subcommand("list")->parsed()) return run_checklist_list();
      if (show->parsed()) return run_checklist_show(show_args);
      if (validate->parsed()) return run_checklist_validate(validate_file);
    }
  } catch (const qlp::Error& e) {
    std::cerr << "qlp: error: " << e.what() << "\n";
    return kErrored;
  }
  return kErrored;
}
