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

#include "qlp/detect.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <future>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "qlp/errors.hpp"

namespace qlp {

namespace fs = std::filesystem;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Everything a detector may look at, collected once per run so the
// detectors themselves stay pure functions.
struct DetectorContext {
  fs::path root;
  const PackageManifest* manifest = nullptr;
  const DetectorConfig* config = nullptr;
  // filename -> content for each README flavour present at the root
  std::vector<std::pair<std::string, std::string>> readmes;
};

using DetectorFn = std::function<DetectorResult(const DetectorContext&)>;

DetectorResult result(std::string id, Status s, std::vector<EvidenceRef> ev,
                      Confidence c) {
  return DetectorResult{std::move(id), s, std::move(ev), c};
}

bool file_exists(const DetectorContext& ctx, const std::string& rel) {
  std::error_code ec;
  return fs::exists(ctx.root / rel, ec) && !ec;
}

// A data path counts only when it exists and is not empty (zero-byte files
// and empty directories are placeholders, not data).
bool nonempty_data(const DetectorContext& ctx, const std::string& rel) {
  std::error_code ec;
  const fs::path p = ctx.root / rel;
  if (fs::is_directory(p, ec) && !ec) {
    return fs::directory_iterator(p, ec) != fs::directory_iterator() && !ec;
  }
  if (!fs::is_regular_file(p, ec) || ec) return false;
  auto size = fs::file_size(p, ec);
  return !ec && size > 0;
}

std::vector<EvidenceRef> heading_evidence(const DetectorContext& ctx) {
  std::vector<EvidenceRef> out;
  for (const auto& [name, content] : ctx.readmes) {
    for (const auto& heading : markdown_headings(content)) {
      const std::string lc = lower(heading);
      for (const auto& pattern : ctx.config->heading_patterns) {
        if (lc.find(lower(pattern)) != std::string::npos) {
          out.push_back({name, "heading '" + heading + "' matches '" + pattern + "'"});
          break;
        }
      }
    }
  }
  return out;
}

// Shared shape of the hybrid instruction detectors: a declared field wins
// outright; otherwise README headings give a heuristic answer.
DetectorResult field_or_headings(const DetectorContext& ctx, std::string id,
                                 const std::optional<std::string>& field,
                                 const std::string& field_name) {
  if (field) {
    if (is_url(*field) || file_exists(ctx, *field)) {
      return result(std::move(id), Status::met, {{field_name, *field}},
                    Confidence::certain);
    }
    return result(std::move(id), Status::unmet,
                  {{field_name, "declared file not found: " + *field}},
                  Confidence::certain);
  }
  auto ev = heading_evidence(ctx);
  if (!ev.empty()) {
    return result(std::move(id), Status::met, std::move(ev), Confidence::heuristic);
  }
  return result(std::move(id), Status::unmet, {}, Confidence::heuristic);
}

// Shared shape of the dataset detectors: every declared path must exist
// and carry actual content.
DetectorResult dataset_paths(const DetectorContext& ctx, std::string id,
                             const std::vector<std::string>& paths,
                             const std::string& field_name) {
  if (paths.empty()) {
    return result(std::move(id), Status::unmet,
                  {{field_name, "no data declared"}}, Confidence::certain);
  }
  std::vector<EvidenceRef> ev;
  for (const auto& p : paths) {
    if (!nonempty_data(ctx, p)) {
      return result(std::move(id), Status::unmet,
                    {{field_name, "missing or empty: " + p}}, Confidence::certain);
    }
    ev.push_back({p, {}});
  }
  return result(std::move(id), Status::met, std::move(ev), Confidence::certain);
}

DetectorResult detect_art01(const DetectorContext& ctx) {
  const std::string& paper = ctx.manifest->metadata.paper;
  if (paper.empty()) {
    return result("ART-01", Status::unmet,
                  {{"metadata.paper", "no article reference"}}, Confidence::certain);
  }
  if (is_url(paper) || file_exists(ctx, paper)) {
    return result("ART-01", Status::met, {{"metadata.paper", paper}},
                  Confidence::certain);
  }
  return result("ART-01", Status::unmet,
                {{"metadata.paper", "declared file not found: " + paper}},
                Confidence::certain);
}

DetectorResult detect_art04(const DetectorContext& ctx) {
  const auto& authors = ctx.manifest->metadata.authors;
  if (authors.empty()) {
    return result("ART-04", Status::unmet,
                  {{"metadata.authors", "no authors listed"}}, Confidence::certain);
  }
  return result("ART-04", Status::met,
                {{"metadata.authors", std::to_string(authors.size()) + " author(s) listed"}},
                Confidence::certain);
}

DetectorResult detect_mat01(const DetectorContext& ctx) {
  return field_or_headings(ctx, "MAT-01", ctx.manifest->materials.instructions,
                           "materials.instructions");
}

DetectorResult detect_dat01(const DetectorContext& ctx) {
  return dataset_paths(ctx, "DAT-01", ctx.manifest->datasets.pre, "datasets.pre");
}

DetectorResult detect_dat03(const DetectorContext& ctx) {
  return dataset_paths(ctx, "DAT-03", ctx.manifest->datasets.results, "datasets.results");
}

const std::vector<std::string>& log_extensions() {
  static const std::vector<std::string> exts = {"csv", "json", "txt",
                                                "png", "jpg", "svg"};
  return exts;
}

DetectorResult detect_scr03(const DetectorContext& ctx) {
  const auto& logs = ctx.manifest->scripts.logs;
  if (logs.empty()) {
    return result("SCR-03", Status::unmet, {{"scripts.logs", "no logs declared"}},
                  Confidence::certain);
  }
  std::vector<EvidenceRef> ev;
  for (const auto& p : logs) {
    if (!file_exists(ctx, p)) {
      return result("SCR-03", Status::unmet,
                    {{"scripts.logs", "declared log not found: " + p}},
                    Confidence::certain);
    }
    std::string ext = lower(fs::path(p).extension().string());
    if (!ext.empty() && ext.front() == '.') ext.erase(0, 1);
    const auto& allowed = log_extensions();
    if (std::find(allowed.begin(), allowed.end(), ext) == allowed.end()) {
      return result("SCR-03", Status::unmet,
                    {{"scripts.logs", "unsupported log format: " + p}},
                    Confidence::certain);
    }
    ev.push_back({p, {}});
  }
  return result("SCR-03", Status::met, std::move(ev), Confidence::certain);
}

DetectorResult detect_dic02(const DetectorContext& ctx) {
  std::vector<EvidenceRef> ev;
  const auto& arts = ctx.manifest->dictionary.artifacts;
  for (size_t i = 0; i < arts.size(); ++i) {
    if (!arts[i].url) continue;
    auto host = url_host(*arts[i].url);
    if (!host) continue;
    const auto& hosts = ctx.config->repo_hosts;
    if (std::find(hosts.begin(), hosts.end(), *host) != hosts.end()) {
      ev.push_back({"dictionary.artifacts[" + std::to_string(i) + "].url",
                    *arts[i].url});
    }
  }
  if (!ev.empty()) {
    return result("DIC-02", Status::met, std::move(ev), Confidence::certain);
  }
  return result("DIC-02", Status::unmet,
                {{"dictionary.artifacts", "no artifact on a recognized repository host"}},
                Confidence::certain);
}

// Shared shape of DIC-03/DIC-04: per-artifact how-to fields win; README
// headings are the fallback when no artifact declares the field.
DetectorResult artifact_howto(const DetectorContext& ctx, std::string id,
                              const char* field,
                              const std::function<const std::optional<std::string>&(
                                  const ArtifactRecord&)>& get) {
  std::vector<EvidenceRef> ev;
  bool declared = false;
  const auto& arts = ctx.manifest->dictionary.artifacts;
  for (size_t i = 0; i < arts.size(); ++i) {
    const auto& value = get(arts[i]);
    if (!value) continue;
    declared = true;
    if (is_url(*value) || file_exists(ctx, *value)) {
      ev.push_back({"dictionary.artifacts[" + std::to_string(i) + "]." + field, *value});
    }
  }
  if (!ev.empty()) {
    return result(std::move(id), Status::met, std::move(ev), Confidence::certain);
  }
  if (declared) {
    return result(std::move(id), Status::unmet,
                  {{std::string("dictionary.artifacts[].") + field,
                    "declared references do not resolve"}},
                  Confidence::certain);
  }
  auto headings = heading_evidence(ctx);
  if (!headings.empty()) {
    return result(std::move(id), Status::met, std::move(headings), Confidence::heuristic);
  }
  return result(std::move(id), Status::unmet, {}, Confidence::heuristic);
}

DetectorResult detect_dic03(const DetectorContext& ctx) {
  return artifact_howto(ctx, "DIC-03", "download",
                        [](const ArtifactRecord& a) -> const std::optional<std::string>& {
                          return a.download;
                        });
}

DetectorResult detect_dic04(const DetectorContext& ctx) {
  return artifact_howto(ctx, "DIC-04", "run",
                        [](const ArtifactRecord& a) -> const std::optional<std::string>& {
                          return a.run;
                        });
}

const std::vector<std::string>& license_filenames() {
  static const std::vector<std::string> names = {"LICENSE", "LICENSE.md",
                                                 "LICENSE.txt", "COPYING"};
  return names;
}

std::optional<EvidenceRef> artifact_license_evidence(const DetectorContext& ctx,
                                                     const ArtifactRecord& a,
                                                     size_t index) {
  const std::string base = "dictionary.artifacts[" + std::to_string(index) + "]";
  if (a.license && !a.license->empty()) {
    return EvidenceRef{base + ".license", *a.license};
  }
  if (!a.path) return std::nullopt;
  std::error_code ec;
  const fs::path p = ctx.root / *a.path;
  if (fs::is_directory(p, ec) && !ec) {
    for (const auto& name : license_filenames()) {
      if (fs::exists(p / name, ec) && !ec) {
        return EvidenceRef{*a.path + "/" + name, {}};
      }
    }
    return std::nullopt;
  }
  const std::string filename = p.filename().string();
  if (filename.rfind("LICENSE", 0) == 0 || filename.rfind("COPYING", 0) == 0) {
    return EvidenceRef{*a.path, {}};
  }
  return std::nullopt;
}

DetectorResult detect_dic05(const DetectorContext& ctx) {
  const auto& arts = ctx.manifest->dictionary.artifacts;
  if (arts.empty()) {
    return result("DIC-05", Status::unmet,
                  {{"dictionary.artifacts", "no artifacts declared"}},
                  Confidence::certain);
  }
  std::vector<EvidenceRef> ev;
  size_t licensed = 0;
  for (size_t i = 0; i < arts.size(); ++i) {
    if (auto e = artifact_license_evidence(ctx, arts[i], i)) {
      ++licensed;
      ev.push_back(std::move(*e));
    }
  }
  if (licensed == arts.size()) {
    return result("DIC-05", Status::met, std::move(ev), Confidence::certain);
  }
  if (licensed > 0) {
    return result("DIC-05", Status::partial, std::move(ev), Confidence::certain);
  }
  return result("DIC-05", Status::unmet,
                {{"dictionary.artifacts", "no artifact declares a license"}},
                Confidence::certain);
}

DetectorResult detect_dic06(const DetectorContext& ctx) {
  std::vector<std::string> found;
  for (const fs::path dir : {ctx.root, ctx.root / "env"}) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec) || ec) continue;
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
      if (ec) break;
      names.push_back(entry.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    const bool in_env = dir != ctx.root;
    for (const auto& name : names) {
      if (!container_filename(name)) continue;
      found.push_back(in_env ? "env/" + name : name);
    }
  }
  if (found.empty()) {
    return result("DIC-06", Status::unmet,
                  {{".", "no container or environment definition found"}},
                  Confidence::certain);
  }
  std::vector<EvidenceRef> ev;
  for (auto& f : found) ev.push_back({std::move(f), {}});
  return result("DIC-06", Status::met, std::move(ev), Confidence::certain);
}

DetectorResult detect_dic08(const DetectorContext& ctx) {
  const auto& dev = ctx.manifest->dictionary.dev_environment;
  return field_or_headings(ctx, "DIC-08",
                           dev ? dev->setup_guide : std::optional<std::string>{},
                           "dictionary.dev_environment.setup_guide");
}

DetectorResult detect_dic11(const DetectorContext& ctx) {
  const auto& doi = ctx.manifest->metadata.doi;
  if (doi && doi_valid(*doi)) {
    return result("DIC-11", Status::met, {{"metadata.doi", *doi}}, Confidence::certain);
  }
  for (const auto& [name, content] : ctx.readmes) {
    if (auto found = scan_doi(content)) {
      return result("DIC-11", Status::met, {{name, *found}}, Confidence::heuristic);
    }
  }
  return result("DIC-11", Status::unmet, {{"metadata.doi", "no DOI recorded"}},
                Confidence::certain);
}

DetectorResult detect_dic12(const DetectorContext& ctx) {
  const auto& license = ctx.manifest->metadata.license;
  if (license && !license->empty()) {
    return result("DIC-12", Status::met, {{"metadata.license", *license}},
                  Confidence::certain);
  }
  for (const auto& name : license_filenames()) {
    if (!file_exists(ctx, name)) continue;
    auto content = read_file(ctx.root / name);
    if (!content || content->empty()) continue;
    if (auto spdx = detect_license_text(*content)) {
      return result("DIC-12", Status::met, {{name, *spdx}}, Confidence::certain);
    }
    return result("DIC-12", Status::met, {{name, "unclassified license text"}},
                  Confidence::heuristic);
  }
  return result("DIC-12", Status::unmet,
                {{"metadata.license", "no package license recorded"}},
                Confidence::certain);
}

const std::vector<std::pair<std::string, DetectorFn>>& registry() {
  static const std::vector<std::pair<std::string, DetectorFn>> detectors = {
      {"ART-01", detect_art01}, {"ART-04", detect_art04},
      {"DAT-01", detect_dat01}, {"DAT-03", detect_dat03},
      {"DIC-02", detect_dic02}, {"DIC-03", detect_dic03},
      {"DIC-04", detect_dic04}, {"DIC-05", detect_dic05},
      {"DIC-06", detect_dic06}, {"DIC-08", detect_dic08},
      {"DIC-11", detect_dic11}, {"DIC-12", detect_dic12},
      {"MAT-01", detect_mat01}, {"SCR-03", detect_scr03},
  };
  return detectors;
}

}  // namespace

std::string_view to_string(Confidence c) {
  return c == Confidence::certain ? "certain" : "heuristic";
}

std::string EvidenceRef::render() const {
  return detail.empty() ? location : location + ": " + detail;
}

std::vector<std::string> default_repo_hosts() {
  return {"github.com", "bitbucket.org", "gitlab.com", "zenodo.org"};
}

std::vector<std::string> default_heading_patterns() {
  return {"install", "download", "setup", "usage", "run", "execute",
          "getting started"};
}

DetectorConfig load_detector_config(const fs::path& package_root) {
  DetectorConfig config;
  auto text = read_file(package_root / kDetectorConfigFilename);
  if (!text) return config;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(*text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(kDetectorConfigFilename) + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(std::string(kDetectorConfigFilename) + ": root must be an object");
  }
  auto read_list = [&](const char* key, std::vector<std::string>& target) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_array()) {
      throw ParseError(std::string(kDetectorConfigFilename) + ": '" + key +
                       "' must be an array of strings");
    }
    std::vector<std::string> values;
    for (const auto& v : *it) {
      if (!v.is_string()) {
        throw ParseError(std::string(kDetectorConfigFilename) + ": '" + key +
                         "' must be an array of strings");
      }
      values.push_back(v.get<std::string>());
    }
    target = std::move(values);  // wholesale replacement, not a merge
  };
  read_list("repo_hosts", config.repo_hosts);
  read_list("heading_patterns", config.heading_patterns);
  return config;
}

const std::vector<std::string>& detector_item_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool has_detector(std::string_view item_id) {
  const auto& ids = detector_item_ids();
  return std::binary_search(ids.begin(), ids.end(), item_id);
}

std::vector<DetectorResult> run_detectors(const fs::path& package_root,
                                          const PackageManifest& manifest,
                                          const DetectorConfig& config,
                                          bool parallel) {
  DetectorContext ctx;
  ctx.root = package_root;
  ctx.manifest = &manifest;
  ctx.config = &config;
  for (const char* name : {"README.md", "README", "README.txt"}) {
    if (auto content = read_file(package_root / name)) {
      ctx.readmes.emplace_back(name, std::move(*content));
    }
  }

  const auto& detectors = registry();
  std::vector<DetectorResult> results(detectors.size());
  if (parallel) {
    std::vector<std::future<DetectorResult>> futures;
    futures.reserve(detectors.size());
    for (const auto& [id, fn] : detectors) {
      futures.push_back(std::async(std::launch::async, fn, std::cref(ctx)));
    }
    for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < detectors.size(); ++i) results[i] = detectors[i].second(ctx);
  }
  std::sort(results.begin(), results.end(),
            [](const DetectorResult& a, const DetectorResult& b) {
              return a.item_id < b.item_id;
            });
  return results;
}

std::optional<std::string> detect_license_text(std::string_view text) {
  // Normalize the leading block: lowercase, commas dropped, whitespace
  // collapsed. Sixty lines is plenty for any license preamble.
  std::istringstream in{std::string(text)};
  std::string line;
  std::string block;
  for (int i = 0; i < 60 && std::getline(in, line); ++i) {
    for (char c : line) {
      if (c == ',') continue;
      block.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    block.push_back(' ');
  }
  std::string collapsed;
  bool in_space = false;
  for (char c : block) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_space && !collapsed.empty()) collapsed.push_back(' ');
      in_space = true;
    } else {
      collapsed.push_back(c);
      in_space = false;
    }
  }

  const auto has = [&](const char* needle) {
    return collapsed.find(needle) != std::string::npos;
  };

  if (has("spdx-license-identifier: apache-2.0")) return "Apache-2.0";
  if (has("spdx-license-identifier: mit")) return "MIT";
  if (has("spdx-license-identifier: gpl-3.0-or-later")) return "GPL-3.0-or-later";
  if (has("spdx-license-identifier: gpl-3.0-only") ||
      has("spdx-license-identifier: gpl-3.0")) {
    return "GPL-3.0-only";
  }

  if (has("apache license") && has("version 2.0")) return "Apache-2.0";
  if (has("mit license")) return "MIT";
  if (has("gnu general public license") && has("version 3")) {
    if (has("at your option) any later version") || has("any later version")) {
      return "GPL-3.0-or-later";
    }
    return "GPL-3.0-only";
  }
  return std::nullopt;
}

std::optional<std::string> url_host(std::string_view url) {
  if (!is_url(url)) return std::nullopt;
  const size_t scheme = url.find("://");
  size_t start = scheme + 3;
  size_t end = start;
  while (end < url.size() && url[end] != '/' && url[end] != ':' && url[end] != '?' &&
         url[end] != '#') {
    ++end;
  }
  if (end == start) return std::nullopt;
  std::string host = lower(url.substr(start, end - start));
  if (host.rfind("www.", 0) == 0) host.erase(0, 4);
  return host;
}

std::optional<std::string> scan_doi(std::string_view text) {
  static const std::regex pattern(R"(10\.[0-9]{4,9}/[^\s]+)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_search(text.begin(), text.end(), m, pattern)) return std::nullopt;
  std::string found = m.str(0);
  while (!found.empty() &&
         std::string_view(".,;:)]}\"'").find(found.back()) != std::string_view::npos) {
    found.pop_back();
  }
  if (!doi_valid(found)) return std::nullopt;
  return found;
}

bool container_filename(std::string_view name) {
  if (name == "Dockerfile" || name == "docker-compose.yml" ||
      name == "docker-compose.yaml") {
    return true;
  }
  constexpr std::string_view suffix = ".k8s.yaml";
  return name.size() > suffix.size() &&
         name.substr(name.size() - suffix.size()) == suffix;
}

std::vector<std::string> markdown_headings(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] != '#') continue;
    while (i < line.size() && line[i] == '#') ++i;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::string heading = line.substr(i);
    while (!heading.empty() &&
           (heading.back() == '\r' || heading.back() == ' ' || heading.back() == '\t')) {
      heading.pop_back();
    }
    if (!heading.empty()) out.push_back(std::move(heading));
  }
  return out;
}

}  // namespace qlp
