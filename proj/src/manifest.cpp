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

#include "qlp/manifest.hpp"

#include <cctype>
#include <set>

#include "qlp/checklist.hpp"

namespace qlp {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Tracks which keys of one JSON object have been consumed; whatever is left
// over at take_extra() time is preserved verbatim and reported as a warning.
class ObjReader {
public:
  ObjReader(const json& j, std::string path, std::vector<Warning>& warnings)
      : j_(j), path_(std::move(path)), warnings_(warnings) {}

  std::string at(const char* key) const {
    return path_.empty() ? std::string(key) : path_ + "." + key;
  }

  const json* find(const char* key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }

  const json* object(const char* key) {
    const json* v = find(key);
    if (!v) return nullptr;
    if (!v->is_object()) throw SchemaError(at(key), "must be an object");
    return v;
  }

  std::optional<std::string> str_opt(const char* key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw SchemaError(at(key), "must be a string");
    return v->get<std::string>();
  }

  std::string str_or_empty(const char* key) { return str_opt(key).value_or(""); }

  std::string str_required(const char* key) {
    auto v = str_opt(key);
    if (!v) throw SchemaError(at(key), "required field is missing");
    return *v;
  }

  std::vector<std::string> str_list(const char* key) {
    const json* v = find(key);
    if (!v) return {};
    if (!v->is_array()) throw SchemaError(at(key), "must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : *v) {
      if (!e.is_string()) throw SchemaError(at(key), "must be an array of strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  std::optional<long> int_opt(const char* key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) throw SchemaError(at(key), "must be an integer");
    return v->get<long>();
  }

  bool bool_or(const char* key, bool dflt) {
    const json* v = find(key);
    if (!v) return dflt;
    if (!v->is_boolean()) throw SchemaError(at(key), "must be a boolean");
    return v->get<bool>();
  }

  json take_extra() {
    json extra = json::object();
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (used_.count(it.key())) continue;
      extra[it.key()] = it.value();
      const std::string subject =
          path_.empty() ? it.key() : path_ + "." + it.key();
      warnings_.push_back({subject, "unknown key preserved"});
    }
    return extra;
  }

private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
  std::vector<Warning>& warnings_;
};

// Merge preserved unknown keys back into an object without letting them
// shadow schema keys: known fields are written after the extras.
json with_extra(const json& extra) {
  return extra.is_object() ? extra : json::object();
}

bool path_escapes(const std::string& value) {
  // Component-wise check for "..".
  size_t start = 0;
  while (start <= value.size()) {
    size_t end = value.find('/', start);
    if (end == std::string::npos) end = value.size();
    if (value.substr(start, end - start) == "..") return true;
    if (end == value.size()) break;
    start = end + 1;
  }
  return false;
}

void path_violations(const std::string& field, const std::string& value,
                     std::vector<Violation>& out) {
  if (value.empty()) {
    out.push_back({"empty-path", field, "declared path must not be empty"});
    return;
  }
  if (value.front() == '/') {
    out.push_back({"absolute-path", field, "declared paths must be relative"});
  }
  if (path_escapes(value)) {
    out.push_back({"escaping-path", field,
                   "declared paths must stay inside the package root"});
  }
}

// Schema rules as data. Shared verbatim by parse_manifest (which throws a
// SchemaError for the first breach) and validate_manifest (which reports
// all of them).
std::vector<Violation> invariant_violations(const PackageManifest& m) {
  std::vector<Violation> out;
  if (m.metadata.title.empty()) {
    out.push_back({"empty-title", "metadata.title", "title must not be empty"});
  }
  for (size_t i = 0; i < m.metadata.authors.size(); ++i) {
    if (m.metadata.authors[i].name.empty()) {
      out.push_back({"empty-author",
                     "metadata.authors[" + std::to_string(i) + "].name",
                     "author name must not be empty"});
    }
  }
  if (m.metadata.doi && !doi_valid(*m.metadata.doi)) {
    out.push_back({"bad-doi", "metadata.doi",
                   "not a valid DOI: '" + *m.metadata.doi + "'"});
  }
  if (m.metadata.license && m.metadata.license->empty()) {
    out.push_back({"empty-license", "metadata.license",
                   "license identifier must not be empty"});
  }
  if (m.systems.hardware && m.systems.hardware->qubit_count < 0) {
    out.push_back({"bad-qubit-count", "systems.hardware.qubits",
                   "qubit count must not be negative"});
  }
  if (m.systems.constraints && m.systems.constraints->max_qubits &&
      *m.systems.constraints->max_qubits < 1) {
    out.push_back({"bad-max-qubits", "systems.constraints.max_qubits",
                   "max qubit count must be at least 1"});
  }
  if (m.systems.quantum_software && m.systems.quantum_software->shots &&
      *m.systems.quantum_software->shots < 1) {
    out.push_back({"bad-shots", "systems.quantum_software.shots",
                   "shot count must be at least 1"});
  }
  for (size_t i = 0; i < m.dictionary.artifacts.size(); ++i) {
    const auto& a = m.dictionary.artifacts[i];
    const std::string base = "dictionary.artifacts[" + std::to_string(i) + "]";
    if (a.name.empty()) {
      out.push_back({"empty-name", base + ".name", "artifact name must not be empty"});
    }
    if (!a.url && !a.path) {
      out.push_back({"artifact-location", base,
                     "artifact needs at least a url or a path"});
    }
    if (a.url && !is_url(*a.url)) {
      out.push_back({"bad-url", base + ".url",
                     "must be an http(s) URL: '" + *a.url + "'"});
    }
  }
  for (const auto& [id, entry] : m.attestations) {
    (void)entry;
    if (!item_id_valid(id)) {
      out.push_back({"bad-item-id", "attestations." + id,
                     "attestation keys must look like checklist item ids"});
    }
  }
  for_each_declared_path(m, [&](const std::string& field, const std::string& value) {
    path_violations(field, value, out);
  });
  return out;
}

ArticleSection parse_article(const json& j, std::vector<Warning>& warnings) {
  ObjReader r(j, "article", warnings);
  ArticleSection s;
  s.design_doc = r.str_opt("design_doc");
  s.context_doc = r.str_opt("context_doc");
  s.extra = r.take_extra();
  return s;
}

MaterialsSection parse_materials(const json& j, std::vector<Warning>& warnings) {
  ObjReader r(j, "materials", warnings);
  MaterialsSection s;
  s.instructions = r.str_opt("instructions");
  s.models = r.str_list("models");
  s.sources = r.str_list("sources");
  s.extra = r.take_extra();
  return s;
}

DatasetsSection parse_datasets(const json& j, std::vector<Warning>& warnings) {
  ObjReader r(j, "datasets", warnings);
  DatasetsSection s;
  s.pre = r.str_list("pre");
  s.processing = r.str_opt("processing");
  s.results = r.str_list("results");
  s.results_replicable = r.bool_or("results_replicable", false);
  s.results_caveat = r.str_or_empty("results_caveat");
  s.extra = r.take_extra();
  return s;
}

SystemsSection parse_systems(const json& j, std::vector<Warning>& warnings) {
  ObjReader r(j, "systems", warnings);
  SystemsSection s;
  if (const json* hw = r.object("hardware")) {
    ObjReader h(*hw, "systems.hardware", warnings);
    HardwareInfo info;
    info.provider = h.str_or_empty("provider");
    info.device = h.str_or_empty("device");
    info.qubit_count = h.int_opt("qubits").value_or(0);
    info.topology = h.str_opt("topology");
    info.queue_notes = h.str_opt("queue_notes");
    info.cost_notes = h.str_opt("cost_notes");
    info.extra = h.take_extra();
    s.hardware = std::move(info);
  }
  if (const json* cj = r.object("constraints")) {
    ObjReader c(*cj, "systems.constraints", warnings);
    ConstraintsInfo info;
    info.max_qubits = c.int_opt("max_qubits");
    info.availability = c.str_opt("availability");
    info.decoherence_notes = c.str_opt("decoherence_notes");
    info.extra = c.take_extra();
    s.constraints = std::move(info);
  }
  s.classical_software = r.str_opt("classical_software");
  if (const json* qj = r.object("quantum_software")) {
    ObjReader q(*qj, "systems.quantum_software", warnings);
    QuantumSoftwareInfo info;
    if (auto paradigm = q.str_opt("paradigm")) {
      auto parsed = paradigm_from_string(*paradigm);
      if (!parsed) {
        throw SchemaError("systems.quantum_software.paradigm",
                          "unknown paradigm '" + *paradigm + "'");
      }
      info.paradigm = *parsed;
    }
    info.algorithm = q.str_or_empty("algorithm");
    info.shots = q.int_opt("shots");
    info.extra = q.take_extra();
    s.quantum_software = std::move(info);
  }
  s.extra = r.take_extra();
  return s;
}

ScriptsSection parse_scripts(const json& j, std::vector<Warning>& warnings) {
  ObjReader r(j, "scripts", warnings);
  ScriptsSection s;
  s.procedure = r.str_opt("procedure");
  s.analysis = r.str_opt("analysis");
  s.logs = r.str_list("logs");
  s.extra = r.take_extra();
  return s;
}

DictionarySection parse_dictionary(const json& j, std::vector<Warning>& warnings) {
  ObjReader r(j, "dictionary", warnings);
  DictionarySection s;
  if (const json* arts = r.find("artifacts")) {
    if (!arts->is_array()) throw SchemaError("dictionary.artifacts", "must be an array");
    for (size_t i = 0; i < arts->size(); ++i) {
      const std::string where = "dictionary.artifacts[" + std::to_string(i) + "]";
      if (!(*arts)[i].is_object()) throw SchemaError(where, "must be an object");
      ObjReader a((*arts)[i], where, warnings);
      ArtifactRecord rec;
      rec.name = a.str_required("name");
      rec.description = a.str_opt("description");
      rec.url = a.str_opt("url");
      rec.path = a.str_opt("path");
      rec.license = a.str_opt("license");
      rec.download = a.str_opt("download");
      rec.run = a.str_opt("run");
      rec.extra = a.take_extra();
      s.artifacts.push_back(std::move(rec));
    }
  }
  s.environments = r.str_list("environments");
  if (const json* dev = r.object("dev_environment")) {
    ObjReader d(*dev, "dictionary.dev_environment", warnings);
    DevEnvironment env;
    env.definition = d.str_opt("definition");
    env.setup_guide = d.str_opt("setup_guide");
    env.verification = d.str_opt("verification");
    env.extra = d.take_extra();
    s.dev_environment = std::move(env);
  }
  s.decisions = r.str_opt("decisions");
  s.extra = r.take_extra();
  return s;
}

void emit_author(json& arr, const Author& a) {
  json aj;
  aj["name"] = a.name;
  if (!a.affiliation.empty()) aj["affiliation"] = a.affiliation;
  if (!a.orcid.empty()) aj["orcid"] = a.orcid;
  arr.push_back(std::move(aj));
}

}  // namespace

std::string_view to_string(QuantumParadigm p) {
  return p == QuantumParadigm::annealing ? "annealing" : "gates";
}

std::optional<QuantumParadigm> paradigm_from_string(std::string_view token) {
  if (token == "gates") return QuantumParadigm::gates;
  if (token == "annealing") return QuantumParadigm::annealing;
  return std::nullopt;
}

bool doi_valid(std::string_view value) {
  if (value.rfind("10.", 0) != 0) return false;
  size_t i = 3;
  size_t digits = 0;
  while (i < value.size() && std::isdigit(static_cast<unsigned char>(value[i]))) {
    ++i;
    ++digits;
  }
  if (digits < 4 || digits > 9) return false;
  if (i >= value.size() || value[i] != '/') return false;
  ++i;
  if (i >= value.size()) return false;
  for (; i < value.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(value[i]))) return false;
  }
  return true;
}

bool is_url(std::string_view value) {
  return value.rfind("http://", 0) == 0 || value.rfind("https://", 0) == 0;
}

void for_each_declared_path(
    const PackageManifest& m,
    const std::function<void(const std::string&, const std::string&)>& fn) {
  auto maybe = [&](const std::string& field, const std::optional<std::string>& v) {
    if (v && !is_url(*v)) fn(field, *v);
  };
  auto list = [&](const std::string& field, const std::vector<std::string>& vs) {
    for (size_t i = 0; i < vs.size(); ++i) {
      if (!is_url(vs[i])) fn(field + "[" + std::to_string(i) + "]", vs[i]);
    }
  };

  if (!m.metadata.paper.empty() && !is_url(m.metadata.paper)) {
    fn("metadata.paper", m.metadata.paper);
  }
  maybe("article.design_doc", m.article.design_doc);
  maybe("article.context_doc", m.article.context_doc);
  maybe("materials.instructions", m.materials.instructions);
  list("materials.models", m.materials.models);
  list("materials.sources", m.materials.sources);
  list("datasets.pre", m.datasets.pre);
  maybe("datasets.processing", m.datasets.processing);
  list("datasets.results", m.datasets.results);
  maybe("scripts.procedure", m.scripts.procedure);
  maybe("scripts.analysis", m.scripts.analysis);
  list("scripts.logs", m.scripts.logs);
  for (size_t i = 0; i < m.dictionary.artifacts.size(); ++i) {
    const auto& a = m.dictionary.artifacts[i];
    const std::string base = "dictionary.artifacts[" + std::to_string(i) + "]";
    maybe(base + ".path", a.path);
    maybe(base + ".download", a.download);
    maybe(base + ".run", a.run);
  }
  list("dictionary.environments", m.dictionary.environments);
  if (m.dictionary.dev_environment) {
    maybe("dictionary.dev_environment.definition", m.dictionary.dev_environment->definition);
    maybe("dictionary.dev_environment.setup_guide", m.dictionary.dev_environment->setup_guide);
    maybe("dictionary.dev_environment.verification", m.dictionary.dev_environment->verification);
  }
  maybe("dictionary.decisions", m.dictionary.decisions);
}

ParsedManifest parse_manifest_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("manifest root must be a JSON object");
  std::vector<Warning> warnings;
  PackageManifest m;
  ObjReader root(doc, "", warnings);

  const json* md = root.object("metadata");
  if (!md) throw SchemaError("metadata", "required section is missing");
  {
    ObjReader r(*md, "metadata", warnings);
    m.metadata.title = r.str_required("title");
    if (const json* authors = r.find("authors")) {
      if (!authors->is_array()) throw SchemaError("metadata.authors", "must be an array");
      for (size_t i = 0; i < authors->size(); ++i) {
        const std::string where = "metadata.authors[" + std::to_string(i) + "]";
        if (!(*authors)[i].is_object()) throw SchemaError(where, "must be an object");
        ObjReader a((*authors)[i], where, warnings);
        Author author;
        author.name = a.str_required("name");
        author.affiliation = a.str_or_empty("affiliation");
        author.orcid = a.str_or_empty("orcid");
        json leftover = a.take_extra();
        (void)leftover;  // author records carry no extras
        m.metadata.authors.push_back(std::move(author));
      }
    }
    m.metadata.doi = r.str_opt("doi");
    m.metadata.license = r.str_opt("license");
    m.metadata.paper = r.str_required("paper");
    m.metadata.extra = r.take_extra();
  }

  if (const json* j = root.object("article")) m.article = parse_article(*j, warnings);
  if (const json* j = root.object("materials")) m.materials = parse_materials(*j, warnings);
  if (const json* j = root.object("datasets")) m.datasets = parse_datasets(*j, warnings);
  if (const json* j = root.object("systems")) m.systems = parse_systems(*j, warnings);
  if (const json* j = root.object("scripts")) m.scripts = parse_scripts(*j, warnings);
  if (const json* j = root.object("dictionary")) m.dictionary = parse_dictionary(*j, warnings);

  if (const json* att = root.object("attestations")) {
    for (auto it = att->begin(); it != att->end(); ++it) {
      m.attestations[it.key()] =
          entry_from_json(it.value(), "attestations." + it.key(), /*schema_errors=*/true);
    }
  }
  m.extra = root.take_extra();

  auto breaches = invariant_violations(m);
  if (!breaches.empty()) {
    const auto& v = breaches.front();
    throw SchemaError(v.subject, v.message + " [" + v.code + "]");
  }

  if (m.metadata.authors.empty()) {
    warnings.push_back({"metadata.authors", "author list is empty"});
  }
  if (m.metadata.paper.empty()) {
    warnings.push_back({"metadata.paper", "paper reference is empty"});
  }
  return {std::move(m), std::move(warnings)};
}

ParsedManifest parse_manifest(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_manifest_json(doc);
}

nlohmann::json manifest_to_json(const PackageManifest& m) {
  json doc = with_extra(m.extra);

  json md = with_extra(m.metadata.extra);
  md["title"] = m.metadata.title;
  if (!m.metadata.authors.empty()) {
    md["authors"] = json::array();
    for (const auto& a : m.metadata.authors) emit_author(md["authors"], a);
  }
  if (m.metadata.doi) md["doi"] = *m.metadata.doi;
  if (m.metadata.license) md["license"] = *m.metadata.license;
  md["paper"] = m.metadata.paper;
  doc["metadata"] = std::move(md);

  {
    json s = with_extra(m.article.extra);
    if (m.article.design_doc) s["design_doc"] = *m.article.design_doc;
    if (m.article.context_doc) s["context_doc"] = *m.article.context_doc;
    if (!s.empty()) doc["article"] = std::move(s);
  }
  {
    json s = with_extra(m.materials.extra);
    if (m.materials.instructions) s["instructions"] = *m.materials.instructions;
    if (!m.materials.models.empty()) s["models"] = m.materials.models;
    if (!m.materials.sources.empty()) s["sources"] = m.materials.sources;
    if (!s.empty()) doc["materials"] = std::move(s);
  }
  {
    json s = with_extra(m.datasets.extra);
    if (!m.datasets.pre.empty()) s["pre"] = m.datasets.pre;
    if (m.datasets.processing) s["processing"] = *m.datasets.processing;
    if (!m.datasets.results.empty()) s["results"] = m.datasets.results;
    if (m.datasets.results_replicable) s["results_replicable"] = true;
    if (!m.datasets.results_caveat.empty()) s["results_caveat"] = m.datasets.results_caveat;
    if (!s.empty()) doc["datasets"] = std::move(s);
  }
  {
    json s = with_extra(m.systems.extra);
    if (m.systems.hardware) {
      const auto& hw = *m.systems.hardware;
      json h = with_extra(hw.extra);
      if (!hw.provider.empty()) h["provider"] = hw.provider;
      if (!hw.device.empty()) h["device"] = hw.device;
      if (hw.qubit_count != 0) h["qubits"] = hw.qubit_count;
      if (hw.topology) h["topology"] = *hw.topology;
      if (hw.queue_notes) h["queue_notes"] = *hw.queue_notes;
      if (hw.cost_notes) h["cost_notes"] = *hw.cost_notes;
      s["hardware"] = std::move(h);
    }
    if (m.systems.constraints) {
      const auto& c = *m.systems.constraints;
      json cj = with_extra(c.extra);
      if (c.max_qubits) cj["max_qubits"] = *c.max_qubits;
      if (c.availability) cj["availability"] = *c.availability;
      if (c.decoherence_notes) cj["decoherence_notes"] = *c.decoherence_notes;
      s["constraints"] = std::move(cj);
    }
    if (m.systems.classical_software) s["classical_software"] = *m.systems.classical_software;
    if (m.systems.quantum_software) {
      const auto& q = *m.systems.quantum_software;
      json qj = with_extra(q.extra);
      qj["paradigm"] = std::string(to_string(q.paradigm));
      if (!q.algorithm.empty()) qj["algorithm"] = q.algorithm;
      if (q.shots) qj["shots"] = *q.shots;
      s["quantum_software"] = std::move(qj);
    }
    if (!s.empty()) doc["systems"] = std::move(s);
  }
  {
    json s = with_extra(m.scripts.extra);
    if (m.scripts.procedure) s["procedure"] = *m.scripts.procedure;
    if (m.scripts.analysis) s["analysis"] = *m.scripts.analysis;
    if (!m.scripts.logs.empty()) s["logs"] = m.scripts.logs;
    if (!s.empty()) doc["scripts"] = std::move(s);
  }
  {
    json s = with_extra(m.dictionary.extra);
    if (!m.dictionary.artifacts.empty()) {
      s["artifacts"] = json::array();
      for (const auto& a : m.dictionary.artifacts) {
        json aj = with_extra(a.extra);
        aj["name"] = a.name;
        if (a.description) aj["description"] = *a.description;
        if (a.url) aj["url"] = *a.url;
        if (a.path) aj["path"] = *a.path;
        if (a.license) aj["license"] = *a.license;
        if (a.download) aj["download"] = *a.download;
        if (a.run) aj["run"] = *a.run;
        s["artifacts"].push_back(std::move(aj));
      }
    }
    if (!m.dictionary.environments.empty()) s["environments"] = m.dictionary.environments;
    if (m.dictionary.dev_environment) {
      const auto& d = *m.dictionary.dev_environment;
      json dj = with_extra(d.extra);
      if (d.definition) dj["definition"] = *d.definition;
      if (d.setup_guide) dj["setup_guide"] = *d.setup_guide;
      if (d.verification) dj["verification"] = *d.verification;
      s["dev_environment"] = std::move(dj);
    }
    if (m.dictionary.decisions) s["decisions"] = *m.dictionary.decisions;
    if (!s.empty()) doc["dictionary"] = std::move(s);
  }
  if (!m.attestations.empty()) {
    json att = json::object();
    for (const auto& [id, entry] : m.attestations) att[id] = entry_to_json(entry);
    doc["attestations"] = std::move(att);
  }
  return doc;
}

std::string serialize_manifest(const PackageManifest& m) {
  return manifest_to_json(m).dump(2) + "\n";
}

std::vector<Violation> validate_manifest(const PackageManifest& m,
                                         const fs::path& package_root) {
  std::error_code ec;
  if (!fs::is_directory(package_root, ec) || ec) {
    throw IoError("package root is not a readable directory: " + package_root.string());
  }
  std::vector<Violation> out = invariant_violations(m);
  for_each_declared_path(m, [&](const std::string& field, const std::string& value) {
    if (value.empty() || value.front() == '/' || path_escapes(value)) {
      return;  // already reported as a shape violation
    }
    std::error_code exists_ec;
    if (!fs::exists(package_root / value, exists_ec) || exists_ec) {
      out.push_back({"missing-path", field, "declared path does not exist: " + value});
    }
  });
  return out;
}

}  // namespace qlp
