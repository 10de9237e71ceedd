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

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qlp/errors.hpp"
#include "qlp/status.hpp"

namespace qlp {

/// Name of the manifest inside a package root.
inline constexpr const char* kManifestFilename = "labpack.json";

struct Author {
  std::string name;
  std::string affiliation;  // optional, empty when absent
  std::string orcid;        // optional, empty when absent

  bool operator==(const Author&) const = default;
};

struct ManifestMetadata {
  std::string title;
  std::vector<Author> authors;
  std::optional<std::string> doi;
  std::optional<std::string> license;  // SPDX identifier
  std::string paper;                   // path or URL; may be empty (warned)
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const ManifestMetadata&) const = default;
};

struct ArticleSection {
  std::optional<std::string> design_doc;
  std::optional<std::string> context_doc;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const ArticleSection&) const = default;
};

struct MaterialsSection {
  std::optional<std::string> instructions;
  std::vector<std::string> models;
  std::vector<std::string> sources;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const MaterialsSection&) const = default;
};

struct DatasetsSection {
  std::vector<std::string> pre;
  std::optional<std::string> processing;
  std::vector<std::string> results;
  bool results_replicable = false;
  std::string results_caveat;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const DatasetsSection&) const = default;
};

struct HardwareInfo {
  std::string provider;
  std::string device;
  long qubit_count = 0;
  std::optional<std::string> topology;
  std::optional<std::string> queue_notes;
  std::optional<std::string> cost_notes;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const HardwareInfo&) const = default;
};

struct ConstraintsInfo {
  std::optional<long> max_qubits;
  std::optional<std::string> availability;
  std::optional<std::string> decoherence_notes;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const ConstraintsInfo&) const = default;
};

enum class QuantumParadigm { gates, annealing };

std::string_view to_string(QuantumParadigm p);
std::optional<QuantumParadigm> paradigm_from_string(std::string_view token);

struct QuantumSoftwareInfo {
  QuantumParadigm paradigm = QuantumParadigm::gates;
  std::string algorithm;
  std::optional<long> shots;  // must be >= 1 when present
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const QuantumSoftwareInfo&) const = default;
};

struct SystemsSection {
  std::optional<HardwareInfo> hardware;
  std::optional<ConstraintsInfo> constraints;
  std::optional<std::string> classical_software;
  std::optional<QuantumSoftwareInfo> quantum_software;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const SystemsSection&) const = default;
};

struct ScriptsSection {
  std::optional<std::string> procedure;
  std::optional<std::string> analysis;
  std::vector<std::string> logs;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const ScriptsSection&) const = default;
};

/// One entry of the artifact inventory. Every artifact needs at least a
/// `url` or a `path`; `download` and `run` may each hold a path or URL.
struct ArtifactRecord {
  std::string name;
  std::optional<std::string> description;
  std::optional<std::string> url;
  std::optional<std::string> path;
  std::optional<std::string> license;
  std::optional<std::string> download;
  std::optional<std::string> run;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const ArtifactRecord&) const = default;
};

struct DevEnvironment {
  std::optional<std::string> definition;
  std::optional<std::string> setup_guide;
  std::optional<std::string> verification;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const DevEnvironment&) const = default;
};

struct DictionarySection {
  std::vector<ArtifactRecord> artifacts;
  std::vector<std::string> environments;
  std::optional<DevEnvironment> dev_environment;
  std::optional<std::string> decisions;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const DictionarySection&) const = default;
};

/// In-memory form of labpack.json. Unknown keys encountered while parsing
/// are kept verbatim in the `extra` object of the level they appeared at,
/// so parse/serialize does not silently drop author data.
struct PackageManifest {
  ManifestMetadata metadata;
  ArticleSection article;
  MaterialsSection materials;
  DatasetsSection datasets;
  SystemsSection systems;
  ScriptsSection scripts;
  DictionarySection dictionary;
  std::map<std::string, StatusEntry> attestations;  // item id -> verdict
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const PackageManifest&) const = default;
};

struct ParsedManifest {
  PackageManifest manifest;
  std::vector<Warning> warnings;
};

/// Decode manifest text. Malformed JSON throws ParseError; schema breaches
/// (empty title, bad DOI, absolute or escaping paths, shots < 1, artifacts
/// without url or path, unknown status tokens) throw SchemaError naming the
/// offending field. Unknown keys and an empty author list come back as
/// warnings, never as failures.
ParsedManifest parse_manifest(const std::string& text);
ParsedManifest parse_manifest_json(const nlohmann::json& doc);

nlohmann::json manifest_to_json(const PackageManifest& manifest);

/// Canonical serialization: sorted keys, two-space indent, empty optionals
/// omitted, exactly one trailing newline. Canonical form is a fixed point:
/// parse(serialize(m)).manifest == m for schema-valid m.
std::string serialize_manifest(const PackageManifest& manifest);

/// Schema rules as data (for programmatically built manifests) plus
/// filesystem checks: every declared relative path must exist under the
/// package root. Throws IoError when the root itself is unreadable.
std::vector<Violation> validate_manifest(const PackageManifest& manifest,
                                         const std::filesystem::path& package_root);

/// DOI syntax used across the engine: "10.", four to nine digits, "/",
/// then at least one non-space character.
bool doi_valid(std::string_view value);

/// True for http:// or https:// values; such fields skip path checks.
bool is_url(std::string_view value);

/// Invoke fn(field, value) for every path-valued field that is present and
/// not a URL. `field` is the dotted location ("scripts.analysis",
/// "dictionary.artifacts[2].path"). Shared by validation and detectors.
void for_each_declared_path(
    const PackageManifest& manifest,
    const std::function<void(const std::string& field, const std::string& value)>& fn);

}  // namespace qlp
