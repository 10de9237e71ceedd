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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlp/manifest.hpp"
#include "qlp/status.hpp"

namespace qlp {

/// How sure a detector is. `certain` findings rest on declared manifest
/// fields or exact files; `heuristic` findings rest on content scans
/// (README headings, free-text DOI or license matches) and never override
/// a human attestation.
enum class Confidence { certain, heuristic };

std::string_view to_string(Confidence c);

/// One piece of machine-collected evidence: where it was found plus an
/// optional human-readable detail.
struct EvidenceRef {
  std::string location;
  std::string detail;

  bool operator==(const EvidenceRef&) const = default;

  /// "location" or "location: detail".
  std::string render() const;
};

/// Verdict of one detector for one checklist item.
struct DetectorResult {
  std::string item_id;
  Status suggested = Status::unmet;
  std::vector<EvidenceRef> evidence;
  Confidence confidence = Confidence::certain;

  bool operator==(const DetectorResult&) const = default;
};

/// Name of the optional per-package detector configuration file.
inline constexpr const char* kDetectorConfigFilename = "qlp-detect.json";

std::vector<std::string> default_repo_hosts();
std::vector<std::string> default_heading_patterns();

/// Tunable detector inputs. A qlp-detect.json at the package root replaces
/// either list wholesale; absent keys keep the defaults.
struct DetectorConfig {
  std::vector<std::string> repo_hosts = default_repo_hosts();
  std::vector<std::string> heading_patterns = default_heading_patterns();
};

/// Read qlp-detect.json from the package root; defaults when absent.
/// Malformed config throws ParseError.
DetectorConfig load_detector_config(const std::filesystem::path& package_root);

/// Item ids with a registered detector, sorted. Exactly the auto and
/// hybrid items of labpack-v1.
const std::vector<std::string>& detector_item_ids();

bool has_detector(std::string_view item_id);

/// Run every registered detector against a package. Pure filesystem reads;
/// with `parallel` set the detectors run concurrently, and either way the
/// results come back sorted by item id with deterministic evidence order.
std::vector<DetectorResult> run_detectors(const std::filesystem::path& package_root,
                                          const PackageManifest& manifest,
                                          const DetectorConfig& config = {},
                                          bool parallel = false);

/// Classify raw license text. Recognizes Apache-2.0, MIT, GPL-3.0-only and
/// GPL-3.0-or-later from title lines or an SPDX-License-Identifier tag in
/// the leading block; empty optional for anything else.
std::optional<std::string> detect_license_text(std::string_view text);

/// Host part of an http(s) URL, lowercased, leading "www." stripped.
std::optional<std::string> url_host(std::string_view url);

/// First DOI-shaped token in free text, with trailing punctuation trimmed.
std::optional<std::string> scan_doi(std::string_view text);

/// True for the recognized container definition filenames: Dockerfile,
/// docker-compose.yml, docker-compose.yaml, *.k8s.yaml.
bool container_filename(std::string_view name);

/// Text of every markdown heading line ('#'-prefixed), in order.
std::vector<std::string> markdown_headings(std::string_view text);

}  // namespace qlp
