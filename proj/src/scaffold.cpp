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

#include "qlp/scaffold.hpp"

#include <fstream>

#include "qlp/checklist.hpp"

namespace qlp {

namespace fs = std::filesystem;

namespace {

// Section directories, creation order. datasets/ splits into the three
// dataset stages; env/ carries the container definition.
const char* const kDirectories[] = {
    "article", "materials",         "datasets/pre", "datasets/processing",
    "datasets/results", "systems",  "scripts",      "logs",
    "docs",     "env",
};

constexpr const char* kReadmeBody = R"(
This laboratory package keeps everything needed to repeat the experiment:
the article, the experimental material, datasets, system descriptions,
scripts and a dictionary of artifacts. Record each artifact in
`labpack.json` as it lands, and replace the TODO attestations there as the
corresponding items are satisfied.

## Getting started

Describe the experiment and point readers at the article in `article/`.

## Download

List where to obtain the artifacts: repository URLs, archives, a DOI.

## Setup

Describe the execution environment. A container stub lives in
`env/Dockerfile`; extend it until the experiment runs inside.

## Run

Give the exact steps for repeating the runs, including shot counts and
random seeds where they apply. Keep raw outputs under `logs/`.
)";

constexpr const char* kDockerfile =
    "# Execution environment for this laboratory package.\n"
    "# Pin versions here so reruns see the stack the results came from.\n"
    "FROM python:3.11-slim\n"
    "WORKDIR /lp\n"
    "COPY . /lp\n";

std::string license_stub(const std::string& spdx) {
  std::string title;
  if (spdx == "Apache-2.0") {
    title = "Apache License, Version 2.0";
  } else if (spdx == "MIT") {
    title = "MIT License";
  } else if (spdx == "GPL-3.0-only" || spdx == "GPL-3.0-or-later") {
    title = "GNU General Public License Version 3";
  } else {
    title = spdx;
  }
  return title + "\n\nSPDX-License-Identifier: " + spdx +
         "\n\nReplace this stub with the full license text.\n";
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("cannot write " + path.string());
}

void check_options(const ScaffoldOptions& options) {
  if (options.title.empty()) {
    throw SchemaError("metadata.title", "title must not be empty");
  }
  for (size_t i = 0; i < options.authors.size(); ++i) {
    if (options.authors[i].name.empty()) {
      throw SchemaError("metadata.authors[" + std::to_string(i) + "].name",
                        "author name must not be empty");
    }
  }
  if (options.doi && !doi_valid(*options.doi)) {
    throw SchemaError("metadata.doi", "not a valid DOI: '" + *options.doi + "'");
  }
  if (options.license && options.license->empty()) {
    throw SchemaError("metadata.license", "license identifier must not be empty");
  }
}

PackageManifest build_manifest(const ScaffoldOptions& options) {
  PackageManifest m;
  m.metadata.title = options.title;
  m.metadata.authors = options.authors;
  m.metadata.doi = options.doi;
  m.metadata.license = options.license;
  m.metadata.paper = "";  // honestly absent until the article lands
  m.dictionary.environments = {"env/Dockerfile"};

  const Checklist* labpack = find_builtin("labpack-v1");
  for (const auto& item : labpack->items) {
    StatusEntry stub;
    stub.status = Status::unmet;
    stub.provenance = Provenance::manual;
    stub.note = "TODO";
    m.attestations[item.id] = std::move(stub);
  }
  return m;
}

}  // namespace

ScaffoldReport scaffold(const fs::path& target_dir, const ScaffoldOptions& options) {
  check_options(options);

  std::error_code ec;
  if (fs::exists(target_dir, ec)) {
    if (!fs::is_directory(target_dir, ec)) {
      throw IoError("target exists and is not a directory: " + target_dir.string());
    }
    const bool empty = fs::directory_iterator(target_dir, ec) == fs::directory_iterator();
    if (ec) throw IoError("cannot inspect target: " + target_dir.string());
    if (!empty && !options.force) {
      throw TargetNotEmptyError("target directory is not empty: " +
                                target_dir.string() + " (use force to proceed)");
    }
  } else {
    if (!fs::create_directories(target_dir, ec) || ec) {
      throw IoError("cannot create target: " + target_dir.string());
    }
  }

  ScaffoldReport report;
  for (const char* dir : kDirectories) {
    fs::create_directories(target_dir / dir, ec);
    if (ec) throw IoError("cannot create directory: " + (target_dir / dir).string());
    report.created_dirs.push_back(dir);
  }

  write_file(target_dir / kManifestFilename, serialize_manifest(build_manifest(options)));
  report.created_files.push_back(kManifestFilename);

  write_file(target_dir / "README.md", "# " + options.title + "\n" + kReadmeBody);
  report.created_files.push_back("README.md");

  write_file(target_dir / "env/Dockerfile", kDockerfile);
  report.created_files.push_back("env/Dockerfile");

  if (options.license) {
    write_file(target_dir / "LICENSE", license_stub(*options.license));
    report.created_files.push_back("LICENSE");
  }
  return report;
}

}  // namespace qlp
