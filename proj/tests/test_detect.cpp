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

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "qlp/checklist.hpp"
#include "qlp/detect.hpp"
#include "test_util.hpp"

using namespace qlp;

namespace {

PackageManifest base_manifest() {
  PackageManifest m;
  m.metadata.title = "Detector scenarios";
  m.metadata.authors = {{"A. Tester", "", ""}};
  m.metadata.paper = "article/paper.pdf";
  return m;
}

const DetectorResult& find_result(const std::vector<DetectorResult>& results,
                                  const std::string& id) {
  for (const auto& r : results) {
    if (r.item_id == id) return r;
  }
  REQUIRE_MESSAGE(false, ("no result for " + id));
  static DetectorResult unreachable;
  return unreachable;
}

}  // namespace

TEST_SUITE("detect") {

TEST_CASE("detector inventory matches the automated labpack items") {
  const auto& ids = detector_item_ids();
  const std::vector<std::string> expected = {
      "ART-01", "ART-04", "DAT-01", "DAT-03", "DIC-02", "DIC-03", "DIC-04",
      "DIC-05", "DIC-06", "DIC-08", "DIC-11", "DIC-12", "MAT-01", "SCR-03"};
  CHECK(ids == expected);
  CHECK(std::is_sorted(ids.begin(), ids.end()));

  const Checklist& labpack = *find_builtin("labpack-v1");
  for (const auto& item : labpack.items) {
    CAPTURE(item.id);
    CHECK(has_detector(item.id) == automated(item));
  }
  CHECK_FALSE(has_detector("CTX-01"));
}

TEST_CASE("license text classification") {
  CHECK(detect_license_text("                              Apache License\n"
                            "                        Version 2.0, January 2004\n"
                            "                     http://www.apache.org/licenses/\n") ==
        "Apache-2.0");
  CHECK(detect_license_text("MIT License\n\nCopyright (c) 2026 Somebody\n") == "MIT");
  CHECK(detect_license_text("GNU GENERAL PUBLIC LICENSE\n"
                            "Version 3, 29 June 2007\n") == "GPL-3.0-only");
  CHECK(detect_license_text("This program is free software: you can redistribute it\n"
                            "under the GNU General Public License, either version 3\n"
                            "of the License, or (at your option) any later version.\n") ==
        "GPL-3.0-or-later");
  CHECK(detect_license_text("SPDX-License-Identifier: Apache-2.0\n") == "Apache-2.0");
  CHECK(detect_license_text("// SPDX-License-Identifier: MIT\nint main() {}\n") == "MIT");
  CHECK(detect_license_text("SPDX-License-Identifier: GPL-3.0-or-later\n") ==
        "GPL-3.0-or-later");
  CHECK_FALSE(detect_license_text("All rights reserved. Ask before copying.\n").has_value());
  CHECK_FALSE(detect_license_text("").has_value());
}

TEST_CASE("url host extraction") {
  CHECK(url_host("https://github.com/example/repo") == "github.com");
  CHECK(url_host("https://www.GitHub.com/Example") == "github.com");
  CHECK(url_host("http://gitlab.com") == "gitlab.com");
  CHECK(url_host("https://zenodo.org:443/record/1") == "zenodo.org");
  CHECK(url_host("https://example.com?q=1") == "example.com");
  CHECK_FALSE(url_host("ftp://example.com").has_value());
  CHECK_FALSE(url_host("https://").has_value());
  CHECK_FALSE(url_host("not a url").has_value());
}

TEST_CASE("doi scanning") {
  CHECK(scan_doi("archived at https://doi.org/10.1145/3477314.3507044.") ==
        "10.1145/3477314.3507044");
  CHECK(scan_doi("(see 10.5281/zenodo.1234567)") == "10.5281/zenodo.1234567");
  CHECK(scan_doi("DOI: 10.48550/arXiv.2203.01234") == "10.48550/arXiv.2203.01234");
  CHECK_FALSE(scan_doi("no identifier here").has_value());
  CHECK_FALSE(scan_doi("doi:abc").has_value());
  CHECK_FALSE(scan_doi("10.12/short-prefix").has_value());
}

TEST_CASE("container filenames") {
  CHECK(container_filename("Dockerfile"));
  CHECK(container_filename("docker-compose.yml"));
  CHECK(container_filename("docker-compose.yaml"));
  CHECK(container_filename("deploy.k8s.yaml"));
  CHECK_FALSE(container_filename("dockerfile"));
  CHECK_FALSE(container_filename("Dockerfile.dev"));
  CHECK_FALSE(container_filename(".k8s.yaml"));
  CHECK_FALSE(container_filename("deploy.k8s.yml"));
  CHECK_FALSE(container_filename("compose.yml"));
}

TEST_CASE("markdown headings") {
  auto h = markdown_headings("# One\ntext\n## Two words\n   ### Indented\n#\n#### Four\r\n");
  CHECK(h == std::vector<std::string>{"One", "Two words", "Indented", "Four"});
  CHECK(markdown_headings("plain text only\n").empty());
}

TEST_CASE("detector config loading") {
  testutil::TempDir dir;
  SUBCASE("defaults when absent") {
    DetectorConfig c = load_detector_config(dir.path());
    CHECK(c.repo_hosts == default_repo_hosts());
    CHECK(c.heading_patterns == default_heading_patterns());
  }
  SUBCASE("lists replace wholesale") {
    testutil::write_file(dir.path() / "qlp-detect.json",
                         R"({"repo_hosts": ["example.com"]})");
    DetectorConfig c = load_detector_config(dir.path());
    CHECK(c.repo_hosts == std::vector<std::string>{"example.com"});
    CHECK(c.heading_patterns == default_heading_patterns());
  }
  SUBCASE("malformed config throws") {
    testutil::write_file(dir.path() / "qlp-detect.json", "{oops");
    CHECK_THROWS_AS(load_detector_config(dir.path()), ParseError);
    testutil::write_file(dir.path() / "qlp-detect.json", R"({"repo_hosts": "x"})");
    CHECK_THROWS_AS(load_detector_config(dir.path()), ParseError);
    testutil::write_file(dir.path() / "qlp-detect.json", R"([1])");
    CHECK_THROWS_AS(load_detector_config(dir.path()), ParseError);
  }
}

TEST_CASE("every run yields one sorted result per detector") {
  testutil::TempDir dir;
  auto results = run_detectors(dir.path(), base_manifest());
  REQUIRE(results.size() == detector_item_ids().size());
  for (size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].item_id == detector_item_ids()[i]);
  }
}

TEST_CASE("parallel execution matches serial execution") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();
  testutil::write_file(dir.path() / "article/paper.pdf", "pdf");
  testutil::write_file(dir.path() / "env/Dockerfile", "FROM scratch\n");
  testutil::write_file(dir.path() / "README.md", "# Pkg\n## Usage\nRun it.\n");
  DetectorConfig config;
  auto serial = run_detectors(dir.path(), m, config, /*parallel=*/false);
  auto parallel = run_detectors(dir.path(), m, config, /*parallel=*/true);
  CHECK(serial == parallel);
}

TEST_CASE("environment detector scans root and env/") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();

  auto r = find_result(run_detectors(dir.path(), m), "DIC-06");
  CHECK(r.suggested == Status::unmet);
  CHECK(r.confidence == Confidence::certain);

  testutil::write_file(dir.path() / "env/Dockerfile", "FROM scratch\n");
  r = find_result(run_detectors(dir.path(), m), "DIC-06");
  CHECK(r.suggested == Status::met);
  REQUIRE(r.evidence.size() == 1);
  CHECK(r.evidence[0].location == "env/Dockerfile");

  testutil::write_file(dir.path() / "docker-compose.yml", "services: {}\n");
  testutil::write_file(dir.path() / "env/deploy.k8s.yaml", "kind: Pod\n");
  r = find_result(run_detectors(dir.path(), m), "DIC-06");
  REQUIRE(r.evidence.size() == 3);
  CHECK(r.evidence[0].location == "docker-compose.yml");
  CHECK(r.evidence[1].location == "env/Dockerfile");
  CHECK(r.evidence[2].location == "env/deploy.k8s.yaml");
}

TEST_CASE("inventory detector honours the repo host list") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();
  ArtifactRecord a;
  a.name = "code";
  a.url = "https://www.github.com/example/code";
  m.dictionary.artifacts = {a};

  auto r = find_result(run_detectors(dir.path(), m), "DIC-02");
  CHECK(r.suggested == Status::met);
  CHECK(r.confidence == Confidence::certain);
  REQUIRE(r.evidence.size() == 1);
  CHECK(r.evidence[0].location == "dictionary.artifacts[0].url");

  m.dictionary.artifacts[0].url = "https://example.com/code";
  r = find_result(run_detectors(dir.path(), m), "DIC-02");
  CHECK(r.suggested == Status::unmet);

  DetectorConfig config;
  config.repo_hosts = {"example.com"};
  r = find_result(run_detectors(dir.path(), m, config), "DIC-02");
  CHECK(r.suggested == Status::met);
}

TEST_CASE("dataset detectors require non-empty content") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();

  auto r = find_result(run_detectors(dir.path(), m), "DAT-01");
  CHECK(r.suggested == Status::unmet);  // nothing declared

  m.datasets.pre = {"datasets/pre/counts.csv"};
  r = find_result(run_detectors(dir.path(), m), "DAT-01");
  CHECK(r.suggested == Status::unmet);  // declared but missing

  testutil::write_file(dir.path() / "datasets/pre/counts.csv", "");
  r = find_result(run_detectors(dir.path(), m), "DAT-01");
  CHECK(r.suggested == Status::unmet);  // zero bytes is a placeholder

  testutil::write_file(dir.path() / "datasets/pre/counts.csv", "q0,q1\n0,1\n");
  r = find_result(run_detectors(dir.path(), m), "DAT-01");
  CHECK(r.suggested == Status::met);
  CHECK(r.evidence[0].location == "datasets/pre/counts.csv");

  // Directories count when they contain anything at all.
  m.datasets.results = {"datasets/results"};
  std::filesystem::create_directories(dir.path() / "datasets/results");
  r = find_result(run_detectors(dir.path(), m), "DAT-03");
  CHECK(r.suggested == Status::unmet);
  testutil::write_file(dir.path() / "datasets/results/out.csv", "x\n");
  r = find_result(run_detectors(dir.path(), m), "DAT-03");
  CHECK(r.suggested == Status::met);
}

TEST_CASE("log detector checks formats") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();

  auto r = find_result(run_detectors(dir.path(), m), "SCR-03");
  CHECK(r.suggested == Status::unmet);

  m.scripts.logs = {"logs/run1.csv", "logs/shots.PNG"};
  testutil::write_file(dir.path() / "logs/run1.csv", "t,outcome\n");
  testutil::write_file(dir.path() / "logs/shots.PNG", "binary");
  r = find_result(run_detectors(dir.path(), m), "SCR-03");
  CHECK(r.suggested == Status::met);  // extension match is case-insensitive
  CHECK(r.evidence.size() == 2);

  m.scripts.logs.push_back("logs/run.exe");
  testutil::write_file(dir.path() / "logs/run.exe", "binary");
  r = find_result(run_detectors(dir.path(), m), "SCR-03");
  CHECK(r.suggested == Status::unmet);
  CHECK(r.evidence[0].detail == "unsupported log format: logs/run.exe");
}

TEST_CASE("instruction detectors prefer declared fields over headings") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();

  SUBCASE("declared and present: certain met") {
    m.materials.instructions = "docs/materials.md";
    testutil::write_file(dir.path() / "docs/materials.md", "steps\n");
    auto r = find_result(run_detectors(dir.path(), m), "MAT-01");
    CHECK(r.suggested == Status::met);
    CHECK(r.confidence == Confidence::certain);
    CHECK(r.evidence[0].location == "materials.instructions");
  }
  SUBCASE("declared but missing: certain unmet, no heading fallback") {
    m.materials.instructions = "docs/materials.md";
    testutil::write_file(dir.path() / "README.md", "## Usage\n");
    auto r = find_result(run_detectors(dir.path(), m), "MAT-01");
    CHECK(r.suggested == Status::unmet);
    CHECK(r.confidence == Confidence::certain);
  }
  SUBCASE("undeclared with matching README heading: heuristic met") {
    testutil::write_file(dir.path() / "README.md", "# Pkg\n## Getting started\n");
    auto r = find_result(run_detectors(dir.path(), m), "MAT-01");
    CHECK(r.suggested == Status::met);
    CHECK(r.confidence == Confidence::heuristic);
    CHECK(r.evidence[0].location == "README.md");
  }
  SUBCASE("undeclared and no headings: heuristic unmet") {
    auto r = find_result(run_detectors(dir.path(), m), "MAT-01");
    CHECK(r.suggested == Status::unmet);
    CHECK(r.confidence == Confidence::heuristic);
  }
  SUBCASE("dev environment guide follows the same rule") {
    DevEnvironment dev;
    dev.setup_guide = "docs/setup.md";
    m.dictionary.dev_environment = dev;
    testutil::write_file(dir.path() / "docs/setup.md", "guide\n");
    auto r = find_result(run_detectors(dir.path(), m), "DIC-08");
    CHECK(r.suggested == Status::met);
    CHECK(r.confidence == Confidence::certain);
  }
}

TEST_CASE("artifact how-to detectors") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();
  ArtifactRecord a;
  a.name = "code";
  a.url = "https://github.com/example/code";
  m.dictionary.artifacts = {a};

  SUBCASE("declared download resolves") {
    m.dictionary.artifacts[0].download = "docs/download.md";
    testutil::write_file(dir.path() / "docs/download.md", "how\n");
    auto r = find_result(run_detectors(dir.path(), m), "DIC-03");
    CHECK(r.suggested == Status::met);
    CHECK(r.confidence == Confidence::certain);
  }
  SUBCASE("declared run reference that does not resolve") {
    m.dictionary.artifacts[0].run = "docs/run.md";
    auto r = find_result(run_detectors(dir.path(), m), "DIC-04");
    CHECK(r.suggested == Status::unmet);
    CHECK(r.confidence == Confidence::certain);
  }
  SUBCASE("URL references count without files") {
    m.dictionary.artifacts[0].run = "https://example.com/wiki/run";
    auto r = find_result(run_detectors(dir.path(), m), "DIC-04");
    CHECK(r.suggested == Status::met);
  }
  SUBCASE("README heading fallback when nothing is declared") {
    testutil::write_file(dir.path() / "README.md", "## Download\n## Run\n");
    auto r3 = find_result(run_detectors(dir.path(), m), "DIC-03");
    auto r4 = find_result(run_detectors(dir.path(), m), "DIC-04");
    CHECK(r3.suggested == Status::met);
    CHECK(r3.confidence == Confidence::heuristic);
    CHECK(r4.suggested == Status::met);
  }
}

TEST_CASE("artifact license coverage drives DIC-05") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();

  auto r = find_result(run_detectors(dir.path(), m), "DIC-05");
  CHECK(r.suggested == Status::unmet);  // no artifacts at all

  ArtifactRecord lib;
  lib.name = "lib";
  lib.path = "lib";
  ArtifactRecord data;
  data.name = "data";
  data.path = "data.csv";
  m.dictionary.artifacts = {lib, data};
  std::filesystem::create_directories(dir.path() / "lib");
  r = find_result(run_detectors(dir.path(), m), "DIC-05");
  CHECK(r.suggested == Status::unmet);  // neither artifact is licensed

  testutil::write_file(dir.path() / "lib/LICENSE", "MIT License\n");
  r = find_result(run_detectors(dir.path(), m), "DIC-05");
  CHECK(r.suggested == Status::partial);  // one of two
  CHECK(r.evidence[0].location == "lib/LICENSE");

  m.dictionary.artifacts[1].license = "CC-BY-4.0";
  r = find_result(run_detectors(dir.path(), m), "DIC-05");
  CHECK(r.suggested == Status::met);
  CHECK(r.evidence.size() == 2);
}

TEST_CASE("doi detector: declared field, then README scan") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();

  auto r = find_result(run_detectors(dir.path(), m), "DIC-11");
  CHECK(r.suggested == Status::unmet);

  testutil::write_file(dir.path() / "README.md",
                       "Archived at https://doi.org/10.5281/zenodo.1234567.\n");
  r = find_result(run_detectors(dir.path(), m), "DIC-11");
  CHECK(r.suggested == Status::met);
  CHECK(r.confidence == Confidence::heuristic);
  CHECK(r.evidence[0].detail == "10.5281/zenodo.1234567");

  m.metadata.doi = "10.1145/3477314.3507044";
  r = find_result(run_detectors(dir.path(), m), "DIC-11");
  CHECK(r.confidence == Confidence::certain);
  CHECK(r.evidence[0].location == "metadata.doi");
}

TEST_CASE("package license detector") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();

  auto r = find_result(run_detectors(dir.path(), m), "DIC-12");
  CHECK(r.suggested == Status::unmet);

  SUBCASE("classified license file: certain") {
    testutil::write_file(dir.path() / "LICENSE",
                         "Apache License\nVersion 2.0, January 2004\n");
    r = find_result(run_detectors(dir.path(), m), "DIC-12");
    CHECK(r.suggested == Status::met);
    CHECK(r.confidence == Confidence::certain);
    CHECK(r.evidence[0].detail == "Apache-2.0");
  }
  SUBCASE("unclassified license file: heuristic") {
    testutil::write_file(dir.path() / "COPYING", "You may copy this if you like.\n");
    r = find_result(run_detectors(dir.path(), m), "DIC-12");
    CHECK(r.suggested == Status::met);
    CHECK(r.confidence == Confidence::heuristic);
    CHECK(r.evidence[0].detail == "unclassified license text");
  }
  SUBCASE("declared metadata license wins") {
    m.metadata.license = "MIT";
    r = find_result(run_detectors(dir.path(), m), "DIC-12");
    CHECK(r.suggested == Status::met);
    CHECK(r.evidence[0].location == "metadata.license");
  }
}

TEST_CASE("article detectors use manifest metadata") {
  testutil::TempDir dir;
  PackageManifest m = base_manifest();

  auto r = find_result(run_detectors(dir.path(), m), "ART-01");
  CHECK(r.suggested == Status::unmet);  // declared file absent

  testutil::write_file(dir.path() / "article/paper.pdf", "pdf");
  r = find_result(run_detectors(dir.path(), m), "ART-01");
  CHECK(r.suggested == Status::met);

  m.metadata.paper = "https://example.com/paper.pdf";
  r = find_result(run_detectors(dir.path(), m), "ART-01");
  CHECK(r.suggested == Status::met);

  r = find_result(run_detectors(dir.path(), m), "ART-04");
  CHECK(r.suggested == Status::met);
  m.metadata.authors.clear();
  r = find_result(run_detectors(dir.path(), m), "ART-04");
  CHECK(r.suggested == Status::unmet);
}

TEST_CASE("evidence rendering") {
  CHECK(EvidenceRef{"README.md", ""}.render() == "README.md");
  CHECK(EvidenceRef{"metadata.doi", "10.1234/x"}.render() == "metadata.doi: 10.1234/x");
  CHECK(to_string(Confidence::certain) == "certain");
  CHECK(to_string(Confidence::heuristic) == "heuristic");
}

}  // TEST_SUITE
