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

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "qlp/aggregate.hpp"
#include "test_util.hpp"

using namespace qlp;

namespace {

// Fixture corpora in canonical row order.
const std::vector<std::string> kReportingFixtures = {
    "alvarado2023", "mendiluze2024", "romero-alvarez2023", "shahid2024", "wang2021"};
const std::vector<std::string> kLabpackFixtures = {
    "sanchez-rivero2023", "quantil2022",              "cda-tum2023",
    "romero-alvarez2023-lp", "alvarado-valiente2022-lp", "enautmendi2023-lp"};

std::vector<AssessmentRow> load_rows(const std::string& group,
                                     const std::vector<std::string>& names,
                                     const Checklist& checklist) {
  std::vector<AssessmentRow> rows;
  for (const auto& name : names) {
    const std::string text =
        testutil::read_file(testutil::fixtures_dir() / group / (name + ".json"));
    rows.push_back(parse_assessment(text, checklist).row);
  }
  return rows;
}

AssessmentRow small_row(const std::string& target_id, const Checklist& c,
                        const std::vector<Status>& statuses) {
  AssessmentRow row;
  row.target.id = target_id;
  row.checklist_id = c.id;
  REQUIRE(statuses.size() == c.items.size());
  for (size_t i = 0; i < c.items.size(); ++i) {
    row.item_ids.push_back(c.items[i].id);
    StatusEntry e;
    e.status = statuses[i];
    row.entries[c.items[i].id] = e;
  }
  return row;
}

Checklist pair_checklist() {
  Checklist c;
  c.id = "pair-v1";
  c.title = "Pair";
  c.sections = {{"s", "Section", 1}};
  ChecklistItem a;
  a.id = "AAA-01";
  a.section_id = "s";
  a.title = "A";
  ChecklistItem b;
  b.id = "AAA-02";
  b.section_id = "s";
  b.title = "B";
  c.items = {a, b};
  return c;
}

}  // namespace

TEST_SUITE("aggregate") {

TEST_CASE("fixed point percentages") {
  CHECK(percent_of(53, 110).tenths == 482);
  CHECK(percent_of(34, 110).tenths == 309);
  CHECK(percent_of(21, 110).tenths == 191);
  CHECK(percent_of(2, 110).tenths == 18);
  CHECK(percent_of(84, 174).tenths == 483);
  CHECK(percent_of(69, 174).tenths == 397);
  CHECK(percent_of(21, 174).tenths == 121);
  CHECK(percent_of(0, 174).tenths == 0);
  CHECK(percent_of(5, 5).tenths == 1000);
  CHECK(percent_of(1, 3).tenths == 333);
  CHECK(percent_of(2, 3).tenths == 667);
  // Ties round away from zero: 0.05% -> 0.1%, 0.15% -> 0.2%.
  CHECK(percent_of(1, 2000).tenths == 1);
  CHECK(percent_of(3, 2000).tenths == 2);
  CHECK_THROWS_AS(percent_of(1, 0), EmptyTotalError);
}

TEST_CASE("percent rendering") {
  CHECK(Percent{482}.str() == "48.2");
  CHECK(Percent{309}.str() == "30.9");
  CHECK(Percent{18}.str() == "1.8");
  CHECK(Percent{0}.str() == "0.0");
  CHECK(Percent{1000}.str() == "100.0");
  CHECK(Percent{500}.str() == "50.0");
}

TEST_CASE("distribution percentages cover every status") {
  std::map<Status, int> counts = {{Status::met, 3}, {Status::unmet, 1}};
  auto p = distribution_percentages(counts);
  REQUIRE(p.size() == 4);
  CHECK(p[Status::met].tenths == 750);
  CHECK(p[Status::unmet].tenths == 250);
  CHECK(p[Status::not_applicable].tenths == 0);
  CHECK(p[Status::partial].tenths == 0);
  CHECK_THROWS_AS(distribution_percentages({}), EmptyTotalError);
}

TEST_CASE("matrix assembly rules") {
  const Checklist c = pair_checklist();
  AssessmentRow r1 = small_row("one", c, {Status::met, Status::unmet});
  AssessmentRow r2 = small_row("two", c, {Status::partial, Status::not_applicable});

  SUBCASE("well-formed rows assemble in order") {
    ComplianceMatrix m = build_matrix({r1, r2}, c);
    REQUIRE(m.targets.size() == 2);
    CHECK(m.targets[0].id == "one");
    CHECK(m.targets[1].id == "two");
    CHECK(m.cell(0, 0).status == Status::met);
    CHECK(m.cell(1, 1).status == Status::not_applicable);
  }
  SUBCASE("at least one row") {
    CHECK_THROWS_AS(build_matrix({}, c), EmptyMatrixError);
  }
  SUBCASE("mixed checklists are rejected") {
    r2.checklist_id = "other-v1";
    CHECK_THROWS_AS(build_matrix({r1, r2}, c), MixedChecklistsError);
  }
  SUBCASE("duplicate targets are rejected") {
    r2.target.id = "one";
    CHECK_THROWS_AS(build_matrix({r1, r2}, c), DuplicateTargetError);
  }
  SUBCASE("notes merge by number") {
    r1.notes[1] = "shared";
    r1.notes[2] = "only in one";
    r2.notes[1] = "shared";
    r2.notes[3] = "only in two";
    ComplianceMatrix m = build_matrix({r1, r2}, c);
    CHECK(m.notes ==
          std::map<int, std::string>{{1, "shared"}, {2, "only in one"}, {3, "only in two"}});
  }
  SUBCASE("conflicting note text is an error") {
    r1.notes[1] = "one says this";
    r2.notes[1] = "two says that";
    CHECK_THROWS_AS(build_matrix({r1, r2}, c), ParseError);
  }
}

TEST_CASE("reporting corpus margins") {
  const Checklist& c = *find_builtin("reporting-v1");
  auto rows = load_rows("reporting", kReportingFixtures, c);
  AggregateReport report = aggregate(build_matrix(rows, c));

  CHECK(report.checklist_id == "reporting-v1");
  CHECK(report.cell_count == 110);

  const std::vector<int> expected_met = {13, 14, 8, 10, 8};
  REQUIRE(report.per_target.size() == 5);
  for (size_t i = 0; i < expected_met.size(); ++i) {
    CAPTURE(i);
    CHECK(report.per_target[i].first == kReportingFixtures[i]);
    CHECK(report.per_target[i].second == MetCount{expected_met[i], 22});
  }

  const std::map<std::string, int> item_met = {
      {"CTX-01", 5}, {"CTX-02", 5}, {"CTX-03", 4}, {"CTX-04", 4}, {"CTX-05", 3},
      {"CTX-06", 4}, {"PLN-01", 2}, {"PLN-02", 4}, {"PLN-03", 0}, {"DSG-01", 2},
      {"DSG-02", 2}, {"EXE-01", 0}, {"EXE-02", 0}, {"EXE-03", 3}, {"EXE-04", 4},
      {"EXE-05", 5}, {"EXE-06", 1}, {"EXE-07", 0}, {"ANA-01", 1}, {"ANA-02", 1},
      {"VAL-01", 0}, {"VAL-02", 3}};
  REQUIRE(report.per_item.size() == 22);
  for (const auto& [id, mc] : report.per_item) {
    CAPTURE(id);
    CHECK(mc == MetCount{item_met.at(id), 5});
  }

  CHECK(report.distribution.at(Status::met) == DistributionEntry{53, Percent{482}});
  CHECK(report.distribution.at(Status::unmet) == DistributionEntry{21, Percent{191}});
  CHECK(report.distribution.at(Status::not_applicable) ==
        DistributionEntry{34, Percent{309}});
  CHECK(report.distribution.at(Status::partial) == DistributionEntry{2, Percent{18}});
}

TEST_CASE("labpack corpus margins") {
  const Checklist& c = *find_builtin("labpack-v1");
  auto rows = load_rows("labpack", kLabpackFixtures, c);
  AggregateReport report = aggregate(build_matrix(rows, c));

  CHECK(report.cell_count == 174);

  const std::vector<int> expected_met = {4, 18, 17, 15, 17, 13};
  REQUIRE(report.per_target.size() == 6);
  for (size_t i = 0; i < expected_met.size(); ++i) {
    CAPTURE(i);
    CHECK(report.per_target[i].first == kLabpackFixtures[i]);
    CHECK(report.per_target[i].second == MetCount{expected_met[i], 29});
  }

  const std::map<std::string, int> item_met = {
      {"ART-01", 5}, {"ART-02", 0}, {"ART-03", 5}, {"ART-04", 2}, {"MAT-01", 5},
      {"MAT-02", 2}, {"MAT-03", 5}, {"DAT-01", 6}, {"DAT-02", 2}, {"DAT-03", 4},
      {"SYS-01", 1}, {"SYS-02", 1}, {"SYS-03", 2}, {"SYS-04", 0}, {"SCR-01", 2},
      {"SCR-02", 1}, {"SCR-03", 4}, {"DIC-01", 3}, {"DIC-02", 6}, {"DIC-03", 5},
      {"DIC-04", 5}, {"DIC-05", 4}, {"DIC-06", 1}, {"DIC-07", 1}, {"DIC-08", 3},
      {"DIC-09", 1}, {"DIC-10", 1}, {"DIC-11", 2}, {"DIC-12", 5}};
  REQUIRE(report.per_item.size() == 29);
  for (const auto& [id, mc] : report.per_item) {
    CAPTURE(id);
    CHECK(mc == MetCount{item_met.at(id), 6});
  }

  CHECK(report.distribution.at(Status::met) == DistributionEntry{84, Percent{483}});
  CHECK(report.distribution.at(Status::unmet) == DistributionEntry{69, Percent{397}});
  CHECK(report.distribution.at(Status::not_applicable) ==
        DistributionEntry{0, Percent{0}});
  CHECK(report.distribution.at(Status::partial) == DistributionEntry{21, Percent{121}});
}

TEST_CASE("aggregate JSON shape") {
  const Checklist c = pair_checklist();
  AssessmentRow r1 = small_row("one", c, {Status::met, Status::unmet});
  AssessmentRow r2 = small_row("two", c, {Status::met, Status::partial});
  nlohmann::json doc = aggregate_to_json(aggregate(build_matrix({r1, r2}, c)));

  CHECK(doc.at("checklist") == "pair-v1");
  CHECK(doc.at("cells") == 4);
  CHECK(doc.at("targets") == nlohmann::json::array({"one", "two"}));
  CHECK(doc.at("items") == nlohmann::json::array({"AAA-01", "AAA-02"}));
  CHECK(doc.at("per_target").at("one").at("met") == 1);
  CHECK(doc.at("per_target").at("two").at("total") == 2);
  CHECK(doc.at("per_item").at("AAA-01").at("met") == 2);
  CHECK(doc.at("per_item").at("AAA-02").at("met") == 0);
  CHECK(doc.at("distribution").at("met").at("count") == 2);
  // percentages travel as fixed-point strings, never floats
  CHECK(doc.at("distribution").at("met").at("percent") == "50.0");
  CHECK(doc.at("distribution").at("partial").at("percent") == "25.0");
  CHECK(doc.at("distribution").at("na").at("count") == 0);
}

}  // TEST_SUITE
