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

#include "qlp/aggregate.hpp"

#include <set>

namespace qlp {

using nlohmann::json;

std::string Percent::str() const {
  std::string out = std::to_string(tenths / 10);
  out.push_back('.');
  out.push_back(static_cast<char>('0' + tenths % 10));
  return out;
}

Percent percent_of(long long count, long long total) {
  if (total == 0) throw EmptyTotalError("cannot take a percentage of zero cells");
  // round(1000*count/total) with ties away from zero, all in integers
  const long long tenths = (2000 * count + total) / (2 * total);
  return Percent{static_cast<long>(tenths)};
}

ComplianceMatrix build_matrix(const std::vector<AssessmentRow>& rows,
                              const Checklist& checklist) {
  if (rows.empty()) throw EmptyMatrixError("a matrix needs at least one assessment row");

  ComplianceMatrix m;
  m.checklist = checklist;
  std::set<std::string> seen;
  for (const auto& row : rows) {
    if (row.checklist_id != checklist.id) {
      throw MixedChecklistsError("row '" + row.target.id + "' is for checklist '" +
                                 row.checklist_id + "', expected '" + checklist.id +
                                 "'");
    }
    if (!seen.insert(row.target.id).second) {
      throw DuplicateTargetError("target '" + row.target.id +
                                 "' appears more than once");
    }
    m.targets.push_back(row.target);
    std::vector<StatusEntry> cells;
    cells.reserve(checklist.items.size());
    for (const auto& item : checklist.items) {
      cells.push_back(row.at(item.id));
    }
    m.cells.push_back(std::move(cells));

    for (const auto& [num, text] : row.notes) {
      auto [it, inserted] = m.notes.emplace(num, text);
      if (!inserted && it->second != text) {
        throw ParseError("note " + std::to_string(num) +
                         " differs between targets");
      }
    }
  }
  return m;
}

std::map<Status, Percent> distribution_percentages(const std::map<Status, int>& counts) {
  long long total = 0;
  for (const auto& [status, count] : counts) {
    (void)status;
    total += count;
  }
  std::map<Status, Percent> out;
  for (Status s : kAllStatuses) {
    auto it = counts.find(s);
    const int count = it == counts.end() ? 0 : it->second;
    out[s] = percent_of(count, total);  // throws EmptyTotalError when total == 0
  }
  return out;
}

AggregateReport aggregate(const ComplianceMatrix& matrix) {
  AggregateReport report;
  report.checklist_id = matrix.checklist.id;
  const size_t items = matrix.checklist.items.size();
  const size_t targets = matrix.targets.size();

  std::vector<int> item_met(items, 0);
  std::map<Status, int> counts;
  for (Status s : kAllStatuses) counts[s] = 0;

  for (size_t t = 0; t < targets; ++t) {
    int met = 0;
    for (size_t i = 0; i < items; ++i) {
      const Status s = matrix.cells[t][i].status;
      counts[s] += 1;
      if (s == Status::met) {
        ++met;
        ++item_met[i];
      }
    }
    report.per_target.emplace_back(matrix.targets[t].id,
                                   MetCount{met, static_cast<int>(items)});
  }
  for (size_t i = 0; i < items; ++i) {
    report.per_item.emplace_back(matrix.checklist.items[i].id,
                                 MetCount{item_met[i], static_cast<int>(targets)});
  }

  report.cell_count = static_cast<int>(items * targets);
  auto percents = distribution_percentages(counts);
  for (Status s : kAllStatuses) {
    report.distribution[s] = DistributionEntry{counts[s], percents[s]};
  }
  return report;
}

json aggregate_to_json(const AggregateReport& report) {
  json doc;
  doc["checklist"] = report.checklist_id;
  doc["cells"] = report.cell_count;
  doc["targets"] = json::array();
  for (const auto& [id, mc] : report.per_target) doc["targets"].push_back(id);
  doc["items"] = json::array();
  for (const auto& [id, mc] : report.per_item) doc["items"].push_back(id);
  doc["per_target"] = json::object();
  for (const auto& [id, mc] : report.per_target) {
    doc["per_target"][id] = {{"met", mc.met}, {"total", mc.total}};
  }
  doc["per_item"] = json::object();
  for (const auto& [id, mc] : report.per_item) {
    doc["per_item"][id] = {{"met", mc.met}, {"total", mc.total}};
  }
  doc["distribution"] = json::object();
  for (const auto& [status, entry] : report.distribution) {
    doc["distribution"][std::string(to_string(status))] = {
        {"count", entry.count}, {"percent", entry.percent.str()}};
  }
  return doc;
}

}  // namespace qlp
