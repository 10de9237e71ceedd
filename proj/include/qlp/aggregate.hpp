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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qlp/assess.hpp"
#include "qlp/checklist.hpp"

namespace qlp {

/// A percentage carried as an integer number of tenths (482 renders as
/// "48.2"). Keeping fixed-point integers end to end makes aggregation
/// byte-stable; binary floating point never enters the pipeline.
struct Percent {
  long tenths = 0;

  bool operator==(const Percent&) const = default;

  std::string str() const;
};

/// count/total as a Percent, rounded half away from zero to one decimal
/// using integer arithmetic only. Throws EmptyTotalError when total is 0.
Percent percent_of(long long count, long long total);

/// The complete grid: one row per target, one column per checklist item,
/// plus the union of all row note tables (footnote number -> text).
struct ComplianceMatrix {
  Checklist checklist;
  std::vector<AssessmentTarget> targets;
  std::vector<std::vector<StatusEntry>> cells;  // [target index][item index]
  std::map<int, std::string> notes;

  bool operator==(const ComplianceMatrix&) const = default;

  const StatusEntry& cell(size_t target_index, size_t item_index) const {
    return cells[target_index][item_index];
  }
};

/// Assemble rows into a matrix. Rows must all reference `checklist`
/// (MixedChecklistsError), target ids must be unique (DuplicateTargetError),
/// and at least one row is required (EmptyMatrixError). Rows keep their
/// given order; columns follow checklist item order. Notes merge by number;
/// the same number with different text is a ParseError.
ComplianceMatrix build_matrix(const std::vector<AssessmentRow>& rows,
                              const Checklist& checklist);

struct MetCount {
  int met = 0;
  int total = 0;

  bool operator==(const MetCount&) const = default;
};

struct DistributionEntry {
  int count = 0;
  Percent percent;

  bool operator==(const DistributionEntry&) const = default;
};

/// Margins of a matrix: met counts per target (out of the item count), met
/// counts per item (out of the target count), and the status distribution
/// over all cells.
struct AggregateReport {
  std::string checklist_id;
  std::vector<std::pair<std::string, MetCount>> per_target;  // target order
  std::vector<std::pair<std::string, MetCount>> per_item;    // item order
  std::map<Status, DistributionEntry> distribution;          // all four kinds
  int cell_count = 0;

  bool operator==(const AggregateReport&) const = default;
};

AggregateReport aggregate(const ComplianceMatrix& matrix);

/// Percentages for a status count map. The denominator is the sum of all
/// counts; zero total throws EmptyTotalError. Every status kind appears in
/// the result, absent ones at count zero.
std::map<Status, Percent> distribution_percentages(const std::map<Status, int>& counts);

nlohmann::json aggregate_to_json(const AggregateReport& report);

}  // namespace qlp
