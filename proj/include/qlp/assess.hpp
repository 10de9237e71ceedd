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
#include <vector>

#include "json.hpp"
#include "qlp/checklist.hpp"
#include "qlp/detect.hpp"
#include "qlp/errors.hpp"
#include "qlp/status.hpp"

namespace qlp {

/// What is being assessed: a published study or a laboratory package.
struct AssessmentTarget {
  std::string id;        // short handle, unique within a matrix
  std::string citation;  // free-form display text

  bool operator==(const AssessmentTarget&) const = default;
};

/// One target judged against one checklist: a complete status vector (one
/// entry per item, in checklist order) plus a numbered note table shared by
/// entry footnotes.
struct AssessmentRow {
  AssessmentTarget target;
  std::string checklist_id;
  std::vector<std::string> item_ids;          // checklist definition order
  std::map<std::string, StatusEntry> entries; // keyed by item id
  std::map<int, std::string> notes;           // footnote number -> text

  bool operator==(const AssessmentRow&) const = default;

  /// Entry for an item id; throws UnknownItemError when absent.
  const StatusEntry& at(const std::string& item_id) const;
};

/// Placeholder attestation as written by the scaffolder: unmet, no
/// evidence, note "TODO". Placeholders never override detector output.
bool is_placeholder(const StatusEntry& entry);

struct MergeResult {
  AssessmentRow row;
  /// One warning per disagreement between a certain detector finding and a
  /// human attestation that overrode it.
  std::vector<Warning> conflicts;
};

/// Combine detector output with human attestations into a complete row for
/// `checklist`. Precedence per item:
///   1. a real (non-placeholder) attestation always wins; if a certain
///      detector finding disagrees on status, a conflict warning records it;
///   2. otherwise the detector result stands (automatic provenance);
///   3. otherwise a placeholder or missing entry yields manual unmet.
/// Attestations for ids the checklist does not define throw
/// UnknownItemError. The merge is idempotent: feeding the resulting row's
/// entries back as attestations reproduces the row.
MergeResult merge(const std::vector<DetectorResult>& detected,
                  const std::map<std::string, StatusEntry>& attested,
                  const Checklist& checklist,
                  AssessmentTarget target = {});

struct ParsedAssessment {
  AssessmentRow row;
  std::vector<Warning> warnings;
};

/// Decode an assessment document against `checklist`. Shape problems (bad
/// JSON, wrong types, unknown status or provenance tokens, bad footnote or
/// note numbers) throw ParseError; entries for undefined items throw
/// UnknownItemError; a document naming a different checklist throws
/// MixedChecklistsError. Items missing from the document are filled in as
/// manual unmet with a warning each.
ParsedAssessment parse_assessment(const std::string& text, const Checklist& checklist);
ParsedAssessment parse_assessment_json(const nlohmann::json& doc,
                                       const Checklist& checklist);

nlohmann::json assessment_to_json(const AssessmentRow& row);

/// Canonical serialization (sorted keys, two-space indent, trailing
/// newline). parse_assessment(serialize_assessment(r), c).row == r for
/// complete rows of c.
std::string serialize_assessment(const AssessmentRow& row);

/// met / (total - not_applicable), or 1.0 when every item is
/// not applicable. partial counts as not met.
double compliance_score(const AssessmentRow& row);

}  // namespace qlp
