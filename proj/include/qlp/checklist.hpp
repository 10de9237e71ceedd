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
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qlp/errors.hpp"

namespace qlp {

/// When an item applies to a target. `conditional` carries a free-form tag
/// naming the condition; the other kinds leave the tag empty.
enum class Applicability {
  always,
  hardware_only,
  simulator_only,
  conditional,
};

struct ApplicabilityRule {
  Applicability kind = Applicability::always;
  std::string tag;  // only meaningful for Applicability::conditional

  bool operator==(const ApplicabilityRule&) const = default;
};

/// Serialized form: "always", "hardware-only", "simulator-only",
/// or "conditional:<tag>".
std::string to_string(const ApplicabilityRule& rule);
ApplicabilityRule applicability_from_string(std::string_view token);

/// Whether a verdict can be produced by a detector. `automatic` items are
/// fully detector-backed, `hybrid` items accept both detector output and
/// human attestation, `manual` items are attestation-only.
enum class Automation {
  automatic,
  manual,
  hybrid,
};

/// Serialized token: "auto", "manual", "hybrid".
std::string_view to_string(Automation a);
std::optional<Automation> automation_from_string(std::string_view token);

/// One checkable guideline. `id` follows the AAA-00 pattern; `key` is the
/// stable short name used in tooling output ("min-qubits", "doi", ...).
struct ChecklistItem {
  std::string id;
  std::string key;
  std::string section_id;
  std::string title;
  std::string description;
  ApplicabilityRule applicability;
  Automation automation = Automation::manual;

  bool operator==(const ChecklistItem&) const = default;
};

/// A named group of items. `order` values must strictly increase in
/// definition order; they pin the rendering sequence.
struct ChecklistSection {
  std::string id;
  std::string title;
  int order = 0;

  bool operator==(const ChecklistSection&) const = default;
};

/// A versioned guideline catalogue. Item order inside each section and
/// section order are part of the contract: every renderer and aggregate
/// walks them in definition order.
struct Checklist {
  std::string id;
  std::string title;
  std::vector<ChecklistSection> sections;
  std::vector<ChecklistItem> items;

  bool operator==(const Checklist&) const = default;

  const ChecklistItem* find_item(std::string_view item_id) const;
  const ChecklistSection* find_section(std::string_view section_id) const;

  /// Items belonging to one section, in definition order.
  std::vector<const ChecklistItem*> section_items(std::string_view section_id) const;

  /// All item ids in definition order.
  std::vector<std::string> item_ids() const;
};

/// True when the item can carry detector output.
inline bool automated(const ChecklistItem& item) {
  return item.automation != Automation::manual;
}

/// True for syntactically valid item ids (three capitals, dash, two digits).
bool item_id_valid(std::string_view id);

/// Registry of compiled-in checklists: reporting-v1 and labpack-v1.
const std::vector<Checklist>& builtin_checklists();

/// Lookup by id; nullptr when the id is not built in.
const Checklist* find_builtin(std::string_view id);

/// Decode a checklist document without judging its content. Shape problems
/// (missing keys, wrong types) throw ParseError.
Checklist checklist_from_json(const nlohmann::json& doc);

nlohmann::json checklist_to_json(const Checklist& checklist);

/// Structural rules violated by an in-memory checklist, one Violation per
/// breach: duplicate or malformed ids, items referencing missing sections,
/// empty titles, non-increasing section order.
std::vector<Violation> validate_checklist(const Checklist& checklist);

/// Parse and validate in one step. Throws ParseError for shape problems and
/// SchemaError (naming the offending id) for the first structural breach.
Checklist load_checklist(const std::string& text);
Checklist load_checklist_file(const std::filesystem::path& path);

/// Canonical serialization: stable key order, two-space indent, trailing
/// newline. load_checklist(serialize_checklist(c)) == c for valid c.
std::string serialize_checklist(const Checklist& checklist);

}  // namespace qlp
