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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qlp {

/// Compliance verdict for one checklist item on one target. The set is
/// closed: serialized forms outside the four tokens are rejected.
enum class Status {
  met,
  unmet,
  not_applicable,
  partial,
};

/// All statuses in canonical order (also the rendering order).
inline constexpr std::array<Status, 4> kAllStatuses = {
    Status::met, Status::unmet, Status::not_applicable, Status::partial};

/// Serialized token: "met", "unmet", "na", "partial".
std::string_view to_string(Status s);

/// Inverse of to_string(). Empty optional for anything outside the set.
std::optional<Status> status_from_string(std::string_view token);

/// Who produced a status: a detector or a human attestation.
enum class Provenance {
  automatic,
  manual,
};

/// Serialized token: "auto" or "manual".
std::string_view to_string(Provenance p);

std::optional<Provenance> provenance_from_string(std::string_view token);

/// One recorded verdict: the status plus where it came from and why.
/// `footnote` is a 1-based index into the owning document's note table.
struct StatusEntry {
  Status status = Status::unmet;
  Provenance provenance = Provenance::manual;
  std::vector<std::string> evidence;
  std::string note;
  std::optional<int> footnote;

  bool operator==(const StatusEntry&) const = default;
};

/// Canonical JSON form of an entry. Defaults (manual provenance, empty
/// evidence/note, no footnote) are omitted, so the codec round-trips.
nlohmann::json entry_to_json(const StatusEntry& entry);

/// Decode one entry. `where` names the entry in error messages
/// ("entries.CTX-01", "attestations.DIC-06"). When `schema_errors` is set,
/// problems raise SchemaError (manifest context); otherwise ParseError
/// (assessment context). The status token set is closed either way.
StatusEntry entry_from_json(const nlohmann::json& j, const std::string& where,
                            bool schema_errors);

}  // namespace qlp
