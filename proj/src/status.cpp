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

#include "qlp/status.hpp"

#include "qlp/errors.hpp"

namespace qlp {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message,
                       bool schema_errors) {
  if (schema_errors) throw SchemaError(where, message);
  throw ParseError(where + ": " + message);
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::met:
      return "met";
    case Status::unmet:
      return "unmet";
    case Status::not_applicable:
      return "na";
    case Status::partial:
      return "partial";
  }
  return "unmet";
}

std::optional<Status> status_from_string(std::string_view token) {
  if (token == "met") return Status::met;
  if (token == "unmet") return Status::unmet;
  if (token == "na") return Status::not_applicable;
  if (token == "partial") return Status::partial;
  return std::nullopt;
}

std::string_view to_string(Provenance p) {
  return p == Provenance::automatic ? "auto" : "manual";
}

std::optional<Provenance> provenance_from_string(std::string_view token) {
  if (token == "auto") return Provenance::automatic;
  if (token == "manual") return Provenance::manual;
  return std::nullopt;
}

nlohmann::json entry_to_json(const StatusEntry& entry) {
  nlohmann::json j;
  j["status"] = std::string(to_string(entry.status));
  if (entry.provenance != Provenance::manual) {
    j["provenance"] = std::string(to_string(entry.provenance));
  }
  if (!entry.evidence.empty()) j["evidence"] = entry.evidence;
  if (!entry.note.empty()) j["note"] = entry.note;
  if (entry.footnote) j["footnote"] = *entry.footnote;
  return j;
}

StatusEntry entry_from_json(const nlohmann::json& j, const std::string& where,
                            bool schema_errors) {
  if (!j.is_object()) fail(where, "entry must be an object", schema_errors);
  StatusEntry entry;

  auto status = j.find("status");
  if (status == j.end() || !status->is_string()) {
    fail(where, "entry needs a string 'status'", schema_errors);
  }
  auto parsed = status_from_string(status->get<std::string>());
  if (!parsed) {
    fail(where, "unknown status '" + status->get<std::string>() + "'", schema_errors);
  }
  entry.status = *parsed;

  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_string()) fail(where, "'provenance' must be a string", schema_errors);
    auto prov = provenance_from_string(it->get<std::string>());
    if (!prov) {
      fail(where, "unknown provenance '" + it->get<std::string>() + "'", schema_errors);
    }
    entry.provenance = *prov;
  }

  if (auto it = j.find("evidence"); it != j.end()) {
    if (!it->is_array()) fail(where, "'evidence' must be an array", schema_errors);
    for (const auto& e : *it) {
      if (!e.is_string()) fail(where, "'evidence' entries must be strings", schema_errors);
      entry.evidence.push_back(e.get<std::string>());
    }
  }

  if (auto it = j.find("note"); it != j.end()) {
    if (!it->is_string()) fail(where, "'note' must be a string", schema_errors);
    entry.note = it->get<std::string>();
  }

  if (auto it = j.find("footnote"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long>() < 1) {
      fail(where, "'footnote' must be a positive integer", schema_errors);
    }
    entry.footnote = static_cast<int>(it->get<long>());
  }

  return entry;
}

}  // namespace qlp
