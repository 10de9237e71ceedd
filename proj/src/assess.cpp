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

#include "qlp/assess.hpp"

#include <algorithm>
#include <cctype>

namespace qlp {

using nlohmann::json;

const StatusEntry& AssessmentRow::at(const std::string& item_id) const {
  auto it = entries.find(item_id);
  if (it == entries.end()) throw UnknownItemError(item_id);
  return it->second;
}

bool is_placeholder(const StatusEntry& entry) {
  return entry.status == Status::unmet && entry.provenance == Provenance::manual &&
         entry.evidence.empty() && entry.note == "TODO";
}

MergeResult merge(const std::vector<DetectorResult>& detected,
                  const std::map<std::string, StatusEntry>& attested,
                  const Checklist& checklist, AssessmentTarget target) {
  for (const auto& [id, entry] : attested) {
    (void)entry;
    if (!checklist.find_item(id)) throw UnknownItemError(id);
  }

  std::map<std::string, const DetectorResult*> by_id;
  for (const auto& d : detected) {
    if (checklist.find_item(d.item_id)) by_id[d.item_id] = &d;
  }

  MergeResult out;
  out.row.target = std::move(target);
  out.row.checklist_id = checklist.id;
  for (const auto& item : checklist.items) {
    out.row.item_ids.push_back(item.id);
    const DetectorResult* det = nullptr;
    if (auto it = by_id.find(item.id); it != by_id.end()) det = it->second;

    const StatusEntry* att = nullptr;
    if (auto it = attested.find(item.id); it != attested.end()) att = &it->second;

    StatusEntry entry;
    if (att && !is_placeholder(*att)) {
      entry = *att;  // verbatim, so feeding a row back through merge is stable
      if (det && det->confidence == Confidence::certain &&
          det->suggested != entry.status) {
        std::string detail = "attested " + std::string(to_string(entry.status)) +
                             ", detector suggests " +
                             std::string(to_string(det->suggested));
        if (!det->evidence.empty()) {
          detail += " (" + det->evidence.front().render() + ")";
        }
        out.conflicts.push_back({item.id, detail});
      }
    } else if (det) {
      entry.status = det->suggested;
      entry.provenance = Provenance::automatic;
      for (const auto& e : det->evidence) entry.evidence.push_back(e.render());
    } else if (att) {
      entry = *att;  // placeholder stands as-is: manual unmet
    } else {
      entry.status = Status::unmet;
      entry.provenance = Provenance::manual;
      entry.note = "no evidence";
    }
    out.row.entries[item.id] = std::move(entry);
  }
  return out;
}

ParsedAssessment parse_assessment_json(const json& doc, const Checklist& checklist) {
  if (!doc.is_object()) throw ParseError("assessment root must be a JSON object");
  ParsedAssessment out;
  AssessmentRow& row = out.row;
  row.checklist_id = checklist.id;

  if (auto it = doc.find("checklist"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("'checklist' must be a string");
    if (it->get<std::string>() != checklist.id) {
      throw MixedChecklistsError("assessment is for checklist '" +
                                 it->get<std::string>() + "', expected '" +
                                 checklist.id + "'");
    }
  }

  auto target = doc.find("target");
  if (target == doc.end() || !target->is_object()) {
    throw ParseError("assessment needs a 'target' object");
  }
  {
    auto id = target->find("id");
    if (id == target->end() || !id->is_string() || id->get<std::string>().empty()) {
      throw ParseError("target.id must be a non-empty string");
    }
    row.target.id = id->get<std::string>();
    if (auto c = target->find("citation"); c != target->end()) {
      if (!c->is_string()) throw ParseError("target.citation must be a string");
      row.target.citation = c->get<std::string>();
    }
  }

  if (auto it = doc.find("notes"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("'notes' must be an object");
    for (auto n = it->begin(); n != it->end(); ++n) {
      const std::string& key = n.key();
      const bool digits =
          !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) {
            return std::isdigit(c);
          });
      if (!digits || key.size() > 4 || key == "0") {
        throw ParseError("note keys must be positive integers, got '" + key + "'");
      }
      if (!n.value().is_string()) {
        throw ParseError("notes." + key + " must be a string");
      }
      row.notes[std::stoi(key)] = n.value().get<std::string>();
    }
  }

  auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_object()) {
    throw ParseError("assessment needs an 'entries' object");
  }
  for (auto e = entries->begin(); e != entries->end(); ++e) {
    if (!checklist.find_item(e.key())) throw UnknownItemError(e.key());
    row.entries[e.key()] =
        entry_from_json(e.value(), "entries." + e.key(), /*schema_errors=*/false);
  }

  for (const auto& item : checklist.items) {
    row.item_ids.push_back(item.id);
    if (!row.entries.count(item.id)) {
      StatusEntry filler;
      filler.status = Status::unmet;
      filler.provenance = Provenance::manual;
      filler.note = "no evidence";
      row.entries[item.id] = std::move(filler);
      out.warnings.push_back({item.id, "no entry in document, recorded as unmet"});
    }
  }

  // A footnote must resolve against the note table.
  for (const auto& [id, entry] : row.entries) {
    if (entry.footnote && !row.notes.count(*entry.footnote)) {
      throw ParseError("entries." + id + ": footnote " +
                       std::to_string(*entry.footnote) + " has no matching note");
    }
  }
  return out;
}

ParsedAssessment parse_assessment(const std::string& text, const Checklist& checklist) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_assessment_json(doc, checklist);
}

json assessment_to_json(const AssessmentRow& row) {
  json doc;
  doc["checklist"] = row.checklist_id;
  doc["target"]["id"] = row.target.id;
  if (!row.target.citation.empty()) doc["target"]["citation"] = row.target.citation;
  if (!row.notes.empty()) {
    json notes = json::object();
    for (const auto& [num, text] : row.notes) notes[std::to_string(num)] = text;
    doc["notes"] = std::move(notes);
  }
  json entries = json::object();
  for (const auto& [id, entry] : row.entries) entries[id] = entry_to_json(entry);
  doc["entries"] = std::move(entries);
  return doc;
}

std::string serialize_assessment(const AssessmentRow& row) {
  return assessment_to_json(row).dump(2) + "\n";
}

double compliance_score(const AssessmentRow& row) {
  long met = 0;
  long applicable = 0;
  for (const auto& [id, entry] : row.entries) {
    (void)id;
    if (entry.status == Status::not_applicable) continue;
    ++applicable;
    if (entry.status == Status::met) ++met;
  }
  if (applicable == 0) return 1.0;
  return static_cast<double>(met) / static_cast<double>(applicable);
}

}  // namespace qlp
