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

#include "qlp/checklist.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qlp {

namespace {

std::string require_string(const nlohmann::json& j, const char* key,
                           const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw ParseError(where + ": expected string field '" + key + "'");
  }
  return it->get<std::string>();
}

std::string optional_string(const nlohmann::json& j, const char* key,
                            const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) return {};
  if (!it->is_string()) {
    throw ParseError(where + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string to_string(const ApplicabilityRule& rule) {
  switch (rule.kind) {
    case Applicability::always:
      return "always";
    case Applicability::hardware_only:
      return "hardware-only";
    case Applicability::simulator_only:
      return "simulator-only";
    case Applicability::conditional:
      return "conditional:" + rule.tag;
  }
  return "always";
}

ApplicabilityRule applicability_from_string(std::string_view token) {
  if (token == "always") return {Applicability::always, {}};
  if (token == "hardware-only") return {Applicability::hardware_only, {}};
  if (token == "simulator-only") return {Applicability::simulator_only, {}};
  if (token.rfind("conditional:", 0) == 0 && token.size() > 12) {
    return {Applicability::conditional, std::string(token.substr(12))};
  }
  throw ParseError("unknown applicability rule: " + std::string(token));
}

std::string_view to_string(Automation a) {
  switch (a) {
    case Automation::automatic:
      return "auto";
    case Automation::manual:
      return "manual";
    case Automation::hybrid:
      return "hybrid";
  }
  return "manual";
}

std::optional<Automation> automation_from_string(std::string_view token) {
  if (token == "auto") return Automation::automatic;
  if (token == "manual") return Automation::manual;
  if (token == "hybrid") return Automation::hybrid;
  return std::nullopt;
}

const ChecklistItem* Checklist::find_item(std::string_view item_id) const {
  for (const auto& item : items) {
    if (item.id == item_id) return &item;
  }
  return nullptr;
}

const ChecklistSection* Checklist::find_section(std::string_view section_id) const {
  for (const auto& section : sections) {
    if (section.id == section_id) return &section;
  }
  return nullptr;
}

std::vector<const ChecklistItem*> Checklist::section_items(std::string_view section_id) const {
  std::vector<const ChecklistItem*> out;
  for (const auto& item : items) {
    if (item.section_id == section_id) out.push_back(&item);
  }
  return out;
}

std::vector<std::string> Checklist::item_ids() const {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.id);
  return out;
}

bool item_id_valid(std::string_view id) {
  if (id.size() != 6 || id[3] != '-') return false;
  for (int i = 0; i < 3; ++i) {
    if (id[i] < 'A' || id[i] > 'Z') return false;
  }
  for (int i = 4; i < 6; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

Checklist checklist_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("checklist document must be a JSON object");
  Checklist c;
  c.id = require_string(doc, "id", "checklist");
  c.title = optional_string(doc, "title", "checklist");

  auto sections = doc.find("sections");
  if (sections == doc.end() || !sections->is_array()) {
    throw ParseError("checklist: expected array field 'sections'");
  }
  for (size_t i = 0; i < sections->size(); ++i) {
    const auto& sj = (*sections)[i];
    const std::string where = "sections[" + std::to_string(i) + "]";
    if (!sj.is_object()) throw ParseError(where + ": expected an object");
    ChecklistSection s;
    s.id = require_string(sj, "id", where);
    s.title = require_string(sj, "title", where);
    auto order = sj.find("order");
    if (order == sj.end() || !order->is_number_integer()) {
      throw ParseError(where + ": expected integer field 'order'");
    }
    s.order = order->get<int>();
    c.sections.push_back(std::move(s));
  }

  auto items = doc.find("items");
  if (items == doc.end() || !items->is_array()) {
    throw ParseError("checklist: expected array field 'items'");
  }
  for (size_t i = 0; i < items->size(); ++i) {
    const auto& ij = (*items)[i];
    const std::string where = "items[" + std::to_string(i) + "]";
    if (!ij.is_object()) throw ParseError(where + ": expected an object");
    ChecklistItem item;
    item.id = require_string(ij, "id", where);
    item.key = optional_string(ij, "key", where);
    item.section_id = require_string(ij, "section", where);
    item.title = require_string(ij, "title", where);
    item.description = optional_string(ij, "description", where);
    const std::string applicability = optional_string(ij, "applicability", where);
    item.applicability =
        applicability.empty() ? ApplicabilityRule{} : applicability_from_string(applicability);
    const std::string automation = optional_string(ij, "automation", where);
    if (!automation.empty()) {
      auto parsed = automation_from_string(automation);
      if (!parsed) throw ParseError(where + ": unknown automation kind '" + automation + "'");
      item.automation = *parsed;
    }
    c.items.push_back(std::move(item));
  }
  return c;
}

nlohmann::json checklist_to_json(const Checklist& checklist) {
  nlohmann::json doc;
  doc["id"] = checklist.id;
  if (!checklist.title.empty()) doc["title"] = checklist.title;
  doc["sections"] = nlohmann::json::array();
  for (const auto& s : checklist.sections) {
    nlohmann::json sj;
    sj["id"] = s.id;
    sj["title"] = s.title;
    sj["order"] = s.order;
    doc["sections"].push_back(std::move(sj));
  }
  doc["items"] = nlohmann::json::array();
  for (const auto& item : checklist.items) {
    nlohmann::json ij;
    ij["id"] = item.id;
    if (!item.key.empty()) ij["key"] = item.key;
    ij["section"] = item.section_id;
    ij["title"] = item.title;
    if (!item.description.empty()) ij["description"] = item.description;
    ij["applicability"] = to_string(item.applicability);
    ij["automation"] = std::string(to_string(item.automation));
    doc["items"].push_back(std::move(ij));
  }
  return doc;
}

std::vector<Violation> validate_checklist(const Checklist& checklist) {
  std::vector<Violation> out;
  if (checklist.id.empty()) {
    out.push_back({"empty-id", "checklist", "checklist id must not be empty"});
  }

  std::set<std::string> section_ids;
  int last_order = 0;
  bool first = true;
  for (const auto& s : checklist.sections) {
    if (s.id.empty()) {
      out.push_back({"empty-id", "section", "section id must not be empty"});
    } else if (!section_ids.insert(s.id).second) {
      out.push_back({"duplicate-section-id", s.id, "section id appears more than once"});
    }
    if (s.title.empty()) {
      out.push_back({"empty-title", s.id, "section title must not be empty"});
    }
    if (!first && s.order <= last_order) {
      out.push_back({"section-order", s.id,
                     "section order values must strictly increase"});
    }
    last_order = s.order;
    first = false;
  }

  std::set<std::string> item_ids;
  for (const auto& item : checklist.items) {
    if (!item_id_valid(item.id)) {
      out.push_back({"bad-item-id", item.id,
                     "item id must match three capitals, a dash, two digits"});
    }
    if (!item_ids.insert(item.id).second) {
      out.push_back({"duplicate-item-id", item.id, "item id appears more than once"});
    }
    if (item.title.empty()) {
      out.push_back({"empty-title", item.id, "item title must not be empty"});
    }
    if (!section_ids.count(item.section_id)) {
      out.push_back({"unknown-section", item.id,
                     "item references undefined section '" + item.section_id + "'"});
    }
    if (item.applicability.kind == Applicability::conditional &&
        item.applicability.tag.empty()) {
      out.push_back({"empty-condition", item.id,
                     "conditional applicability needs a non-empty tag"});
    }
  }
  return out;
}

Checklist load_checklist(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  Checklist c = checklist_from_json(doc);
  auto violations = validate_checklist(c);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw SchemaError(v.subject, v.message + " [" + v.code + "]");
  }
  return c;
}

Checklist load_checklist_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read checklist file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_checklist(buf.str());
}

std::string serialize_checklist(const Checklist& checklist) {
  return checklist_to_json(checklist).dump(2) + "\n";
}

}  // namespace qlp
