// Copyright 2026 The stpa-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stpa/reports.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "stpa/asil.hpp"

namespace stpa {

using json = nlohmann::ordered_json;

ReportBundle make_bundle(SafetyModel model) {
  ReportBundle b;
  b.candidates = enumerate_candidates(model);
  b.findings = validate(model);
  b.derived_constraints = derive_all_constraints(model);
  b.loops = derive_control_loops(model);
  b.model = std::move(model);
  return b;
}

namespace {

json ids(const std::vector<Id>& v) {
  json arr = json::array();
  for (const auto& id : v) arr.push_back(id);
  return arr;
}

template <typename T>
json optional_name(const std::optional<T>& v) {
  return v ? json(std::string(to_string(*v))) : json(nullptr);
}

json constraint_json(const SafetyConstraint& sc) {
  json j;
  j["id"] = sc.id;
  j["source"] = sc.source;
  j["text"] = sc.text;
  j["asil"] = optional_name(sc.asil);
  return j;
}

json model_json(const SafetyModel& m) {
  json j;
  j["name"] = m.name;
  j["accidents"] = json::array();
  for (const auto& a : m.accidents) {
    j["accidents"].push_back({{"id", a.id}, {"description", a.description}});
  }
  j["hazards"] = json::array();
  for (const auto& h : m.hazards) {
    j["hazards"].push_back(
        {{"id", h.id}, {"description", h.description}, {"accidents", ids(h.accidents)}});
  }
  j["constraints"] = json::array();
  for (const auto& sc : m.constraints) j["constraints"].push_back(constraint_json(sc));
  j["components"] = json::array();
  for (const auto& c : m.components) {
    j["components"].push_back(
        {{"id", c.id}, {"kind", std::string(to_string(c.kind))}, {"label", c.label}});
  }
  j["actions"] = json::array();
  for (const auto& a : m.actions) {
    j["actions"].push_back(
        {{"id", a.id}, {"source", a.source}, {"target", a.target}, {"label", a.label}});
  }
  j["feedbacks"] = json::array();
  for (const auto& f : m.feedbacks) {
    j["feedbacks"].push_back(
        {{"id", f.id}, {"source", f.source}, {"target", f.target}, {"label", f.label}});
  }
  j["ucas"] = json::array();
  for (const auto& u : m.ucas) {
    json r = nullptr;
    if (u.rating) {
      r = json{{"severity", u.rating->severity},
               {"exposure", u.rating->exposure},
               {"controllability", u.rating->controllability},
               {"asil", u.rating->in_range()
                            ? json(std::string(to_string(compute_asil(*u.rating))))
                            : json(nullptr)}};
    }
    j["ucas"].push_back({{"id", u.id},
                         {"action", u.action},
                         {"category", std::string(to_string(u.category.cls))},
                         {"qualifier", optional_name(u.category.qualifier)},
                         {"context", u.context},
                         {"hazards", ids(u.hazards)},
                         {"rating", r}});
  }
  j["safe_assessments"] = json::array();
  for (const auto& s : m.safe_assessments) {
    j["safe_assessments"].push_back({{"action", s.action},
                                     {"category", std::string(to_string(s.category))},
                                     {"justification", s.justification}});
  }
  j["causal_factors"] = json::array();
  for (const auto& cf : m.causal_factors) {
    j["causal_factors"].push_back({{"id", cf.id},
                                   {"uca", cf.uca},
                                   {"element", std::string(to_string(cf.element))},
                                   {"description", cf.description}});
  }
  j["scenarios"] = json::array();
  for (const auto& s : m.scenarios) {
    j["scenarios"].push_back({{"id", s.id},
                              {"uca", s.uca},
                              {"factors", ids(s.factors)},
                              {"description", s.description}});
  }
  return j;
}

// Markdown table cell with pipes escaped.
std::string cell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string join(const std::vector<Id>& v, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += sep;
    out += v[i];
  }
  return out;
}

std::string matrix_cell(const UcaCandidate& c) {
  switch (c.status) {
    case CandidateStatus::kAssessedUnsafe: return "unsafe(" + join(c.ucas, ";") + ")";
    case CandidateStatus::kAssessedSafe: return "safe";
    case CandidateStatus::kUnassessed: return "unassessed";
  }
  return "";
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void accidents_section(std::ostringstream& out, const SafetyModel& m) {
  out << "## 1 Accidents & Hazards\n\n";
  if (m.accidents.empty() && m.hazards.empty()) {
    out << "none recorded\n\n";
    return;
  }
  out << "| Accidents | Hazards |\n| --- | --- |\n";
  IdIndex index(m);
  for (const auto& a : m.accidents) {
    bool first = true;
    for (const auto& h : m.hazards) {
      if (std::find(h.accidents.begin(), h.accidents.end(), a.id) == h.accidents.end()) continue;
      out << "| " << (first ? cell(a.id + " " + a.description) : std::string()) << " | "
          << cell(h.id + " " + h.description) << " |\n";
      first = false;
    }
    if (first) out << "| " << cell(a.id + " " + a.description) << " |  |\n";
  }
  for (const auto& h : m.hazards) {
    bool linked = std::any_of(h.accidents.begin(), h.accidents.end(),
                              [&](const Id& id) { return index.accident(id) != nullptr; });
    if (!linked) out << "|  | " << cell(h.id + " " + h.description) << " |\n";
  }
  out << '\n';

  out << "High-level safety constraints:\n\n";
  bool any = false;
  for (const auto& sc : m.constraints) {
    if (index.hazard(sc.source) == nullptr) continue;
    out << "- " << sc.id << " (" << sc.source << "): " << sc.text;
    if (sc.asil) out << " [ASIL " << to_string(*sc.asil) << "]";
    out << '\n';
    any = true;
  }
  if (!any) out << "none recorded\n";
  out << '\n';
}

void structure_section(std::ostringstream& out, const ReportBundle& b) {
  const SafetyModel& m = b.model;
  out << "## 2 Control Structure & Loops\n\n";
  out << "### Components\n\n";
  if (m.components.empty()) {
    out << "none recorded\n\n";
  } else {
    out << "| Id | Kind | Label |\n| --- | --- | --- |\n";
    for (const auto& c : m.components) {
      out << "| " << c.id << " | " << to_string(c.kind) << " | " << cell(c.label) << " |\n";
    }
    out << '\n';
  }
  auto edges = [&](const char* title, const auto& items) {
    out << "### " << title << "\n\n";
    if (items.empty()) {
      out << "none recorded\n\n";
      return;
    }
    out << "| Id | From | To | Label |\n| --- | --- | --- | --- |\n";
    for (const auto& e : items) {
      out << "| " << e.id << " | " << e.source << " | " << e.target << " | " << cell(e.label)
          << " |\n";
    }
    out << '\n';
  };
  edges("Control actions", m.actions);
  edges("Feedback signals", m.feedbacks);

  out << "### Control loops\n\n";
  if (b.loops.empty()) {
    out << "none recorded\n\n";
    return;
  }
  for (std::size_t i = 0; i < b.loops.size(); ++i) {
    const auto& l = b.loops[i];
    out << i + 1 << ". " << l.controller << " -> " << l.controlled
        << ": actions " << join(l.actions) << "; feedback "
        << (l.feedbacks.empty() ? std::string("none") : join(l.feedbacks)) << '\n';
  }
  out << '\n';
}

void matrix_section(std::ostringstream& out, const ReportBundle& b) {
  out << "## 3 UCA Matrix\n\n";
  std::size_t unsafe = 0, safe = 0, open = 0;
  for (const auto& c : b.candidates) {
    switch (c.status) {
      case CandidateStatus::kAssessedUnsafe: ++unsafe; break;
      case CandidateStatus::kAssessedSafe: ++safe; break;
      case CandidateStatus::kUnassessed: ++open; break;
    }
  }
  out << b.model.actions.size() << " control actions, " << b.candidates.size()
      << " candidates: " << unsafe << " unsafe, " << safe << " safe, " << open
      << " unassessed.\n\n";
  if (b.model.actions.empty()) return;
  out << "| Action | Label | provided | not_provided | wrong_timing | wrong_duration |\n"
      << "| --- | --- | --- | --- | --- | --- |\n";
  for (std::size_t i = 0; i < b.model.actions.size(); ++i) {
    const auto& a = b.model.actions[i];
    out << "| " << a.id << " | " << cell(a.label);
    for (std::size_t k = 0; k < kUcaClasses.size(); ++k) {
      out << " | " << matrix_cell(b.candidates[i * kUcaClasses.size() + k]);
    }
    out << " |\n";
  }
  out << '\n';
}

void uca_section(std::ostringstream& out, const ReportBundle& b) {
  const SafetyModel& m = b.model;
  out << "## 4 UCAs and Safety Constraints\n\n";
  if (m.ucas.empty()) {
    out << "none recorded\n\n";
    return;
  }
  IdIndex index(m);
  for (std::size_t i = 0; i < m.ucas.size(); ++i) {
    const auto& u = m.ucas[i];
    out << "### " << u.id << "\n\n";
    out << "- Action: " << u.action;
    if (const ControlAction* a = index.action(u.action)) {
      out << " (" << a->label << "), " << a->source << " -> " << a->target;
    }
    out << "\n- Category: " << to_string(u.category.cls);
    if (u.category.qualifier) out << " (" << to_string(*u.category.qualifier) << ")";
    out << "\n- Context: " << u.context;
    out << "\n- Hazards: " << join(u.hazards);
    out << "\n- Rating: ";
    if (!u.rating) {
      out << "not rated";
    } else if (!u.rating->in_range()) {
      out << format_rating(*u.rating) << " (out of range)";
    } else {
      out << format_rating(*u.rating) << ", ASIL " << to_string(compute_asil(*u.rating));
    }
    const SafetyConstraint& d = b.derived_constraints[i];
    out << "\n- Derived constraint " << d.id << ": " << d.text;
    if (d.asil) out << " [ASIL " << to_string(*d.asil) << "]";
    for (const auto& sc : m.constraints) {
      if (sc.source != u.id) continue;
      out << "\n- Declared constraint " << sc.id << ": " << sc.text;
      if (sc.asil) out << " [ASIL " << to_string(*sc.asil) << "]";
    }
    out << "\n\n";
  }
}

void causal_section(std::ostringstream& out, const SafetyModel& m) {
  out << "## 5 Causal Factors & Scenarios\n\n";
  out << "### Causal factors\n\n";
  if (m.causal_factors.empty()) {
    out << "none recorded\n\n";
  } else {
    out << "| Id | UCA | Element | Description |\n| --- | --- | --- | --- |\n";
    for (const auto& cf : m.causal_factors) {
      out << "| " << cf.id << " | " << cf.uca << " | " << to_string(cf.element) << " | "
          << cell(cf.description) << " |\n";
    }
    out << '\n';
  }
  out << "### Scenarios\n\n";
  if (m.scenarios.empty()) {
    out << "none recorded\n\n";
    return;
  }
  for (const auto& s : m.scenarios) {
    out << "- " << s.id << " (" << s.uca << ") requires " << join(s.factors) << ": "
        << s.description << '\n';
  }
  out << '\n';
}

void findings_section(std::ostringstream& out, const std::vector<Finding>& findings) {
  out << "## 6 Findings\n\n";
  out << count_errors(findings) << " errors, " << count_warnings(findings) << " warnings.\n";
  if (findings.empty()) return;
  out << "\n| Code | Severity | Subject | Location | Message |\n"
      << "| --- | --- | --- | --- | --- |\n";
  for (const auto& f : findings) {
    std::string where = "-";
    if (f.span) where = std::to_string(f.span->line) + ":" + std::to_string(f.span->column);
    out << "| " << f.code << " | " << to_string(f.severity) << " | " << cell(f.subject) << " | "
        << where << " | " << cell(f.message) << " |\n";
  }
}

}  // namespace

std::string emit_json(const ReportBundle& b) {
  json doc;
  doc["schema_version"] = "1";
  doc["model"] = model_json(b.model);

  doc["loops"] = json::array();
  for (const auto& l : b.loops) {
    doc["loops"].push_back({{"controller", l.controller},
                            {"controlled", l.controlled},
                            {"actions", ids(l.actions)},
                            {"feedbacks", ids(l.feedbacks)}});
  }
  doc["candidates"] = json::array();
  for (const auto& c : b.candidates) {
    doc["candidates"].push_back({{"action", c.action},
                                 {"category", std::string(to_string(c.category))},
                                 {"status", std::string(to_string(c.status))},
                                 {"ucas", ids(c.ucas)}});
  }
  doc["findings"] = json::array();
  for (const auto& f : b.findings) {
    json span = nullptr;
    if (f.span) {
      span = json{{"line", f.span->line}, {"column", f.span->column}, {"length", f.span->length}};
    }
    doc["findings"].push_back({{"code", f.code},
                               {"severity", std::string(to_string(f.severity))},
                               {"subject", f.subject},
                               {"message", f.message},
                               {"span", span}});
  }
  doc["constraints"] = json::array();
  for (const auto& sc : b.derived_constraints) doc["constraints"].push_back(constraint_json(sc));
  return doc.dump(2) + "\n";
}

std::string emit_markdown(const ReportBundle& b) {
  std::ostringstream out;
  out << "# STPA report: " << b.model.name << "\n\n";
  accidents_section(out, b.model);
  structure_section(out, b);
  matrix_section(out, b);
  uca_section(out, b);
  causal_section(out, b.model);
  findings_section(out, b.findings);
  return out.str();
}

std::string emit_csv_matrix(const ReportBundle& b) {
  std::string out = "action_id,action_label,provided,not_provided,wrong_timing,wrong_duration\n";
  for (std::size_t i = 0; i < b.model.actions.size(); ++i) {
    const auto& a = b.model.actions[i];
    out += csv_field(a.id) + "," + csv_field(a.label);
    for (std::size_t k = 0; k < kUcaClasses.size(); ++k) {
      out += "," + csv_field(matrix_cell(b.candidates[i * kUcaClasses.size() + k]));
    }
    out += "\n";
  }
  return out;
}

}  // namespace stpa
