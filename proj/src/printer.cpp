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

#include <sstream>

#include "stpa/dsl.hpp"

namespace stpa {

namespace {

std::string join_ids(const std::vector<Id>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i != 0) out += ", ";
    out += ids[i];
  }
  return out;
}

// Emits one group of declarations preceded by a blank line. Multi-line
// declarations are additionally separated from each other.
template <typename T, typename F>
void group(std::ostringstream& out, const std::vector<T>& items, bool blocks, F&& emit) {
  if (items.empty()) return;
  out << '\n';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (blocks && i != 0) out << '\n';
    emit(items[i]);
  }
}

}  // namespace

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string print(const SafetyModel& m) {
  std::ostringstream out;
  out << "model " << quote(m.name) << '\n';

  group(out, m.accidents, false, [&](const Accident& a) {
    out << "accident " << a.id << ' ' << quote(a.description) << '\n';
  });
  group(out, m.hazards, false, [&](const Hazard& h) {
    out << "hazard " << h.id << ' ' << quote(h.description) << " -> " << join_ids(h.accidents)
        << '\n';
  });
  group(out, m.constraints, false, [&](const SafetyConstraint& sc) {
    out << "constraint " << sc.id << " from " << sc.source << ' ' << quote(sc.text);
    if (sc.asil) out << " asil " << to_string(*sc.asil);
    out << '\n';
  });
  group(out, m.components, false, [&](const Component& c) {
    out << "component " << c.id << " kind " << to_string(c.kind) << ' ' << quote(c.label)
        << '\n';
  });
  group(out, m.actions, false, [&](const ControlAction& a) {
    out << "action " << a.id << ' ' << a.source << " -> " << a.target << ' ' << quote(a.label)
        << '\n';
  });
  group(out, m.feedbacks, false, [&](const FeedbackSignal& f) {
    out << "feedback " << f.id << ' ' << f.source << " -> " << f.target << ' '
        << quote(f.label) << '\n';
  });
  group(out, m.ucas, true, [&](const UnsafeControlAction& u) {
    out << "uca " << u.id << " on " << u.action << " category " << to_string(u.category.cls);
    if (u.category.qualifier) out << " qualifier " << to_string(*u.category.qualifier);
    out << "\n  context " << quote(u.context) << "\n  hazards " << join_ids(u.hazards) << '\n';
    if (u.rating) {
      out << "  rating S" << u.rating->severity << " E" << u.rating->exposure << " C"
          << u.rating->controllability << '\n';
    }
  });
  group(out, m.safe_assessments, true, [&](const SafeAssessment& s) {
    out << "safe " << s.action << " category " << to_string(s.category)
        << "\n  justification " << quote(s.justification) << '\n';
  });
  group(out, m.causal_factors, false, [&](const CausalFactor& cf) {
    out << "cause " << cf.id << " on " << cf.uca << " element " << to_string(cf.element) << ' '
        << quote(cf.description) << '\n';
  });
  group(out, m.scenarios, false, [&](const CausalScenario& s) {
    out << "scenario " << s.id << " on " << s.uca << " requires " << join_ids(s.factors) << ' '
        << quote(s.description) << '\n';
  });
  return out.str();
}

}  // namespace stpa
