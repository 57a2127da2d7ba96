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

#include "stpa/step1.hpp"

#include <algorithm>
#include <string>

#include "stpa/asil.hpp"

namespace stpa {

std::string_view to_string(CandidateStatus status) {
  switch (status) {
    case CandidateStatus::kUnassessed: return "unassessed";
    case CandidateStatus::kAssessedSafe: return "assessed_safe";
    case CandidateStatus::kAssessedUnsafe: return "assessed_unsafe";
  }
  return "?";
}

std::vector<UcaCandidate> enumerate_candidates(const SafetyModel& model) {
  std::vector<UcaCandidate> out;
  out.reserve(model.actions.size() * kUcaClasses.size());
  for (const auto& action : model.actions) {
    for (UcaClass cls : kUcaClasses) {
      UcaCandidate c{action.id, cls, CandidateStatus::kUnassessed, {}};
      for (const auto& uca : model.ucas) {
        if (uca.action == action.id && uca.category.cls == cls) c.ucas.push_back(uca.id);
      }
      bool safe = std::any_of(
          model.safe_assessments.begin(), model.safe_assessments.end(),
          [&](const SafeAssessment& s) { return s.action == action.id && s.category == cls; });
      if (!c.ucas.empty()) {
        c.status = CandidateStatus::kAssessedUnsafe;
      } else if (safe) {
        c.status = CandidateStatus::kAssessedSafe;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

// Highest N among declared constraint ids of the form SC<N>.
unsigned long max_constraint_number(const SafetyModel& model) {
  unsigned long max = 0;
  for (const auto& sc : model.constraints) {
    const std::string& id = sc.id;
    if (id.size() < 3 || id.compare(0, 2, "SC") != 0) continue;
    if (!std::all_of(id.begin() + 2, id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      continue;
    }
    if (id.size() > 12) continue;  // not a number we could ever allocate past
    max = std::max(max, std::stoul(id.substr(2)));
  }
  return max;
}

std::string constraint_text(const IdIndex& index, const UnsafeControlAction& uca) {
  std::string controller = "the controller";
  std::string action_label = uca.action;
  if (const ControlAction* action = index.action(uca.action)) {
    action_label = action->label;
    if (const Component* c = index.component(action->source)) {
      controller = c->label;
    } else {
      controller = action->source;
    }
  }
  std::string text;
  switch (uca.category.cls) {
    case UcaClass::kProvided:
      text = controller + " must not provide " + action_label;
      break;
    case UcaClass::kNotProvided:
      text = controller + " must provide " + action_label;
      break;
    case UcaClass::kWrongTiming:
      text = controller + " must provide " + action_label + " within required timing and ordering";
      break;
    case UcaClass::kWrongDuration:
      text = controller + " must apply " + action_label + " for the required duration";
      break;
  }
  if (!uca.context.empty()) text += " " + uca.context;
  return text;
}

SafetyConstraint derive_at(const SafetyModel& model, const IdIndex& index, std::size_t uca_index,
                           unsigned long base) {
  const UnsafeControlAction& uca = model.ucas[uca_index];
  SafetyConstraint sc;
  sc.id = "SC" + std::to_string(base + uca_index + 1);
  sc.source = uca.id;
  sc.text = constraint_text(index, uca);
  if (uca.rating && uca.rating->in_range()) sc.asil = compute_asil(*uca.rating);
  sc.span = uca.span;
  return sc;
}

}  // namespace

SafetyConstraint derive_constraint(const SafetyModel& model, std::string_view uca_id) {
  IdIndex index(model);
  auto ref = index.find(uca_id);
  if (!ref || ref->kind != EntityKind::kUca) throw NotFoundError(std::string(uca_id));
  return derive_at(model, index, ref->index, max_constraint_number(model));
}

std::vector<SafetyConstraint> derive_all_constraints(const SafetyModel& model) {
  IdIndex index(model);
  unsigned long base = max_constraint_number(model);
  std::vector<SafetyConstraint> out;
  out.reserve(model.ucas.size());
  for (std::size_t i = 0; i < model.ucas.size(); ++i) {
    out.push_back(derive_at(model, index, i, base));
  }
  return out;
}

}  // namespace stpa
