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

#include "stpa/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace stpa {

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::pair<Enum, std::string_view>, N>& table,
                           std::string_view text) {
  for (const auto& [value, name] : table) {
    if (name == text) return value;
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table,
                         Enum value) {
  for (const auto& [v, name] : table) {
    if (v == value) return name;
  }
  return "?";
}

constexpr std::array<std::pair<ComponentKind, std::string_view>, 4> kKindNames = {{
    {ComponentKind::kController, "controller"},
    {ComponentKind::kActuator, "actuator"},
    {ComponentKind::kSensor, "sensor"},
    {ComponentKind::kControlledProcess, "controlled_process"},
}};

constexpr std::array<std::pair<UcaClass, std::string_view>, 4> kClassNames = {{
    {UcaClass::kProvided, "provided"},
    {UcaClass::kNotProvided, "not_provided"},
    {UcaClass::kWrongTiming, "wrong_timing"},
    {UcaClass::kWrongDuration, "wrong_duration"},
}};

constexpr std::array<std::pair<UcaQualifier, std::string_view>, 5> kQualifierNames = {{
    {UcaQualifier::kTooEarly, "too_early"},
    {UcaQualifier::kTooLate, "too_late"},
    {UcaQualifier::kOutOfSequence, "out_of_sequence"},
    {UcaQualifier::kTooLong, "too_long"},
    {UcaQualifier::kStoppedTooSoon, "stopped_too_soon"},
}};

constexpr std::array<std::pair<CausalElement, std::string_view>, 8> kElementNames = {{
    {CausalElement::kControllerProcessModel, "controller_process_model"},
    {CausalElement::kControlAlgorithm, "control_algorithm"},
    {CausalElement::kActuatorOrControlPath, "actuator_or_control_path"},
    {CausalElement::kControlledProcess, "controlled_process"},
    {CausalElement::kSensorOrMeasurement, "sensor_or_measurement"},
    {CausalElement::kFeedbackPath, "feedback_path"},
    {CausalElement::kCommunicationChannel, "communication_channel"},
    {CausalElement::kExternalDisturbance, "external_disturbance"},
}};

constexpr std::array<std::pair<Asil, std::string_view>, 5> kAsilNames = {{
    {Asil::kQM, "QM"},
    {Asil::kA, "A"},
    {Asil::kB, "B"},
    {Asil::kC, "C"},
    {Asil::kD, "D"},
}};

constexpr std::array<std::pair<EntityKind, std::string_view>, 9> kEntityNames = {{
    {EntityKind::kAccident, "accident"},
    {EntityKind::kHazard, "hazard"},
    {EntityKind::kConstraint, "constraint"},
    {EntityKind::kComponent, "component"},
    {EntityKind::kAction, "action"},
    {EntityKind::kFeedback, "feedback"},
    {EntityKind::kUca, "uca"},
    {EntityKind::kCausalFactor, "cause"},
    {EntityKind::kScenario, "scenario"},
}};

template <typename T>
void index_all(std::unordered_map<std::string, EntityRef>& ids, EntityKind kind,
               const std::vector<T>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    ids.try_emplace(items[i].id, EntityRef{kind, i});
  }
}

}  // namespace

std::string_view to_string(ComponentKind kind) { return name_of(kKindNames, kind); }
std::string_view to_string(UcaClass cls) { return name_of(kClassNames, cls); }
std::string_view to_string(UcaQualifier qualifier) { return name_of(kQualifierNames, qualifier); }
std::string_view to_string(CausalElement element) { return name_of(kElementNames, element); }
std::string_view to_string(Asil asil) { return name_of(kAsilNames, asil); }
std::string_view to_string(EntityKind kind) { return name_of(kEntityNames, kind); }

std::optional<ComponentKind> parse_component_kind(std::string_view text) {
  return lookup(kKindNames, text);
}
std::optional<UcaClass> parse_uca_class(std::string_view text) {
  return lookup(kClassNames, text);
}
std::optional<UcaQualifier> parse_uca_qualifier(std::string_view text) {
  return lookup(kQualifierNames, text);
}
std::optional<CausalElement> parse_causal_element(std::string_view text) {
  return lookup(kElementNames, text);
}
std::optional<Asil> parse_asil(std::string_view text) { return lookup(kAsilNames, text); }

bool qualifier_allowed(UcaClass cls, UcaQualifier qualifier) {
  switch (qualifier) {
    case UcaQualifier::kTooEarly:
    case UcaQualifier::kTooLate:
    case UcaQualifier::kOutOfSequence:
      return cls == UcaClass::kWrongTiming;
    case UcaQualifier::kTooLong:
    case UcaQualifier::kStoppedTooSoon:
      return cls == UcaClass::kWrongDuration;
  }
  return false;
}

IdIndex::IdIndex(const SafetyModel& model) : model_(&model) {
  index_all(ids_, EntityKind::kAccident, model.accidents);
  index_all(ids_, EntityKind::kHazard, model.hazards);
  index_all(ids_, EntityKind::kConstraint, model.constraints);
  index_all(ids_, EntityKind::kComponent, model.components);
  index_all(ids_, EntityKind::kAction, model.actions);
  index_all(ids_, EntityKind::kFeedback, model.feedbacks);
  index_all(ids_, EntityKind::kUca, model.ucas);
  index_all(ids_, EntityKind::kCausalFactor, model.causal_factors);
  index_all(ids_, EntityKind::kScenario, model.scenarios);
}

std::optional<EntityRef> IdIndex::find(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

template <typename T>
const T* IdIndex::get(std::string_view id, EntityKind kind, const std::vector<T>& items) const {
  auto ref = find(id);
  if (!ref || ref->kind != kind) return nullptr;
  return &items[ref->index];
}

const Accident* IdIndex::accident(std::string_view id) const {
  return get(id, EntityKind::kAccident, model_->accidents);
}
const Hazard* IdIndex::hazard(std::string_view id) const {
  return get(id, EntityKind::kHazard, model_->hazards);
}
const Component* IdIndex::component(std::string_view id) const {
  return get(id, EntityKind::kComponent, model_->components);
}
const ControlAction* IdIndex::action(std::string_view id) const {
  return get(id, EntityKind::kAction, model_->actions);
}
const UnsafeControlAction* IdIndex::uca(std::string_view id) const {
  return get(id, EntityKind::kUca, model_->ucas);
}
const CausalFactor* IdIndex::causal_factor(std::string_view id) const {
  return get(id, EntityKind::kCausalFactor, model_->causal_factors);
}

std::optional<EntityRef> resolve(const SafetyModel& model, std::string_view id) {
  return IdIndex(model).find(id);
}

namespace {

template <typename F>
decltype(auto) visit_entity(const SafetyModel& m, EntityRef ref, F&& f) {
  switch (ref.kind) {
    case EntityKind::kAccident: return f(m.accidents.at(ref.index));
    case EntityKind::kHazard: return f(m.hazards.at(ref.index));
    case EntityKind::kConstraint: return f(m.constraints.at(ref.index));
    case EntityKind::kComponent: return f(m.components.at(ref.index));
    case EntityKind::kAction: return f(m.actions.at(ref.index));
    case EntityKind::kFeedback: return f(m.feedbacks.at(ref.index));
    case EntityKind::kUca: return f(m.ucas.at(ref.index));
    case EntityKind::kCausalFactor: return f(m.causal_factors.at(ref.index));
    case EntityKind::kScenario: return f(m.scenarios.at(ref.index));
  }
  throw std::logic_error("bad entity kind");
}

}  // namespace

const Id& entity_id(const SafetyModel& model, EntityRef ref) {
  return visit_entity(model, ref, [](const auto& e) -> const Id& { return e.id; });
}

const SourceSpan& entity_span(const SafetyModel& model, EntityRef ref) {
  return visit_entity(model, ref, [](const auto& e) -> const SourceSpan& { return e.span; });
}

std::vector<ControlLoop> derive_control_loops(const SafetyModel& model) {
  std::vector<ControlLoop> loops;
  std::map<std::pair<Id, Id>, std::size_t> by_endpoints;
  for (const auto& action : model.actions) {
    auto key = std::make_pair(action.source, action.target);
    auto [it, inserted] = by_endpoints.try_emplace(key, loops.size());
    if (inserted) loops.push_back(ControlLoop{action.source, action.target, {}, {}});
    loops[it->second].actions.push_back(action.id);
  }

  std::multimap<Id, Id> action_edges;
  for (const auto& action : model.actions) action_edges.emplace(action.source, action.target);
  std::set<Id> sensors;
  for (const auto& c : model.components) {
    if (c.kind == ComponentKind::kSensor) sensors.insert(c.id);
  }

  for (auto& loop : loops) {
    // Controlled side: the target plus everything it (transitively) commands,
    // never walking back through the loop's own controller.
    std::set<Id> downstream{loop.controlled};
    std::vector<Id> pending{loop.controlled};
    while (!pending.empty()) {
      Id node = std::move(pending.back());
      pending.pop_back();
      auto [first, last] = action_edges.equal_range(node);
      for (auto it = first; it != last; ++it) {
        if (it->second == loop.controller) continue;
        if (downstream.insert(it->second).second) pending.push_back(it->second);
      }
    }
    for (const auto& fb : model.feedbacks) {
      if (fb.target != loop.controller) continue;
      if (downstream.count(fb.source) != 0 || sensors.count(fb.source) != 0) {
        loop.feedbacks.push_back(fb.id);
      }
    }
  }
  return loops;
}

std::optional<std::size_t> loop_of_action(const std::vector<ControlLoop>& loops,
                                          std::string_view action_id) {
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const auto& actions = loops[i].actions;
    if (std::find(actions.begin(), actions.end(), action_id) != actions.end()) return i;
  }
  return std::nullopt;
}

}  // namespace stpa
