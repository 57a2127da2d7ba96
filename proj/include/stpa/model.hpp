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

#ifndef STPA_MODEL_HPP_
#define STPA_MODEL_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stpa/source.hpp"

namespace stpa {

// Entity identifiers are plain strings ("A1", "UCA12", "SupervisoryController").
using Id = std::string;

// Thrown by lookups that require an id to resolve (derive_constraint, trace,
// step2_prompts). Validation never throws; it reports E001 instead.
class NotFoundError : public std::out_of_range {
 public:
  explicit NotFoundError(const std::string& id)
      : std::out_of_range("unknown id '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

enum class ComponentKind { kController, kActuator, kSensor, kControlledProcess };

enum class UcaClass { kProvided, kNotProvided, kWrongTiming, kWrongDuration };

enum class UcaQualifier { kTooEarly, kTooLate, kOutOfSequence, kTooLong, kStoppedTooSoon };

enum class CausalElement {
  kControllerProcessModel,
  kControlAlgorithm,
  kActuatorOrControlPath,
  kControlledProcess,
  kSensorOrMeasurement,
  kFeedbackPath,
  kCommunicationChannel,
  kExternalDisturbance,
};

enum class Asil { kQM, kA, kB, kC, kD };

inline constexpr std::array<UcaClass, 4> kUcaClasses = {
    UcaClass::kProvided, UcaClass::kNotProvided, UcaClass::kWrongTiming,
    UcaClass::kWrongDuration};

inline constexpr std::array<CausalElement, 8> kCausalElements = {
    CausalElement::kControllerProcessModel, CausalElement::kControlAlgorithm,
    CausalElement::kActuatorOrControlPath,  CausalElement::kControlledProcess,
    CausalElement::kSensorOrMeasurement,    CausalElement::kFeedbackPath,
    CausalElement::kCommunicationChannel,   CausalElement::kExternalDisturbance,
};

// Keyword spellings, shared by the DSL, reports and CLI.
std::string_view to_string(ComponentKind kind);
std::string_view to_string(UcaClass cls);
std::string_view to_string(UcaQualifier qualifier);
std::string_view to_string(CausalElement element);
std::string_view to_string(Asil asil);

std::optional<ComponentKind> parse_component_kind(std::string_view text);
std::optional<UcaClass> parse_uca_class(std::string_view text);
std::optional<UcaQualifier> parse_uca_qualifier(std::string_view text);
std::optional<CausalElement> parse_causal_element(std::string_view text);
std::optional<Asil> parse_asil(std::string_view text);

// True if `qualifier` refines `cls` (too_early under wrong_timing etc.).
bool qualifier_allowed(UcaClass cls, UcaQualifier qualifier);

struct Accident {
  Id id;
  std::string description;
  SourceSpan span;

  friend bool operator==(const Accident& a, const Accident& b) {
    return a.id == b.id && a.description == b.description;
  }
};

struct Hazard {
  Id id;
  std::string description;
  std::vector<Id> accidents;
  SourceSpan span;

  friend bool operator==(const Hazard& a, const Hazard& b) {
    return a.id == b.id && a.description == b.description && a.accidents == b.accidents;
  }
};

// `source` names a Hazard (high-level constraint) or a UCA (derived constraint).
struct SafetyConstraint {
  Id id;
  std::string text;
  Id source;
  std::optional<Asil> asil;
  SourceSpan span;

  friend bool operator==(const SafetyConstraint& a, const SafetyConstraint& b) {
    return a.id == b.id && a.text == b.text && a.source == b.source && a.asil == b.asil;
  }
};

struct Component {
  Id id;
  ComponentKind kind = ComponentKind::kController;
  std::string label;
  SourceSpan span;

  friend bool operator==(const Component& a, const Component& b) {
    return a.id == b.id && a.kind == b.kind && a.label == b.label;
  }
};

struct ControlAction {
  Id id;
  Id source;
  Id target;
  std::string label;
  SourceSpan span;

  friend bool operator==(const ControlAction& a, const ControlAction& b) {
    return a.id == b.id && a.source == b.source && a.target == b.target && a.label == b.label;
  }
};

struct FeedbackSignal {
  Id id;
  Id source;
  Id target;
  std::string label;
  SourceSpan span;

  friend bool operator==(const FeedbackSignal& a, const FeedbackSignal& b) {
    return a.id == b.id && a.source == b.source && a.target == b.target && a.label == b.label;
  }
};

struct UcaCategory {
  UcaClass cls = UcaClass::kProvided;
  std::optional<UcaQualifier> qualifier;

  bool operator==(const UcaCategory&) const = default;
};

// Severity S0-S3, exposure E0-E4, controllability C0-C3. Out-of-range values
// are representable so the validator can report them (E005).
struct Rating {
  int severity = 0;
  int exposure = 0;
  int controllability = 0;

  bool in_range() const {
    return severity >= 0 && severity <= 3 && exposure >= 0 && exposure <= 4 &&
           controllability >= 0 && controllability <= 3;
  }
  bool operator==(const Rating&) const = default;
};

struct UnsafeControlAction {
  Id id;
  Id action;
  UcaCategory category;
  std::string context;
  std::vector<Id> hazards;
  std::optional<Rating> rating;
  SourceSpan span;

  friend bool operator==(const UnsafeControlAction& a, const UnsafeControlAction& b) {
    return a.id == b.id && a.action == b.action && a.category == b.category &&
           a.context == b.context && a.hazards == b.hazards && a.rating == b.rating;
  }
};

// Analyst record that an (action, category) candidate was checked and found safe.
struct SafeAssessment {
  Id action;
  UcaClass category = UcaClass::kProvided;
  std::string justification;
  SourceSpan span;

  friend bool operator==(const SafeAssessment& a, const SafeAssessment& b) {
    return a.action == b.action && a.category == b.category &&
           a.justification == b.justification;
  }
};

struct CausalFactor {
  Id id;
  Id uca;
  CausalElement element = CausalElement::kControllerProcessModel;
  std::string description;
  SourceSpan span;

  friend bool operator==(const CausalFactor& a, const CausalFactor& b) {
    return a.id == b.id && a.uca == b.uca && a.element == b.element &&
           a.description == b.description;
  }
};

// A conjunction of causal factors that together produce the UCA.
struct CausalScenario {
  Id id;
  Id uca;
  std::vector<Id> factors;
  std::string description;
  SourceSpan span;

  friend bool operator==(const CausalScenario& a, const CausalScenario& b) {
    return a.id == b.id && a.uca == b.uca && a.factors == b.factors &&
           a.description == b.description;
  }
};

// Root document. Every collection keeps declaration order; that order is the
// canonical order of every derived artifact. Equality ignores source spans.
struct SafetyModel {
  std::string name;
  std::vector<Accident> accidents;
  std::vector<Hazard> hazards;
  std::vector<SafetyConstraint> constraints;
  std::vector<Component> components;
  std::vector<ControlAction> actions;
  std::vector<FeedbackSignal> feedbacks;
  std::vector<UnsafeControlAction> ucas;
  std::vector<SafeAssessment> safe_assessments;
  std::vector<CausalFactor> causal_factors;
  std::vector<CausalScenario> scenarios;

  bool operator==(const SafetyModel&) const = default;
};

// The kinds of entity that carry an id, in canonical collection order.
enum class EntityKind {
  kAccident,
  kHazard,
  kConstraint,
  kComponent,
  kAction,
  kFeedback,
  kUca,
  kCausalFactor,
  kScenario,
};

std::string_view to_string(EntityKind kind);

struct EntityRef {
  EntityKind kind;
  std::size_t index;

  bool operator==(const EntityRef&) const = default;
};

// Id lookup over a model. When an id is declared more than once (a model
// that failed E007) the first declaration wins, so lookups are never ambiguous.
class IdIndex {
 public:
  explicit IdIndex(const SafetyModel& model);

  std::optional<EntityRef> find(std::string_view id) const;

  const Accident* accident(std::string_view id) const;
  const Hazard* hazard(std::string_view id) const;
  const Component* component(std::string_view id) const;
  const ControlAction* action(std::string_view id) const;
  const UnsafeControlAction* uca(std::string_view id) const;
  const CausalFactor* causal_factor(std::string_view id) const;

  const SafetyModel& model() const { return *model_; }

 private:
  template <typename T>
  const T* get(std::string_view id, EntityKind kind, const std::vector<T>& items) const;

  const SafetyModel* model_;
  std::unordered_map<std::string, EntityRef> ids_;
};

std::optional<EntityRef> resolve(const SafetyModel& model, std::string_view id);

// Id and span of a resolved entity.
const Id& entity_id(const SafetyModel& model, EntityRef ref);
const SourceSpan& entity_span(const SafetyModel& model, EntityRef ref);

struct ControlLoop {
  Id controller;
  Id controlled;
  std::vector<Id> actions;
  std::vector<Id> feedbacks;

  bool operator==(const ControlLoop&) const = default;
};

// One loop per distinct (action source, action target) pair, in order of the
// first action declaring the pair. A feedback signal joins a loop when it
// targets the loop's controller and originates on the controlled side: the
// action target, anything reachable from it through further control actions,
// or a sensor component.
std::vector<ControlLoop> derive_control_loops(const SafetyModel& model);

// Index of the loop containing `action_id`, if any.
std::optional<std::size_t> loop_of_action(const std::vector<ControlLoop>& loops,
                                          std::string_view action_id);

}  // namespace stpa

#endif  // STPA_MODEL_HPP_
