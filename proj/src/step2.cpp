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

#include "stpa/step2.hpp"

namespace stpa {

namespace {

struct LoopWords {
  std::string controller;
  std::string controlled;
  std::string action;
  std::string loop_name;
  std::vector<const FeedbackSignal*> feedbacks;
};

std::string label_or_id(const IdIndex& index, const Id& id) {
  const Component* c = index.component(id);
  return c ? c->label : id;
}

LoopWords describe_loop(const SafetyModel& model, const IdIndex& index,
                        const UnsafeControlAction& uca) {
  LoopWords w{"the controller", "the controlled process", uca.action, uca.action, {}};
  const ControlAction* action = index.action(uca.action);
  if (action == nullptr) return w;
  w.controller = label_or_id(index, action->source);
  w.controlled = label_or_id(index, action->target);
  w.action = action->label;
  w.loop_name = action->source + " -> " + action->target;
  auto loops = derive_control_loops(model);
  if (auto li = loop_of_action(loops, action->id)) {
    for (const Id& fb_id : loops[*li].feedbacks) {
      auto ref = index.find(fb_id);
      if (ref && ref->kind == EntityKind::kFeedback) {
        w.feedbacks.push_back(&model.feedbacks[ref->index]);
      }
    }
  }
  return w;
}

std::string unsafe_behaviour(const LoopWords& w, const UnsafeControlAction& uca) {
  std::string b;
  switch (uca.category.cls) {
    case UcaClass::kProvided: b = "provides " + w.action; break;
    case UcaClass::kNotProvided: b = "does not provide " + w.action; break;
    case UcaClass::kWrongTiming:
      b = "provides " + w.action + " too early, too late or out of sequence";
      break;
    case UcaClass::kWrongDuration:
      b = "applies " + w.action + " too long or stops it too soon";
      break;
  }
  if (!uca.context.empty()) b += " " + uca.context;
  return b;
}

std::string question(CausalElement element, const LoopWords& w, const UnsafeControlAction& uca) {
  switch (element) {
    case CausalElement::kControllerProcessModel:
      return "How could the process model that " + w.controller + " holds of " + w.controlled +
             " be wrong or outdated so that it " + unsafe_behaviour(w, uca) + "?";
    case CausalElement::kControlAlgorithm:
      return "How could the control algorithm of " + w.controller +
             " decide on this even with a correct process model, so that it " +
             unsafe_behaviour(w, uca) + "?";
    case CausalElement::kActuatorOrControlPath:
      return "How could " + w.action + " be lost, delayed or altered on its way from " +
             w.controller + " to " + w.controlled + "?";
    case CausalElement::kControlledProcess:
      return "How could " + w.controlled + " fail to act on " + w.action +
             " or respond to it in an unexpected way?";
    case CausalElement::kSensorOrMeasurement:
      return "How could the measurements of " + w.controlled + " that " + w.controller +
             " relies on be missing, late or wrong?";
    case CausalElement::kFeedbackPath: {
      if (w.feedbacks.empty()) {
        return w.loop_name + ": loop has no feedback signal. How does " + w.controller +
               " learn whether " + w.action + " took effect?";
      }
      std::string names;
      for (std::size_t i = 0; i < w.feedbacks.size(); ++i) {
        if (i != 0) names += ", ";
        names += w.feedbacks[i]->id + " (" + w.feedbacks[i]->label + ")";
      }
      return "How could feedback " + names + " reaching " + w.controller +
             " be missing, delayed or wrong?";
    }
    case CausalElement::kCommunicationChannel:
      return "How could loss, delay or corruption of messages that " + w.controller +
             " exchanges with other vehicles or modules contribute to this UCA?";
    case CausalElement::kExternalDisturbance:
      return "How could a disturbance from outside the loop, acting on " + w.controlled +
             " or its environment, lead to this UCA?";
  }
  return {};
}

}  // namespace

std::vector<CausalPrompt> step2_prompts(const SafetyModel& model, std::string_view uca_id) {
  IdIndex index(model);
  const UnsafeControlAction* uca = index.uca(uca_id);
  if (uca == nullptr) throw NotFoundError(std::string(uca_id));
  LoopWords words = describe_loop(model, index, *uca);

  std::vector<CausalPrompt> prompts;
  prompts.reserve(kCausalElements.size());
  for (CausalElement element : kCausalElements) {
    CausalPrompt p{element, question(element, words, *uca), {}};
    for (const auto& cf : model.causal_factors) {
      if (cf.uca == uca->id && cf.element == element) p.answered_by.push_back(cf.id);
    }
    prompts.push_back(std::move(p));
  }
  return prompts;
}

}  // namespace stpa
