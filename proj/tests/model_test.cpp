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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "corpus_fixture.hpp"
#include "model_gen.hpp"
#include "stpa/model.hpp"

namespace stpa {
namespace {

using testing::corpus;
using testing::generate_model;

SafetyModel minimal_loop(bool with_feedback) {
  SafetyModel m;
  m.name = "m";
  m.components = {{"Ctrl", ComponentKind::kController, "Controller", {}},
                  {"Plant", ComponentKind::kControlledProcess, "Plant", {}}};
  m.actions = {{"CA1", "Ctrl", "Plant", "a setpoint", {}}};
  if (with_feedback) m.feedbacks = {{"FB1", "Plant", "Ctrl", "measured output", {}}};
  return m;
}

TEST(Resolve, FindsCorpusHazard) {
  auto ref = resolve(corpus(), "H1");
  ASSERT_TRUE(ref.has_value());
  EXPECT_EQ(ref->kind, EntityKind::kHazard);
  EXPECT_EQ(corpus().hazards[ref->index].description, "Inadequate distance to frontal vehicle");
}

TEST(Resolve, AbsentIdIsNotFound) {
  EXPECT_FALSE(resolve(corpus(), "ZZ9").has_value());
  EXPECT_FALSE(resolve(SafetyModel{}, "A1").has_value());
}

TEST(Resolve, DuplicateIdResolvesToFirstDeclaration) {
  SafetyModel m;
  m.accidents = {{"A1", "first", {}}, {"A1", "second", {}}};
  auto ref = resolve(m, "A1");
  ASSERT_TRUE(ref.has_value());
  EXPECT_EQ(ref->index, 0u);
}

TEST(Resolve, ReferenceClosureOnGeneratedModels) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SafetyModel m = generate_model(seed);
    IdIndex index(m);
    auto ok = [&](const Id& id) { return index.find(id).has_value(); };
    for (const auto& h : m.hazards) EXPECT_TRUE(std::all_of(h.accidents.begin(), h.accidents.end(), ok));
    for (const auto& sc : m.constraints) EXPECT_TRUE(ok(sc.source));
    for (const auto& a : m.actions) EXPECT_TRUE(ok(a.source) && ok(a.target));
    for (const auto& f : m.feedbacks) EXPECT_TRUE(ok(f.source) && ok(f.target));
    for (const auto& u : m.ucas) {
      EXPECT_TRUE(ok(u.action));
      EXPECT_TRUE(std::all_of(u.hazards.begin(), u.hazards.end(), ok));
    }
    for (const auto& cf : m.causal_factors) EXPECT_TRUE(ok(cf.uca));
    for (const auto& s : m.scenarios) EXPECT_TRUE(std::all_of(s.factors.begin(), s.factors.end(), ok));
  }
}

// Longest downward chain from any entity, following every traceability link.
int max_hops(const SafetyModel& m, EntityRef from, const IdIndex& index) {
  std::vector<Id> next;
  switch (from.kind) {
    case EntityKind::kHazard: next = m.hazards[from.index].accidents; break;
    case EntityKind::kConstraint: next = {m.constraints[from.index].source}; break;
    case EntityKind::kUca: next = m.ucas[from.index].hazards; break;
    case EntityKind::kCausalFactor: next = {m.causal_factors[from.index].uca}; break;
    case EntityKind::kScenario: next = m.scenarios[from.index].factors; break;
    default: return 0;
  }
  int best = 0;
  for (const auto& id : next) best = std::max(best, 1 + max_hops(m, *index.find(id), index));
  return best;
}

TEST(Traceability, ChainsEndAtAccidentsWithinFourHops) {
  auto check = [](const SafetyModel& m) {
    IdIndex index(m);
    for (std::size_t i = 0; i < m.scenarios.size(); ++i) {
      EXPECT_LE(max_hops(m, {EntityKind::kScenario, i}, index), 4);
    }
    for (std::size_t i = 0; i < m.constraints.size(); ++i) {
      EXPECT_LE(max_hops(m, {EntityKind::kConstraint, i}, index), 3);
    }
  };
  check(corpus());
  for (std::uint64_t seed = 0; seed < 100; ++seed) check(generate_model(seed));
  IdIndex index(corpus());
  EXPECT_EQ(max_hops(corpus(), *index.find("SCN1"), index), 4);
}

TEST(ControlLoops, MinimalClosedLoop) {
  auto loops = derive_control_loops(minimal_loop(true));
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_EQ(loops[0].controller, "Ctrl");
  EXPECT_EQ(loops[0].controlled, "Plant");
  EXPECT_EQ(loops[0].actions, std::vector<Id>{"CA1"});
  EXPECT_EQ(loops[0].feedbacks, std::vector<Id>{"FB1"});
}

TEST(ControlLoops, OpenLoopHasNoFeedback) {
  auto loops = derive_control_loops(minimal_loop(false));
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_TRUE(loops[0].feedbacks.empty());
}

TEST(ControlLoops, EmptyModelHasNoLoops) { EXPECT_TRUE(derive_control_loops(SafetyModel{}).empty()); }

TEST(ControlLoops, CorpusHasNineLoopsInDeclarationOrder) {
  auto loops = derive_control_loops(corpus());
  ASSERT_EQ(loops.size(), 9u);
  EXPECT_EQ(loops[0].controller, "Driver");
  EXPECT_EQ(loops[0].controlled, "SupervisoryController");
  EXPECT_EQ(loops[0].actions, (std::vector<Id>{"CA1", "CA2"}));
  EXPECT_EQ(loops[0].feedbacks, std::vector<Id>{"FB1"});
  EXPECT_EQ(loops[1].controlled, "AgentController");
  EXPECT_EQ(loops[1].actions, (std::vector<Id>{"CA3", "CA4"}));
}

TEST(ControlLoops, FeedbackFromDownstreamAndSensors) {
  // Top commands Mid, Mid commands Plant. Plant reports to Top (downstream of
  // Mid); a sensor reports to Top; Other reports to Top but is not below Mid.
  SafetyModel m;
  m.components = {{"Top", ComponentKind::kController, "t", {}},
                  {"Mid", ComponentKind::kController, "m", {}},
                  {"Plant", ComponentKind::kControlledProcess, "p", {}},
                  {"Sense", ComponentKind::kSensor, "s", {}},
                  {"Other", ComponentKind::kActuator, "o", {}}};
  m.actions = {{"CA1", "Top", "Mid", "x", {}}, {"CA2", "Mid", "Plant", "y", {}},
               {"CA3", "Mid", "Top", "z", {}}};
  m.feedbacks = {{"FB1", "Plant", "Top", "a", {}},
                 {"FB2", "Sense", "Top", "b", {}},
                 {"FB3", "Other", "Top", "c", {}}};
  auto loops = derive_control_loops(m);
  ASSERT_EQ(loops.size(), 3u);
  EXPECT_EQ(loops[0].feedbacks, (std::vector<Id>{"FB1", "FB2"}));
  EXPECT_TRUE(loops[1].feedbacks.empty());
}

TEST(ControlLoops, DeterministicAndInvariantUnderFeedbackReordering) {
  std::mt19937 rng(7);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SafetyModel m = generate_model(seed);
    auto loops = derive_control_loops(m);
    EXPECT_EQ(loops, derive_control_loops(m));
    std::shuffle(m.feedbacks.begin(), m.feedbacks.end(), rng);
    auto shuffled = derive_control_loops(m);
    ASSERT_EQ(shuffled.size(), loops.size());
    for (std::size_t i = 0; i < loops.size(); ++i) {
      EXPECT_EQ(shuffled[i].actions, loops[i].actions);
      auto a = loops[i].feedbacks, b = shuffled[i].feedbacks;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Enums, SpellingsRoundTrip) {
  for (auto cls : kUcaClasses) EXPECT_EQ(parse_uca_class(to_string(cls)), cls);
  for (auto el : kCausalElements) EXPECT_EQ(parse_causal_element(to_string(el)), el);
  EXPECT_FALSE(parse_asil("E").has_value());
  EXPECT_TRUE(qualifier_allowed(UcaClass::kWrongTiming, UcaQualifier::kOutOfSequence));
  EXPECT_FALSE(qualifier_allowed(UcaClass::kWrongTiming, UcaQualifier::kTooLong));
  EXPECT_FALSE(qualifier_allowed(UcaClass::kProvided, UcaQualifier::kTooEarly));
}

TEST(Equality, IgnoresSourceSpans) {
  SafetyModel a = minimal_loop(true);
  SafetyModel b = a;
  b.actions[0].span = SourceSpan{"x.stpa", 4, 2, 3};
  EXPECT_EQ(a, b);
  b.actions[0].label = "other";
  EXPECT_NE(a, b);
}

}  // namespace
}  // namespace stpa
