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

#include <fstream>
#include <regex>
#include <sstream>

#include "corpus_fixture.hpp"
#include "model_gen.hpp"
#include "stpa/asil.hpp"
#include "stpa/step1.hpp"

namespace stpa {
namespace {

using testing::corpus;

SafetyModel one_action() {
  SafetyModel m;
  m.name = "m";
  m.components = {{"Ctl", ComponentKind::kController, "The controller", {}},
                  {"P", ComponentKind::kControlledProcess, "plant", {}}};
  m.actions = {{"CA1", "Ctl", "P", "braking torque", {}}};
  return m;
}

TEST(EnumerateCandidates, OneActionNoAssessments) {
  auto c = enumerate_candidates(one_action());
  ASSERT_EQ(c.size(), 4u);
  const UcaClass order[] = {UcaClass::kProvided, UcaClass::kNotProvided,
                            UcaClass::kWrongTiming, UcaClass::kWrongDuration};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(c[i].action, "CA1");
    EXPECT_EQ(c[i].category, order[i]);
    EXPECT_EQ(c[i].status, CandidateStatus::kUnassessed);
  }
}

TEST(EnumerateCandidates, NoActions) { EXPECT_TRUE(enumerate_candidates(SafetyModel{}).empty()); }

TEST(EnumerateCandidates, CorpusCountMatchesActionDeclarations) {
  std::ifstream in(testing::corpus_dir() / "gcdc.stpa");
  std::stringstream text;
  text << in.rdbuf();
  std::string src = text.str();
  std::regex decl(R"((^|\n)[ \t]*action[ \t]+CA[0-9]+)");
  auto n = std::distance(std::sregex_iterator(src.begin(), src.end(), decl), std::sregex_iterator());
  ASSERT_GT(n, 0);
  EXPECT_EQ(enumerate_candidates(corpus()).size(), static_cast<std::size_t>(4 * n));
}

TEST(EnumerateCandidates, StatusFromModel) {
  SafetyModel m = one_action();
  m.ucas.push_back({"UCA7", "CA1", {UcaClass::kNotProvided, {}}, "ctx", {"H1"}, {}, {}});
  m.ucas.push_back({"UCA2", "CA1", {UcaClass::kNotProvided, {}}, "other", {"H1"}, {}, {}});
  m.safe_assessments.push_back({"CA1", UcaClass::kProvided, "fine", {}});
  auto c = enumerate_candidates(m);
  EXPECT_EQ(c[0].status, CandidateStatus::kAssessedSafe);
  EXPECT_EQ(c[1].status, CandidateStatus::kAssessedUnsafe);
  EXPECT_EQ(c[1].ucas, (std::vector<Id>{"UCA7", "UCA2"}));
  EXPECT_EQ(c[2].status, CandidateStatus::kUnassessed);
}

TEST(EnumerateCandidates, CardinalityAndDeterminismOnGeneratedModels) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SafetyModel m = testing::generate_model(seed);
    auto first = enumerate_candidates(m);
    EXPECT_EQ(first.size(), 4 * m.actions.size());
    EXPECT_EQ(first, enumerate_candidates(m));
  }
}

TEST(DeriveConstraint, WorkedExample) {
  SafetyConstraint sc = derive_constraint(corpus(), "UCA1");
  EXPECT_NE(sc.text.find("must provide a reference vehicle"), std::string::npos) << sc.text;
  EXPECT_NE(sc.text.find("when activating the cooperative adaptive cruise control agent"),
            std::string::npos);
  EXPECT_EQ(sc.source, "UCA1");
  EXPECT_EQ(sc.asil, Asil::kD);
}

TEST(DeriveConstraint, Templates) {
  SafetyModel m = one_action();
  const UcaClass classes[] = {UcaClass::kProvided, UcaClass::kNotProvided,
                              UcaClass::kWrongTiming, UcaClass::kWrongDuration};
  for (std::size_t i = 0; i < 4; ++i) {
    m.ucas.push_back({"UCA" + std::to_string(i + 1), "CA1", {classes[i], {}}, "on ice", {"H1"},
                      {}, {}});
  }
  EXPECT_EQ(derive_constraint(m, "UCA1").text, "The controller must not provide braking torque on ice");
  EXPECT_EQ(derive_constraint(m, "UCA2").text, "The controller must provide braking torque on ice");
  EXPECT_EQ(derive_constraint(m, "UCA3").text,
            "The controller must provide braking torque within required timing and ordering on ice");
  EXPECT_EQ(derive_constraint(m, "UCA4").text,
            "The controller must apply braking torque for the required duration on ice");
  EXPECT_FALSE(derive_constraint(m, "UCA1").asil.has_value());
}

TEST(DeriveConstraint, Deterministic) {
  EXPECT_EQ(derive_constraint(corpus(), "UCA1"), derive_constraint(corpus(), "UCA1"));
}

TEST(DeriveConstraint, UnknownIdThrows) {
  EXPECT_THROW(derive_constraint(corpus(), "UCA999"), NotFoundError);
  EXPECT_THROW(derive_constraint(corpus(), "H1"), NotFoundError);
}

TEST(DeriveConstraint, OutOfRangeRatingGivesNoAsil) {
  SafetyModel m = one_action();
  m.ucas.push_back({"UCA1", "CA1", {UcaClass::kProvided, {}}, "x", {"H1"}, Rating{5, 4, 3}, {}});
  EXPECT_FALSE(derive_constraint(m, "UCA1").asil.has_value());
}

TEST(DeriveConstraint, CategorySoundnessOnGeneratedModels) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SafetyModel m = testing::generate_model(seed);
    for (const auto& u : m.ucas) {
      auto sc = derive_constraint(m, u.id);
      bool negated = sc.text.find("must not provide") != std::string::npos;
      EXPECT_EQ(negated, u.category.cls == UcaClass::kProvided) << sc.text;
      if (u.category.cls == UcaClass::kNotProvided) {
        EXPECT_NE(sc.text.find("must provide"), std::string::npos);
      }
      if (u.rating && u.rating->in_range()) {
        EXPECT_EQ(sc.asil, compute_asil(*u.rating));
      }
      EXPECT_EQ(sc.source, u.id);
    }
  }
}

TEST(DeriveAllConstraints, FreshIdsAfterDeclaredOnes) {
  auto all = derive_all_constraints(corpus());
  ASSERT_EQ(all.size(), corpus().ucas.size());
  IdIndex index(corpus());
  for (const auto& sc : all) EXPECT_FALSE(index.find(sc.id).has_value()) << sc.id;
  EXPECT_EQ(all.front().source, "UCA1");
}

}  // namespace
}  // namespace stpa
