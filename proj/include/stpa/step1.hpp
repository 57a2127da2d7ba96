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

#ifndef STPA_STEP1_HPP_
#define STPA_STEP1_HPP_

#include <string_view>
#include <vector>

#include "stpa/model.hpp"

namespace stpa {

enum class CandidateStatus { kUnassessed, kAssessedSafe, kAssessedUnsafe };

std::string_view to_string(CandidateStatus status);

// One (control action, guide category) pair of the Step 1 matrix.
struct UcaCandidate {
  Id action;
  UcaClass category = UcaClass::kProvided;
  CandidateStatus status = CandidateStatus::kUnassessed;
  // UCAs recorded for the pair, in declaration order.
  std::vector<Id> ucas;

  bool operator==(const UcaCandidate&) const = default;
};

// Exactly four candidates per control action, ordered by action declaration
// and then provided, not_provided, wrong_timing, wrong_duration. A pair with
// both a UCA and a safe assessment reports as unsafe; the conflict itself is
// the validator's E006.
std::vector<UcaCandidate> enumerate_candidates(const SafetyModel& model);

// Safety constraint for a UCA, worded from its category:
//   provided        "<controller> must not provide <action> <context>"
//   not_provided    "<controller> must provide <action> <context>"
//   wrong_timing    "<controller> must provide <action> within required timing and ordering <context>"
//   wrong_duration  "<controller> must apply <action> for the required duration <context>"
// The constraint id continues the model's SC numbering after the highest
// declared constraint, offset by the UCA's position, so ids are stable for a
// given model. ASIL is computed from the UCA's rating when present and valid.
//
// Throws NotFoundError if uca_id does not name a UCA.
SafetyConstraint derive_constraint(const SafetyModel& model, std::string_view uca_id);

// derive_constraint for every UCA, in declaration order.
std::vector<SafetyConstraint> derive_all_constraints(const SafetyModel& model);

}  // namespace stpa

#endif  // STPA_STEP1_HPP_
