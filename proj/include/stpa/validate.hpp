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

#ifndef STPA_VALIDATE_HPP_
#define STPA_VALIDATE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stpa/model.hpp"
#include "stpa/source.hpp"

namespace stpa {

enum class FindingSeverity { kError, kWarning };

std::string_view to_string(FindingSeverity severity);

// Finding codes. The numbering is a public contract; never renumber.
//
//   E001 dangling or mistyped reference
//   E002 hazard with no accident link
//   E003 UCA with no hazard link
//   E004 control action from a non-controller (or feedback to one)
//   E005 rating class out of range
//   E006 (action, category) both assessed safe and recorded as UCA
//   E007 duplicate id (or duplicate action/UCA content)
//   W001 control loop with no feedback
//   W002 candidate (action, category) not assessed
//   W003 UCA with no declared safety constraint
//   W004 UCA with no causal factor
//   W005 hazard with no high-level safety constraint
//   W006 UCA without a rating
struct Finding {
  std::string code;
  FindingSeverity severity = FindingSeverity::kError;
  std::string subject;
  std::string message;
  std::optional<SourceSpan> span;

  bool operator==(const Finding&) const = default;
};

// Whole-model check. Findings come errors first, then warnings; within a
// severity they follow the subject's declaration order, then code.
std::vector<Finding> validate(const SafetyModel& model);

std::size_t count_errors(const std::vector<Finding>& findings);
std::size_t count_warnings(const std::vector<Finding>& findings);

}  // namespace stpa

#endif  // STPA_VALIDATE_HPP_
