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

#ifndef STPA_REPORTS_HPP_
#define STPA_REPORTS_HPP_

#include <string>
#include <vector>

#include "stpa/model.hpp"
#include "stpa/step1.hpp"
#include "stpa/validate.hpp"

namespace stpa {

// Everything the emitters need, computed once from one model.
struct ReportBundle {
  SafetyModel model;
  std::vector<UcaCandidate> candidates;
  std::vector<Finding> findings;
  std::vector<SafetyConstraint> derived_constraints;
  std::vector<ControlLoop> loops;
};

ReportBundle make_bundle(SafetyModel model);

// JSON, schema version "1". Keys appear in this order:
//
//   schema_version, model{name, accidents, hazards, constraints, components,
//   actions, feedbacks, ucas, safe_assessments, causal_factors, scenarios},
//   loops, candidates, findings, constraints (derived from UCAs)
//
// Entity objects list their fields in declaration order of the DSL grammar.
// Optional values are null when absent. Finding spans carry line, column and
// length but not the file name, so reports do not depend on how the input
// path was spelled. Two-space indentation, trailing newline.
std::string emit_json(const ReportBundle& bundle);

// Markdown report in six numbered sections.
std::string emit_markdown(const ReportBundle& bundle);

// Step 1 matrix: one row per action, one column per guide category. Cells
// are "safe", "unsafe(UCA1;UCA7)" or "unassessed". RFC 4180, LF endings.
std::string emit_csv_matrix(const ReportBundle& bundle);

}  // namespace stpa

#endif  // STPA_REPORTS_HPP_
