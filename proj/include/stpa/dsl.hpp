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

// Reader and writer for the `.stpa` safety-model format.
//
//   model "Cooperative driving"
//
//   accident A1 "Collision with vehicle"
//   hazard H1 "Inadequate distance to frontal vehicle" -> A1
//   component Sup kind controller "Supervisory controller"
//   action CA1 Sup -> Agent "a reference vehicle"
//   uca UCA1 on CA1 category not_provided
//     context "when activating the agent"
//     hazards H1
//     rating S3 E4 C3
//
// Whitespace (including newlines) is insignificant; `//` starts a comment.

#ifndef STPA_DSL_HPP_
#define STPA_DSL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stpa/model.hpp"
#include "stpa/source.hpp"

namespace stpa {

struct ParseResult {
  std::optional<SafetyModel> model;
  // Sorted by (line, column). Non-empty iff `model` is empty.
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

// Parses a complete document. Besides syntax, the parser checks identifier
// patterns per entity kind (A1, H1, SC1, CA1, FB1, UCA1, CF1, SCN1), qualifier
// and category compatibility, non-empty texts and duplicate ids. Reference
// resolution is left to validate().
ParseResult parse(std::string_view source, std::string file = "<input>");

// Canonical text form. parse(print(m)) == m for any model parse() accepts.
std::string print(const SafetyModel& model);

// Double-quoted literal with `\"` and `\\` escaped.
std::string quote(std::string_view text);

}  // namespace stpa

#endif  // STPA_DSL_HPP_
