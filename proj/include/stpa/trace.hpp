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

#ifndef STPA_TRACE_HPP_
#define STPA_TRACE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "stpa/model.hpp"

namespace stpa {

struct TraceNode {
  Id id;
  EntityKind kind = EntityKind::kAccident;
  std::vector<TraceNode> children;
};

// Traceability around one entity. The downward side follows links towards
// accidents (scenario -> causal factor -> UCA -> hazard -> accident, and
// constraint -> source); the upward side follows the same links in reverse.
// Each entity appears at most once per side; children keep declaration order.
struct TraceTree {
  TraceNode root;
  std::vector<TraceNode> downward;
  std::vector<TraceNode> upward;
};

// Throws NotFoundError if id does not resolve.
TraceTree trace(const SafetyModel& model, std::string_view id);

// Every id on one side of the tree, depth first.
std::vector<Id> flatten(const std::vector<TraceNode>& nodes);

// Indented text rendering used by the CLI.
std::string render_trace(const TraceTree& tree);

}  // namespace stpa

#endif  // STPA_TRACE_HPP_
