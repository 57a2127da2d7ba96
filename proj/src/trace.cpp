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

#include "stpa/trace.hpp"

#include <map>
#include <set>
#include <sstream>

namespace stpa {

namespace {

using Edges = std::vector<EntityRef>;

class TraceGraph {
 public:
  explicit TraceGraph(const SafetyModel& model) : m_(model), index_(model) {
    // Reverse edges are collected in canonical collection order, which makes
    // upward children come out in declaration order too.
    for (std::size_t i = 0; i < m_.hazards.size(); ++i) {
      link(EntityRef{EntityKind::kHazard, i}, m_.hazards[i].accidents);
    }
    for (std::size_t i = 0; i < m_.constraints.size(); ++i) {
      link(EntityRef{EntityKind::kConstraint, i}, {m_.constraints[i].source});
    }
    for (std::size_t i = 0; i < m_.ucas.size(); ++i) {
      link(EntityRef{EntityKind::kUca, i}, m_.ucas[i].hazards);
    }
    for (std::size_t i = 0; i < m_.causal_factors.size(); ++i) {
      link(EntityRef{EntityKind::kCausalFactor, i}, {m_.causal_factors[i].uca});
    }
    for (std::size_t i = 0; i < m_.scenarios.size(); ++i) {
      link(EntityRef{EntityKind::kScenario, i}, m_.scenarios[i].factors);
    }
  }

  const IdIndex& index() const { return index_; }

  const Edges& down(EntityRef ref) const { return lookup(down_, ref); }
  const Edges& up(EntityRef ref) const { return lookup(up_, ref); }

  TraceNode node(EntityRef ref) const { return TraceNode{entity_id(m_, ref), ref.kind, {}}; }

 private:
  using Key = std::pair<int, std::size_t>;
  static Key key(EntityRef r) { return {static_cast<int>(r.kind), r.index}; }

  static const Edges& lookup(const std::map<Key, Edges>& edges, EntityRef ref) {
    static const Edges kNone;
    auto it = edges.find(key(ref));
    return it == edges.end() ? kNone : it->second;
  }

  void link(EntityRef from, const std::vector<Id>& targets) {
    for (const auto& id : targets) {
      auto to = index_.find(id);
      if (!to) continue;  // dangling; reported by validate()
      down_[key(from)].push_back(*to);
      up_[key(*to)].push_back(from);
    }
  }

  const SafetyModel& m_;
  IdIndex index_;
  std::map<Key, Edges> down_;
  std::map<Key, Edges> up_;
};

std::vector<TraceNode> expand(const TraceGraph& g, EntityRef from,
                              const Edges& (TraceGraph::*next)(EntityRef) const,
                              std::set<std::pair<int, std::size_t>>& visited) {
  std::vector<TraceNode> out;
  for (EntityRef child : (g.*next)(from)) {
    if (!visited.emplace(static_cast<int>(child.kind), child.index).second) continue;
    TraceNode n = g.node(child);
    n.children = expand(g, child, next, visited);
    out.push_back(std::move(n));
  }
  return out;
}

void render(std::ostringstream& out, const std::vector<TraceNode>& nodes, int depth) {
  for (const auto& n : nodes) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << n.id << " ("
        << to_string(n.kind) << ")\n";
    render(out, n.children, depth + 1);
  }
}

void collect(const std::vector<TraceNode>& nodes, std::vector<Id>& out) {
  for (const auto& n : nodes) {
    out.push_back(n.id);
    collect(n.children, out);
  }
}

}  // namespace

TraceTree trace(const SafetyModel& model, std::string_view id) {
  TraceGraph graph(model);
  auto root = graph.index().find(id);
  if (!root) throw NotFoundError(std::string(id));

  TraceTree tree;
  tree.root = graph.node(*root);
  std::set<std::pair<int, std::size_t>> seen_down{{static_cast<int>(root->kind), root->index}};
  std::set<std::pair<int, std::size_t>> seen_up = seen_down;
  tree.downward = expand(graph, *root, &TraceGraph::down, seen_down);
  tree.upward = expand(graph, *root, &TraceGraph::up, seen_up);
  return tree;
}

std::vector<Id> flatten(const std::vector<TraceNode>& nodes) {
  std::vector<Id> out;
  collect(nodes, out);
  return out;
}

std::string render_trace(const TraceTree& tree) {
  std::ostringstream out;
  out << tree.root.id << " (" << to_string(tree.root.kind) << ")\n";
  out << "  downward:\n";
  if (tree.downward.empty()) out << "    (none)\n";
  render(out, tree.downward, 2);
  out << "  upward:\n";
  if (tree.upward.empty()) out << "    (none)\n";
  render(out, tree.upward, 2);
  return out.str();
}

}  // namespace stpa
