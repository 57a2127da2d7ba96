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

#include "stpa/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "stpa/step1.hpp"

namespace stpa {

std::string_view to_string(FindingSeverity severity) {
  return severity == FindingSeverity::kError ? "error" : "warning";
}

namespace {

// Canonical position of a declaration: collection order, then index. Safe
// assessments have no id and sort between UCAs and causal factors.
struct Rank {
  int group = 0;
  std::size_t index = 0;
};

constexpr int kSafeGroup = 100;

int group_of(EntityKind kind) {
  switch (kind) {
    case EntityKind::kAccident: return 0;
    case EntityKind::kHazard: return 1;
    case EntityKind::kConstraint: return 2;
    case EntityKind::kComponent: return 3;
    case EntityKind::kAction: return 4;
    case EntityKind::kFeedback: return 5;
    case EntityKind::kUca: return 6;
    case EntityKind::kCausalFactor: return 200;
    case EntityKind::kScenario: return 201;
  }
  return 0;
}

struct Ranked {
  Finding finding;
  Rank rank;
};

class Validator {
 public:
  explicit Validator(const SafetyModel& model) : m_(model), index_(model) {}

  std::vector<Finding> run() {
    check_duplicates();
    check_hazards();
    check_constraints();
    check_control_structure();
    check_ucas();
    check_safe_assessments();
    check_causal_analysis();
    check_loops();
    check_candidates();

    std::stable_sort(found_.begin(), found_.end(), [](const Ranked& a, const Ranked& b) {
      return std::tie(a.finding.severity, a.rank.group, a.rank.index, a.finding.code) <
             std::tie(b.finding.severity, b.rank.group, b.rank.index, b.finding.code);
    });
    std::vector<Finding> out;
    out.reserve(found_.size());
    for (auto& r : found_) out.push_back(std::move(r.finding));
    return out;
  }

 private:
  void add(std::string code, std::string subject, std::string message, const SourceSpan& span,
           Rank rank) {
    Finding f;
    f.severity = code[0] == 'E' ? FindingSeverity::kError : FindingSeverity::kWarning;
    f.code = std::move(code);
    f.subject = std::move(subject);
    f.message = std::move(message);
    if (!span.file.empty()) f.span = span;
    found_.push_back(Ranked{std::move(f), rank});
  }

  template <typename T>
  void add_for(std::string code, const T& entity, EntityKind kind, std::size_t i,
               std::string message) {
    add(std::move(code), entity.id, std::move(message), entity.span, Rank{group_of(kind), i});
  }

  // E001 unless `ref` names an entity of one of the accepted kinds.
  template <typename T>
  bool check_ref(const T& owner, EntityKind owner_kind, std::size_t i, const Id& ref,
                 std::initializer_list<EntityKind> accepted, std::string_view expected) {
    auto found = index_.find(ref);
    if (!found) {
      add_for("E001", owner, owner_kind, i,
              std::string(to_string(owner_kind)) + " " + owner.id + " references undeclared '" +
                  ref + "'");
      return false;
    }
    if (std::find(accepted.begin(), accepted.end(), found->kind) == accepted.end()) {
      add_for("E001", owner, owner_kind, i,
              std::string(to_string(owner_kind)) + " " + owner.id + " references '" + ref +
                  "', which is a " + std::string(to_string(found->kind)) + ", not " +
                  std::string(expected));
      return false;
    }
    return true;
  }

  template <typename T>
  void duplicates_in(const std::vector<T>& items, EntityKind kind,
                     std::unordered_map<std::string, EntityKind>& seen) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto [it, inserted] = seen.try_emplace(items[i].id, kind);
      if (!inserted) {
        add_for("E007", items[i], kind, i,
                "duplicate id '" + items[i].id + "' (first declared as " +
                    std::string(to_string(it->second)) + ")");
      }
    }
  }

  void check_duplicates() {
    std::unordered_map<std::string, EntityKind> seen;
    duplicates_in(m_.accidents, EntityKind::kAccident, seen);
    duplicates_in(m_.hazards, EntityKind::kHazard, seen);
    duplicates_in(m_.constraints, EntityKind::kConstraint, seen);
    duplicates_in(m_.components, EntityKind::kComponent, seen);
    duplicates_in(m_.actions, EntityKind::kAction, seen);
    duplicates_in(m_.feedbacks, EntityKind::kFeedback, seen);
    duplicates_in(m_.ucas, EntityKind::kUca, seen);
    duplicates_in(m_.causal_factors, EntityKind::kCausalFactor, seen);
    duplicates_in(m_.scenarios, EntityKind::kScenario, seen);

    std::set<std::tuple<Id, Id, std::string>> triples;
    for (std::size_t i = 0; i < m_.actions.size(); ++i) {
      const auto& a = m_.actions[i];
      if (!triples.emplace(a.source, a.target, a.label).second) {
        add_for("E007", a, EntityKind::kAction, i,
                "action " + a.id + " repeats an earlier action with the same source, target "
                "and label");
      }
    }
    std::set<std::tuple<Id, int, int, std::string>> uca_keys;
    for (std::size_t i = 0; i < m_.ucas.size(); ++i) {
      const auto& u = m_.ucas[i];
      int q = u.category.qualifier ? static_cast<int>(*u.category.qualifier) : -1;
      if (!uca_keys.emplace(u.action, static_cast<int>(u.category.cls), q, u.context).second) {
        add_for("E007", u, EntityKind::kUca, i,
                "UCA " + u.id + " repeats an earlier UCA with the same action, category and "
                "context");
      }
    }
  }

  void check_hazards() {
    for (std::size_t i = 0; i < m_.hazards.size(); ++i) {
      const auto& h = m_.hazards[i];
      if (h.accidents.empty()) {
        add_for("E002", h, EntityKind::kHazard, i, "hazard " + h.id + " links to no accident");
      }
      for (const auto& ref : h.accidents) {
        check_ref(h, EntityKind::kHazard, i, ref, {EntityKind::kAccident}, "an accident");
      }
      bool constrained = std::any_of(m_.constraints.begin(), m_.constraints.end(),
                                     [&](const SafetyConstraint& sc) { return sc.source == h.id; });
      if (!constrained) {
        add_for("W005", h, EntityKind::kHazard, i,
                "hazard " + h.id + " has no high-level safety constraint");
      }
    }
  }

  void check_constraints() {
    for (std::size_t i = 0; i < m_.constraints.size(); ++i) {
      const auto& sc = m_.constraints[i];
      check_ref(sc, EntityKind::kConstraint, i, sc.source,
                {EntityKind::kHazard, EntityKind::kUca}, "a hazard or UCA");
    }
  }

  void check_control_structure() {
    for (std::size_t i = 0; i < m_.actions.size(); ++i) {
      const auto& a = m_.actions[i];
      if (check_ref(a, EntityKind::kAction, i, a.source, {EntityKind::kComponent},
                    "a component")) {
        const Component* c = index_.component(a.source);
        if (c->kind != ComponentKind::kController) {
          add_for("E004", a, EntityKind::kAction, i,
                  "action " + a.id + " is issued by " + a.source + ", which is a " +
                      std::string(to_string(c->kind)) + ", not a controller");
        }
      }
      check_ref(a, EntityKind::kAction, i, a.target, {EntityKind::kComponent}, "a component");
    }
    for (std::size_t i = 0; i < m_.feedbacks.size(); ++i) {
      const auto& f = m_.feedbacks[i];
      check_ref(f, EntityKind::kFeedback, i, f.source, {EntityKind::kComponent}, "a component");
      if (check_ref(f, EntityKind::kFeedback, i, f.target, {EntityKind::kComponent},
                    "a component")) {
        const Component* c = index_.component(f.target);
        if (c->kind != ComponentKind::kController) {
          add_for("E004", f, EntityKind::kFeedback, i,
                  "feedback " + f.id + " is sent to " + f.target + ", which is a " +
                      std::string(to_string(c->kind)) + ", not a controller");
        }
      }
    }
  }

  void check_ucas() {
    for (std::size_t i = 0; i < m_.ucas.size(); ++i) {
      const auto& u = m_.ucas[i];
      check_ref(u, EntityKind::kUca, i, u.action, {EntityKind::kAction}, "a control action");
      if (u.hazards.empty()) {
        add_for("E003", u, EntityKind::kUca, i, "UCA " + u.id + " links to no hazard");
      }
      for (const auto& ref : u.hazards) {
        check_ref(u, EntityKind::kUca, i, ref, {EntityKind::kHazard}, "a hazard");
      }
      if (!u.rating) {
        add_for("W006", u, EntityKind::kUca, i, "UCA " + u.id + " has no S/E/C rating");
      } else if (!u.rating->in_range()) {
        const Rating& r = *u.rating;
        add_for("E005", u, EntityKind::kUca, i,
                "UCA " + u.id + " rating S" + std::to_string(r.severity) + " E" +
                    std::to_string(r.exposure) + " C" + std::to_string(r.controllability) +
                    " is outside S0-S3 E0-E4 C0-C3");
      }
      bool constrained = std::any_of(m_.constraints.begin(), m_.constraints.end(),
                                     [&](const SafetyConstraint& sc) { return sc.source == u.id; });
      if (!constrained) {
        add_for("W003", u, EntityKind::kUca, i,
                "UCA " + u.id + " has no declared safety constraint");
      }
      bool caused = std::any_of(m_.causal_factors.begin(), m_.causal_factors.end(),
                                [&](const CausalFactor& cf) { return cf.uca == u.id; });
      if (!caused) {
        add_for("W004", u, EntityKind::kUca, i,
                "UCA " + u.id + " has no causal factor (Step 2 not performed)");
      }
    }
  }

  void check_safe_assessments() {
    for (std::size_t i = 0; i < m_.safe_assessments.size(); ++i) {
      const auto& s = m_.safe_assessments[i];
      auto found = index_.find(s.action);
      if (!found || found->kind != EntityKind::kAction) {
        add("E001", s.action,
            "safe assessment references '" + s.action + "', which is not a control action",
            s.span, Rank{kSafeGroup, i});
      }
    }
    // One E006 per conflicting (action, category) pair.
    std::set<std::pair<Id, UcaClass>> reported;
    for (std::size_t i = 0; i < m_.safe_assessments.size(); ++i) {
      const auto& s = m_.safe_assessments[i];
      std::vector<Id> clashing;
      for (const auto& u : m_.ucas) {
        if (u.action == s.action && u.category.cls == s.category) clashing.push_back(u.id);
      }
      if (clashing.empty() || !reported.emplace(s.action, s.category).second) continue;
      std::string ids;
      for (const auto& id : clashing) ids += (ids.empty() ? "" : ", ") + id;
      Rank rank{kSafeGroup, i};
      if (auto a = index_.find(s.action); a && a->kind == EntityKind::kAction) {
        rank = Rank{group_of(EntityKind::kAction), a->index};
      }
      add("E006", s.action,
          "action " + s.action + " category " + std::string(to_string(s.category)) +
              " is assessed safe but recorded as unsafe by " + ids,
          s.span, rank);
    }
  }

  void check_causal_analysis() {
    for (std::size_t i = 0; i < m_.causal_factors.size(); ++i) {
      const auto& cf = m_.causal_factors[i];
      check_ref(cf, EntityKind::kCausalFactor, i, cf.uca, {EntityKind::kUca}, "a UCA");
    }
    for (std::size_t i = 0; i < m_.scenarios.size(); ++i) {
      const auto& s = m_.scenarios[i];
      check_ref(s, EntityKind::kScenario, i, s.uca, {EntityKind::kUca}, "a UCA");
      if (s.factors.empty()) {
        add_for("E001", s, EntityKind::kScenario, i,
                "scenario " + s.id + " requires no causal factor");
      }
      for (const auto& ref : s.factors) {
        if (!check_ref(s, EntityKind::kScenario, i, ref, {EntityKind::kCausalFactor},
                       "a causal factor")) {
          continue;
        }
        const CausalFactor* cf = index_.causal_factor(ref);
        if (cf->uca != s.uca) {
          add_for("E001", s, EntityKind::kScenario, i,
                  "scenario " + s.id + " is about " + s.uca + " but requires " + ref +
                      ", a causal factor of " + cf->uca);
        }
      }
    }
  }

  void check_loops() {
    for (const auto& loop : derive_control_loops(m_)) {
      if (!loop.feedbacks.empty()) continue;
      auto first = index_.find(loop.actions.front());
      Rank rank{group_of(EntityKind::kAction), first ? first->index : 0};
      const SourceSpan& span = first ? entity_span(m_, *first) : SourceSpan{};
      add("W001", loop.controller,
          "control loop " + loop.controller + " -> " + loop.controlled +
              " has no feedback signal",
          span, rank);
    }
  }

  void check_candidates() {
    std::unordered_map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < m_.actions.size(); ++i) position.try_emplace(m_.actions[i].id, i);
    for (const auto& c : enumerate_candidates(m_)) {
      if (c.status != CandidateStatus::kUnassessed) continue;
      std::size_t i = position.at(c.action);
      add("W002", c.action,
          "action " + c.action + " has not been assessed for category " +
              std::string(to_string(c.category)),
          m_.actions[i].span, Rank{group_of(EntityKind::kAction), i});
    }
  }

  const SafetyModel& m_;
  IdIndex index_;
  std::vector<Ranked> found_;
};

}  // namespace

std::vector<Finding> validate(const SafetyModel& model) { return Validator(model).run(); }

std::size_t count_errors(const std::vector<Finding>& findings) {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [](const Finding& f) { return f.severity == FindingSeverity::kError; }));
}

std::size_t count_warnings(const std::vector<Finding>& findings) {
  return findings.size() - count_errors(findings);
}

}  // namespace stpa
