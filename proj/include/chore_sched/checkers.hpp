// Copyright 2026 The chore-sched Authors
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

// Fairness and efficiency predicates over schedules.
//
// Envy is always judged from the envious agent's own valuation. The "up to k"
// relaxations remove chores from the envious agent's bundle; with non-positive
// values that is the only removal that can help.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chore_sched/core.hpp"
#include "chore_sched/enumerate.hpp"

namespace chore_sched {

struct Violation {
  AgentId envious = 0;
  AgentId envied = 0;
  /// Fewest chores the envious agent would have to shed to stop envying.
  std::size_t removals_needed = 0;
  bool operator==(const Violation&) const = default;
};

struct Witness {
  AgentId envious = 0;
  AgentId envied = 0;
  /// Chores whose removal cures the envy; empty when there was none to cure.
  std::vector<ChoreId> chores;
  bool operator==(const Witness&) const = default;
};

struct FairnessVerdict {
  bool holds = true;
  std::vector<Violation> violations;
  std::vector<Witness> witnesses;
  bool operator==(const FairnessVerdict&) const = default;
};

namespace detail {

inline void require_feasible(const Schedule& s, const Instance& inst) {
  require_compatible(s, inst);
  if (!is_feasible(s, inst.graph())) {
    throw InputError(ErrorCode::kInfeasibleSchedule, "schedule is infeasible: a bundle contains "
                                                     "two overlapping chores");
  }
}

/// Bundle sorted most-disliked first (ties by id): the greedy removal order
/// for additive valuations.
inline std::vector<ChoreId> worst_first(const Instance& inst, AgentId agent,
                                        std::vector<ChoreId> bundle) {
  const auto& row = inst.valuations().table()[static_cast<std::size_t>(agent)];
  std::stable_sort(bundle.begin(), bundle.end(), [&](ChoreId a, ChoreId b) {
    return row[static_cast<std::size_t>(a)] < row[static_cast<std::size_t>(b)];
  });
  return bundle;
}

inline std::vector<ChoreId> without(const std::vector<ChoreId>& bundle,
                                    const std::vector<ChoreId>& removed) {
  std::vector<ChoreId> rest;
  for (ChoreId c : bundle) {
    if (std::find(removed.begin(), removed.end(), c) == removed.end()) rest.push_back(c);
  }
  return rest;
}

/// Lexicographically first subset of `bundle` of exactly `size` chores whose
/// removal lifts the agent's value to `target`.
inline std::optional<std::vector<ChoreId>> first_curing_subset(const Instance& inst, AgentId agent,
                                                               const std::vector<ChoreId>& bundle,
                                                               std::size_t size, Value target) {
  if (size > bundle.size()) return std::nullopt;
  std::vector<std::size_t> idx(size);
  for (std::size_t t = 0; t < size; ++t) idx[t] = t;
  while (true) {
    std::vector<ChoreId> removed;
    removed.reserve(size);
    for (std::size_t t : idx) removed.push_back(bundle[t]);
    if (inst.value(agent, without(bundle, removed)) >= target) return removed;
    // next combination
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == bundle.size() - size + pos - 1) --pos;
    if (pos == 0) return std::nullopt;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < size; ++t) idx[t] = idx[t - 1] + 1;
  }
}

/// Smallest curing removal set, searched by size. For additive valuations the
/// worst chores are removed greedily; otherwise subsets are enumerated.
inline std::vector<ChoreId> minimal_cure(const Instance& inst, AgentId agent,
                                         const std::vector<ChoreId>& bundle, Value target) {
  if (inst.valuations().is_additive()) {
    const auto order = worst_first(inst, agent, bundle);
    const auto& row = inst.valuations().table()[static_cast<std::size_t>(agent)];
    Value v = inst.value(agent, bundle);
    std::vector<ChoreId> removed;
    for (ChoreId c : order) {
      if (v >= target) break;
      v -= row[static_cast<std::size_t>(c)];
      removed.push_back(c);
    }
    return removed;
  }
  for (std::size_t size = 0; size <= bundle.size(); ++size) {
    if (auto found = first_curing_subset(inst, agent, bundle, size, target)) return *found;
  }
  // value(∅) = 0 >= target always; unreachable for valid profiles
  throw InvariantViolation("valuation oracle gave the empty bundle a negative value");
}

}  // namespace detail

/// Envy-freeness up to k chores: every envious agent can shed at most k of
/// its own chores to stop envying. k = 0 is plain envy-freeness.
inline FairnessVerdict check_efk(const Schedule& s, const Instance& inst, std::size_t k) {
  detail::require_feasible(s, inst);
  const auto bundles = s.bundles();
  const auto n = static_cast<AgentId>(inst.agent_count());
  FairnessVerdict verdict;
  for (AgentId i = 0; i < n; ++i) {
    const auto& own = bundles[static_cast<std::size_t>(i)];
    for (AgentId other = 0; other < n; ++other) {
      if (other == i) continue;
      const Value target = inst.value(i, bundles[static_cast<std::size_t>(other)]);
      if (inst.value(i, own) >= target) {
        verdict.witnesses.push_back({i, other, {}});
        continue;
      }
      auto cure = detail::minimal_cure(inst, i, own, target);
      if (cure.size() <= k) {
        verdict.witnesses.push_back({i, other, std::move(cure)});
      } else {
        verdict.violations.push_back({i, other, cure.size()});
      }
    }
  }
  verdict.holds = verdict.violations.empty();
  return verdict;
}

inline FairnessVerdict check_ef(const Schedule& s, const Instance& inst) {
  detail::require_feasible(s, inst);
  const auto bundles = s.bundles();
  const auto n = static_cast<AgentId>(inst.agent_count());
  FairnessVerdict verdict;
  for (AgentId i = 0; i < n; ++i) {
    const auto& own = bundles[static_cast<std::size_t>(i)];
    for (AgentId other = 0; other < n; ++other) {
      if (other == i) continue;
      const Value target = inst.value(i, bundles[static_cast<std::size_t>(other)]);
      if (inst.value(i, own) >= target) {
        verdict.witnesses.push_back({i, other, {}});
      } else {
        verdict.violations.push_back(
            {i, other, detail::minimal_cure(inst, i, own, target).size()});
      }
    }
  }
  verdict.holds = verdict.violations.empty();
  return verdict;
}

/// Envy-freeness up to one chore. Additive profiles only try the worst
/// chore; general monotone profiles try every single removal.
inline FairnessVerdict check_ef1(const Schedule& s, const Instance& inst) {
  detail::require_feasible(s, inst);
  const auto bundles = s.bundles();
  const auto n = static_cast<AgentId>(inst.agent_count());
  const bool additive = inst.valuations().is_additive();
  FairnessVerdict verdict;
  for (AgentId i = 0; i < n; ++i) {
    const auto& own = bundles[static_cast<std::size_t>(i)];
    for (AgentId other = 0; other < n; ++other) {
      if (other == i) continue;
      const Value target = inst.value(i, bundles[static_cast<std::size_t>(other)]);
      if (inst.value(i, own) >= target) {
        verdict.witnesses.push_back({i, other, {}});
        continue;
      }
      std::optional<ChoreId> cure;
      if (additive) {
        const ChoreId worst = detail::worst_first(inst, i, own).front();
        if (inst.value(i, detail::without(own, {worst})) >= target) cure = worst;
      } else {
        for (ChoreId c : own) {
          if (inst.value(i, detail::without(own, {c})) >= target) {
            cure = c;
            break;
          }
        }
      }
      if (cure) {
        verdict.witnesses.push_back({i, other, {*cure}});
      } else {
        verdict.violations.push_back(
            {i, other, detail::minimal_cure(inst, i, own, target).size()});
      }
    }
  }
  verdict.holds = verdict.violations.empty();
  return verdict;
}

/// Envy-freeness up to any chore: removing *each* chore of a non-empty
/// envious bundle must cure the envy. Empty bundles never envy.
inline FairnessVerdict check_efx(const Schedule& s, const Instance& inst) {
  detail::require_feasible(s, inst);
  const auto bundles = s.bundles();
  const auto n = static_cast<AgentId>(inst.agent_count());
  FairnessVerdict verdict;
  for (AgentId i = 0; i < n; ++i) {
    const auto& own = bundles[static_cast<std::size_t>(i)];
    if (own.empty()) continue;
    for (AgentId other = 0; other < n; ++other) {
      if (other == i) continue;
      const Value target = inst.value(i, bundles[static_cast<std::size_t>(other)]);
      if (inst.value(i, own) >= target) continue;
      bool every = true;
      for (ChoreId c : own) {
        if (inst.value(i, detail::without(own, {c})) < target) {
          every = false;
          break;
        }
      }
      if (!every) {
        verdict.violations.push_back(
            {i, other, detail::minimal_cure(inst, i, own, target).size()});
      }
    }
  }
  verdict.holds = verdict.violations.empty();
  return verdict;
}

/// Feasible, and no unassigned chore fits into any bundle.
inline bool is_maximal(const Schedule& s, const ConflictGraph& graph) {
  if (!is_feasible(s, graph)) {
    throw InputError(ErrorCode::kInfeasibleSchedule, "maximality is undefined for an infeasible "
                                                     "schedule");
  }
  for (std::size_t c = 0; c < s.chore_count(); ++c) {
    if (s.assigned(static_cast<ChoreId>(c))) continue;
    for (AgentId a = 0; a < static_cast<AgentId>(s.agent_count()); ++a) {
      if (fits(s, graph, static_cast<ChoreId>(c), a)) return false;
    }
  }
  return true;
}

inline bool is_complete(const Schedule& s) {
  return std::all_of(s.raw().begin(), s.raw().end(),
                     [](AgentId a) { return a != Schedule::kUnassigned; });
}

inline std::vector<Value> utilities(const Schedule& s, const Instance& inst) {
  const auto bundles = s.bundles();
  std::vector<Value> out(bundles.size());
  for (std::size_t a = 0; a < bundles.size(); ++a) {
    out[a] = inst.value(static_cast<AgentId>(a), bundles[a]);
  }
  return out;
}

/// Weakly better for everyone and strictly better for someone.
inline bool pareto_dominates(const std::vector<Value>& x, const std::vector<Value>& y) {
  bool strict = false;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] < y[a]) return false;
    if (x[a] > y[a]) strict = true;
  }
  return strict;
}

/// Maximal and not dominated by any maximal schedule. Enumerates, so the
/// instance must fit under `guard`.
inline bool is_pareto_optimal(const Schedule& s, const Instance& inst,
                              std::size_t guard = kDefaultGuard) {
  require_within_guard(inst, guard);
  require_compatible(s, inst);
  if (!is_maximal(s, inst.graph())) return false;
  const auto mine = utilities(s, inst);
  bool dominated = false;
  for_each_maximal(
      inst,
      [&](const Schedule& other) {
        dominated = pareto_dominates(utilities(other, inst), mine);
        return !dominated;
      },
      guard);
  return !dominated;
}

}  // namespace chore_sched
