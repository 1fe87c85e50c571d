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

// Brute-force existence queries, the counterexample instances, and replays of
// round robin and envy-cycle elimination on constrained instances.

#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chore_sched/checkers.hpp"
#include "chore_sched/core.hpp"
#include "chore_sched/enumerate.hpp"
#include "chore_sched/n_agent.hpp"

namespace chore_sched {

/// Every criterion is paired with maximality: the search ranges over maximal
/// schedules only.
enum class Criterion { kEf, kEf1, kEfx, kEfk, kEf1Po, kEf1Complete };

struct ExistenceQuery {
  Criterion criterion = Criterion::kEf1;
  std::size_t k = 1;  // only read for kEfk
  std::size_t guard = kDefaultGuard;
};

/// "ef", "ef1", "efx", "ef<k>" (k >= 2), "ef1-po", "ef1-complete".
inline std::optional<ExistenceQuery> parse_criterion(std::string_view text) {
  std::string s(text);
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  ExistenceQuery q;
  if (s == "ef") {
    q.criterion = Criterion::kEf;
  } else if (s == "ef1") {
    q.criterion = Criterion::kEf1;
  } else if (s == "efx") {
    q.criterion = Criterion::kEfx;
  } else if (s == "ef1-po") {
    q.criterion = Criterion::kEf1Po;
  } else if (s == "ef1-complete") {
    q.criterion = Criterion::kEf1Complete;
  } else if (s.size() > 2 && s.rfind("ef", 0) == 0 &&
             s.find_first_not_of("0123456789", 2) == std::string::npos && s.size() < 8) {
    q.criterion = Criterion::kEfk;
    q.k = std::stoul(s.substr(2));
  } else {
    return std::nullopt;
  }
  return q;
}

inline std::string to_string(const ExistenceQuery& q) {
  switch (q.criterion) {
    case Criterion::kEf: return "ef";
    case Criterion::kEf1: return "ef1";
    case Criterion::kEfx: return "efx";
    case Criterion::kEfk: return "ef" + std::to_string(q.k);
    case Criterion::kEf1Po: return "ef1-po";
    case Criterion::kEf1Complete: return "ef1-complete";
  }
  return "?";
}

/// The fairness half of a query on one schedule.
inline bool fair_under(const Schedule& s, const Instance& inst, const ExistenceQuery& q) {
  switch (q.criterion) {
    case Criterion::kEf: return check_ef(s, inst).holds;
    case Criterion::kEfx: return check_efx(s, inst).holds;
    case Criterion::kEfk: return check_efk(s, inst, q.k).holds;
    default: return check_ef1(s, inst).holds;
  }
}

/// A maximal schedule meeting the query, or nullopt if none exists.
inline std::optional<Schedule> exists(const Instance& inst, const ExistenceQuery& q) {
  require_within_guard(inst, q.guard);
  std::optional<Schedule> found;
  if (q.criterion != Criterion::kEf1Po) {
    for_each_maximal(
        inst,
        [&](const Schedule& s) {
          if (q.criterion == Criterion::kEf1Complete && !is_complete(s)) return true;
          if (!fair_under(s, inst, q)) return true;
          found = s;
          return false;
        },
        q.guard);
    return found;
  }
  std::vector<std::vector<Value>> utils;
  std::vector<Schedule> fair;
  for_each_maximal(
      inst,
      [&](const Schedule& s) {
        utils.push_back(utilities(s, inst));
        if (check_ef1(s, inst).holds) fair.push_back(s);
        return true;
      },
      q.guard);
  std::set<std::vector<Value>> frontier(utils.begin(), utils.end());
  for (const Schedule& s : fair) {
    const auto mine = utilities(s, inst);
    bool dominated = false;
    for (const auto& other : frontier) {
      if (pareto_dominates(other, mine)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return s;
  }
  return std::nullopt;
}

/// Maximal schedule with the largest total value; first in enumeration
/// order among ties.
inline Schedule max_utilitarian_maximal(const Instance& inst, std::size_t guard = kDefaultGuard) {
  std::optional<Schedule> best;
  Value best_total = 0;
  for_each_maximal(
      inst,
      [&](const Schedule& s) {
        Value total = 0;
        for (Value v : utilities(s, inst)) total += v;
        if (!best || total > best_total) {
          best = s;
          best_total = total;
        }
        return true;
      },
      guard);
  return *best;  // some maximal schedule always exists
}

struct DemoOutcome {
  Schedule schedule;
  FairnessVerdict ef1;
};

namespace detail {

/// The highest-valued chore `agent` can still take, lowest id on ties.
inline std::optional<ChoreId> favourite_feasible(const Schedule& s, const Instance& inst,
                                                 AgentId agent) {
  std::optional<ChoreId> best;
  for (ChoreId c = 0; c < static_cast<ChoreId>(inst.chore_count()); ++c) {
    if (s.assigned(c) || !fits(s, inst.graph(), c, agent)) continue;
    if (!best || inst.valuations().value(agent, c) > inst.valuations().value(agent, *best)) best = c;
  }
  return best;
}

}  // namespace detail

/// Round robin in the given agent order where each agent takes its favourite
/// chore among those that fit its bundle. Agents with nothing feasible pass.
inline DemoOutcome demo_round_robin(const Instance& inst, const std::vector<AgentId>& order) {
  if (!inst.valuations().is_additive()) {
    throw InputError(ErrorCode::kNotAdditive, "round robin replay needs additive valuations");
  }
  std::vector<bool> seen(inst.agent_count(), false);
  for (AgentId a : order) {
    if (a < 0 || static_cast<std::size_t>(a) >= inst.agent_count() || seen[static_cast<std::size_t>(a)]) {
      throw InputError(ErrorCode::kUnknownId, "round robin order must list distinct agent ids");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
  Schedule s(inst.agent_count(), inst.chore_count());
  std::size_t passes = 0;
  for (std::size_t turn = 0; !order.empty() && passes < order.size(); ++turn) {
    const AgentId a = order[turn % order.size()];
    if (auto c = detail::favourite_feasible(s, inst, a)) {
      s.assign(*c, a);
      passes = 0;
    } else {
      ++passes;
    }
  }
  return {s, check_ef1(s, inst)};
}

/// Top-trading envy-cycle elimination under identical valuations: a sink of
/// the envy graph picks its favourite feasible chore. When no sink can take
/// anything, the next agent in sink-first order picks instead.
inline DemoOutcome demo_top_trading_envy_cycle(const Instance& inst) {
  if (!inst.valuations().is_identical()) {
    throw InputError(ErrorCode::kNotIdentical, "envy-cycle replay needs identical valuations");
  }
  const std::size_t n = inst.agent_count();
  Schedule s(n, inst.chore_count());
  while (true) {
    const EnvyGraph g = envy_graph(s, inst);
    EnvyGraph reversed(n);
    for (const auto& [from, to] : g.edges()) reversed.add_edge(to, from);
    const auto order = reversed.topological_order();
    if (!order) throw InvariantViolation("envy graph has a cycle under identical valuations");
    bool picked = false;
    for (AgentId a : *order) {
      if (auto c = detail::favourite_feasible(s, inst, a)) {
        s.assign(*c, a);
        picked = true;
        break;
      }
    }
    if (!picked) break;
  }
  return {s, check_ef1(s, inst)};
}

/// Built-in instances from the non-existence and limitation examples. All
/// are two-agent identical-valuation paths.
namespace golden {

inline Instance identical_path(const std::vector<Value>& row) {
  return path_instance({row, row});
}

/// No schedule is both EFX and maximal.
inline Instance efx_maximal() { return identical_path({-1, -1, -1, -4}); }
/// No schedule is both EF1 and Pareto optimal.
inline Instance ef1_po() { return identical_path({-2, -10, -1, -10, -2}); }
/// No schedule is both EF1 and complete.
inline Instance ef1_complete() { return identical_path({-1, -3, -1, -3}); }
/// Round robin with agent 0 first ends up violating EF1.
inline Instance round_robin() { return identical_path({0, -7, -2, -1, -3, -8, -9, -10}); }
/// Top-trading envy-cycle elimination ends up violating EF1.
inline Instance envy_cycle() { return identical_path({-10, -1, -10, -3, -2}); }

}  // namespace golden

}  // namespace chore_sched
