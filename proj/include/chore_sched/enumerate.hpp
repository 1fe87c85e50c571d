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

// Exhaustive enumeration of maximal schedules for desk-scale instances.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "chore_sched/core.hpp"

namespace chore_sched {

inline constexpr std::size_t kDefaultGuard = 16;

inline void require_within_guard(const Instance& inst, std::size_t guard) {
  if (inst.chore_count() > guard) {
    throw InputError(ErrorCode::kGuardExceeded,
                     "instance has " + std::to_string(inst.chore_count()) +
                         " chores; exhaustive enumeration is limited to " + std::to_string(guard));
  }
}

/// Visits every feasible and maximal schedule exactly once, in lexicographic
/// order of the assignment vector (unassigned < agent 0 < agent 1 < ...).
/// The visitor returns false to stop early.
inline void for_each_maximal(const Instance& inst, const std::function<bool(const Schedule&)>& visit,
                             std::size_t guard = kDefaultGuard) {
  require_within_guard(inst, guard);
  const ConflictGraph& g = inst.graph();
  const int m = static_cast<int>(inst.chore_count());
  const int n = static_cast<int>(inst.agent_count());

  // A chore's blocked-ness is settled once it and all its neighbours are decided.
  std::vector<std::vector<ChoreId>> settled_at(static_cast<std::size_t>(m));
  for (ChoreId c = 0; c < m; ++c) {
    ChoreId last = c;
    for (ChoreId w : g.neighbors(c)) last = std::max(last, w);
    settled_at[static_cast<std::size_t>(last)].push_back(c);
  }

  Schedule s(inst.agent_count(), inst.chore_count());
  bool stop = false;

  auto blocked_for_all = [&](ChoreId c) {
    for (AgentId a = 0; a < n; ++a) {
      if (fits(s, g, c, a)) return false;
    }
    return true;
  };

  std::function<void(int)> dfs = [&](int j) {
    if (stop) return;
    if (j == m) {
      if (!visit(s)) stop = true;
      return;
    }
    for (AgentId choice = Schedule::kUnassigned; choice < n && !stop; ++choice) {
      if (choice != Schedule::kUnassigned) {
        if (!fits(s, g, j, choice)) continue;
        s.assign(j, choice);
      } else {
        s.unassign(j);
      }
      bool alive = true;
      for (ChoreId c : settled_at[static_cast<std::size_t>(j)]) {
        if (!s.assigned(c) && !blocked_for_all(c)) {
          alive = false;
          break;
        }
      }
      if (alive) dfs(j + 1);
      s.unassign(j);
    }
  };
  dfs(0);
}

inline std::vector<Schedule> enumerate_maximal(const Instance& inst,
                                               std::size_t guard = kDefaultGuard) {
  std::vector<Schedule> out;
  for_each_maximal(
      inst,
      [&](const Schedule& s) {
        out.push_back(s);
        return true;
      },
      guard);
  return out;
}

}  // namespace chore_sched
