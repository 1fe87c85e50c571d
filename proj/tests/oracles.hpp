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

// Reference implementations used only by the tests. They work straight from
// the intervals and from subset enumeration, never through the library's
// graph or checker code.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chore_sched/core.hpp"

namespace chore_sched::testing {

inline bool intervals_overlap(const Chore& a, const Chore& b) {
  return a.start < b.finish && b.start < a.finish;
}

/// No agent holds two chores that share a moment of time.
inline bool naive_feasible(const Instance& inst, const std::vector<AgentId>& owner) {
  const auto& cs = inst.chores();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (owner[i] >= 0 && owner[i] == owner[j] && intervals_overlap(cs[i], cs[j])) return false;
    }
  }
  return true;
}

inline bool naive_maximal(const Instance& inst, const std::vector<AgentId>& owner) {
  if (!naive_feasible(inst, owner)) return false;
  const auto& cs = inst.chores();
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (owner[c] >= 0) continue;
    for (AgentId a = 0; a < static_cast<AgentId>(inst.agent_count()); ++a) {
      bool free = true;
      for (std::size_t d = 0; d < cs.size(); ++d) {
        if (owner[d] == a && intervals_overlap(cs[c], cs[d])) free = false;
      }
      if (free) return false;
    }
  }
  return true;
}

/// All (n+1)^m owner vectors, lexicographic with -1 first, kept if maximal.
inline std::vector<std::vector<AgentId>> naive_maximal_schedules(const Instance& inst) {
  const std::size_t m = inst.chore_count();
  const auto n = static_cast<AgentId>(inst.agent_count());
  std::vector<AgentId> owner(m, -1);
  std::vector<std::vector<AgentId>> out;
  while (true) {
    if (naive_maximal(inst, owner)) out.push_back(owner);
    std::size_t pos = m;
    while (pos > 0 && owner[pos - 1] == n - 1) {
      owner[pos - 1] = -1;
      --pos;
    }
    if (pos == 0) break;
    ++owner[pos - 1];
  }
  return out;
}

inline std::vector<std::vector<ChoreId>> owner_bundles(const std::vector<AgentId>& owner,
                                                       std::size_t n) {
  std::vector<std::vector<ChoreId>> b(n);
  for (std::size_t c = 0; c < owner.size(); ++c) {
    if (owner[c] >= 0) b[static_cast<std::size_t>(owner[c])].push_back(static_cast<ChoreId>(c));
  }
  return b;
}

/// Fewest chores agent i must drop to stop envying `other`, by trying every
/// subset of its bundle.
inline std::size_t naive_removals(const Instance& inst, const std::vector<std::vector<ChoreId>>& b,
                                  AgentId i, AgentId other) {
  const auto& own = b[static_cast<std::size_t>(i)];
  const Value target = inst.value(i, b[static_cast<std::size_t>(other)]);
  std::size_t best = own.size();
  for (std::uint32_t mask = 0; mask < (1u << own.size()); ++mask) {
    std::vector<ChoreId> kept;
    std::size_t dropped = 0;
    for (std::size_t t = 0; t < own.size(); ++t) {
      if (mask & (1u << t)) {
        ++dropped;
      } else {
        kept.push_back(own[t]);
      }
    }
    if (dropped < best && inst.value(i, kept) >= target) best = dropped;
  }
  return best;
}

inline bool naive_efk(const Instance& inst, const std::vector<AgentId>& owner, std::size_t k) {
  const auto b = owner_bundles(owner, inst.agent_count());
  for (AgentId i = 0; i < static_cast<AgentId>(inst.agent_count()); ++i) {
    for (AgentId o = 0; o < static_cast<AgentId>(inst.agent_count()); ++o) {
      if (i != o && naive_removals(inst, b, i, o) > k) return false;
    }
  }
  return true;
}

inline bool naive_efx(const Instance& inst, const std::vector<AgentId>& owner) {
  const auto b = owner_bundles(owner, inst.agent_count());
  for (AgentId i = 0; i < static_cast<AgentId>(inst.agent_count()); ++i) {
    const auto& own = b[static_cast<std::size_t>(i)];
    for (AgentId o = 0; o < static_cast<AgentId>(inst.agent_count()); ++o) {
      if (i == o) continue;
      const Value target = inst.value(i, b[static_cast<std::size_t>(o)]);
      if (inst.value(i, own) >= target) continue;
      for (std::size_t t = 0; t < own.size(); ++t) {
        std::vector<ChoreId> rest = own;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        if (inst.value(i, rest) < target) return false;
      }
    }
  }
  return true;
}

/// Random chores on [0, 2m) with lengths up to max_len.
inline std::vector<Chore> random_chores(std::mt19937_64& rng, std::size_t m, TimePoint max_len) {
  std::uniform_int_distribution<TimePoint> start(0, static_cast<TimePoint>(2 * m));
  std::uniform_int_distribution<TimePoint> len(1, max_len);
  std::vector<Chore> cs;
  for (std::size_t j = 0; j < m; ++j) {
    const TimePoint s = start(rng);
    cs.push_back(Chore{static_cast<ChoreId>(j), s, s + len(rng), {}});
  }
  return cs;
}

inline ValuationProfile::Table random_values(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                             Value lo, Value hi, bool identical) {
  std::uniform_int_distribution<Value> v(lo, hi);
  ValuationProfile::Table t(n, std::vector<Value>(m));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < m; ++c) t[a][c] = (identical && a) ? t[0][c] : v(rng);
  }
  return t;
}

inline Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                bool identical = false) {
  std::uniform_int_distribution<TimePoint> len(1, std::max<TimePoint>(2, static_cast<TimePoint>(m)));
  auto chores = random_chores(rng, m, len(rng));
  return Instance(n, std::move(chores),
                  ValuationProfile::additive(random_values(rng, n, m, -10, 0, identical)));
}

/// Monotone but not additive: -(weight of the bundle)^2 with per-agent weights.
inline ValuationProfile squared_profile(std::vector<std::vector<Value>> weights) {
  const std::size_t n = weights.size();
  const std::size_t m = weights.front().size();
  return ValuationProfile::monotone(
      n, m, [w = std::move(weights)](AgentId a, std::span<const ChoreId> bundle) -> Value {
        Value s = 0;
        for (ChoreId c : bundle) s += w[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
        return -s * s;
      });
}

}  // namespace chore_sched::testing
