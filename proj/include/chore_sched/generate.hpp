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

// Seeded random instances for testing and the CLI.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "chore_sched/core.hpp"

namespace chore_sched {

enum class InstanceKind { kRandomIntervals, kRandomPath, kRandomDichotomousPath, kBoundedComponents };

inline std::optional<InstanceKind> parse_instance_kind(std::string_view text) {
  if (text == "random-intervals") return InstanceKind::kRandomIntervals;
  if (text == "random-path") return InstanceKind::kRandomPath;
  if (text == "random-dichotomous-path") return InstanceKind::kRandomDichotomousPath;
  if (text == "bounded-components") return InstanceKind::kBoundedComponents;
  return std::nullopt;
}

struct GeneratorParams {
  std::size_t agents = 2;
  std::size_t chores = 6;
  Value min_value = -10;
  Value max_value = 0;
  /// Largest component for bounded-components; 0 means "agents".
  std::size_t max_component = 0;
  /// Longest interval for random-intervals; 0 picks a length scaled to m.
  TimePoint max_length = 0;
};

namespace detail {

inline void require_params(bool ok, const std::string& what) {
  if (!ok) throw InputError(ErrorCode::kMalformedInput, "generator: " + what);
}

inline ValuationProfile::Table random_table(std::mt19937_64& rng, const GeneratorParams& p,
                                            bool identical) {
  std::uniform_int_distribution<Value> dist(p.min_value, p.max_value);
  ValuationProfile::Table table(p.agents, std::vector<Value>(p.chores));
  for (std::size_t a = 0; a < p.agents; ++a) {
    for (std::size_t c = 0; c < p.chores; ++c) {
      table[a][c] = (identical && a > 0) ? table[0][c] : dist(rng);
    }
  }
  return table;
}

inline std::vector<Chore> random_intervals(std::mt19937_64& rng, std::size_t m,
                                           TimePoint max_length) {
  const auto horizon = static_cast<TimePoint>(2 * m);
  const TimePoint longest = max_length > 0 ? max_length : std::max<TimePoint>(2, horizon / 3);
  std::uniform_int_distribution<TimePoint> start_dist(0, horizon - 1);
  std::uniform_int_distribution<TimePoint> length_dist(1, longest);
  std::vector<Chore> chores;
  for (std::size_t j = 0; j < m; ++j) {
    const TimePoint start = start_dist(rng);
    chores.push_back({static_cast<ChoreId>(j), start, start + length_dist(rng), {}});
  }
  return chores;
}

/// Connected interval components of at most `cap` chores, laid out left to
/// right with gaps between them.
inline std::vector<Chore> bounded_components(std::mt19937_64& rng, std::size_t m, std::size_t cap) {
  std::vector<Chore> chores;
  TimePoint base = 0;
  std::uniform_int_distribution<std::size_t> size_dist(1, cap);
  std::uniform_int_distribution<TimePoint> length_dist(1, 4);
  while (chores.size() < m) {
    const std::size_t size = std::min(size_dist(rng), m - chores.size());
    TimePoint end = base;
    for (std::size_t k = 0; k < size; ++k) {
      TimePoint start = base;
      if (k > 0) {
        // start inside the span covered so far, so the component stays connected
        std::uniform_int_distribution<TimePoint> at(base, end - 1);
        start = at(rng);
      }
      const TimePoint finish = start + length_dist(rng);
      chores.push_back({static_cast<ChoreId>(chores.size()), start, finish, {}});
      end = std::max(end, finish);
    }
    base = end + 1;
  }
  return chores;
}

}  // namespace detail

/// Deterministic for a fixed (kind, params, seed).
inline Instance generate_instance(InstanceKind kind, const GeneratorParams& p, std::uint64_t seed) {
  detail::require_params(p.agents >= 1, "need at least one agent");
  detail::require_params(p.chores >= 1, "need at least one chore");
  detail::require_params(p.min_value <= p.max_value, "empty value range");
  detail::require_params(p.max_value <= 0, "chores have non-positive values");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case InstanceKind::kRandomIntervals: {
      auto chores = detail::random_intervals(rng, p.chores, p.max_length);
      auto table = detail::random_table(rng, p, false);
      return Instance(p.agents, std::move(chores), ValuationProfile::additive(std::move(table)));
    }
    case InstanceKind::kRandomPath:
      return path_instance(detail::random_table(rng, p, false));
    case InstanceKind::kRandomDichotomousPath: {
      detail::require_params(p.chores >= 2, "a dichotomous path needs two chores");
      detail::require_params(p.min_value < p.max_value, "a dichotomous profile needs two values");
      std::uniform_int_distribution<Value> dist(p.min_value, p.max_value);
      Value heavy = dist(rng);
      Value light = dist(rng);
      while (light == heavy) light = dist(rng);
      if (heavy > light) std::swap(heavy, light);
      std::bernoulli_distribution coin(0.5);
      std::vector<Value> row(p.chores);
      for (auto& v : row) v = coin(rng) ? heavy : light;
      // both values must occur
      std::uniform_int_distribution<std::size_t> pos(0, p.chores - 1);
      const std::size_t h = pos(rng);
      std::size_t l = pos(rng);
      while (l == h) l = pos(rng);
      row[h] = heavy;
      row[l] = light;
      return path_instance(ValuationProfile::Table(p.agents, row));
    }
    case InstanceKind::kBoundedComponents: {
      const std::size_t cap = p.max_component == 0 ? p.agents : p.max_component;
      detail::require_params(cap <= p.agents, "component size " + std::to_string(cap) +
                                                  " exceeds the " + std::to_string(p.agents) +
                                                  " agents");
      auto chores = detail::bounded_components(rng, p.chores, cap);
      auto table = detail::random_table(rng, p, true);
      return Instance(p.agents, std::move(chores), ValuationProfile::additive(std::move(table)));
    }
  }
  throw InputError(ErrorCode::kMalformedInput, "generator: unknown kind");
}

}  // namespace chore_sched
