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

// Solvers for any number of agents under identical valuations.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chore_sched/checkers.hpp"
#include "chore_sched/core.hpp"

namespace chore_sched {

/// Directed envy relation: an edge i -> k means agent i envies agent k.
class EnvyGraph {
 public:
  EnvyGraph() = default;
  explicit EnvyGraph(std::size_t agents) : n_(agents), edge_(agents * agents, 0) {}

  std::size_t agent_count() const noexcept { return n_; }

  void add_edge(AgentId from, AgentId to) { edge_[index(from, to)] = 1; }
  bool envies(AgentId from, AgentId to) const { return edge_[index(from, to)] != 0; }

  std::vector<std::pair<AgentId, AgentId>> edges() const {
    std::vector<std::pair<AgentId, AgentId>> out;
    for (AgentId i = 0; i < static_cast<AgentId>(n_); ++i) {
      for (AgentId k = 0; k < static_cast<AgentId>(n_); ++k) {
        if (envies(i, k)) out.emplace_back(i, k);
      }
    }
    return out;
  }

  /// Kahn's algorithm, lowest ready id first. Sources (agents nobody envies)
  /// come first. Empty when the graph has a cycle.
  std::optional<std::vector<AgentId>> topological_order() const {
    std::vector<int> indegree(n_, 0);
    for (const auto& [from, to] : edges()) ++indegree[static_cast<std::size_t>(to)];
    std::set<AgentId> ready;
    for (AgentId a = 0; a < static_cast<AgentId>(n_); ++a) {
      if (indegree[static_cast<std::size_t>(a)] == 0) ready.insert(a);
    }
    std::vector<AgentId> order;
    while (!ready.empty()) {
      const AgentId a = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(a);
      for (AgentId k = 0; k < static_cast<AgentId>(n_); ++k) {
        if (envies(a, k) && --indegree[static_cast<std::size_t>(k)] == 0) ready.insert(k);
      }
    }
    if (order.size() != n_) return std::nullopt;
    return order;
  }

  bool is_acyclic() const { return topological_order().has_value(); }

 private:
  std::size_t index(AgentId from, AgentId to) const {
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= n_ ||
        static_cast<std::size_t>(to) >= n_) {
      throw InputError(ErrorCode::kUnknownId, "envy graph agent out of range");
    }
    return static_cast<std::size_t>(from) * n_ + static_cast<std::size_t>(to);
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> edge_;
};

inline EnvyGraph envy_graph(const Schedule& s, const Instance& inst) {
  require_compatible(s, inst);
  const auto bundles = s.bundles();
  EnvyGraph g(inst.agent_count());
  for (AgentId i = 0; i < static_cast<AgentId>(bundles.size()); ++i) {
    const Value own = inst.value(i, bundles[static_cast<std::size_t>(i)]);
    for (AgentId k = 0; k < static_cast<AgentId>(bundles.size()); ++k) {
      if (k != i && own < inst.value(i, bundles[static_cast<std::size_t>(k)])) g.add_edge(i, k);
    }
  }
  return g;
}

/// A pair (or the one triple) of agents that picks as a unit.
struct MetaAgent {
  int index = 0;
  std::vector<AgentId> members;
  std::vector<ChoreId> picks;  // original chores, in pick order
  std::size_t dummy_heavy = 0;
  std::size_t dummy_light = 0;
};

namespace detail {

inline bool is_heavy(const Instance& inst, ChoreId c, Value heavy) {
  return inst.valuations().value(0, c) == heavy;
}

inline Value heavy_value(const Instance& inst) {
  const auto d = inst.valuations().dichotomy(true);
  if (!d) {
    throw InvariantViolation("split called on a bundle whose instance is not dichotomous");
  }
  return d->heavy;
}

/// Components of the subgraph induced by `picked`, each in walk order
/// (starting from the end with the smaller start time).
inline std::vector<std::vector<ChoreId>> induced_paths(std::span<const ChoreId> picked,
                                                       const Instance& inst,
                                                       std::size_t max_size) {
  const ConflictGraph& g = inst.graph();
  std::vector<ChoreId> members(picked.begin(), picked.end());
  std::sort(members.begin(), members.end());
  auto inside = [&](ChoreId c) { return std::binary_search(members.begin(), members.end(), c); };
  auto inner_neighbors = [&](ChoreId c) {
    std::vector<ChoreId> out;
    for (ChoreId w : g.neighbors(c)) {
      if (inside(w)) out.push_back(w);
    }
    return out;
  };
  std::vector<bool> seen(inst.chore_count(), false);
  std::vector<std::vector<ChoreId>> out;
  for (ChoreId c : members) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    std::vector<ChoreId> comp{c};
    seen[static_cast<std::size_t>(c)] = true;
    for (std::size_t at = 0; at < comp.size(); ++at) {
      const auto nb = inner_neighbors(comp[at]);
      if (nb.size() > 2) throw InvariantViolation("picked chores do not induce a union of paths");
      for (ChoreId w : nb) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          comp.push_back(w);
        }
      }
    }
    if (comp.size() > max_size) {
      throw InvariantViolation("picked chores contain a path of " + std::to_string(comp.size()) +
                               " chores; at most " + std::to_string(max_size) + " allowed");
    }
    std::vector<ChoreId> ends;
    for (ChoreId v : comp) {
      if (inner_neighbors(v).size() <= 1) ends.push_back(v);
    }
    if (ends.empty()) throw InvariantViolation("picked chores induce a cycle");
    const ChoreId start = *std::min_element(ends.begin(), ends.end(), [&](ChoreId a, ChoreId b) {
      return std::pair(inst.chore(a).start, a) < std::pair(inst.chore(b).start, b);
    });
    std::vector<ChoreId> walk{start};
    ChoreId prev = -1;
    while (walk.size() < comp.size()) {
      for (ChoreId w : inner_neighbors(walk.back())) {
        if (w != prev) {
          prev = walk.back();
          walk.push_back(w);
          break;
        }
      }
    }
    out.push_back(std::move(walk));
  }
  return out;
}

inline bool flagged(const std::vector<bool>& dummy, ChoreId c) {
  return static_cast<std::size_t>(c) < dummy.size() && dummy[static_cast<std::size_t>(c)];
}

}  // namespace detail

/// Splits a pair meta-agent's chores into two conflict-free halves with equal
/// heavy and equal light counts. The chores must induce disjoint heavy-light
/// edges plus isolated chores. Chores flagged in `dummy` must be isolated;
/// they are placed so that the real chores of the two halves differ by at
/// most one per type and one overall.
inline std::array<std::vector<ChoreId>, 2> split_pair_bundle(std::span<const ChoreId> picked,
                                                             const Instance& inst,
                                                             const std::vector<bool>& dummy = {}) {
  const Value heavy = detail::heavy_value(inst);
  auto heavy_of = [&](ChoreId c) { return detail::is_heavy(inst, c, heavy); };
  const auto comps = detail::induced_paths(picked, inst, 2);
  std::vector<std::pair<ChoreId, ChoreId>> edges;  // (heavy, light)
  std::array<std::vector<ChoreId>, 2> real_iso, dummy_iso;  // [heavy?]
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      (detail::flagged(dummy, comp[0]) ? dummy_iso : real_iso)[heavy_of(comp[0]) ? 1 : 0].push_back(
          comp[0]);
      continue;
    }
    if (detail::flagged(dummy, comp[0]) || detail::flagged(dummy, comp[1])) {
      throw InvariantViolation("dummy chore has a conflict");
    }
    const bool h0 = heavy_of(comp[0]);
    if (h0 == heavy_of(comp[1])) {
      throw InvariantViolation("pair bundle contains two adjacent chores of one type");
    }
    edges.emplace_back(h0 ? comp[0] : comp[1], h0 ? comp[1] : comp[0]);
  }
  const std::size_t x = edges.size();
  const std::size_t total_h = x + real_iso[1].size() + dummy_iso[1].size();
  const std::size_t total_l = x + real_iso[0].size() + dummy_iso[0].size();
  if (total_h % 2 != 0 || total_l % 2 != 0) {
    throw InvariantViolation("pair bundle has an odd number of heavy or light chores");
  }
  auto gap = [](std::size_t p, std::size_t q) { return p > q ? p - q : q - p; };

  // Edge orientation: the first ceil(x/2) edges put their heavy chore on side
  // a. Other counts are tried only if the isolated chores cannot balance it.
  std::vector<std::size_t> heavy_on_a;
  for (std::size_t d = 0; d <= x; ++d) {
    const std::size_t up = (x + 1) / 2 + d;
    if (up <= x) heavy_on_a.push_back(up);
    if (d > 0 && d <= (x + 1) / 2) heavy_on_a.push_back((x + 1) / 2 - d);
  }
  for (std::size_t ea : heavy_on_a) {
    for (std::size_t rh = 0; rh <= real_iso[1].size(); ++rh) {
      for (std::size_t rl = 0; rl <= real_iso[0].size(); ++rl) {
        const std::size_t ha = ea + rh, la = (x - ea) + rl;
        const std::size_t hb = (x - ea) + real_iso[1].size() - rh, lb = ea + real_iso[0].size() - rl;
        if (ha > total_h / 2 || la > total_l / 2 || hb > total_h / 2 || lb > total_l / 2) continue;
        if (gap(ha, hb) > 1 || gap(la, lb) > 1 || gap(ha + la, hb + lb) > 1) continue;
        std::array<std::vector<ChoreId>, 2> side;
        for (std::size_t e = 0; e < x; ++e) {
          side[e < ea ? 0 : 1].push_back(edges[e].first);
          side[e < ea ? 1 : 0].push_back(edges[e].second);
        }
        for (std::size_t t = 0; t < real_iso[1].size(); ++t) side[t < rh ? 0 : 1].push_back(real_iso[1][t]);
        for (std::size_t t = 0; t < real_iso[0].size(); ++t) side[t < rl ? 0 : 1].push_back(real_iso[0][t]);
        const std::size_t dha = total_h / 2 - ha, dla = total_l / 2 - la;
        for (std::size_t t = 0; t < dummy_iso[1].size(); ++t) side[t < dha ? 0 : 1].push_back(dummy_iso[1][t]);
        for (std::size_t t = 0; t < dummy_iso[0].size(); ++t) side[t < dla ? 0 : 1].push_back(dummy_iso[0][t]);
        for (auto& half : side) std::sort(half.begin(), half.end());
        return side;
      }
    }
  }
  throw InvariantViolation("pair bundle admits no balanced conflict-free split");
}

namespace detail {

class TripleSplitter {
 public:
  TripleSplitter(const Instance& inst, std::span<const ChoreId> picked,
                 const std::vector<bool>& dummy)
      : inst_(inst), heavy_(heavy_value(inst)) {
    std::array<int, 2> total{};
    for (auto& comp : induced_paths(picked, inst, 4)) {
      for (ChoreId c : comp) ++total[type(c)];
      const bool has_dummy =
          std::any_of(comp.begin(), comp.end(), [&](ChoreId c) { return flagged(dummy, c); });
      if (has_dummy && comp.size() > 1) throw InvariantViolation("dummy chore has a conflict");
      if (has_dummy) {
        fillers_.push_back(comp[0]);
      } else {
        pieces_.push_back(std::move(comp));
      }
    }
    if (total[0] % 3 != 0 || total[1] % 3 != 0) {
      throw InvariantViolation("triple bundle counts are not multiples of three");
    }
    share_ = {total[0] / 3, total[1] / 3};
    for (const auto& piece : pieces_) labelings_.push_back(proper_labelings(piece.size()));
  }

  std::array<std::vector<ChoreId>, 3> run() {
    // First keep every pair of agents within one chore per type after each
    // path; only drop that if it dead-ends.
    for (int mode = 0; mode < 2; ++mode) {
      mode_ = mode;
      failed_.clear();
      Counts counts{};
      std::vector<std::size_t> chosen(pieces_.size());
      if (search(0, counts, chosen)) return assemble(chosen);
    }
    throw InvariantViolation("triple bundle admits no balanced conflict-free split");
  }

 private:
  using Counts = std::array<std::array<int, 3>, 2>;  // [heavy?][agent]

  int type(ChoreId c) const { return is_heavy(inst_, c, heavy_) ? 1 : 0; }

  static std::vector<std::vector<int>> proper_labelings(std::size_t len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    while (true) {
      bool ok = true;
      for (std::size_t t = 1; t < len; ++t) ok = ok && cur[t] != cur[t - 1];
      if (ok) out.push_back(cur);
      std::size_t pos = len;
      while (pos > 0 && cur[pos - 1] == 2) cur[--pos] = 0;
      if (pos == 0) break;
      ++cur[pos - 1];
    }
    return out;
  }

  static int spread(const std::array<int, 3>& row) {
    return *std::max_element(row.begin(), row.end()) - *std::min_element(row.begin(), row.end());
  }

  /// Real chores balanced per type and overall, and the dummies can top
  /// every agent up to an equal share.
  bool complete(const Counts& c) const {
    const std::array<int, 3> sum{c[0][0] + c[1][0], c[0][1] + c[1][1], c[0][2] + c[1][2]};
    if (spread(c[0]) > 1 || spread(c[1]) > 1 || spread(sum) > 1) return false;
    for (std::size_t t = 0; t < 2; ++t) {
      for (int have : c[t]) {
        if (have > share_[t]) return false;
      }
    }
    return true;
  }

  bool search(std::size_t at, const Counts& counts, std::vector<std::size_t>& chosen) {
    if (at == pieces_.size()) return complete(counts);
    const auto key = std::pair(at, counts);
    if (failed_.count(key)) return false;
    for (std::size_t li = 0; li < labelings_[at].size(); ++li) {
      const auto& lab = labelings_[at][li];
      Counts next = counts;
      for (std::size_t t = 0; t < lab.size(); ++t) {
        ++next[static_cast<std::size_t>(type(pieces_[at][t]))][static_cast<std::size_t>(lab[t])];
      }
      if (mode_ == 0 && (spread(next[0]) > 1 || spread(next[1]) > 1)) continue;
      chosen[at] = li;
      if (search(at + 1, next, chosen)) return true;
    }
    failed_.insert(key);
    return false;
  }

  std::array<std::vector<ChoreId>, 3> assemble(const std::vector<std::size_t>& chosen) const {
    std::array<std::vector<ChoreId>, 3> out;
    Counts counts{};
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
      const auto& lab = labelings_[p][chosen[p]];
      for (std::size_t t = 0; t < lab.size(); ++t) {
        const ChoreId c = pieces_[p][t];
        out[static_cast<std::size_t>(lab[t])].push_back(c);
        ++counts[static_cast<std::size_t>(type(c))][static_cast<std::size_t>(lab[t])];
      }
    }
    for (ChoreId c : fillers_) {
      auto& row = counts[static_cast<std::size_t>(type(c))];
      const auto to = static_cast<std::size_t>(std::min_element(row.begin(), row.end()) - row.begin());
      ++row[to];
      out[to].push_back(c);
    }
    for (auto& b : out) std::sort(b.begin(), b.end());
    return out;
  }

  const Instance& inst_;
  Value heavy_;
  int mode_ = 0;
  std::array<int, 2> share_{};
  std::vector<std::vector<ChoreId>> pieces_;
  std::vector<ChoreId> fillers_;
  std::vector<std::vector<std::vector<int>>> labelings_;
  std::set<std::pair<std::size_t, Counts>> failed_;
};

}  // namespace detail

/// Splits the triple meta-agent's chores three ways with equal heavy and
/// equal light counts, no conflicts inside a part. The chores must induce
/// paths of at most four chores. Chores flagged in `dummy` must be isolated;
/// they top up the parts after the real chores are balanced to within one
/// per type and one overall.
inline std::array<std::vector<ChoreId>, 3> split_triple_bundle(std::span<const ChoreId> picked,
                                                               const Instance& inst,
                                                               const std::vector<bool>& dummy = {}) {
  return detail::TripleSplitter(inst, picked, dummy).run();
}

struct DichotomousPathTrace {
  std::vector<MetaAgent> meta;
  /// The input chores followed by the dummy chores, which sit far to the
  /// right as isolated unit intervals.
  Instance padded;
  std::vector<bool> dummy;  // per padded chore
  Schedule padded_schedule;
  Schedule schedule;
};

namespace detail {

inline std::vector<MetaAgent> group_agents(std::size_t n) {
  std::vector<MetaAgent> meta;
  AgentId next = 0;
  if (n % 2 == 1) {
    meta.push_back({0, {0, 1, 2}, {}, 0, 0});
    next = 3;
  }
  while (static_cast<std::size_t>(next) < n) {
    meta.push_back({static_cast<int>(meta.size()), {next, next + 1}, {}, 0, 0});
    next += 2;
  }
  return meta;
}

/// <S_1..S_k, S_1..S_k>, plus a closing S_1 when S_1 is the triple.
inline std::vector<int> picking_sequence(const std::vector<MetaAgent>& meta) {
  std::vector<int> seq;
  for (int round = 0; round < 2; ++round) {
    for (const auto& s : meta) seq.push_back(s.index);
  }
  if (meta.front().members.size() == 3) seq.push_back(0);
  return seq;
}

inline void require_identical_additive(const Instance& inst) {
  if (!inst.valuations().is_additive()) {
    throw InputError(ErrorCode::kNotAdditive, "solver needs an additive valuation table");
  }
  if (!inst.valuations().is_identical()) {
    throw InputError(ErrorCode::kNotIdentical, "solver needs identical valuations");
  }
}

}  // namespace detail

inline DichotomousPathTrace solve_identical_dichotomous_path_traced(
    const Instance& inst, bool allow_single_value = false) {
  const std::size_t n = inst.agent_count();
  const std::size_t m = inst.chore_count();
  if (n < 4) {
    throw InputError(ErrorCode::kWrongAgentCount,
                     "dichotomous path solver needs at least 4 agents, got " + std::to_string(n));
  }
  if (!inst.graph().is_path()) {
    throw InputError(ErrorCode::kNotPathGraph, "conflict graph is not a single path");
  }
  detail::require_identical_additive(inst);
  DichotomousPathTrace trace;
  trace.meta = detail::group_agents(n);
  if (m == 0) {
    trace.padded = inst;
    trace.padded_schedule = Schedule(n, 0);
    trace.schedule = Schedule(n, 0);
    return trace;
  }
  const auto d = inst.valuations().dichotomy(allow_single_value);
  if (!d) {
    throw InputError(ErrorCode::kNotDichotomous,
                     "valuations must take exactly two distinct values");
  }

  // Weighted round robin: leftmost remaining chore of the phase's type.
  const auto seq = detail::picking_sequence(trace.meta);
  const auto& order = inst.graph().path_orders().front();
  std::size_t turn = 0;
  for (const bool heavy_phase : {true, false}) {
    for (ChoreId c : order) {
      if (detail::is_heavy(inst, c, d->heavy) != heavy_phase) continue;
      trace.meta[static_cast<std::size_t>(seq[turn])].picks.push_back(c);
      turn = (turn + 1) % seq.size();
    }
  }

  // Pad every meta agent to the same number of rounds per type.
  std::array<std::size_t, 2> rounds{};  // [heavy?]
  for (const auto& s : trace.meta) {
    std::array<std::size_t, 2> have{};
    for (ChoreId c : s.picks) ++have[detail::is_heavy(inst, c, d->heavy) ? 1 : 0];
    for (std::size_t t = 0; t < 2; ++t) {
      rounds[t] = std::max(rounds[t], (have[t] + s.members.size() - 1) / s.members.size());
    }
  }
  std::vector<Chore> chores = inst.chores();
  std::vector<Value> row = inst.valuations().table().front();
  TimePoint horizon = 0;
  for (const auto& c : chores) horizon = std::max(horizon, c.finish);
  std::vector<std::vector<ChoreId>> padded_bundles(trace.meta.size());
  for (auto& s : trace.meta) {
    std::array<std::size_t, 2> have{};
    for (ChoreId c : s.picks) ++have[detail::is_heavy(inst, c, d->heavy) ? 1 : 0];
    padded_bundles[static_cast<std::size_t>(s.index)] = s.picks;
    for (std::size_t t = 0; t < 2; ++t) {
      const std::size_t extra = rounds[t] * s.members.size() - have[t];
      (t == 1 ? s.dummy_heavy : s.dummy_light) = extra;
      for (std::size_t e = 0; e < extra; ++e) {
        const auto id = static_cast<ChoreId>(chores.size());
        const TimePoint at = horizon + 1 + 2 * static_cast<TimePoint>(chores.size());
        chores.push_back({id, at, at + 1, "dummy"});
        row.push_back(t == 1 ? d->heavy : d->light);
        padded_bundles[static_cast<std::size_t>(s.index)].push_back(id);
      }
    }
  }
  trace.dummy.assign(chores.size(), false);
  std::fill(trace.dummy.begin() + static_cast<std::ptrdiff_t>(m), trace.dummy.end(), true);
  trace.padded = Instance(n, chores, ValuationProfile::additive(ValuationProfile::Table(n, row)));

  // Split each meta agent's chores among its members.
  trace.padded_schedule = Schedule(n, trace.padded.chore_count());
  for (const auto& s : trace.meta) {
    const auto& bundle = padded_bundles[static_cast<std::size_t>(s.index)];
    std::vector<std::vector<ChoreId>> parts;
    if (s.members.size() == 2) {
      const auto split = split_pair_bundle(bundle, trace.padded, trace.dummy);
      parts.assign(split.begin(), split.end());
    } else {
      const auto split = split_triple_bundle(bundle, trace.padded, trace.dummy);
      parts.assign(split.begin(), split.end());
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (ChoreId c : parts[p]) trace.padded_schedule.assign(c, s.members[p]);
    }
  }
  if (!is_feasible(trace.padded_schedule, trace.padded.graph()) ||
      !is_complete(trace.padded_schedule) || !check_ef(trace.padded_schedule, trace.padded).holds) {
    throw InvariantViolation("padded schedule is not a complete envy-free schedule");
  }

  trace.schedule = Schedule(n, m);
  for (ChoreId c = 0; c < static_cast<ChoreId>(m); ++c) {
    trace.schedule.assign(c, *trace.padded_schedule.owner(c));
  }
  if (!check_ef1(trace.schedule, inst).holds) {
    throw InvariantViolation("removing dummy chores broke EF1");
  }
  return trace;
}

/// Complete EF1 schedule for n >= 4 agents with identical two-valued
/// valuations on a path.
inline Schedule solve_identical_dichotomous_path(const Instance& inst,
                                                 bool allow_single_value = false) {
  return solve_identical_dichotomous_path_traced(inst, allow_single_value).schedule;
}

struct BoundedComponentsTrace {
  /// Schedule before each component and after the last one.
  std::vector<Schedule> steps;
  /// Envy graph of each entry of `steps`.
  std::vector<EnvyGraph> envy;
  /// Picking order used for each component.
  std::vector<std::vector<AgentId>> orders;
  Schedule schedule;
};

/// Component by component: agents nobody envies (the worst off) come first
/// in the envy graph's topological order. A component with c chores gives
/// nothing to the first n - c agents and deals its chores to the rest, the
/// least disliked chore first.
inline BoundedComponentsTrace solve_identical_bounded_components_traced(const Instance& inst) {
  detail::require_identical_additive(inst);
  const std::size_t n = inst.agent_count();
  const auto& components = inst.graph().components();
  for (const auto& comp : components) {
    if (comp.size() > n) {
      throw InputError(ErrorCode::kOversizedComponent,
                       "component of " + std::to_string(comp.size()) + " chores exceeds " +
                           std::to_string(n) + " agents");
    }
  }
  BoundedComponentsTrace trace;
  Schedule s(n, inst.chore_count());
  auto record = [&] {
    EnvyGraph g = envy_graph(s, inst);
    if (!g.is_acyclic()) throw InvariantViolation("envy graph has a cycle");
    trace.steps.push_back(s);
    trace.envy.push_back(std::move(g));
  };
  record();
  const auto& row = inst.valuations().table().front();
  for (const auto& comp : components) {
    auto order = *trace.envy.back().topological_order();
    std::vector<ChoreId> chores = comp;
    std::stable_sort(chores.begin(), chores.end(), [&](ChoreId a, ChoreId b) {
      return row[static_cast<std::size_t>(a)] > row[static_cast<std::size_t>(b)];
    });
    const std::size_t skip = n - chores.size();
    for (std::size_t t = 0; t < chores.size(); ++t) s.assign(chores[t], order[skip + t]);
    trace.orders.push_back(std::move(order));
    record();
  }
  trace.schedule = s;
  return trace;
}

/// EF1 and maximal for identical additive valuations when every conflict
/// component has at most n chores.
inline Schedule solve_identical_bounded_components(const Instance& inst) {
  return solve_identical_bounded_components_traced(inst).schedule;
}

}  // namespace chore_sched
