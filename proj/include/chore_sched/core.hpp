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

// Instances, conflict graphs, schedules and valuation profiles shared by
// every solver and checker in the library.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chore_sched {

using Value = std::int64_t;
using AgentId = int;
using ChoreId = int;
using TimePoint = std::int64_t;

/// Distinguishes the ways a caller can hand us something we refuse to work on.
enum class ErrorCode {
  kMalformedInput,
  kUnknownId,
  kInfeasibleSchedule,
  kGuardExceeded,
  kWrongAgentCount,
  kNotPathGraph,
  kNotIdentical,
  kNotDichotomous,
  kOversizedComponent,
  kNotAdditive,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  InputError(ErrorCode code, const std::string& what) : Error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// An internal postcondition failed. Always a bug; the CLI maps it to exit 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

struct Chore {
  ChoreId id = 0;
  TimePoint start = 0;
  TimePoint finish = 1;
  std::string label;

  /// Half-open overlap: [a,b) and [b,c) are compatible.
  bool overlaps(const Chore& other) const noexcept {
    return start < other.finish && other.start < finish;
  }
  bool operator==(const Chore&) const = default;
};

/// Valuations are either an additive table (the common case, serialisable)
/// or an arbitrary monotone evaluator over chore sets.
class ValuationProfile {
 public:
  using Table = std::vector<std::vector<Value>>;
  using Oracle = std::function<Value(AgentId, std::span<const ChoreId>)>;

  struct Dichotomy {
    Value heavy;  // H < L <= 0
    Value light;
  };

  ValuationProfile() = default;

  static ValuationProfile additive(Table table) {
    ValuationProfile p;
    if (table.empty()) {
      throw InputError(ErrorCode::kMalformedInput, "valuation table has no agents");
    }
    const std::size_t m = table.front().size();
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i].size() != m) {
        throw InputError(ErrorCode::kMalformedInput,
                         "valuation row " + std::to_string(i) + " has " +
                             std::to_string(table[i].size()) + " entries, expected " +
                             std::to_string(m));
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (table[i][j] > 0) {
          throw InputError(ErrorCode::kMalformedInput,
                           "valuation[" + std::to_string(i) + "][" + std::to_string(j) +
                               "] is positive; chores must be valued <= 0");
        }
      }
    }
    p.agents_ = table.size();
    p.chores_ = m;
    p.table_ = std::make_shared<const Table>(std::move(table));
    return p;
  }

  static ValuationProfile monotone(std::size_t agents, std::size_t chores, Oracle oracle) {
    if (agents == 0) throw InputError(ErrorCode::kMalformedInput, "profile needs an agent");
    if (!oracle) throw InputError(ErrorCode::kMalformedInput, "empty valuation oracle");
    ValuationProfile p;
    p.agents_ = agents;
    p.chores_ = chores;
    p.oracle_ = std::make_shared<const Oracle>(std::move(oracle));
    return p;
  }

  std::size_t agent_count() const noexcept { return agents_; }
  std::size_t chore_count() const noexcept { return chores_; }
  bool is_additive() const noexcept { return table_ != nullptr; }

  const Table& table() const {
    if (!table_) throw InputError(ErrorCode::kNotAdditive, "profile is not additive");
    return *table_;
  }

  Value value(AgentId agent, std::span<const ChoreId> bundle) const {
    if (table_) {
      const auto& row = (*table_)[static_cast<std::size_t>(agent)];
      Value total = 0;
      for (ChoreId c : bundle) total += row[static_cast<std::size_t>(c)];
      return total;
    }
    if (bundle.empty()) return 0;
    return (*oracle_)(agent, bundle);
  }

  Value value(AgentId agent, ChoreId chore) const {
    if (table_) return (*table_)[static_cast<std::size_t>(agent)][static_cast<std::size_t>(chore)];
    const ChoreId single[1] = {chore};
    return (*oracle_)(agent, single);
  }

  /// All rows equal. Oracle profiles are never reported identical.
  bool is_identical() const {
    if (!table_) return false;
    return std::all_of(table_->begin(), table_->end(),
                       [&](const auto& row) { return row == table_->front(); });
  }

  /// The two values {H, L} when every entry is one of them. A single
  /// repeated value only qualifies with `allow_single_value`, in which case
  /// H == L.
  std::optional<Dichotomy> dichotomy(bool allow_single_value = false) const {
    if (!table_) return std::nullopt;
    std::vector<Value> seen;
    for (const auto& row : *table_) {
      for (Value v : row) {
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
          seen.push_back(v);
          if (seen.size() > 2) return std::nullopt;
        }
      }
    }
    if (seen.size() == 2) {
      return Dichotomy{std::min(seen[0], seen[1]), std::max(seen[0], seen[1])};
    }
    if (seen.size() == 1 && allow_single_value) return Dichotomy{seen[0], seen[0]};
    return std::nullopt;
  }

 private:
  std::size_t agents_ = 0;
  std::size_t chores_ = 0;
  std::shared_ptr<const Table> table_;
  std::shared_ptr<const Oracle> oracle_;
};

/// Spot-checks value(C) >= value(C') for random nested pairs C ⊆ C' and
/// value(∅) == 0. Monotonicity is sampled, never proven.
inline bool monotone_on_samples(const ValuationProfile& profile, std::uint64_t seed,
                                int samples = 200) {
  std::mt19937_64 rng(seed);
  const auto m = static_cast<int>(profile.chore_count());
  for (std::size_t a = 0; a < profile.agent_count(); ++a) {
    if (profile.value(static_cast<AgentId>(a), std::span<const ChoreId>{}) != 0) return false;
  }
  if (m == 0) return true;
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> agent_dist(0, static_cast<int>(profile.agent_count()) - 1);
  for (int s = 0; s < samples; ++s) {
    std::vector<ChoreId> outer;
    std::vector<ChoreId> inner;
    for (ChoreId c = 0; c < m; ++c) {
      if (coin(rng)) {
        outer.push_back(c);
        if (coin(rng)) inner.push_back(c);
      }
    }
    const AgentId agent = agent_dist(rng);
    if (profile.value(agent, inner) < profile.value(agent, outer)) return false;
  }
  return true;
}

/// Overlap graph over chore ids. Immutable once built.
class ConflictGraph {
 public:
  ConflictGraph() = default;

  explicit ConflictGraph(const std::vector<Chore>& chores)
      : m_(chores.size()), matrix_(m_ * m_, 0), neighbors_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        if (chores[i].overlaps(chores[j])) {
          matrix_[i * m_ + j] = matrix_[j * m_ + i] = 1;
          neighbors_[i].push_back(static_cast<ChoreId>(j));
          neighbors_[j].push_back(static_cast<ChoreId>(i));
          ++edge_count_;
        }
      }
    }
    compute_components();
    compute_path_structure(chores);
  }

  std::size_t vertex_count() const noexcept { return m_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(ChoreId a, ChoreId b) const noexcept {
    return matrix_[static_cast<std::size_t>(a) * m_ + static_cast<std::size_t>(b)] != 0;
  }
  const std::vector<ChoreId>& neighbors(ChoreId c) const {
    return neighbors_[static_cast<std::size_t>(c)];
  }
  std::vector<std::pair<ChoreId, ChoreId>> edges() const {
    std::vector<std::pair<ChoreId, ChoreId>> out;
    for (std::size_t i = 0; i < m_; ++i) {
      for (ChoreId j : neighbors_[i]) {
        if (static_cast<std::size_t>(j) > i) out.emplace_back(static_cast<ChoreId>(i), j);
      }
    }
    return out;
  }

  /// Connected components, each sorted by id, ordered by smallest member.
  const std::vector<std::vector<ChoreId>>& components() const noexcept { return components_; }

  /// True when the whole graph is one simple path (a single vertex counts,
  /// as does the empty graph).
  bool is_path() const noexcept { return is_path_; }
  /// True when every component is a simple path.
  bool is_linear_forest() const noexcept { return is_linear_forest_; }
  /// Interval-built graphs are always interval graphs.
  bool is_interval() const noexcept { return true; }

  /// For a linear forest: each component's vertices in walk order, starting
  /// from the end with the earlier start time. Empty otherwise.
  const std::vector<std::vector<ChoreId>>& path_orders() const noexcept { return path_orders_; }

  /// True iff no two members of `set` are adjacent.
  bool independent(std::span<const ChoreId> set) const {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (adjacent(set[i], set[j])) return false;
      }
    }
    return true;
  }

 private:
  void compute_components() {
    std::vector<int> comp(m_, -1);
    for (std::size_t s = 0; s < m_; ++s) {
      if (comp[s] >= 0) continue;
      const int id = static_cast<int>(components_.size());
      components_.emplace_back();
      std::vector<ChoreId> stack{static_cast<ChoreId>(s)};
      comp[s] = id;
      while (!stack.empty()) {
        const ChoreId v = stack.back();
        stack.pop_back();
        components_.back().push_back(v);
        for (ChoreId w : neighbors_[static_cast<std::size_t>(v)]) {
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = id;
            stack.push_back(w);
          }
        }
      }
      std::sort(components_.back().begin(), components_.back().end());
    }
  }

  void compute_path_structure(const std::vector<Chore>& chores) {
    is_linear_forest_ = true;
    for (const auto& component : components_) {
      std::size_t edges = 0;
      for (ChoreId v : component) {
        const std::size_t deg = neighbors_[static_cast<std::size_t>(v)].size();
        if (deg > 2) is_linear_forest_ = false;
        edges += deg;
      }
      edges /= 2;
      if (edges + 1 != component.size()) is_linear_forest_ = false;
    }
    is_path_ = is_linear_forest_ && components_.size() <= 1;
    if (!is_linear_forest_) return;
    for (const auto& component : components_) {
      std::vector<ChoreId> ends;
      for (ChoreId v : component) {
        if (neighbors_[static_cast<std::size_t>(v)].size() <= 1) ends.push_back(v);
      }
      ChoreId first = *std::min_element(ends.begin(), ends.end(), [&](ChoreId a, ChoreId b) {
        const auto& ca = chores[static_cast<std::size_t>(a)];
        const auto& cb = chores[static_cast<std::size_t>(b)];
        return std::pair(ca.start, a) < std::pair(cb.start, b);
      });
      std::vector<ChoreId> walk{first};
      ChoreId prev = -1;
      ChoreId cur = first;
      while (walk.size() < component.size()) {
        for (ChoreId w : neighbors_[static_cast<std::size_t>(cur)]) {
          if (w != prev) {
            prev = cur;
            cur = w;
            break;
          }
        }
        walk.push_back(cur);
      }
      path_orders_.push_back(std::move(walk));
    }
  }

  std::size_t m_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<ChoreId>> neighbors_;
  std::vector<std::vector<ChoreId>> components_;
  std::vector<std::vector<ChoreId>> path_orders_;
  bool is_path_ = true;
  bool is_linear_forest_ = true;
};

inline ConflictGraph build_conflict_graph(const std::vector<Chore>& chores) {
  return ConflictGraph(chores);
}

/// An immutable scheduling problem: agents, timed chores, valuations.
class Instance {
 public:
  Instance() = default;

  Instance(std::size_t agents, std::vector<Chore> chores, ValuationProfile valuations)
      : n_(agents), chores_(std::move(chores)), valuations_(std::move(valuations)) {
    if (n_ == 0) throw InputError(ErrorCode::kMalformedInput, "instance needs at least one agent");
    for (std::size_t j = 0; j < chores_.size(); ++j) {
      const Chore& c = chores_[j];
      if (c.id != static_cast<ChoreId>(j)) {
        throw InputError(ErrorCode::kMalformedInput,
                         "chore ids must be 0..m-1 in order; position " + std::to_string(j) +
                             " holds id " + std::to_string(c.id));
      }
      if (c.start < 0) {
        throw InputError(ErrorCode::kMalformedInput,
                         "chore " + std::to_string(j) + " has a negative start time");
      }
      if (c.finish <= c.start) {
        throw InputError(ErrorCode::kMalformedInput,
                         "chore " + std::to_string(j) + " must finish after it starts");
      }
    }
    if (valuations_.agent_count() != n_ || valuations_.chore_count() != chores_.size()) {
      throw InputError(ErrorCode::kMalformedInput,
                       "valuation profile is " + std::to_string(valuations_.agent_count()) + "x" +
                           std::to_string(valuations_.chore_count()) + ", instance is " +
                           std::to_string(n_) + "x" + std::to_string(chores_.size()));
    }
    graph_ = std::make_shared<const ConflictGraph>(chores_);
  }

  std::size_t agent_count() const noexcept { return n_; }
  std::size_t chore_count() const noexcept { return chores_.size(); }
  const std::vector<Chore>& chores() const noexcept { return chores_; }
  const Chore& chore(ChoreId c) const { return chores_.at(static_cast<std::size_t>(c)); }
  const ValuationProfile& valuations() const noexcept { return valuations_; }
  const ConflictGraph& graph() const { return *graph_; }

  Value value(AgentId agent, std::span<const ChoreId> bundle) const {
    return valuations_.value(agent, bundle);
  }
  Value value(AgentId agent, ChoreId chore) const { return valuations_.value(agent, chore); }

 private:
  std::size_t n_ = 0;
  std::vector<Chore> chores_;
  ValuationProfile valuations_;
  std::shared_ptr<const ConflictGraph> graph_ = std::make_shared<const ConflictGraph>();
};

/// Chore j gets [j, j+2) so the conflict graph is the path c_0 - c_1 - ... .
inline Instance path_instance(const std::vector<std::vector<Value>>& values_per_agent) {
  if (values_per_agent.empty()) {
    throw InputError(ErrorCode::kMalformedInput, "path instance needs at least one agent row");
  }
  const std::size_t m = values_per_agent.front().size();
  if (m == 0) throw InputError(ErrorCode::kMalformedInput, "path instance needs m >= 1");
  std::vector<Chore> chores;
  chores.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto t = static_cast<TimePoint>(j);
    chores.push_back(Chore{static_cast<ChoreId>(j), t, t + 2, {}});
  }
  // ragged rows are rejected by the additive profile
  return Instance(values_per_agent.size(), std::move(chores),
                  ValuationProfile::additive(values_per_agent));
}

/// Chore ids sorted by finish time, ties by ascending id.
inline std::vector<ChoreId> order_by_finish(std::span<const Chore> chores) {
  std::vector<ChoreId> order(chores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ChoreId a, ChoreId b) {
    return chores[static_cast<std::size_t>(a)].finish < chores[static_cast<std::size_t>(b)].finish;
  });
  return order;
}

inline std::vector<ChoreId> order_by_finish(const std::vector<Chore>& chores) {
  return order_by_finish(std::span<const Chore>(chores));
}

/// A partial assignment chore -> agent. Bundles are derived on demand.
class Schedule {
 public:
  static constexpr AgentId kUnassigned = -1;

  Schedule() = default;
  Schedule(std::size_t agents, std::size_t chores) : n_(agents), owner_(chores, kUnassigned) {}

  static Schedule from_bundles(std::size_t chores,
                               const std::vector<std::vector<ChoreId>>& bundles) {
    Schedule s(bundles.size(), chores);
    for (std::size_t a = 0; a < bundles.size(); ++a) {
      for (ChoreId c : bundles[a]) {
        if (c < 0 || static_cast<std::size_t>(c) >= chores) {
          throw InputError(ErrorCode::kUnknownId, "bundle references unknown chore " +
                                                      std::to_string(c));
        }
        if (s.owner_[static_cast<std::size_t>(c)] != kUnassigned) {
          throw InputError(ErrorCode::kMalformedInput,
                           "chore " + std::to_string(c) + " appears in two bundles");
        }
        s.owner_[static_cast<std::size_t>(c)] = static_cast<AgentId>(a);
      }
    }
    return s;
  }

  std::size_t agent_count() const noexcept { return n_; }
  std::size_t chore_count() const noexcept { return owner_.size(); }

  std::optional<AgentId> owner(ChoreId c) const {
    const AgentId a = owner_.at(static_cast<std::size_t>(c));
    if (a == kUnassigned) return std::nullopt;
    return a;
  }
  bool assigned(ChoreId c) const { return owner_.at(static_cast<std::size_t>(c)) != kUnassigned; }
  const std::vector<AgentId>& raw() const noexcept { return owner_; }

  void assign(ChoreId c, AgentId agent) {
    check_chore(c);
    if (agent < 0 || static_cast<std::size_t>(agent) >= n_) {
      throw InputError(ErrorCode::kUnknownId, "unknown agent " + std::to_string(agent));
    }
    owner_[static_cast<std::size_t>(c)] = agent;
  }
  void unassign(ChoreId c) {
    check_chore(c);
    owner_[static_cast<std::size_t>(c)] = kUnassigned;
  }

  std::vector<ChoreId> bundle(AgentId agent) const {
    std::vector<ChoreId> out;
    for (std::size_t c = 0; c < owner_.size(); ++c) {
      if (owner_[c] == agent) out.push_back(static_cast<ChoreId>(c));
    }
    return out;
  }
  std::vector<std::vector<ChoreId>> bundles() const {
    std::vector<std::vector<ChoreId>> out(n_);
    for (std::size_t c = 0; c < owner_.size(); ++c) {
      if (owner_[c] != kUnassigned) out[static_cast<std::size_t>(owner_[c])].push_back(static_cast<ChoreId>(c));
    }
    return out;
  }
  std::vector<ChoreId> unassigned() const { return bundle(kUnassigned); }

  /// Two-agent bundle exchange.
  Schedule swapped() const {
    if (n_ != 2) throw InputError(ErrorCode::kWrongAgentCount, "swap needs exactly two agents");
    Schedule s = *this;
    for (auto& a : s.owner_) {
      if (a != kUnassigned) a = 1 - a;
    }
    return s;
  }

  bool operator==(const Schedule&) const = default;

 private:
  void check_chore(ChoreId c) const {
    if (c < 0 || static_cast<std::size_t>(c) >= owner_.size()) {
      throw InputError(ErrorCode::kUnknownId, "unknown chore " + std::to_string(c));
    }
  }

  std::size_t n_ = 0;
  std::vector<AgentId> owner_;
};

/// Schedule dimensions must match the instance; throws otherwise.
inline void require_compatible(const Schedule& s, const Instance& inst) {
  if (s.chore_count() != inst.chore_count()) {
    throw InputError(ErrorCode::kUnknownId,
                     "schedule covers " + std::to_string(s.chore_count()) +
                         " chores, instance has " + std::to_string(inst.chore_count()));
  }
  if (s.agent_count() != inst.agent_count()) {
    throw InputError(ErrorCode::kUnknownId,
                     "schedule has " + std::to_string(s.agent_count()) +
                         " agents, instance has " + std::to_string(inst.agent_count()));
  }
}

/// Every bundle is an independent set of `graph`.
inline bool is_feasible(const Schedule& s, const ConflictGraph& graph) {
  if (s.chore_count() != graph.vertex_count()) {
    throw InputError(ErrorCode::kUnknownId,
                     "schedule covers " + std::to_string(s.chore_count()) +
                         " chores, graph has " + std::to_string(graph.vertex_count()));
  }
  for (const auto& [a, b] : graph.edges()) {
    const auto oa = s.raw()[static_cast<std::size_t>(a)];
    if (oa != Schedule::kUnassigned && oa == s.raw()[static_cast<std::size_t>(b)]) return false;
  }
  return true;
}

/// True when `chore` could join `agent`'s bundle without a conflict.
inline bool fits(const Schedule& s, const ConflictGraph& graph, ChoreId chore, AgentId agent) {
  for (ChoreId w : graph.neighbors(chore)) {
    if (s.raw()[static_cast<std::size_t>(w)] == agent) return false;
  }
  return true;
}

}  // namespace chore_sched
