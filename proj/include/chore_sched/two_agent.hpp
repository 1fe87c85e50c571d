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

// Two-agent EF1 + maximal solvers built on colour-swapping sequences.
//
// Agent 0 is "red" and agent 1 is "blue". Every builder here produces a
// sequence of schedules that starts at some schedule (R, B), ends at (B, R),
// and moves between neighbours by at most one addition and one removal per
// bundle. Agent 0's envy must flip somewhere along such a sequence, and at
// the flip one of four candidate schedules is EF1 (see select_ef1).
//
// Sequences never look at valuations; only select_ef1 does.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chore_sched/checkers.hpp"
#include "chore_sched/core.hpp"

namespace chore_sched {

enum class Color : std::int8_t { kNone = -1, kRed = 0, kBlue = 1 };

inline Color opposite(Color c) {
  switch (c) {
    case Color::kRed: return Color::kBlue;
    case Color::kBlue: return Color::kRed;
    default: return Color::kNone;
  }
}

inline char color_letter(Color c) {
  switch (c) {
    case Color::kRed: return 'R';
    case Color::kBlue: return 'B';
    default: return 'N';
  }
}

enum class StepTag {
  kInitial,
  kPath,
  kEf2,
  kPhase2CaseI,
  kPhase2CaseII,
  kPhase2CaseIIIa,
  kPhase2CaseIIIb,
  kPhase2CaseIIIc,
  kPhase3,
};

inline std::string_view to_string(StepTag tag) {
  switch (tag) {
    case StepTag::kInitial: return "initial";
    case StepTag::kPath: return "path";
    case StepTag::kEf2: return "ef2";
    case StepTag::kPhase2CaseI: return "phase2-case-i";
    case StepTag::kPhase2CaseII: return "phase2-case-ii";
    case StepTag::kPhase2CaseIIIa: return "phase2-case-iii(a)";
    case StepTag::kPhase2CaseIIIb: return "phase2-case-iii(b)";
    case StepTag::kPhase2CaseIIIc: return "phase2-case-iii(c)";
    case StepTag::kPhase3: return "phase3-step";
  }
  return "?";
}

struct ScheduleSequence {
  std::vector<Schedule> steps;
  std::vector<StepTag> tags;

  std::size_t size() const noexcept { return steps.size(); }
  const Schedule& front() const { return steps.front(); }
  const Schedule& back() const { return steps.back(); }
};

/// One extra assignment that turns a not-quite-maximal step maximal.
struct CompletionHint {
  ChoreId chore = 0;
  AgentId agent = 0;
  bool operator==(const CompletionHint&) const = default;
};

struct Ef2Sequence {
  ScheduleSequence sequence;
  std::vector<std::optional<CompletionHint>> hints;  // one per step
};

/// Adjacent schedules: each bundle gains at most one chore and loses at most one.
inline bool adjacent(const Schedule& x, const Schedule& y) {
  if (x.agent_count() != 2 || y.agent_count() != 2) {
    throw InputError(ErrorCode::kWrongAgentCount, "adjacency is defined for two agents");
  }
  if (x.chore_count() != y.chore_count()) {
    throw InputError(ErrorCode::kUnknownId, "schedules cover different chore sets");
  }
  int gained[2] = {0, 0};
  int lost[2] = {0, 0};
  for (std::size_t c = 0; c < x.chore_count(); ++c) {
    const AgentId a = x.raw()[c];
    const AgentId b = y.raw()[c];
    if (a == b) continue;
    if (a != Schedule::kUnassigned) ++lost[a];
    if (b != Schedule::kUnassigned) ++gained[b];
  }
  return gained[0] <= 1 && gained[1] <= 1 && lost[0] <= 1 && lost[1] <= 1;
}

/// Phase-1 view of one connected group of chores.
struct ChoreClassification {
  std::vector<ChoreId> order;     // by finish time, ties by id
  std::vector<ChoreId> marked;    // marked[h-1] is c_h
  std::vector<ChoreId> unmarked;
  /// buckets[h] holds the unmarked chores finishing between c_h and c_{h+1}
  /// (after c_k for h = k). buckets[0] is unused.
  std::vector<std::vector<ChoreId>> buckets;
  /// Per chore id: bucket index for unmarked chores, 0 for marked ones, -1
  /// for chores outside the classified group.
  std::vector<int> bucket_of;
  /// Per chore id: position in `order` (-1 outside the group).
  std::vector<int> rank;
  /// Per chore id: h for c_h (1-based), 0 for unmarked or outside.
  std::vector<int> marked_index;

  bool later(ChoreId a, ChoreId b) const {
    return rank[static_cast<std::size_t>(a)] > rank[static_cast<std::size_t>(b)];
  }
};

/// A chore is unmarked iff it overlaps two or more earlier-finishing marked
/// chores.
inline ChoreClassification classify_chores(const Instance& inst,
                                           std::span<const ChoreId> group) {
  const ConflictGraph& g = inst.graph();
  const std::size_t m = inst.chore_count();
  ChoreClassification cls;
  cls.order.assign(group.begin(), group.end());
  std::stable_sort(cls.order.begin(), cls.order.end(), [&](ChoreId a, ChoreId b) {
    const auto& ca = inst.chore(a);
    const auto& cb = inst.chore(b);
    return std::pair(ca.finish, a) < std::pair(cb.finish, b);
  });
  cls.bucket_of.assign(m, -1);
  cls.rank.assign(m, -1);
  cls.marked_index.assign(m, 0);
  cls.buckets.emplace_back();
  for (std::size_t pos = 0; pos < cls.order.size(); ++pos) {
    const ChoreId c = cls.order[pos];
    cls.rank[static_cast<std::size_t>(c)] = static_cast<int>(pos);
    int hits = 0;
    for (ChoreId earlier : cls.marked) {
      if (g.adjacent(c, earlier)) ++hits;
    }
    if (hits >= 2) {
      cls.unmarked.push_back(c);
      const int h = static_cast<int>(cls.marked.size());
      cls.buckets[static_cast<std::size_t>(h)].push_back(c);
      cls.bucket_of[static_cast<std::size_t>(c)] = h;
    } else {
      cls.marked.push_back(c);
      cls.buckets.emplace_back();
      cls.bucket_of[static_cast<std::size_t>(c)] = 0;
      cls.marked_index[static_cast<std::size_t>(c)] = static_cast<int>(cls.marked.size());
    }
  }
  return cls;
}

inline ChoreClassification classify_chores(const Instance& inst) {
  std::vector<ChoreId> all(inst.chore_count());
  std::iota(all.begin(), all.end(), 0);
  return classify_chores(inst, all);
}

namespace detail {

inline Color color_of(const Schedule& s, ChoreId c) {
  return static_cast<Color>(s.raw()[static_cast<std::size_t>(c)]);
}

inline void paint(Schedule& s, ChoreId c, Color color) {
  if (color == Color::kNone) {
    s.unassign(c);
  } else {
    s.assign(c, static_cast<AgentId>(color));
  }
}

inline bool fits_color(const Schedule& s, const ConflictGraph& g, ChoreId c, Color color) {
  return color == Color::kNone || fits(s, g, c, static_cast<AgentId>(color));
}

inline void require_two_agents(const Instance& inst) {
  if (inst.agent_count() != 2) {
    throw InputError(ErrorCode::kWrongAgentCount,
                     "two-agent solver called with " + std::to_string(inst.agent_count()) +
                         " agents");
  }
}

/// A per-component run: its own step list over the full chore range, where
/// only the component's chores are ever painted.
struct ComponentRun {
  std::vector<Schedule> steps;
  std::vector<StepTag> tags;
  std::vector<std::optional<CompletionHint>> hints;
};

/// Runs components one after another: component k goes from its first to its
/// last step while earlier components sit at their last step and later ones
/// at their first. Consecutive global steps therefore differ inside one
/// component only.
inline Ef2Sequence compose_components(std::size_t chores, const std::vector<ComponentRun>& runs) {
  Ef2Sequence out;
  Schedule current(2, chores);
  for (const auto& run : runs) {
    for (std::size_t c = 0; c < chores; ++c) {
      if (run.steps.front().raw()[c] != Schedule::kUnassigned) {
        current.assign(static_cast<ChoreId>(c), run.steps.front().raw()[c]);
      }
    }
  }
  out.sequence.steps.push_back(current);
  out.sequence.tags.push_back(StepTag::kInitial);
  out.hints.emplace_back(std::nullopt);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& run = runs[r];
    if (r == 0 && !run.hints.empty()) out.hints.front() = run.hints.front();
    std::vector<ChoreId> touched;
    for (std::size_t c = 0; c < chores; ++c) {
      for (const auto& step : run.steps) {
        if (step.raw()[c] != Schedule::kUnassigned) {
          touched.push_back(static_cast<ChoreId>(c));
          break;
        }
      }
    }
    for (std::size_t k = 1; k < run.steps.size(); ++k) {
      for (ChoreId c : touched) {
        const AgentId a = run.steps[k].raw()[static_cast<std::size_t>(c)];
        if (a == Schedule::kUnassigned) {
          current.unassign(c);
        } else {
          current.assign(c, a);
        }
      }
      out.sequence.steps.push_back(current);
      out.sequence.tags.push_back(run.tags[k]);
      out.hints.push_back(run.hints.empty() ? std::nullopt : run.hints[k]);
    }
  }
  return out;
}

/// Alternating colouring over an ordered chain c_1..c_k: step 1 is the
/// source colouring, step k the swap, and the middle step i re-colours the
/// prefix before c_i and decides c_i via `middle`.
template <typename Middle>
ComponentRun chain_run(std::size_t chores, const std::vector<ChoreId>& chain, StepTag tag,
                       Middle middle) {
  ComponentRun run;
  const std::size_t k = chain.size();
  auto source = [&](std::size_t h) { return h % 2 == 1 ? Color::kRed : Color::kBlue; };
  Schedule first(2, chores);
  Schedule last(2, chores);
  for (std::size_t h = 1; h <= k; ++h) {
    paint(first, chain[h - 1], source(h));
    paint(last, chain[h - 1], opposite(source(h)));
  }
  run.steps.push_back(first);
  run.tags.push_back(StepTag::kInitial);
  for (std::size_t i = 2; i + 1 <= k; ++i) {
    Schedule s(2, chores);
    for (std::size_t h = 1; h <= k; ++h) {
      if (h < i) paint(s, chain[h - 1], opposite(source(h)));
      if (h > i) paint(s, chain[h - 1], source(h));
    }
    paint(s, chain[i - 1], middle(s, i));
    run.steps.push_back(std::move(s));
    run.tags.push_back(tag);
  }
  if (k == 1) {
    // a lone chore: hand it over in one step
    run.steps.push_back(last);
    run.tags.push_back(tag);
  } else if (k >= 2) {
    run.steps.push_back(last);
    run.tags.push_back(tag);
  }
  return run;
}

}  // namespace detail

/// Colouring sequence for a path (or a disjoint union of paths, one
/// component at a time). Every step is maximal; middle steps leave exactly
/// one chore of the active component unassigned.
inline ScheduleSequence path_sequence(const Instance& inst) {
  detail::require_two_agents(inst);
  const ConflictGraph& g = inst.graph();
  if (!g.is_linear_forest()) {
    throw InputError(ErrorCode::kNotPathGraph, "path_sequence needs a path conflict graph");
  }
  std::vector<detail::ComponentRun> runs;
  for (const auto& walk : g.path_orders()) {
    runs.push_back(detail::chain_run(inst.chore_count(), walk, StepTag::kPath,
                                     [](const Schedule&, std::size_t) { return Color::kNone; }));
  }
  return detail::compose_components(inst.chore_count(), runs).sequence;
}

/// Sequence over the marked chores only. Each step is maximal or becomes
/// maximal after applying its hint.
inline Ef2Sequence interval_sequence_ef2(const Instance& inst) {
  detail::require_two_agents(inst);
  const ConflictGraph& g = inst.graph();
  const std::size_t m = inst.chore_count();
  std::vector<detail::ComponentRun> runs;
  for (const auto& component : g.components()) {
    const auto cls = classify_chores(inst, component);
    const auto& chain = cls.marked;
    auto run = detail::chain_run(m, chain, StepTag::kEf2, [&](const Schedule& s, std::size_t i) {
      const ChoreId prev = chain[i - 2];
      const ChoreId cur = chain[i - 1];
      const ChoreId next = chain[i];
      const bool hits_prev = g.adjacent(cur, prev);
      const bool hits_next = g.adjacent(cur, next);
      if (hits_prev && hits_next) return Color::kNone;
      if (hits_next) return detail::color_of(s, prev);
      return detail::color_of(s, next);
    });
    // The hint is the earliest-finishing chore that still fits somewhere;
    // prefer the agent that leaves the step maximal.
    for (const auto& step : run.steps) {
      std::optional<CompletionHint> hint;
      for (ChoreId c : cls.order) {
        if (step.assigned(c)) continue;
        for (AgentId a : {0, 1}) {
          if (!fits(step, g, c, a)) continue;
          Schedule trial = step;
          trial.assign(c, a);
          bool ok = true;
          for (ChoreId d : component) {
            if (trial.assigned(d)) continue;
            if (fits(trial, g, d, 0) || fits(trial, g, d, 1)) {
              ok = false;
              break;
            }
          }
          if (ok) {
            hint = CompletionHint{c, a};
            break;
          }
          if (!hint) hint = CompletionHint{c, a};
        }
        if (hint) break;
      }
      run.hints.push_back(hint);
    }
    runs.push_back(std::move(run));
  }
  return detail::compose_components(m, runs);
}

/// Unassigned chore `u` is supported when one of these holds:
///  1. it overlaps at least three assigned chores that finish earlier;
///  2. it lies in bucket U_i, c_i is assigned, and `u` also overlaps a
///     later-finishing assigned chore of the other colour;
///  3. it overlaps two assigned chores that finish later.
/// Assigned chores are reported as supported.
inline std::vector<bool> classify_supported(const Schedule& s, const Instance& inst,
                                            const ChoreClassification& cls) {
  const ConflictGraph& g = inst.graph();
  std::vector<bool> supported(s.chore_count(), true);
  for (ChoreId u : cls.order) {
    if (s.assigned(u)) continue;
    int earlier = 0;
    int later = 0;
    bool later_red = false;
    bool later_blue = false;
    for (ChoreId w : g.neighbors(u)) {
      if (!s.assigned(w) || cls.rank[static_cast<std::size_t>(w)] < 0) continue;
      if (cls.later(w, u)) {
        ++later;
        (detail::color_of(s, w) == Color::kRed ? later_red : later_blue) = true;
      } else {
        ++earlier;
      }
    }
    bool ok = earlier >= 3 || later >= 2;
    const int h = cls.bucket_of[static_cast<std::size_t>(u)];
    if (!ok && h > 0) {
      const ChoreId anchor = cls.marked[static_cast<std::size_t>(h - 1)];
      const Color anchor_color = detail::color_of(s, anchor);
      if (anchor_color == Color::kRed) ok = later_blue;
      if (anchor_color == Color::kBlue) ok = later_red;
    }
    supported[static_cast<std::size_t>(u)] = ok;
  }
  return supported;
}

/// Everything the three-phase construction produced for one component.
struct ComponentTrace {
  ChoreClassification classification;
  std::vector<Color> source;  // per chore id
  std::vector<Color> target;  // per chore id
  Schedule after_phase2;      // component chores only
  /// Phase-3 steps where the two-chore rule was replaced by a searched run.
  std::size_t detours = 0;
};

struct IntervalEf1Result {
  ScheduleSequence sequence;
  std::vector<ComponentTrace> components;
};

namespace detail {

class ThreePhaseBuilder {
 public:
  ThreePhaseBuilder(const Instance& inst, std::span<const ChoreId> component, bool verify = true)
      : verify_(verify),
        inst_(inst),
        g_(inst.graph()),
        m_(inst.chore_count()),
        component_(component.begin(), component.end()),
        cls_(classify_chores(inst, component)),
        state_(2, inst.chore_count()) {
    trace_.source.assign(m_, Color::kNone);
    trace_.target.assign(m_, Color::kNone);
    for (std::size_t h = 1; h <= cls_.marked.size(); ++h) {
      const ChoreId c = cls_.marked[h - 1];
      const Color src = h % 2 == 1 ? Color::kRed : Color::kBlue;
      trace_.source[static_cast<std::size_t>(c)] = src;
      trace_.target[static_cast<std::size_t>(c)] = opposite(src);
    }
  }

  ComponentRun run() {
    phase1();
    phase2();
    trace_.classification = cls_;
    trace_.after_phase2 = state_;
    phase3();
    return std::move(run_);
  }

  ComponentTrace take_trace() { return std::move(trace_); }

 private:
  ChoreId c(int h) const { return cls_.marked[static_cast<std::size_t>(h - 1)]; }
  Color col(ChoreId x) const { return color_of(state_, x); }
  bool overlap(ChoreId a, ChoreId b) const { return g_.adjacent(a, b); }

  void phase1() {
    for (ChoreId x : cls_.marked) paint(state_, x, trace_.source[static_cast<std::size_t>(x)]);
    emit(StepTag::kInitial);
  }

  bool overlaps_later_assigned(ChoreId u) const {
    for (ChoreId w : g_.neighbors(u)) {
      if (state_.assigned(w) && cls_.later(w, u)) return true;
    }
    return false;
  }

  std::vector<ChoreId> unsupported_in(int bucket) const {
    const auto supported = classify_supported(state_, inst_, cls_);
    std::vector<ChoreId> out;
    for (ChoreId u : cls_.buckets[static_cast<std::size_t>(bucket)]) {
      if (!state_.assigned(u) && !supported[static_cast<std::size_t>(u)]) out.push_back(u);
    }
    return out;  // in finish order
  }

  bool at_source(ChoreId x) const { return col(x) == trace_.source[static_cast<std::size_t>(x)]; }

  void phase2() {
    const int k = static_cast<int>(cls_.marked.size());
    for (int i = k; i >= 2; --i) {
      const auto pending = unsupported_in(i);
      if (pending.empty()) continue;
      for (int h = std::max(1, i - 2); h <= i; ++h) {
        if (!at_source(c(h))) {
          fail("phase 2 bucket " + std::to_string(i) + ": c_" + std::to_string(h) +
               " left its source bundle before its bucket was processed");
        }
      }
      const ChoreId ci = c(i);
      const ChoreId cp = c(i - 1);
      const ChoreId u_star = pending.back();
      if (overlap(cp, ci)) {
        paint(state_, u_star, col(cp));
        paint(state_, cp, Color::kNone);
        emit(StepTag::kPhase2CaseI);
      } else if (i == 2 || !overlap(cp, c(i - 2))) {
        const Color cp_color = col(cp);
        paint(state_, cp, col(ci));
        paint(state_, u_star, cp_color);
        emit(StepTag::kPhase2CaseII);
      } else {
        std::optional<ChoreId> u_prime;
        for (ChoreId u : pending) {
          if (!overlaps_later_assigned(u)) u_prime = u;
        }
        if (u_prime) {
          const Color ci_color = col(ci);
          paint(state_, ci, col(cp));
          paint(state_, *u_prime, ci_color);
          emit(StepTag::kPhase2CaseIIIa);
        } else {
          const ChoreId cpp = c(i - 2);
          const Color cpp_color = col(cpp);
          paint(state_, ci, col(cp));
          emit(StepTag::kPhase2CaseIIIb);
          std::optional<ChoreId> u_late;
          for (ChoreId u : cls_.buckets[static_cast<std::size_t>(i)]) {
            if (state_.assigned(u)) continue;
            if (overlap(u, cpp) && overlap(u, cp) && overlap(u, ci) &&
                !overlaps_later_assigned(u)) {
              // skip candidates that would clash with something else in that bundle
              paint(state_, cpp, Color::kNone);
              if (fits_color(state_, g_, u, cpp_color)) u_late = u;
              paint(state_, cpp, cpp_color);
            }
          }
          if (u_late) {
            paint(state_, cpp, Color::kNone);
            paint(state_, *u_late, cpp_color);
            emit(StepTag::kPhase2CaseIIIc);
          }
        }
      }
      if (!unsupported_in(i).empty()) {
        fail("phase 2 bucket " + std::to_string(i) + " still has an unsupported chore after "
             "reassignment");
      }
    }
  }

  bool targeted(ChoreId x) const { return col(x) == trace_.target[static_cast<std::size_t>(x)]; }

  void phase3() {
    const std::size_t limit = 4 * cls_.order.size() + 4;
    for (std::size_t iter = 0; iter < limit; ++iter) {
      std::optional<std::size_t> first;
      for (std::size_t pos = 0; pos < cls_.order.size(); ++pos) {
        if (!targeted(cls_.order[pos])) {
          first = pos;
          break;
        }
      }
      if (!first) return;
      const Schedule before = state_;
      const ChoreId head = cls_.order[*first];
      paint(state_, head, trace_.target[static_cast<std::size_t>(head)]);
      for (std::size_t pos = *first + 1; pos < cls_.order.size(); ++pos) {
        const ChoreId next = cls_.order[pos];
        if (targeted(next)) continue;
        // target colour first, then the other colour, else leave it out
        const Color was = col(next);
        paint(state_, next, Color::kNone);
        const Color want = trace_.target[static_cast<std::size_t>(next)];
        Color chosen = Color::kNone;
        if (want != Color::kNone) {
          if (fits_color(state_, g_, next, want)) {
            chosen = want;
          } else if (fits_color(state_, g_, next, opposite(want))) {
            chosen = opposite(want);
          }
        } else if (was != Color::kNone) {
          if (fits_color(state_, g_, next, was)) {
            chosen = was;
          } else if (fits_color(state_, g_, next, opposite(was))) {
            chosen = opposite(was);
          }
        }
        paint(state_, next, chosen);
        break;
      }
      if (!verify_ || valid_step(before, state_)) {
        emit(StepTag::kPhase3);
        continue;
      }
      state_ = before;
      bool found = false;
      for (std::size_t width = 4; !found; width *= 2) {
        const std::size_t hi = std::min(cls_.order.size(), *first + width);
        found = detour(*first, *first, hi) ||
                detour(*first, *first >= width ? *first - width : 0, hi);
        if (!found && hi == cls_.order.size() && width >= *first) break;
      }
      if (!found) fail("phase 3 found no valid step past chore " + std::to_string(head));
    }
    fail("phase 3 did not reach the swapped schedule");
  }

  bool valid_step(const Schedule& from, const Schedule& to) const {
    if (!is_feasible(to, g_) || !adjacent(from, to)) return false;
    for (ChoreId x : component_) {
      if (!to.assigned(x) && (fits(to, g_, x, 0) || fits(to, g_, x, 1))) return false;
    }
    return true;
  }

  // The two-chore step can run into a chore that an earlier phase-2 swap
  // parked in the head's target bundle. Fall back to the shortest run of
  // valid steps that brings every chore up to and including the head to its
  // target. Only chores at positions [lo, hi) may move.
  bool detour(std::size_t head_pos, std::size_t lo, std::size_t hi) {
    const std::size_t w = cls_.order.size();
    auto encode = [&](const Schedule& s) {
      std::string key(w, 'N');
      for (std::size_t p = 0; p < w; ++p) key[p] = color_letter(color_of(s, cls_.order[p]));
      return key;
    };
    auto done = [&](const Schedule& s) {
      for (std::size_t p = 0; p <= head_pos; ++p) {
        const ChoreId x = cls_.order[p];
        if (color_of(s, x) != trace_.target[static_cast<std::size_t>(x)]) return false;
      }
      return true;
    };
    std::vector<Schedule> states{state_};
    std::vector<std::size_t> parent{0};
    std::unordered_set<std::string> seen{encode(state_)};
    constexpr std::size_t kMaxStates = 20000;
    for (std::size_t at = 0; at < states.size() && states.size() < kMaxStates; ++at) {
      const Schedule cur = states[at];
      std::vector<ChoreId> red, blue, none;
      for (std::size_t p = lo; p < hi; ++p) {
        const ChoreId x = cls_.order[p];
        switch (color_of(cur, x)) {
          case Color::kRed: red.push_back(x); break;
          case Color::kBlue: blue.push_back(x); break;
          default: none.push_back(x); break;
        }
      }
      red.push_back(-1);
      blue.push_back(-1);
      for (ChoreId r_out : red) {
        for (ChoreId b_out : blue) {
          std::vector<ChoreId> r_in = none, b_in = none;
          r_in.push_back(-1);
          b_in.push_back(-1);
          if (b_out >= 0) r_in.push_back(b_out);
          if (r_out >= 0) b_in.push_back(r_out);
          for (ChoreId ri : r_in) {
            for (ChoreId bi : b_in) {
              if (ri >= 0 && ri == bi) continue;
              if (r_out < 0 && b_out < 0 && ri < 0 && bi < 0) continue;
              Schedule next = cur;
              if (r_out >= 0) next.unassign(r_out);
              if (b_out >= 0) next.unassign(b_out);
              if (ri >= 0) next.assign(ri, 0);
              if (bi >= 0) next.assign(bi, 1);
              if (next == cur || !valid_step(cur, next)) continue;
              if (!seen.insert(encode(next)).second) continue;
              states.push_back(next);
              parent.push_back(at);
              if (done(next)) {
                std::vector<std::size_t> path;
                for (std::size_t v = states.size() - 1; v != 0; v = parent[v]) path.push_back(v);
                for (auto it = path.rbegin(); it != path.rend(); ++it) {
                  state_ = states[*it];
                  emit(StepTag::kPhase3);
                }
                ++trace_.detours;
                return true;
              }
            }
          }
        }
      }
    }
    return false;
  }

  void emit(StepTag tag) {
    if (!verify_) {
      run_.steps.push_back(state_);
      run_.tags.push_back(tag);
      return;
    }
    if (!is_feasible(state_, g_)) fail(std::string(to_string(tag)) + " produced an infeasible step");
    for (ChoreId x : component_) {
      if (!state_.assigned(x) && (fits(state_, g_, x, 0) || fits(state_, g_, x, 1))) {
        fail(std::string(to_string(tag)) + " left chore " + std::to_string(x) +
             " unassigned although it fits");
      }
    }
    if (!run_.steps.empty() && !adjacent(run_.steps.back(), state_)) {
      fail(std::string(to_string(tag)) + " step is not adjacent to its predecessor");
    }
    run_.steps.push_back(state_);
    run_.tags.push_back(tag);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvariantViolation("interval EF1 construction: " + what);
  }

  bool verify_;
  const Instance& inst_;
  const ConflictGraph& g_;
  std::size_t m_;
  std::vector<ChoreId> component_;
  ChoreClassification cls_;
  Schedule state_;
  ComponentRun run_;
  ComponentTrace trace_;
};

}  // namespace detail

/// Full three-phase construction with its per-component traces. With
/// `verify` off, steps are recorded without the bug traps and Phase 3 applies
/// the plain two-chore rule even where it breaks feasibility or maximality.
inline IntervalEf1Result interval_sequence_ef1_traced(const Instance& inst, bool verify = true) {
  detail::require_two_agents(inst);
  IntervalEf1Result result;
  std::vector<detail::ComponentRun> runs;
  for (const auto& component : inst.graph().components()) {
    detail::ThreePhaseBuilder builder(inst, component, verify);
    runs.push_back(builder.run());
    result.components.push_back(builder.take_trace());
  }
  result.sequence = detail::compose_components(inst.chore_count(), runs).sequence;
  return result;
}

/// Adjacent sequence of maximal schedules from (R, B) to (B, R) for any
/// interval instance with two agents.
inline ScheduleSequence interval_sequence_ef1(const Instance& inst) {
  return interval_sequence_ef1_traced(inst).sequence;
}

/// The two properties Phase 3 relies on, checked on a Phase-2 result.
struct Phase2Report {
  /// Unassigned chores of the component that are not supported.
  std::vector<ChoreId> unsupported;
  /// (x, c): x is untargeted and assigned, c finishes later, overlaps x and
  /// sits in x's target bundle, yet c is not the next untargeted chore after x.
  std::vector<std::pair<ChoreId, ChoreId>> stray_overlaps;

  bool ok() const { return unsupported.empty() && stray_overlaps.empty(); }
};

inline Phase2Report check_phase2_claims(const ComponentTrace& trace, const Instance& inst) {
  const auto& cls = trace.classification;
  const Schedule& s = trace.after_phase2;
  const ConflictGraph& g = inst.graph();
  auto target = [&](ChoreId x) { return trace.target[static_cast<std::size_t>(x)]; };
  auto untargeted = [&](ChoreId x) { return detail::color_of(s, x) != target(x); };

  Phase2Report report;
  const auto supported = classify_supported(s, inst, cls);
  for (ChoreId x : cls.order) {
    if (!s.assigned(x) && !supported[static_cast<std::size_t>(x)]) report.unsupported.push_back(x);
  }
  for (std::size_t pos = 0; pos < cls.order.size(); ++pos) {
    const ChoreId x = cls.order[pos];
    if (!s.assigned(x) || !untargeted(x) || target(x) == Color::kNone) continue;
    std::optional<ChoreId> next;
    for (std::size_t q = pos + 1; q < cls.order.size(); ++q) {
      if (untargeted(cls.order[q])) {
        next = cls.order[q];
        break;
      }
    }
    for (std::size_t q = pos + 1; q < cls.order.size(); ++q) {
      const ChoreId c = cls.order[q];
      if (g.adjacent(x, c) && detail::color_of(s, c) == target(x) && c != next) {
        report.stray_overlaps.emplace_back(x, c);
      }
    }
  }
  return report;
}

namespace detail {

inline bool agent0_envies(const Schedule& s, const Instance& inst) {
  return inst.value(0, s.bundle(0)) < inst.value(0, s.bundle(1));
}

}  // namespace detail

/// Picks an EF1 and maximal schedule from a swap sequence: find where agent
/// 0's envy flips and test the two schedules there and their swaps.
inline Schedule select_ef1(const ScheduleSequence& sequence, const Instance& inst) {
  detail::require_two_agents(inst);
  if (sequence.steps.empty()) throw InputError(ErrorCode::kMalformedInput, "empty sequence");
  const ConflictGraph& g = inst.graph();
  auto good = [&](const Schedule& s) { return is_maximal(s, g) && check_ef1(s, inst).holds; };

  if (is_maximal(sequence.front(), g) && check_ef(sequence.front(), inst).holds) {
    return sequence.front();
  }
  std::vector<Schedule> candidates;
  bool before = detail::agent0_envies(sequence.steps.front(), inst);
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    const bool after = detail::agent0_envies(sequence.steps[i + 1], inst);
    if (after != before) {
      const auto& x = sequence.steps[i];
      const auto& y = sequence.steps[i + 1];
      candidates = {x, y, x.swapped(), y.swapped()};
      break;
    }
    before = after;
  }
  if (candidates.empty()) {
    // agent 0 is indifferent between the swapped endpoints
    candidates = {sequence.front(), sequence.back(), sequence.front().swapped(),
                  sequence.back().swapped()};
  }
  for (const auto& s : candidates) {
    if (good(s)) return s;
  }
  throw InvariantViolation("select_ef1: no EF1 candidate at the envy switchover");
}

/// EF1 and maximal schedule for two agents with monotone valuations on any
/// interval instance.
inline Schedule solve_two_agents(const Instance& inst) {
  detail::require_two_agents(inst);
  return select_ef1(interval_sequence_ef1(inst), inst);
}

/// Path-only variant built from the simpler colouring sequence.
inline Schedule solve_two_agents_path(const Instance& inst) {
  detail::require_two_agents(inst);
  return select_ef1(path_sequence(inst), inst);
}

}  // namespace chore_sched
