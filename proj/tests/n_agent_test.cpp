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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chore_sched/checkers.hpp"
#include "chore_sched/generate.hpp"
#include "chore_sched/n_agent.hpp"
#include "oracles.hpp"

namespace chore_sched {
namespace {

constexpr Value kH = -5;
constexpr Value kL = -2;

/// Identical-valuation instance from (start, finish, value) triples.
Instance make(std::size_t n, std::vector<std::tuple<TimePoint, TimePoint, Value>> triples) {
  std::vector<Chore> cs;
  std::vector<Value> row;
  for (std::size_t j = 0; j < triples.size(); ++j) {
    cs.push_back({static_cast<ChoreId>(j), std::get<0>(triples[j]), std::get<1>(triples[j]), {}});
    row.push_back(std::get<2>(triples[j]));
  }
  return Instance(n, std::move(cs), ValuationProfile::additive(ValuationProfile::Table(n, row)));
}

std::vector<ChoreId> all_ids(const Instance& inst) {
  std::vector<ChoreId> ids(inst.chore_count());
  for (std::size_t j = 0; j < ids.size(); ++j) ids[j] = static_cast<ChoreId>(j);
  return ids;
}

std::pair<int, int> type_counts(const Instance& inst, const std::vector<ChoreId>& bundle) {
  int h = 0;
  int l = 0;
  for (ChoreId c : bundle) (inst.value(0, c) == kH ? h : l)++;
  return {h, l};
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no InputError thrown";
  return ErrorCode::kMalformedInput;
}

TEST(EnvyGraph, Definition) {
  const Instance inst = make(2, {{0, 1, -3}, {2, 3, -1}});
  const auto g = envy_graph(Schedule::from_bundles(2, {{0}, {1}}), inst);
  EXPECT_TRUE(g.envies(0, 1));
  EXPECT_FALSE(g.envies(1, 0));
  EXPECT_EQ(g.edges().size(), 1u);
  const Instance flat = make(2, {{0, 1, -2}, {2, 3, -2}});
  EXPECT_TRUE(envy_graph(Schedule::from_bundles(2, {{0}, {1}}), flat).edges().empty());
}

TEST(EnvyGraph, CycleHasNoOrder) {
  EnvyGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(g.topological_order(), (std::vector<AgentId>{0, 1, 2}));
  g.add_edge(2, 0);
  EXPECT_FALSE(g.is_acyclic());
}

TEST(EnvyGraph, IdenticalValuationsAreAcyclic) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + t % 4;
    const Instance inst = testing::random_instance(rng, n, 1 + t % 10, true);
    Schedule s(n, inst.chore_count());
    std::uniform_int_distribution<AgentId> pick(-1, static_cast<AgentId>(n) - 1);
    for (ChoreId c = 0; c < static_cast<ChoreId>(inst.chore_count()); ++c) {
      const AgentId a = pick(rng);
      if (a >= 0 && fits(s, inst.graph(), c, a)) s.assign(c, a);
    }
    ASSERT_TRUE(envy_graph(s, inst).is_acyclic());
  }
}

TEST(SplitPair, TwoEdges) {
  const Instance inst = make(2, {{0, 2, kH}, {1, 3, kL}, {10, 12, kH}, {11, 13, kL}});
  const auto [a, b] = split_pair_bundle(all_ids(inst), inst);
  EXPECT_EQ(type_counts(inst, a), std::make_pair(1, 1));
  EXPECT_EQ(type_counts(inst, b), std::make_pair(1, 1));
  EXPECT_TRUE(inst.graph().independent(a));
  EXPECT_TRUE(inst.graph().independent(b));
}

TEST(SplitPair, IsolatedOnly) {
  const Instance inst = make(2, {{0, 1, kH}, {2, 3, kH}, {4, 5, kL}, {6, 7, kL}});
  const auto [a, b] = split_pair_bundle(all_ids(inst), inst);
  EXPECT_EQ(type_counts(inst, a), std::make_pair(1, 1));
  EXPECT_EQ(type_counts(inst, b), std::make_pair(1, 1));
}

TEST(SplitPair, OddEdgeCountCompensates) {
  // edge H(0)-L(1), isolated H(2), isolated L(3)
  const Instance inst = make(2, {{0, 2, kH}, {1, 3, kL}, {10, 11, kH}, {20, 21, kL}});
  const auto [a, b] = split_pair_bundle(all_ids(inst), inst);
  EXPECT_EQ(a, (std::vector<ChoreId>{0, 3}));
  EXPECT_EQ(b, (std::vector<ChoreId>{1, 2}));
}

TEST(SplitPair, RejectsLongerPaths) {
  const Instance inst = make(2, {{0, 2, kH}, {1, 3, kL}, {2, 4, kH}, {3, 5, kL}});
  EXPECT_THROW(split_pair_bundle(all_ids(inst), inst), InvariantViolation);
}

TEST(SplitTriple, PathOfThree) {
  const Instance inst = make(3, {{0, 2, kH}, {1, 3, kH}, {2, 4, kH}, {50, 51, kL}});
  const std::vector<ChoreId> picked{0, 1, 2};
  const auto parts = split_triple_bundle(picked, inst);
  for (const auto& p : parts) EXPECT_EQ(p.size(), 1u);
}

TEST(SplitTriple, PathOfFourGivesOneAgentBothEnds) {
  // H L H L path topped up by one dummy of each type
  const Instance inst =
      make(3, {{0, 2, kH}, {1, 3, kL}, {2, 4, kH}, {3, 5, kL}, {20, 21, kH}, {30, 31, kL}});
  const std::vector<bool> dummy{false, false, false, false, true, true};
  const auto parts = split_triple_bundle(all_ids(inst), inst, dummy);
  EXPECT_EQ(parts[0], (std::vector<ChoreId>{0, 3}));
  for (const auto& p : parts) {
    EXPECT_EQ(type_counts(inst, p), std::make_pair(1, 1));
    EXPECT_TRUE(inst.graph().independent(p));
  }
}

TEST(SplitTriple, IsolatedChores) {
  const Instance inst =
      make(3, {{0, 1, kH}, {2, 3, kH}, {4, 5, kH}, {6, 7, kL}, {8, 9, kL}, {10, 11, kL}});
  for (const auto& p : split_triple_bundle(all_ids(inst), inst)) {
    EXPECT_EQ(type_counts(inst, p), std::make_pair(1, 1));
  }
}

TEST(SplitTriple, RejectsPathOfFive) {
  const Instance inst = make(3, {{0, 2, kH}, {1, 3, kH}, {2, 4, kH}, {3, 5, kL}, {4, 6, kL},
                                 {40, 41, kL}});
  EXPECT_THROW(split_triple_bundle(all_ids(inst), inst), InvariantViolation);
}

TEST(Dichotomous, AllHeavyEvenSplit) {
  const Instance inst = path_instance(ValuationProfile::Table(4, std::vector<Value>(8, -5)));
  const auto s = solve_identical_dichotomous_path(inst, true);
  for (const auto& b : s.bundles()) EXPECT_EQ(b.size(), 2u);
  EXPECT_TRUE(is_complete(s));
  EXPECT_TRUE(check_ef(s, inst).holds);
  // a single repeated value needs the explicit flag
  EXPECT_EQ(code_of([&] { solve_identical_dichotomous_path(inst); }), ErrorCode::kNotDichotomous);
}

TEST(Dichotomous, NoChores) {
  const Instance inst(4, {}, ValuationProfile::additive(ValuationProfile::Table(4)));
  const auto s = solve_identical_dichotomous_path(inst);
  EXPECT_EQ(s.chore_count(), 0u);
  EXPECT_TRUE(check_ef1(s, inst).holds);
}

TEST(Dichotomous, InputErrors) {
  EXPECT_EQ(code_of([] { solve_identical_dichotomous_path(path_instance({{-1, -2}, {-1, -2},
                                                                          {-1, -2}})); }),
            ErrorCode::kWrongAgentCount);
  EXPECT_EQ(code_of([] {
              solve_identical_dichotomous_path(make(4, {{0, 3, -1}, {0, 1, -2}, {1, 2, -1},
                                                        {2, 3, -2}}));
            }),
            ErrorCode::kNotPathGraph);
  EXPECT_EQ(code_of([] {
              solve_identical_dichotomous_path(
                  path_instance({{-1, -2}, {-1, -2}, {-1, -2}, {-2, -1}}));
            }),
            ErrorCode::kNotIdentical);
  EXPECT_EQ(code_of([] {
              solve_identical_dichotomous_path(
                  path_instance(ValuationProfile::Table(4, {-1, -2, -3})));
            }),
            ErrorCode::kNotDichotomous);
}

TEST(Dichotomous, GroupingAndPickingSequence) {
  const auto odd = detail::group_agents(5);
  ASSERT_EQ(odd.size(), 2u);
  EXPECT_EQ(odd[0].members, (std::vector<AgentId>{0, 1, 2}));
  EXPECT_EQ(detail::picking_sequence(odd), (std::vector<int>{0, 1, 0, 1, 0}));
  const auto even = detail::group_agents(6);
  EXPECT_EQ(even.size(), 3u);
  EXPECT_EQ(detail::picking_sequence(even), (std::vector<int>{0, 1, 2, 0, 1, 2}));
}

TEST(Dichotomous, RandomPathsAllAgentCounts) {
  for (std::size_t n = 4; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      GeneratorParams p;
      p.agents = n;
      p.chores = 2 + seed % 13;
      const Instance inst = generate_instance(InstanceKind::kRandomDichotomousPath, p, seed);
      const auto trace = solve_identical_dichotomous_path_traced(inst);
      const auto& s = trace.schedule;
      ASSERT_TRUE(is_complete(s));
      ASSERT_TRUE(check_ef1(s, inst).holds);
      ASSERT_TRUE(check_ef(trace.padded_schedule, trace.padded).holds);
      const Value heavy = inst.valuations().dichotomy()->heavy;
      std::vector<int> hc;
      std::vector<int> lc;
      for (const auto& b : s.bundles()) {
        int h = 0;
        for (ChoreId c : b) h += inst.value(0, c) == heavy;
        hc.push_back(h);
        lc.push_back(static_cast<int>(b.size()) - h);
      }
      ASSERT_LE(*std::max_element(hc.begin(), hc.end()) - *std::min_element(hc.begin(), hc.end()), 1);
      ASSERT_LE(*std::max_element(lc.begin(), lc.end()) - *std::min_element(lc.begin(), lc.end()), 1);
    }
  }
}

TEST(BoundedComponents, EdgelessIsRoundRobin) {
  const Instance inst = make(3, {{0, 1, -1}, {2, 3, -7}, {4, 5, -3}, {6, 7, -2}});
  const auto s = solve_identical_bounded_components(inst);
  EXPECT_TRUE(check_ef1(s, inst).holds);
  EXPECT_TRUE(is_complete(s));
}

TEST(BoundedComponents, RejectsOversizedAndNonIdentical) {
  EXPECT_EQ(code_of([] {
              solve_identical_bounded_components(path_instance({{-1, -1, -1}, {-1, -1, -1}}));
            }),
            ErrorCode::kOversizedComponent);
  EXPECT_EQ(code_of([] { solve_identical_bounded_components(path_instance({{-1}, {-2}})); }),
            ErrorCode::kNotIdentical);
}

TEST(BoundedComponents, TwoAgentsAgreeWithOracle) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 300; ++t) {
    GeneratorParams p;
    p.agents = 2;
    p.chores = 1 + t % 9;
    const Instance inst = generate_instance(InstanceKind::kBoundedComponents, p, rng());
    const auto s = solve_identical_bounded_components(inst);
    ASSERT_TRUE(testing::naive_maximal(inst, s.raw()));
    ASSERT_TRUE(testing::naive_efk(inst, s.raw(), 1));
  }
}

TEST(BoundedComponents, RandomComponentsStayFair) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      GeneratorParams p;
      p.agents = n;
      p.chores = 1 + seed % 12;
      const Instance inst = generate_instance(InstanceKind::kBoundedComponents, p, seed);
      const auto trace = solve_identical_bounded_components_traced(inst);
      for (const auto& g : trace.envy) ASSERT_TRUE(g.is_acyclic());
      ASSERT_TRUE(check_ef1(trace.schedule, inst).holds);
      ASSERT_TRUE(is_maximal(trace.schedule, inst.graph()));
      for (const auto& comp : inst.graph().components()) {
        std::vector<AgentId> owners;
        for (ChoreId c : comp) owners.push_back(*trace.schedule.owner(c));
        std::sort(owners.begin(), owners.end());
        ASSERT_EQ(std::adjacent_find(owners.begin(), owners.end()), owners.end());
      }
    }
  }
}

}  // namespace
}  // namespace chore_sched
