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

#include <random>
#include <set>

#include "chore_sched/checkers.hpp"
#include "chore_sched/enumerate.hpp"
#include "oracles.hpp"

namespace chore_sched {
namespace {

TEST(Enumerate, OneChoreTwoAgents) {
  const auto all = enumerate_maximal(path_instance({{-1}, {-1}}));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].raw(), (std::vector<AgentId>{0}));
  EXPECT_EQ(all[1].raw(), (std::vector<AgentId>{1}));
}

TEST(Enumerate, TriangleLeavesOneChoreOut) {
  const Instance inst(2, {{0, 0, 3, {}}, {1, 1, 4, {}}, {2, 2, 5, {}}},
                      ValuationProfile::additive({{-1, -1, -1}, {-1, -1, -1}}));
  const auto all = enumerate_maximal(inst);
  EXPECT_EQ(all.size(), 6u);
  for (const auto& s : all) {
    EXPECT_EQ(s.unassigned().size(), 1u);
    EXPECT_FALSE(is_complete(s));
  }
}

TEST(Enumerate, PathOfFourMatchesRecount) {
  const Instance inst = path_instance({{-1, -1, -1, -1}, {-1, -1, -1, -1}});
  EXPECT_EQ(enumerate_maximal(inst).size(), testing::naive_maximal_schedules(inst).size());
}

TEST(Enumerate, EmptyInstanceHasOneSchedule) {
  const Instance inst(2, {}, ValuationProfile::additive({{}, {}}));
  EXPECT_EQ(enumerate_maximal(inst).size(), 1u);
}

TEST(Enumerate, GuardRejectsLargeInstances) {
  const Instance inst = path_instance({std::vector<Value>(17, -1)});
  try {
    enumerate_maximal(inst);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardExceeded);
  }
  EXPECT_NO_THROW(enumerate_maximal(path_instance({std::vector<Value>(3, -1)}), 3));
}

TEST(Enumerate, MatchesNaiveEnumeratorExactly) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const std::size_t m = 1 + trial % (n == 2 ? 10 : 7);
    const Instance inst = testing::random_instance(rng, n, m);
    const auto fast = enumerate_maximal(inst);
    const auto slow = testing::naive_maximal_schedules(inst);
    ASSERT_EQ(fast.size(), slow.size());
    std::set<std::vector<AgentId>> seen;
    for (std::size_t i = 0; i < fast.size(); ++i) {
      ASSERT_EQ(fast[i].raw(), slow[i]);
      ASSERT_TRUE(is_feasible(fast[i], inst.graph()));
      ASSERT_TRUE(is_maximal(fast[i], inst.graph()));
      ASSERT_TRUE(seen.insert(fast[i].raw()).second);
    }
  }
}

TEST(Enumerate, VisitorStopsEarly) {
  const Instance inst = path_instance({{-1, -1, -1, -1}, {-1, -1, -1, -1}});
  int visits = 0;
  for_each_maximal(inst, [&](const Schedule&) { return ++visits < 3; });
  EXPECT_EQ(visits, 3);
}

}  // namespace
}  // namespace chore_sched
