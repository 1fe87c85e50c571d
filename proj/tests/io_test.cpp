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

#include "chore_sched/generate.hpp"
#include "chore_sched/io.hpp"
#include "chore_sched/oracle.hpp"
#include "oracles.hpp"

namespace chore_sched {
namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    instance_from_json(json::parse(text));
  } catch (const InputError& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kMalformedInput;
}

std::string message_of(const std::string& text) {
  try {
    instance_from_json(json::parse(text));
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceJson, ChoresForm) {
  const auto inst = instance_from_json(json::parse(R"({
    "agents": 2,
    "chores": [{"id": 1, "start": 1, "finish": 3}, {"id": 0, "start": 0, "finish": 2, "label": "x"}],
    "valuations": [[-1, -2], [-3, 0]]})"));
  EXPECT_EQ(inst.chore_count(), 2u);
  EXPECT_EQ(inst.chore(0).label, "x");
  EXPECT_EQ(inst.chore(1).start, 1);
  EXPECT_EQ(inst.value(1, 0), -3);
  EXPECT_TRUE(inst.graph().adjacent(0, 1));
}

TEST(InstanceJson, PathForm) {
  const auto inst =
      instance_from_json(json::parse(R"({"agents": 2, "path": 4, "valuations": [[-1,-1,-1,-4],[-1,-1,-1,-4]]})"));
  EXPECT_TRUE(inst.graph().is_path());
  EXPECT_EQ(inst.chore(2).start, 2);
}

TEST(InstanceJson, Diagnostics) {
  EXPECT_EQ(parse_error(R"({"path": 2, "valuations": [[-1,-1]]})"), ErrorCode::kMalformedInput);
  EXPECT_NE(message_of(R"({"path": 2, "valuations": [[-1,-1]]})").find("agents"), std::string::npos);
  EXPECT_NE(message_of(R"({"agents": 1, "path": 2, "valuations": [[-1,"a"]]})").find("valuations[0][1]"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"agents": 1, "chores": [{"id": 0, "start": 0}], "valuations": [[-1]]})")
                .find("chores[0]"),
            std::string::npos);
  EXPECT_EQ(parse_error(R"({"agents": 2, "path": 2, "valuations": [[-1,-1]]})"),
            ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error(R"({"agents": 1, "path": 2, "chores": [], "valuations": [[-1,-1]]})"),
            ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error(R"({"agents": 1, "chores": [{"id": 0, "start": 2, "finish": 1}], "valuations": [[-1]]})"),
            ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error(R"({"agents": 1, "chores": [{"id": 3, "start": 0, "finish": 1}], "valuations": [[-1]]})"),
            ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error(R"({"agents": 1, "path": 1, "valuations": [[2]]})"), ErrorCode::kMalformedInput);
}

TEST(InstanceJson, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = testing::random_instance(rng, 1 + t % 4, 1 + t % 12);
    const json doc = instance_to_json(inst);
    const Instance back = instance_from_json(json::parse(doc.dump()));
    EXPECT_EQ(back.chores(), inst.chores());
    EXPECT_EQ(back.valuations().table(), inst.valuations().table());
    EXPECT_EQ(instance_to_json(back), doc);
  }
}

TEST(ScheduleJson, RoundTripAndMissingChores) {
  const Instance inst = golden::ef1_po();
  const auto s = Schedule::from_bundles(5, {{0, 4}, {2}});
  const json doc = schedule_to_json(s);
  EXPECT_TRUE(doc["assignment"]["1"].is_null());
  EXPECT_EQ(doc["assignment"]["4"], 0);
  EXPECT_EQ(schedule_from_json(json::parse(doc.dump()), inst), s);
  const auto partial = schedule_from_json(json::parse(R"({"assignment": {"2": 1}})"), inst);
  EXPECT_EQ(partial.unassigned().size(), 4u);
}

TEST(ScheduleJson, UnknownIds) {
  const Instance inst = golden::ef1_po();
  auto code = [&](const char* text) {
    try {
      schedule_from_json(json::parse(text), inst);
    } catch (const InputError& e) {
      return e.code();
    }
    return ErrorCode::kMalformedInput;
  };
  EXPECT_EQ(code(R"({"assignment": {"9": 0}})"), ErrorCode::kUnknownId);
  EXPECT_EQ(code(R"({"assignment": {"0": 2}})"), ErrorCode::kUnknownId);
  EXPECT_EQ(code(R"({"assignment": {"x": 0}})"), ErrorCode::kMalformedInput);
  EXPECT_EQ(code(R"({"nothing": 1})"), ErrorCode::kMalformedInput);
}

TEST(VerdictJson, Fields) {
  const Instance inst = golden::ef1_po();
  const json v = verdict_to_json(check_ef1(Schedule::from_bundles(5, {{0, 4}, {2}}), inst));
  EXPECT_FALSE(v["holds"]);
  EXPECT_EQ(v["violations"][0]["envious"], 0);
  EXPECT_EQ(v["violations"][0]["envied"], 1);
  EXPECT_EQ(v["violations"][0]["removals_needed"], 2);
  const json none = existence_to_json(std::nullopt);
  EXPECT_FALSE(none["exists"]);
  EXPECT_TRUE(none["witness"].is_null());
}

TEST(SequenceText, FigureRows) {
  const Instance inst = path_instance({{-1, -1, -1}, {-1, -1, -1}});
  const auto text = sequence_to_text(path_sequence(inst));
  EXPECT_EQ(text.substr(0, 3), "RBR");
  EXPECT_NE(text.find("BNR"), std::string::npos);
  const json doc = sequence_to_json(path_sequence(inst));
  EXPECT_EQ(doc["steps"].size(), 3u);
  EXPECT_EQ(doc["steps"][2]["colors"], "BRB");
}

TEST(DichotomousTraceJson, FlagsDummies) {
  GeneratorParams p;
  p.agents = 5;
  p.chores = 7;
  const Instance inst = generate_instance(InstanceKind::kRandomDichotomousPath, p, 3);
  const auto trace = solve_identical_dichotomous_path_traced(inst);
  const json doc = dichotomous_trace_to_json(trace);
  std::size_t dummies = 0;
  for (const auto& c : doc["padded_chores"]) dummies += c["dummy"].get<bool>();
  EXPECT_EQ(doc["padded_chores"].size(), inst.chore_count() + dummies);
  EXPECT_EQ(doc["meta_agents"].size(), 2u);
}

TEST(Generate, Deterministic) {
  GeneratorParams p;
  p.chores = 6;
  const auto a = instance_to_json(generate_instance(InstanceKind::kRandomPath, p, 7)).dump();
  const auto b = instance_to_json(generate_instance(InstanceKind::kRandomPath, p, 7)).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, instance_to_json(generate_instance(InstanceKind::kRandomPath, p, 8)).dump());
}

TEST(Generate, KindsMeetTheirConstraints) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorParams p;
    p.agents = 5;
    p.chores = 2 + seed % 12;
    const auto d = generate_instance(InstanceKind::kRandomDichotomousPath, p, seed);
    ASSERT_TRUE(d.valuations().dichotomy());
    ASSERT_TRUE(d.valuations().is_identical());
    ASSERT_TRUE(d.graph().is_path());
    p.agents = 3;
    const auto b = generate_instance(InstanceKind::kBoundedComponents, p, seed);
    for (const auto& comp : b.graph().components()) ASSERT_LE(comp.size(), 3u);
    ASSERT_TRUE(b.valuations().is_identical());
    const auto r = generate_instance(InstanceKind::kRandomIntervals, p, seed);
    ASSERT_EQ(r.chore_count(), p.chores);
  }
}

TEST(Generate, RejectsInconsistentParams) {
  GeneratorParams p;
  p.agents = 3;
  p.max_component = 4;
  EXPECT_THROW(generate_instance(InstanceKind::kBoundedComponents, p, 1), InputError);
  p.max_component = 0;
  p.chores = 1;
  EXPECT_THROW(generate_instance(InstanceKind::kRandomDichotomousPath, p, 1), InputError);
  p.chores = 4;
  p.max_value = 2;
  EXPECT_THROW(generate_instance(InstanceKind::kRandomPath, p, 1), InputError);
  EXPECT_FALSE(parse_instance_kind("random-tree"));
}

}  // namespace
}  // namespace chore_sched
