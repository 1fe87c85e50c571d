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

// JSON and text formats for instances, schedules, verdicts and sequences.
//
// Instance: {"agents": n, "chores": [{"id", "start", "finish", "label"}...],
//            "valuations": [[...], ...]}
//   or      {"agents": n, "path": m, "valuations": ...} for the path c_1-...-c_m.
// Schedule: {"assignment": {"0": 1, "1": null, ...}}

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chore_sched/checkers.hpp"
#include "chore_sched/core.hpp"
#include "chore_sched/n_agent.hpp"
#include "chore_sched/two_agent.hpp"
#include "json.hpp"

namespace chore_sched {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_field(const std::string& where, const std::string& what) {
  throw InputError(ErrorCode::kMalformedInput, where + ": " + what);
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad_field(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad_field(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad_field(where, "expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace detail

inline Instance instance_from_json(const json& doc) {
  const auto n = detail::integer(detail::field(doc, "agents", "instance"), "agents");
  if (n < 1) detail::bad_field("agents", "must be at least 1");
  const json& vals = detail::field(doc, "valuations", "instance");
  if (!vals.is_array()) detail::bad_field("valuations", "expected an array of rows");
  ValuationProfile::Table table;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const std::string where = "valuations[" + std::to_string(i) + "]";
    if (!vals[i].is_array()) detail::bad_field(where, "expected an array");
    std::vector<Value> row;
    for (std::size_t j = 0; j < vals[i].size(); ++j) {
      row.push_back(detail::integer(vals[i][j], where + "[" + std::to_string(j) + "]"));
    }
    table.push_back(std::move(row));
  }
  if (table.size() != static_cast<std::size_t>(n)) {
    detail::bad_field("valuations", "has " + std::to_string(table.size()) + " rows for " +
                                        std::to_string(n) + " agents");
  }
  const bool has_path = doc.contains("path");
  const bool has_chores = doc.contains("chores");
  if (has_path == has_chores) {
    detail::bad_field("instance", "give exactly one of \"chores\" and \"path\"");
  }
  if (has_path) {
    const auto m = detail::integer(doc["path"], "path");
    if (m < 1) detail::bad_field("path", "must be at least 1");
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i].size() != static_cast<std::size_t>(m)) {
        detail::bad_field("valuations[" + std::to_string(i) + "]",
                          "expected " + std::to_string(m) + " entries");
      }
    }
    return path_instance(table);
  }
  const json& list = doc["chores"];
  if (!list.is_array()) detail::bad_field("chores", "expected an array");
  std::vector<Chore> chores;
  for (std::size_t j = 0; j < list.size(); ++j) {
    const std::string where = "chores[" + std::to_string(j) + "]";
    Chore c;
    c.id = static_cast<ChoreId>(detail::integer(detail::field(list[j], "id", where), where + ".id"));
    c.start = detail::integer(detail::field(list[j], "start", where), where + ".start");
    c.finish = detail::integer(detail::field(list[j], "finish", where), where + ".finish");
    if (list[j].contains("label")) {
      if (!list[j]["label"].is_string()) detail::bad_field(where + ".label", "expected a string");
      c.label = list[j]["label"].get<std::string>();
    }
    chores.push_back(std::move(c));
  }
  // ids may be listed in any order
  std::sort(chores.begin(), chores.end(), [](const Chore& a, const Chore& b) { return a.id < b.id; });
  return Instance(static_cast<std::size_t>(n), std::move(chores),
                  ValuationProfile::additive(std::move(table)));
}

inline json instance_to_json(const Instance& inst) {
  if (!inst.valuations().is_additive()) {
    throw InputError(ErrorCode::kNotAdditive, "only additive instances can be written");
  }
  json chores = json::array();
  for (const auto& c : inst.chores()) {
    json item = {{"id", c.id}, {"start", c.start}, {"finish", c.finish}};
    if (!c.label.empty()) item["label"] = c.label;
    chores.push_back(std::move(item));
  }
  return {{"agents", inst.agent_count()},
          {"chores", std::move(chores)},
          {"valuations", inst.valuations().table()}};
}

inline json schedule_to_json(const Schedule& s) {
  json assignment = json::object();
  for (std::size_t c = 0; c < s.chore_count(); ++c) {
    const auto owner = s.owner(static_cast<ChoreId>(c));
    assignment[std::to_string(c)] = owner ? json(*owner) : json(nullptr);
  }
  return {{"assignment", std::move(assignment)}};
}

/// Chores missing from the assignment are unassigned.
inline Schedule schedule_from_json(const json& doc, const Instance& inst) {
  const json& assignment = detail::field(doc, "assignment", "schedule");
  if (!assignment.is_object()) detail::bad_field("assignment", "expected an object");
  Schedule s(inst.agent_count(), inst.chore_count());
  for (const auto& [key, value] : assignment.items()) {
    const std::string where = "assignment[\"" + key + "\"]";
    std::size_t used = 0;
    long long id = -1;
    try {
      id = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || id < 0) detail::bad_field(where, "key is not a chore id");
    if (static_cast<std::size_t>(id) >= inst.chore_count()) {
      throw InputError(ErrorCode::kUnknownId, where + ": no such chore");
    }
    if (value.is_null()) continue;
    const auto agent = detail::integer(value, where);
    if (agent < 0 || static_cast<std::size_t>(agent) >= inst.agent_count()) {
      throw InputError(ErrorCode::kUnknownId, where + ": no such agent");
    }
    s.assign(static_cast<ChoreId>(id), static_cast<AgentId>(agent));
  }
  return s;
}

inline json verdict_to_json(const FairnessVerdict& v) {
  json violations = json::array();
  for (const auto& x : v.violations) {
    violations.push_back(
        {{"envious", x.envious}, {"envied", x.envied}, {"removals_needed", x.removals_needed}});
  }
  json witnesses = json::array();
  for (const auto& w : v.witnesses) {
    witnesses.push_back({{"envious", w.envious}, {"envied", w.envied}, {"chores", w.chores}});
  }
  return {{"holds", v.holds}, {"violations", std::move(violations)},
          {"witnesses", std::move(witnesses)}};
}

inline json existence_to_json(const std::optional<Schedule>& witness) {
  return {{"exists", witness.has_value()},
          {"witness", witness ? schedule_to_json(*witness) : json(nullptr)}};
}

/// One character per chore (by id): R for agent 0, B for agent 1, N for
/// unassigned.
inline std::string color_row(const Schedule& s) {
  std::string row;
  for (AgentId a : s.raw()) row += color_letter(static_cast<Color>(a));
  return row;
}

inline std::string sequence_to_text(const ScheduleSequence& seq,
                                    const std::vector<std::optional<CompletionHint>>& hints = {}) {
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out << color_row(seq.steps[i]) << "  " << to_string(seq.tags[i]);
    if (i < hints.size() && hints[i]) {
      out << "  +c" << hints[i]->chore << "->" << color_letter(static_cast<Color>(hints[i]->agent));
    }
    out << '\n';
  }
  return out.str();
}

inline json sequence_to_json(const ScheduleSequence& seq,
                             const std::vector<std::optional<CompletionHint>>& hints = {}) {
  json steps = json::array();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    json step = {{"colors", color_row(seq.steps[i])}, {"tag", to_string(seq.tags[i])}};
    if (i < hints.size()) {
      step["hint"] = hints[i] ? json{{"chore", hints[i]->chore}, {"agent", hints[i]->agent}}
                              : json(nullptr);
    }
    steps.push_back(std::move(step));
  }
  return {{"steps", std::move(steps)}};
}

/// The padded instance of the dichotomous-path solver, dummies flagged.
inline json dichotomous_trace_to_json(const DichotomousPathTrace& t) {
  json chores = json::array();
  for (const auto& c : t.padded.chores()) {
    chores.push_back({{"id", c.id},
                      {"start", c.start},
                      {"finish", c.finish},
                      {"value", t.padded.valuations().value(0, c.id)},
                      {"owner", *t.padded_schedule.owner(c.id)},
                      {"dummy", static_cast<bool>(t.dummy[static_cast<std::size_t>(c.id)])}});
  }
  json meta = json::array();
  for (const auto& s : t.meta) {
    meta.push_back({{"index", s.index},
                    {"members", s.members},
                    {"picks", s.picks},
                    {"dummy_heavy", s.dummy_heavy},
                    {"dummy_light", s.dummy_light}});
  }
  return {{"meta_agents", std::move(meta)}, {"padded_chores", std::move(chores)}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(ErrorCode::kMalformedInput, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(ErrorCode::kMalformedInput, path + ": " + e.what());
  }
}

}  // namespace chore_sched
