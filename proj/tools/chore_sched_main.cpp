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

// chore-sched: solve, check and explore interval chore scheduling instances.
//
// Exit codes: 0 success, 1 criterion fails or no schedule exists, 2 bad input,
// 3 internal invariant violated.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chore_sched/checkers.hpp"
#include "chore_sched/core.hpp"
#include "chore_sched/enumerate.hpp"
#include "chore_sched/generate.hpp"
#include "chore_sched/io.hpp"
#include "chore_sched/n_agent.hpp"
#include "chore_sched/oracle.hpp"
#include "chore_sched/two_agent.hpp"

namespace {

using namespace chore_sched;

enum class Format { kText, kJson };

struct Options {
  std::string instance_path;
  std::string schedule_path;
  std::string algo = "auto";
  std::string criterion = "ef1";
  std::string sequence_kind = "interval";
  std::string demo;
  std::string kind;
  std::size_t guard = kDefaultGuard;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string out;
  GeneratorParams gen;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError(ErrorCode::kMalformedInput, path + ": cannot write");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string chore_name(const Instance& inst, ChoreId c) {
  const auto& label = inst.chore(c).label;
  return label.empty() ? "c" + std::to_string(c + 1) : label;
}

std::string agent_name(AgentId a) { return "a" + std::to_string(a + 1); }

void print_schedule(std::ostream& out, const Schedule& s, const Instance& inst) {
  const auto bundles = s.bundles();
  for (std::size_t a = 0; a < bundles.size(); ++a) {
    out << agent_name(static_cast<AgentId>(a)) << ": {";
    for (std::size_t t = 0; t < bundles[a].size(); ++t) {
      out << (t ? ", " : "") << chore_name(inst, bundles[a][t]);
    }
    out << "}  value " << inst.value(static_cast<AgentId>(a), bundles[a]) << '\n';
  }
  const auto rest = s.unassigned();
  if (!rest.empty()) {
    out << "unassigned: {";
    for (std::size_t t = 0; t < rest.size(); ++t) {
      out << (t ? ", " : "") << chore_name(inst, rest[t]);
    }
    out << "}\n";
  }
}

void print_verdict(std::ostream& out, const std::string& name, const FairnessVerdict& v) {
  out << name << ": " << (v.holds ? "holds" : "fails") << '\n';
  for (const auto& x : v.violations) {
    out << "  " << agent_name(x.envious) << " envies " << agent_name(x.envied) << " (needs "
        << x.removals_needed << " removals)\n";
  }
}

void print_instance(std::ostream& out, const Instance& inst) {
  out << inst.agent_count() << " agents, " << inst.chore_count() << " chores\n";
  for (const auto& c : inst.chores()) {
    out << "  " << chore_name(inst, c.id) << " [" << c.start << ", " << c.finish << ")";
    for (std::size_t a = 0; a < inst.agent_count(); ++a) {
      out << ' ' << inst.value(static_cast<AgentId>(a), c.id);
    }
    out << '\n';
  }
}

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

std::string pick_algorithm(const Instance& inst) {
  const auto& vals = inst.valuations();
  if (inst.agent_count() == 2) return "two-agent-interval";
  const bool identical = vals.is_additive() && vals.is_identical();
  if (identical && inst.agent_count() >= 4 && inst.graph().is_path() &&
      (inst.chore_count() == 0 || vals.dichotomy(true))) {
    return "dichotomous-path";
  }
  if (identical) {
    bool bounded = true;
    for (const auto& comp : inst.graph().components()) {
      if (comp.size() > inst.agent_count()) bounded = false;
    }
    if (bounded) return "bounded-components";
  }
  throw InputError(ErrorCode::kMalformedInput,
                   "no algorithm applies: need 2 agents, an identical dichotomous path with at "
                   "least 4 agents, or identical values with components of at most n chores");
}

int run_solve(const Options& o, Format fmt, std::ostream& out) {
  const Instance inst = load_instance(o.instance_path);
  const std::string algo = o.algo == "auto" ? pick_algorithm(inst) : o.algo;
  Schedule s;
  if (algo == "two-agent-interval") {
    s = solve_two_agents(inst);
  } else if (algo == "two-agent-path") {
    s = solve_two_agents_path(inst);
  } else if (algo == "dichotomous-path") {
    s = solve_identical_dichotomous_path(inst, true);
  } else if (algo == "bounded-components") {
    s = solve_identical_bounded_components(inst);
  } else {
    throw InputError(ErrorCode::kMalformedInput, "--algo: unknown algorithm '" + algo + "'");
  }
  const auto ef1 = check_ef1(s, inst);
  const bool maximal = is_maximal(s, inst.graph());
  if (fmt == Format::kJson) {
    json doc = schedule_to_json(s);
    doc["algorithm"] = algo;
    doc["ef1"] = verdict_to_json(ef1);
    doc["maximal"] = maximal;
    out << doc.dump(2) << '\n';
  } else {
    out << "algorithm: " << algo << '\n';
    print_schedule(out, s, inst);
    print_verdict(out, "EF1", ef1);
    out << "maximal: " << (maximal ? "yes" : "no") << '\n';
  }
  return ef1.holds && maximal ? 0 : 1;
}

int run_check(const Options& o, Format fmt, std::ostream& out) {
  const Instance inst = load_instance(o.instance_path);
  const Schedule s = schedule_from_json(read_json_file(o.schedule_path), inst);
  if (!is_feasible(s, inst.graph())) {
    throw InputError(ErrorCode::kInfeasibleSchedule, o.schedule_path +
                                                         ": a bundle holds overlapping chores");
  }
  const bool maximal = is_maximal(s, inst.graph());
  bool holds = false;
  json doc;
  std::ostringstream text;
  if (o.criterion == "maximal") {
    holds = maximal;
  } else if (o.criterion == "complete") {
    holds = is_complete(s);
  } else if (o.criterion == "po") {
    holds = is_pareto_optimal(s, inst, o.guard);
  } else {
    const auto q = parse_criterion(o.criterion);
    if (!q) throw InputError(ErrorCode::kMalformedInput, "--criterion: unknown '" + o.criterion + "'");
    FairnessVerdict v;
    switch (q->criterion) {
      case Criterion::kEf: v = check_ef(s, inst); break;
      case Criterion::kEfx: v = check_efx(s, inst); break;
      case Criterion::kEfk: v = check_efk(s, inst, q->k); break;
      default: v = check_ef1(s, inst); break;
    }
    holds = v.holds;
    if (q->criterion == Criterion::kEf1Po) holds = holds && is_pareto_optimal(s, inst, o.guard);
    if (q->criterion == Criterion::kEf1Complete) holds = holds && is_complete(s);
    doc["verdict"] = verdict_to_json(v);
    print_verdict(text, to_string(*q), v);
  }
  if (fmt == Format::kJson) {
    doc["criterion"] = o.criterion;
    doc["holds"] = holds;
    doc["maximal"] = maximal;
    out << doc.dump(2) << '\n';
  } else {
    print_schedule(out, s, inst);
    out << text.str() << o.criterion << ": " << (holds ? "holds" : "fails") << '\n';
    out << "maximal: " << (maximal ? "yes" : "no") << '\n';
  }
  return holds ? 0 : 1;
}

ExistenceQuery query_from(const Options& o) {
  auto q = parse_criterion(o.criterion);
  if (!q) throw InputError(ErrorCode::kMalformedInput, "--criterion: unknown '" + o.criterion + "'");
  q->guard = o.guard;
  return *q;
}

int report_existence(const Instance& inst, const ExistenceQuery& q, Format fmt, std::ostream& out,
                     bool show_instance) {
  const auto witness = exists(inst, q);
  if (fmt == Format::kJson) {
    json doc = existence_to_json(witness);
    doc["criterion"] = to_string(q);
    if (show_instance) doc["instance"] = instance_to_json(inst);
    out << doc.dump(2) << '\n';
  } else {
    if (show_instance) print_instance(out, inst);
    out << "criterion: " << to_string(q) << " and maximal\n";
    out << "exists: " << (witness ? "true" : "false") << '\n';
    if (witness) print_schedule(out, *witness, inst);
  }
  return witness ? 0 : 1;
}

int run_exists(const Options& o, Format fmt, std::ostream& out) {
  return report_existence(load_instance(o.instance_path), query_from(o), fmt, out, false);
}

int run_enumerate(const Options& o, Format fmt, std::ostream& out) {
  const Instance inst = load_instance(o.instance_path);
  const auto all = enumerate_maximal(inst, o.guard);
  if (fmt == Format::kJson) {
    json list = json::array();
    for (const auto& s : all) list.push_back(schedule_to_json(s));
    out << json{{"count", all.size()}, {"schedules", std::move(list)}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) {
      out << "#" << i + 1 << '\n';
      print_schedule(out, all[i], inst);
    }
    out << all.size() << " maximal schedules\n";
  }
  return 0;
}

int run_sequence(const Options& o, Format fmt, std::ostream& out) {
  const Instance inst = load_instance(o.instance_path);
  ScheduleSequence seq;
  std::vector<std::optional<CompletionHint>> hints;
  if (o.sequence_kind == "interval") {
    seq = interval_sequence_ef1(inst);
  } else if (o.sequence_kind == "path") {
    seq = path_sequence(inst);
  } else if (o.sequence_kind == "ef2") {
    auto ef2 = interval_sequence_ef2(inst);
    seq = std::move(ef2.sequence);
    hints = std::move(ef2.hints);
  } else {
    throw InputError(ErrorCode::kMalformedInput,
                     "--kind: expected interval, path or ef2, got '" + o.sequence_kind + "'");
  }
  if (fmt == Format::kJson) {
    out << sequence_to_json(seq, hints).dump(2) << '\n';
  } else {
    out << sequence_to_text(seq, hints);
  }
  return 0;
}

int report_demo(const std::string& name, const Instance& inst, const DemoOutcome& r, Format fmt,
                std::ostream& out) {
  if (fmt == Format::kJson) {
    json doc = schedule_to_json(r.schedule);
    doc["demo"] = name;
    doc["instance"] = instance_to_json(inst);
    doc["ef1"] = verdict_to_json(r.ef1);
    out << doc.dump(2) << '\n';
  } else {
    print_instance(out, inst);
    print_schedule(out, r.schedule, inst);
    print_verdict(out, "EF1", r.ef1);
  }
  return r.ef1.holds ? 0 : 1;
}

int run_demo(const Options& o, Format fmt, std::ostream& out) {
  ExistenceQuery q;
  q.guard = o.guard;
  if (o.demo == "efx-maximal") {
    q.criterion = Criterion::kEfx;
    return report_existence(golden::efx_maximal(), q, fmt, out, true);
  }
  if (o.demo == "ef1-po") {
    q.criterion = Criterion::kEf1Po;
    return report_existence(golden::ef1_po(), q, fmt, out, true);
  }
  if (o.demo == "ef1-complete") {
    q.criterion = Criterion::kEf1Complete;
    return report_existence(golden::ef1_complete(), q, fmt, out, true);
  }
  if (o.demo == "round-robin") {
    const Instance inst = golden::round_robin();
    return report_demo(o.demo, inst, demo_round_robin(inst, {0, 1}), fmt, out);
  }
  if (o.demo == "envy-cycle") {
    const Instance inst = golden::envy_cycle();
    return report_demo(o.demo, inst, demo_top_trading_envy_cycle(inst), fmt, out);
  }
  throw InputError(ErrorCode::kMalformedInput, "demo: unknown name '" + o.demo + "'");
}

int run_generate(const Options& o, std::ostream& out) {
  const auto kind = parse_instance_kind(o.kind);
  if (!kind) throw InputError(ErrorCode::kMalformedInput, "generate: unknown kind '" + o.kind + "'");
  out << instance_to_json(generate_instance(*kind, o.gen, o.seed)).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair scheduling of interval chores"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write results to this file instead of stdout");

  auto* solve = app.add_subcommand("solve", "Compute an EF1 and maximal schedule");
  solve->add_option("instance", o.instance_path)->required();
  solve->add_option("--algo", o.algo, "Algorithm")
      ->check(CLI::IsMember({"auto", "two-agent-interval", "two-agent-path", "dichotomous-path",
                             "bounded-components"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Evaluate a schedule file");
  check->add_option("instance", o.instance_path)->required();
  check->add_option("schedule", o.schedule_path)->required();
  check->add_option("--criterion", o.criterion,
                    "ef, ef1, efx, ef<k>, ef1-po, ef1-complete, maximal, complete or po")
      ->capture_default_str();
  check->add_option("--guard", o.guard, "Largest m for exhaustive checks")->capture_default_str();

  auto* ex = app.add_subcommand("exists", "Search for a maximal schedule meeting a criterion");
  ex->add_option("instance", o.instance_path)->required();
  ex->add_option("--criterion", o.criterion, "ef, ef1, efx, ef<k>, ef1-po or ef1-complete")
      ->capture_default_str();
  ex->add_option("--guard", o.guard, "Largest m for enumeration")->capture_default_str();

  auto* en = app.add_subcommand("enumerate", "List every maximal schedule");
  en->add_option("instance", o.instance_path)->required();
  en->add_option("--guard", o.guard, "Largest m for enumeration")->capture_default_str();

  auto* seq = app.add_subcommand("sequence", "Print a two-agent schedule sequence");
  seq->add_option("instance", o.instance_path)->required();
  seq->add_option("--kind", o.sequence_kind, "interval, path or ef2")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Replay a built-in example");
  demo->add_option("name", o.demo, "efx-maximal, ef1-po, ef1-complete, round-robin, envy-cycle")
      ->required();
  demo->add_option("--guard", o.guard)->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Write a random instance");
  gen->add_option("kind", o.kind,
                  "random-intervals, random-path, random-dichotomous-path, bounded-components")
      ->required();
  gen->add_option("--agents,-n", o.gen.agents)->capture_default_str();
  gen->add_option("--chores,-m", o.gen.chores)->capture_default_str();
  gen->add_option("--min-value", o.gen.min_value)->capture_default_str();
  gen->add_option("--max-value", o.gen.max_value)->capture_default_str();
  gen->add_option("--max-component", o.gen.max_component, "0 means the agent count");
  gen->add_option("--max-length", o.gen.max_length, "Longest interval, 0 for automatic");
  gen->add_option("--seed", o.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output output(o.out);
    std::ostream& out = output.stream();
    const Format fmt = o.format == "json" ? Format::kJson : Format::kText;
    if (*solve) return run_solve(o, fmt, out);
    if (*check) return run_check(o, fmt, out);
    if (*ex) return run_exists(o, fmt, out);
    if (*en) return run_enumerate(o, fmt, out);
    if (*seq) return run_sequence(o, fmt, out);
    if (*demo) return run_demo(o, fmt, out);
    if (*gen) return run_generate(o, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
