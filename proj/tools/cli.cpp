/*
 * Copyright (C) 2026 The permodel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "permodel/action_io.hpp"
#include "permodel/errors.hpp"
#include "permodel/invariants.hpp"
#include "permodel/serialize.hpp"
#include "permodel/verifier.hpp"

namespace permodel::cli {

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInconclusive = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::string property;
  Bounds bounds;
  std::string suite = "all";
  std::string format = "text";
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_bounds(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--apps", cfg.bounds.apps, "number of pool apps")->check(CLI::PositiveNumber);
  cmd.add_option("--perms", cfg.bounds.perm_ids, "number of permission identifiers")->check(CLI::PositiveNumber);
  cmd.add_option("--grps", cfg.bounds.groups, "number of permission groups")->check(CLI::PositiveNumber);
  cmd.add_option("--maxcard", cfg.bounds.max_card, "largest generated set or relation")->check(CLI::NonNegativeNumber);
  cmd.add_option("--budget", cfg.bounds.budget, "states examined per query")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  cmd.add_option("--seed", cfg.bounds.seed, "sampling seed");
}

void add_output(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd.add_option("--out", cfg.out_path, "write the result to a file");
}

// Writes to --out when given, otherwise to `out`.
void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + cfg.out_path + "'");
  f << text;
}

int cmd_run(const Config& cfg, std::ostream& out, std::ostream& err) {
  Scenario sc = parse_scenario(read_file(cfg.input));
  ScenarioRun run = run_scenario(sc);
  for (const auto& [index, answer] : run.answers) {
    err << "action " << index << " hasPermission: " << (answer ? "true" : "false") << "\n";
  }
  if (run.failure) {
    const PreconditionFailure& f = *run.failure;
    err << "action " << run.completed + 1 << " (" << f.op << ") failed: conjunct " << f.conjunct << ": " << f.reason
        << "\n";
    return kFailed;
  }
  emit(cfg, emit_state(run.final_state), out);
  return kOk;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  System s = parse_state(read_file(cfg.input));
  InvariantRegistry reg = InvariantRegistry::shipped();
  ValidityReport report = valid_state(s, reg);
  auto passed = [&](const std::string& id) {
    return std::find(report.failing.begin(), report.failing.end(), id) == report.failing.end();
  };
  std::string text;
  if (cfg.format == "json") {
    Json clauses = Json::array();
    for (const InvariantClause& c : reg.clauses()) clauses.push_back({{"id", c.id}, {"pass", passed(c.id)}});
    Json doc = {{"valid", report.valid}, {"clauses", std::move(clauses)}};
    text = dump(doc);
  } else {
    std::size_t width = 0;
    for (const InvariantClause& c : reg.clauses()) width = std::max(width, c.id.size());
    for (const InvariantClause& c : reg.clauses()) {
      text += c.id + std::string(width + 2 - c.id.size(), ' ') + (passed(c.id) ? "pass" : "fail") + "\n";
    }
  }
  emit(cfg, text, out);
  return report.valid ? kOk : kFailed;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  Report r = run_suite(*parse_suite(cfg.suite), cfg.bounds);
  emit(cfg, cfg.format == "json" ? dump(to_json(r)) : to_text(r), out);
  return r.exit_code();
}

int cmd_witness(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::string id = cfg.property;
  if (id.rfind("sec/", 0) == 0) id = id.substr(4);
  std::vector<Query> queries = security_queries(OperationRegistry::standard(), InvariantRegistry::shipped());
  auto it = std::find_if(queries.begin(), queries.end(), [&](const Query& q) { return q.subject == id; });
  if (it == queries.end() || it->kind != QueryKind::existential) {
    err << "error: '" << cfg.property << "' is not an existential property; known:";
    for (const Query& q : queries) {
      if (q.kind == QueryKind::existential) err << " " << q.subject;
    }
    err << "\n";
    return kUsage;
  }
  Verdict v = check_query(*it, cfg.bounds);
  std::string text;
  if (cfg.format == "json") {
    text = dump(to_json(v));
  } else {
    text = it->subject + ": " + std::string(to_string(v.verdict)) + " (" + std::to_string(v.states_examined) +
           " states" + (v.exhaustive ? ", exhaustive" : ", sampled") + ")\n";
    if (v.finding) text += dump(to_json(*v.finding));
  }
  emit(cfg, text, out);
  switch (v.verdict) {
    case VerdictKind::witness:
      return kOk;
    case VerdictKind::budget_exhausted:
      return kInconclusive;
    default:
      return kFailed;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permission model animator and bounded verifier", "permodel"};
  app.require_subcommand(1);
  Config cfg;

  CLI::App* run = app.add_subcommand("run", "run a scenario and print the final state");
  run->add_option("scenario", cfg.input, "scenario file")->required();
  run->add_option("--out", cfg.out_path, "write the final state to a file");

  CLI::App* check = app.add_subcommand("check", "evaluate every invariant clause on a state");
  check->add_option("state", cfg.input, "state file")->required();
  add_output(*check, cfg);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites at small scope");
  add_bounds(*verify, cfg);
  verify->add_option("--suite", cfg.suite, "invariance, security or all")
      ->check(CLI::IsMember({"invariance", "security", "all"}));
  add_output(*verify, cfg);

  CLI::App* witness = app.add_subcommand("witness", "search a witness of an existential property");
  witness->add_option("property", cfg.property, "property id")->required();
  add_bounds(*witness, cfg);
  add_output(*witness, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(cfg, out, err);
    if (*check) return cmd_check(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    return cmd_witness(cfg, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace permodel::cli
