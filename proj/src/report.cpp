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
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

#include "permodel/verifier.hpp"

namespace permodel {

namespace {

constexpr const char* kInvarianceRow = "Valid-state invariance lemmas";
constexpr const char* kSecurityRow = "Security properties";
constexpr const char* kTotalsRow = "Totals";

ReportRow summarize(const char* name, const std::vector<Query>& queries, const std::vector<Verdict>& verdicts,
                    std::size_t lemmas) {
  ReportRow row{name, lemmas, queries.size(), 0, 0};
  for (const Verdict& v : verdicts) {
    if (v.verdict == VerdictKind::counterexample) ++row.counterexamples;
    row.seconds += v.seconds;
  }
  return row;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string pad(std::string s, std::size_t width, bool right = false) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::invariance:
      return "invariance";
    case Suite::security:
      return "security";
    case Suite::all:
      return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) noexcept {
  if (text == "invariance") return Suite::invariance;
  if (text == "security") return Suite::security;
  if (text == "all") return Suite::all;
  return std::nullopt;
}

bool Report::sound() const noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.finding || v.rechecked; });
}

int Report::exit_code() const noexcept {
  bool exhausted = false;
  for (const Verdict& v : verdicts) {
    if (v.verdict == VerdictKind::counterexample || v.verdict == VerdictKind::no_witness_at_bounds) return 1;
    if (v.verdict == VerdictKind::budget_exhausted) exhausted = true;
  }
  return exhausted ? 3 : 0;
}

std::vector<Verdict> run_queries(const std::vector<Query>& queries, const Bounds& bounds, unsigned workers) {
  StateSpace space(bounds);
  std::vector<Verdict> out(queries.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, queries.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < queries.size(); i = next++) {
      out[i] = check_query(queries[i], space, bounds.seed);
    }
  };
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  return out;
}

Report run_suite(Suite suite, const Bounds& bounds, unsigned workers) {
  return run_suite(suite, bounds, OperationRegistry::standard(), InvariantRegistry::shipped(), workers);
}

Report run_suite(Suite suite, const Bounds& bounds, const OperationRegistry& ops, const InvariantRegistry& invariants,
                 unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Query> inv;
  std::vector<Query> sec;
  if (suite != Suite::security) inv = gen_invariance_queries(ops, invariants);
  if (suite != Suite::invariance) sec = security_queries(ops, invariants);

  std::vector<Query> all = inv;
  all.insert(all.end(), sec.begin(), sec.end());

  Report r;
  r.suite = suite;
  r.bounds = bounds;
  r.verdicts = run_queries(all, bounds, workers);

  std::vector<Verdict> inv_verdicts(r.verdicts.begin(), r.verdicts.begin() + inv.size());
  std::vector<Verdict> sec_verdicts(r.verdicts.begin() + inv.size(), r.verdicts.end());
  std::set<std::string> families;
  for (const Query& q : inv) {
    if (const InvariantClause* c = invariants.find(q.subject)) families.insert(c->family);
  }
  std::set<std::string> properties;
  for (const Query& q : sec) properties.insert(q.subject);

  ReportRow a = summarize(kInvarianceRow, inv, inv_verdicts, families.size());
  ReportRow b = summarize(kSecurityRow, sec, sec_verdicts, properties.size());
  r.rows = {a, b, ReportRow{kTotalsRow, a.lemmas + b.lemmas, a.queries + b.queries,
                            a.counterexamples + b.counterexamples, a.seconds + b.seconds}};
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Documents

Json to_json(const Bounds& b) {
  Json j = Json::object();
  j["apps"] = b.apps;
  j["perms"] = b.perm_ids;
  j["grps"] = b.groups;
  j["maxcard"] = b.max_card;
  j["budget"] = b.budget;
  j["seed"] = b.seed;
  return j;
}

Json to_json(const ActionArgs& args) {
  Json j = Json::object();
  if (args.perm) j["perm"] = to_json(*args.perm);
  if (args.group) j["group"] = args.group->atom().str();
  j["app"] = args.app.atom().str();
  return j;
}

Json to_json(const Finding& f) {
  Json j = Json::object();
  if (!f.op.empty()) j["op"] = f.op;
  j["params"] = to_json(f.args);
  j["systemPerms"] = to_json(f.point.system_perms)["systemPerms"];
  j["system"] = to_json(f.point.system);
  if (f.next) j["next"] = to_json(*f.next);
  return j;
}

Json to_json(const Verdict& v) {
  Json j = Json::object();
  j["query"] = v.query_id;
  j["kind"] = std::string(to_string(v.kind));
  j["verdict"] = std::string(to_string(v.verdict));
  j["statesExamined"] = v.states_examined;
  j["antecedentHits"] = v.antecedent_hits;
  j["exhaustive"] = v.exhaustive;
  if (v.finding) {
    j["finding"] = to_json(*v.finding);
    j["rechecked"] = v.rechecked;
  }
  return j;
}

Json to_json(const Report& r) {
  Json j = Json::object();
  j["suite"] = std::string(to_string(r.suite));
  j["bounds"] = to_json(r.bounds);
  Json rows = Json::array();
  for (const ReportRow& row : r.rows) {
    rows.push_back({{"name", row.name},
                    {"lemmas", row.lemmas},
                    {"queries", row.queries},
                    {"counterexamples", row.counterexamples},
                    {"seconds", row.seconds}});
  }
  j["rows"] = std::move(rows);
  Json verdicts = Json::array();
  for (const Verdict& v : r.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = std::move(verdicts);
  j["elapsedSeconds"] = r.elapsed_seconds;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  const Bounds& b = r.bounds;
  os << "suite " << to_string(r.suite) << "  bounds apps=" << b.apps << " perms=" << b.perm_ids << " grps=" << b.groups
     << " maxcard=" << b.max_card << " budget=" << b.budget << " seed=" << b.seed << "\n\n";
  os << pad("", 32) << pad("Lemmas", 8, true) << pad("Queries", 9, true) << pad("Counterexamples", 17, true)
     << pad("Time (s)", 10, true) << "\n";
  for (const ReportRow& row : r.rows) {
    os << pad(row.name, 32) << pad(std::to_string(row.lemmas), 8, true) << pad(std::to_string(row.queries), 9, true)
       << pad(std::to_string(row.counterexamples), 17, true) << pad(fixed(row.seconds, 2), 10, true) << "\n";
  }
  os << "\n";
  std::size_t width = 0;
  for (const Verdict& v : r.verdicts) width = std::max(width, v.query_id.size());
  for (const Verdict& v : r.verdicts) {
    os << pad(v.query_id, width + 2) << pad(std::string(to_string(v.verdict)), 22)
       << (v.exhaustive ? "exhaustive " : "sampled ") << v.states_examined << " states, " << v.antecedent_hits
       << " checks\n";
    if (v.finding) {
      os << "  rechecked: " << (v.rechecked ? "yes" : "NO") << "\n";
      std::istringstream doc(dump(to_json(*v.finding)));
      for (std::string line; std::getline(doc, line);) os << "  " << line << "\n";
    }
  }
  os << "\nelapsed " << fixed(r.elapsed_seconds, 2) << " s\n";
  return os.str();
}

}  // namespace permodel
