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
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "permodel/serialize.hpp"

using namespace permodel;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "permodel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, std::string_view needle) { return text.find(needle) != std::string::npos; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("permodel_cli_" + name)).string();
}

}  // namespace

TEST_CASE("run") {
  Result r = invoke({"run", fixture::data_path("f1_scenario.json")});
  CHECK(r.code == 0);
  CHECK(has(r.err, "action 2 hasPermission: true"));
  System final_state = parse_state(r.out);
  auto f = fixture::f1();
  CHECK(perms(final_state) == Relation{{f.a1.value(), Set{f.p.to_value()}}});

  Result twice = invoke({"run", fixture::data_path("f1_twice.json")});
  CHECK(twice.code == 1);
  CHECK(has(twice.err, "action 2"));
  CHECK(has(twice.err, "conjunct 3"));
  CHECK(twice.out.empty());

  Result bad = invoke({"run", fixture::data_path("malformed_scenario.json")});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "error"));
  CHECK(invoke({"run", fixture::data_path("missing.json")}).code == 2);
  CHECK(invoke({"run", fixture::data_path("empty_state.json")}).code == 2);
}

TEST_CASE("run --out") {
  std::string path = temp_path("final.json");
  std::remove(path.c_str());
  Result r = invoke({"run", fixture::data_path("f1_scenario.json"), "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(parse_state(fixture::read_file(path)) == parse_state(invoke({"run", fixture::data_path("f1_scenario.json")}).out));
  std::remove(path.c_str());
}

TEST_CASE("check") {
  Result empty = invoke({"check", fixture::data_path("empty_state.json")});
  CHECK(empty.code == 0);
  CHECK(has(empty.out, "notDupPerm.3"));
  CHECK_FALSE(has(empty.out, "fail"));

  Result dup = invoke({"check", fixture::data_path("dup_perms_state.json")});
  CHECK(dup.code == 1);
  std::istringstream lines(dup.out);
  std::string id, status;
  int fails = 0;
  while (lines >> id >> status) {
    CHECK(status == (id == "allMapsCorrect.perms" ? "fail" : "pass"));
    fails += status == "fail";
  }
  CHECK(fails == 1);

  Result json = invoke({"check", fixture::data_path("dup_perms_state.json"), "--format", "json"});
  CHECK(json.code == 1);
  Json j = parse_json(json.out);
  CHECK(j["valid"] == false);
  CHECK(j["clauses"].size() == 8);
  CHECK(j["clauses"][4]["id"] == "allMapsCorrect.perms");
  CHECK(j["clauses"][4]["pass"] == false);

  Result unknown = invoke({"check", fixture::data_path("unknown_field_state.json")});
  CHECK(unknown.code == 2);
  CHECK(has(unknown.err, "state.installed"));
}

TEST_CASE("verify") {
  Result r = invoke({"verify", "--apps", "1", "--perms", "1", "--grps", "1", "--maxcard", "1", "--budget", "2000"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "Valid-state invariance lemmas"));
  CHECK(has(r.out, "Security properties"));
  CHECK(has(r.out, "Totals"));

  Result starved = invoke({"verify", "--budget", "1"});
  CHECK(starved.code == 3);
  CHECK(has(starved.out, "budget-exhausted"));

  Result json = invoke({"verify", "--suite", "security", "--apps", "1", "--perms", "1", "--grps", "1", "--maxcard", "1",
                     "--budget", "2000", "--format", "json"});
  CHECK(json.code == 0);
  Json j = parse_json(json.out);
  CHECK(j["suite"] == "security");
  CHECK(j["verdicts"].size() == 2);
}

TEST_CASE("verify output is reproducible") {
  std::vector<std::string> args = {"verify", "--budget", "300", "--seed", "9", "--format", "json"};
  Json a = parse_json(invoke(args).out);
  Json b = parse_json(invoke(args).out);
  CHECK(a["verdicts"].dump() == b["verdicts"].dump());
  CHECK(a["rows"].size() == 3);
}

TEST_CASE("witness") {
  std::vector<std::string> small = {"--apps", "1", "--perms", "1", "--grps", "1"};
  std::vector<std::string> args = {"witness", "execAutoGrantWithoutIndividualPerms"};
  args.insert(args.end(), small.begin(), small.end());
  Result r = invoke(args);
  CHECK(r.code == 0);
  CHECK(has(r.out, "witness"));

  args[1] = "sec/execAutoGrantWithoutIndividualPerms";
  args.push_back("--format");
  args.push_back("json");
  Result json = invoke(args);
  CHECK(json.code == 0);
  Json j = parse_json(json.out);
  CHECK(j["verdict"] == "witness");
  CHECK(j["rechecked"] == true);

  CHECK(invoke({"witness", "cannotAutoGrantWithoutGroup"}).code == 2);
  CHECK(invoke({"witness", "nothing"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"verify", "--help"}).code == 0);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"check"}).code == 2);
  CHECK(invoke({"verify", "--apps", "0"}).code == 2);
  CHECK(invoke({"verify", "--budget", "0"}).code == 2);
  CHECK(invoke({"verify", "--suite", "other"}).code == 2);
  CHECK(invoke({"verify", "--format", "xml"}).code == 2);
}
