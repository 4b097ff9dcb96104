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
#include "permodel/action_io.hpp"

#include "permodel/errors.hpp"

namespace permodel {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path, message);
}

std::string field_path(const std::string& path, std::string_view key) {
  return path + "." + std::string(key);
}

const Json& required(const Json& obj, std::string_view key, const std::string& path) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(field_path(path, key), "missing field");
  return *it;
}

template <class IdT>
IdT id_from(const Json& j, const std::string& path) {
  if (!j.is_string() || !is_valid_identifier(j.get_ref<const std::string&>())) {
    fail(path, "expected a nonempty identifier string");
  }
  return IdT(j.get_ref<const std::string&>());
}

}  // namespace

Json to_json(const Action& a) {
  Json j = Json::object();
  j["op"] = std::string(action_name(a));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RevokeGroup>) {
          j["group"] = x.group.atom().str();
        } else {
          j["perm"] = to_json(x.perm);
        }
        j["app"] = x.app.atom().str();
      },
      a);
  return j;
}

Action action_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const Json& op = required(j, "op", path);
  if (!op.is_string()) fail(field_path(path, "op"), "expected a string");
  const std::string& name = op.get_ref<const std::string&>();
  bool grouped = name == "revokeGroup";
  for (const auto& [key, _] : j.items()) {
    if (key != "op" && key != "app" && key != (grouped ? "group" : "perm")) {
      fail(field_path(path, key), "unknown field");
    }
  }
  AppId app = id_from<AppId>(required(j, "app", path), field_path(path, "app"));
  if (grouped) return RevokeGroup{id_from<GrpId>(required(j, "group", path), field_path(path, "group")), app};

  Perm perm = perm_from_json(required(j, "perm", path), field_path(path, "perm"));
  if (name == "grantAuto") return GrantAuto{perm, app};
  if (name == "grant") return Grant{perm, app};
  if (name == "revoke") return Revoke{perm, app};
  if (name == "hasPermission") return HasPermission{perm, app};
  fail(field_path(path, "op"), "unknown operation '" + name + "'");
}

Json to_json(const Scenario& sc) {
  Json j = Json::object();
  j["systemPerms"] = to_json(sc.system_perms)["systemPerms"];
  j["initial"] = to_json(sc.initial);
  Json actions = Json::array();
  for (const Action& a : sc.actions) actions.push_back(to_json(a));
  j["actions"] = std::move(actions);
  return j;
}

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "systemPerms" && key != "initial" && key != "actions") fail(key, "unknown field");
  }
  Scenario sc;
  sc.system_perms = system_perms_from_json(required(j, "systemPerms", ""), "systemPerms");
  sc.initial = system_from_json(required(j, "initial", ""), "initial");
  const Json& actions = required(j, "actions", "");
  if (!actions.is_array()) fail("actions", "expected an array");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    sc.actions.push_back(action_from_json(actions[i], "actions[" + std::to_string(i) + "]"));
  }
  return sc;
}

Scenario parse_scenario(std::string_view text) { return scenario_from_json(parse_json(text)); }

ScenarioRun run_scenario(const Scenario& sc) {
  ScenarioRun run{sc.initial, 0, std::nullopt, {}};
  for (const Action& a : sc.actions) {
    ActionOutcome out = step(sc.system_perms, run.final_state, a);
    if (!out) {
      run.failure = out.failure();
      return run;
    }
    ++run.completed;
    if (auto answer = out.answer()) run.answers.emplace_back(run.completed, *answer);
    run.final_state = out.next();
  }
  return run;
}

}  // namespace permodel
