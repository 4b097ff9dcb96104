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
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permodel/operations.hpp"
#include "permodel/serialize.hpp"

// Action documents and scenario files.
//
//   {"op": "grantAuto" | "grant" | "revoke" | "hasPermission", "perm": Perm, "app": str}
//   {"op": "revokeGroup", "group": str, "app": str}
//
//   scenario = {"systemPerms": [Perm...], "initial": state document, "actions": [Action...]}
namespace permodel {

Json to_json(const Action& a);
Action action_from_json(const Json& j, const std::string& path = "action");

struct Scenario {
  SystemPerms system_perms;
  System initial;
  std::vector<Action> actions;
};

Json to_json(const Scenario& sc);
Scenario scenario_from_json(const Json& j);
Scenario parse_scenario(std::string_view text);

struct ScenarioRun {
  System final_state;  // state after the last successful action
  std::size_t completed = 0;
  std::optional<PreconditionFailure> failure;  // of action completed + 1
  std::vector<std::pair<std::size_t, bool>> answers;  // 1-based index, hasPermission result
};

/// Folds step() over the actions, stopping at the first failure.
ScenarioRun run_scenario(const Scenario& sc);

}  // namespace permodel
