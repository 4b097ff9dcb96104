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

#include <string>
#include <string_view>

#include <json.hpp>

#include "permodel/model.hpp"

// State documents.
//
//   {"state": {"apps": [...], "alreadyVerified": [...],
//              "grantedPermGroups": [[app, [grp...]]...], "perms": [[app, [Perm...]]...],
//              "opaque5": str, ..., "opaque9": str},
//    "environment": {"manifest": [[app, Manifest]...], "cert": [[app, str]...],
//                    "defPerms": [[app, [Perm...]]...], "systemImage": [SysImgApp...]}}
//
// Perm = {"id": str, "group": str|null, "level": "normal"|"signature"|"dangerous"}
// Manifest = {"use": [Perm...], "extra": [str x5]}
// SysImgApp = {"idSI": str, "defPermsSI": [Perm...]}
//
// Sets are arrays in canonical value order; relations are arrays of
// [key, value] pairs ordered by key. Emission is canonical, so
// emit(parse(emit(s))) == emit(s). Parsing accepts any element order but
// rejects duplicates and unknown fields.
namespace permodel {

using Json = nlohmann::ordered_json;

Json to_json(const Perm& p);
Json to_json(const Manifest& m);
Json to_json(const SysImgApp& app);
Json to_json(const System& s);
Json to_json(const SystemPerms& sp);

/// `path` prefixes diagnostics, e.g. "initial.state.perms[0]".
Perm perm_from_json(const Json& j, const std::string& path = "perm");
Set perm_set_from_json(const Json& j, const std::string& path);
System system_from_json(const Json& j, const std::string& path = "");
/// Reads the bare array of a systemPerms document.
SystemPerms system_perms_from_json(const Json& j, const std::string& path = "systemPerms");

/// Pretty-printed, newline-terminated.
std::string dump(const Json& j);
/// Throws ParseError carrying the line and column of a syntax error.
Json parse_json(std::string_view text);

std::string emit_state(const System& s);
System parse_state(std::string_view text);

/// {"systemPerms": [Perm...]}
std::string emit_system_perms(const SystemPerms& sp);
SystemPerms parse_system_perms(std::string_view text);

}  // namespace permodel
