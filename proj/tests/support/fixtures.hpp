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

#include "permodel/model.hpp"
#include "permodel/operations.hpp"

namespace fixture {

inline permodel::Atom atom(const char* s) { return permodel::Atom(s); }
inline permodel::Value av(const char* s) { return permodel::Value(permodel::Atom(s)); }

permodel::Perm perm(const char* id, const char* group, permodel::PermLevel level);
permodel::Perm perm(const char* id, permodel::PermLevel level);

/// a1 installed; manifest use = {P}; P = (read, contacts, dangerous) is a
/// system permission; perms(a1) absent; grantedPermGroups(a1) = {contacts}.
struct F1 {
  permodel::SystemPerms sp;
  permodel::System s;
  permodel::Perm p;
  permodel::AppId a1;
  permodel::GrpId contacts;
};
F1 f1();

/// The standard registry with a grantAuto that no longer checks that the
/// permission's group is among the app's authorized groups. It still needs
/// a grouped permission and a unique grantedPermGroups entry for the app.
permodel::OperationRegistry mutated_registry();

std::string data_path(const std::string& name);
std::string read_file(const std::string& path);

}  // namespace fixture
