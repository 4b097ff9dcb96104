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
#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "permodel/kernel.hpp"

namespace fixture {

using namespace permodel;

Perm perm(const char* id, const char* group, PermLevel level) { return Perm{PermId(id), GrpId(group), level}; }
Perm perm(const char* id, PermLevel level) { return Perm{PermId(id), std::nullopt, level}; }

F1 f1() {
  F1 f{SystemPerms{}, System{}, perm("read", "contacts", PermLevel::dangerous), AppId("a1"), GrpId("contacts")};
  f.sp.perms = Set{f.p.to_value()};
  f.s.state.apps = Set{f.a1.value()};
  f.s.state.granted_perm_groups = Relation{{f.a1.value(), Set{f.contacts.value()}}};
  f.s.environment.manifest = Relation{{f.a1.value(), Manifest{Set{f.p.to_value()}}.to_value()}};
  return f;
}

OperationRegistry mutated_registry() {
  OperationRegistry r = OperationRegistry::standard();
  r.add({"grantAuto", ParamShape::perm_app, true, TargetMode::grant_enabled,
         [](const SystemPerms& sp, const System& s, const ActionArgs& x) {
           const Perm& p = *x.perm;
           PreCheck pre = pre_grant_auto(sp, s, p, x.app);
           bool weakened = pre.failed == 5 && p.group && granted_perm_groups(s).pairs_with_key(x.app.value()).size() == 1;
           if (!pre && !weakened) return ActionOutcome::error({"grantAuto", pre.failed, "mutant"});
           Value a = x.app.value();
           return ActionOutcome::ok(with_perms(s, foplus(perms(s), a, with_element(apply_or_empty(perms(s), a), p.to_value()))));
         }});
  return r;
}

std::string data_path(const std::string& name) { return std::string(PERMODEL_TEST_DATA) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fixture
