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
#include "permodel/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "permodel/kernel.hpp"
#include "permodel/quantifier.hpp"

namespace permodel {

namespace {

InvariantClause map_clause(std::string map, const Relation& (*get)(const System&)) {
  return InvariantClause{
      "allMapsCorrect." + map, "allMapsCorrect", map + " is a partial function",
      [get](const System& s) { return is_pfun(get(s)); }};
}

// A source of (app, defined perms) bindings: results [0] = app, [1] = perms.
struct Source {
  const Set& domain;
  Restriction restriction;
};

Source def_perms_source(const System& s) {
  return Source{def_perms(s).pairs(),
                Restriction{Binder::pair,
                            {binding([](const Scope& x) { return x.key(); }),
                             binding([](const Scope& x) { return x.value(); })}}};
}

Source system_image_source(const System& s) {
  // idSI and defPermsSI as functional predicates over the SysImgApp record
  return Source{system_image(s),
                Restriction{Binder::element,
                            {binding([](const Scope& x) { return SysImgApp::from_value(x.element()).id.value(); }),
                             binding([](const Scope& x) -> std::optional<Value> {
                               return x.element().second();
                             })}}};
}

const Restriction& perm_id_binding() {
  static const Restriction r{Binder::element,
                             {binding([](const Scope& p) { return Perm::id_of(p.element()); })}};
  return r;
}

// forall(src1) forall(src2) forall(P1 in L1, [IP1]) forall(P2 in L2, [IP2]):
//   IP1 = IP2 implies P1 = P2 & A1 = A2
bool no_duplicate_perm(const Source& lhs, const Source& rhs) {
  return forall_in(lhs.domain, lhs.restriction, [&](const Scope& d1) {
    return forall_in(rhs.domain, rhs.restriction, [&](const Scope& d2) {
      return forall_in(d1[1].as_set(), perm_id_binding(), [&](const Scope& p1) {
        return forall_in(d2[1].as_set(), perm_id_binding(), [&](const Scope& p2) {
          return p1[0] != p2[0] || (p1.element() == p2.element() && d1[0] == d2[0]);
        });
      });
    });
  });
}

}  // namespace

std::vector<InvariantClause> all_maps_correct_clauses() {
  return {map_clause("manifest", &manifest), map_clause("cert", &cert),
          map_clause("defPerms", &def_perms), map_clause("grantedPermGroups", &granted_perm_groups),
          map_clause("perms", &perms)};
}

std::vector<InvariantClause> not_dup_perm_clauses() {
  return {
      InvariantClause{"notDupPerm.1", "notDupPerm", "no duplicate permission ids within defPerms",
                      [](const System& s) {
                        return no_duplicate_perm(def_perms_source(s), def_perms_source(s));
                      }},
      InvariantClause{"notDupPerm.2", "notDupPerm",
                      "no duplicate permission ids within the system image",
                      [](const System& s) {
                        return no_duplicate_perm(system_image_source(s), system_image_source(s));
                      }},
      InvariantClause{"notDupPerm.3", "notDupPerm",
                      "no duplicate permission ids between defPerms and the system image",
                      [](const System& s) {
                        return no_duplicate_perm(def_perms_source(s), system_image_source(s));
                      }},
  };
}

InvariantRegistry InvariantRegistry::shipped() {
  InvariantRegistry r;
  for (auto& c : all_maps_correct_clauses()) r.add(std::move(c));
  for (auto& c : not_dup_perm_clauses()) r.add(std::move(c));
  return r;
}

void InvariantRegistry::add(InvariantClause clause) {
  if (find(clause.id)) throw std::invalid_argument("duplicate invariant clause " + clause.id);
  clauses_.push_back(std::move(clause));
}

const InvariantClause* InvariantRegistry::find(std::string_view id) const noexcept {
  auto it = std::find_if(clauses_.begin(), clauses_.end(),
                         [&](const InvariantClause& c) { return c.id == id; });
  return it == clauses_.end() ? nullptr : &*it;
}

std::vector<std::string> InvariantRegistry::families() const {
  std::vector<std::string> out;
  for (const auto& c : clauses_) {
    if (std::find(out.begin(), out.end(), c.family) == out.end()) out.push_back(c.family);
  }
  return out;
}

ValidityReport valid_state(const System& s, const InvariantRegistry& registry) {
  ValidityReport report;
  for (const auto& c : registry.clauses()) {
    if (!c.eval(s)) {
      report.valid = false;
      report.failing.push_back(c.id);
    }
  }
  return report;
}

}  // namespace permodel
