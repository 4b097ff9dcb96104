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
#include <stdexcept>

#include "permodel/quantifier.hpp"
#include "permodel/verifier.hpp"

namespace permodel {

namespace {

std::optional<Value> unique_image(const Relation& r, const Value& key) {
  auto run = r.pairs_with_key(key);
  if (run.size() != 1) return std::nullopt;
  return run.front().second();
}

bool always(const Candidate&) { return true; }

}  // namespace

std::string_view to_string(QueryKind kind) noexcept {
  switch (kind) {
    case QueryKind::invariance:
      return "invariance";
    case QueryKind::universal:
      return "universal";
    case QueryKind::existential:
      return "existential";
  }
  return "?";
}

std::vector<Query> gen_invariance_queries(const OperationRegistry& ops, const InvariantRegistry& invariants) {
  std::vector<Query> out;
  for (const InvariantClause& clause : invariants.clauses()) {
    for (const OperationDef* op : ops.mutating()) {
      Query q;
      q.id = "inv/" + clause.id + "/" + op->id;
      q.kind = QueryKind::invariance;
      q.subject = clause.id;
      q.op = op->id;
      q.shape = op->shape;
      q.targeting = op->targeting;
      q.hypothesis = [eval = clause.eval](const Candidate& c) { return eval(c.system); };
      q.probe = [eval = clause.eval, apply = op->apply](const Candidate& c, const ActionArgs& args) {
        Probe pr;
        ActionOutcome out = apply(c.system_perms, c.system, args);
        if (!out) return pr;
        pr.antecedent = true;
        if (!eval(out.next())) {
          pr.found = true;
          pr.next = out.next();
        }
        return pr;
      };
      out.push_back(std::move(q));
    }
  }
  return out;
}

Query cannot_auto_grant_without_group(const OperationRegistry& ops) {
  const OperationDef* op = ops.find("grantAuto");
  if (!op) throw std::invalid_argument("operation registry has no grantAuto");
  Query q;
  q.id = "sec/cannotAutoGrantWithoutGroup";
  q.kind = QueryKind::universal;
  q.subject = "cannotAutoGrantWithoutGroup";
  q.op = op->id;
  q.shape = ParamShape::perm_app;
  q.targeting = TargetMode::group_withheld;
  q.hypothesis = always;
  q.probe = [apply = op->apply](const Candidate& c, const ActionArgs& args) {
    Probe pr;
    const Perm& p = *args.perm;
    if (p.level != PermLevel::dangerous || !p.group) return pr;
    if (group_authorized(c.system, p.group->value(), args.app.value())) return pr;
    pr.antecedent = true;
    ActionOutcome out = apply(c.system_perms, c.system, args);
    if (out) {
      pr.found = true;
      pr.next = out.next();
    }
    return pr;
  };
  return q;
}

Query exec_auto_grant_without_individual_perms(const InvariantRegistry& invariants) {
  Query q;
  q.id = "sec/execAutoGrantWithoutIndividualPerms";
  q.kind = QueryKind::existential;
  q.subject = "execAutoGrantWithoutIndividualPerms";
  q.shape = ParamShape::perm_app;
  q.targeting = TargetMode::grant_enabled;
  q.hypothesis = [invariants](const Candidate& c) { return valid_state(c.system, invariants).valid; };
  q.probe = [](const Candidate& c, const ActionArgs& args) {
    Probe pr;
    const Perm& p = *args.perm;
    if (p.level != PermLevel::dangerous || !p.group) return pr;
    auto granted = unique_image(perms(c.system), args.app.value());
    if (!granted) return pr;
    const Value g = p.group->value();
    Restriction group_slot{Binder::element, {binding([](const Scope& s) -> std::optional<Value> {
                                               return s.element().second().first();
                                             })}};
    if (exists_in(granted->as_set(), group_slot, [&](const Scope& s) { return s[0].as_set().contains(g); })) {
      return pr;
    }
    if (!pre_grant_auto(c.system_perms, c.system, p, args.app)) return pr;
    pr.antecedent = true;
    pr.found = true;
    return pr;
  };
  return q;
}

std::vector<Query> security_queries(const OperationRegistry& ops, const InvariantRegistry& invariants) {
  return {cannot_auto_grant_without_group(ops), exec_auto_grant_without_individual_perms(invariants)};
}

}  // namespace permodel
