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
#include "permodel/operations.hpp"

#include <algorithm>
#include <array>

#include "permodel/kernel.hpp"

namespace permodel {

namespace {

constexpr std::array<const char*, 5> kGrantAutoReasons = {
    "permission is not listed in the app's manifest",
    "permission is neither a system permission nor defined by an app",
    "permission is already granted to the app",
    "permission is not dangerous",
    "permission group is not authorized for the app",
};

// The unique image of `key`, or nullopt when absent or ambiguous.
std::optional<Value> unique_image(const Relation& r, const Value& key) {
  auto run = r.pairs_with_key(key);
  if (run.size() != 1) return std::nullopt;
  return run.front().second();
}

bool listed_in_manifest(const System& s, const Value& perm, const Value& app) {
  auto m = unique_image(manifest(s), app);
  return m && Manifest::use_of(*m).contains(perm);
}

// (app not in dom perms) or (applyTo(perms, app, PS) and perm not in PS)
bool not_yet_granted(const System& s, const Value& perm, const Value& app) {
  if (not_in_dom(perms(s), app)) return true;
  auto ps = unique_image(perms(s), app);
  return ps && !ps->as_set().contains(perm);
}

// Conjuncts 1..4 shared by grantAuto and grant.
int check_grant_common(const SystemPerms& sp, const System& s, const Perm& p, const Value& pv,
                       const Value& av) {
  if (!listed_in_manifest(s, pv, av)) return 1;
  if (!sp.contains(pv) && !usr_def_perm(s, pv)) return 2;
  if (!not_yet_granted(s, pv, av)) return 3;
  if (p.level != PermLevel::dangerous) return 4;
  return 0;
}

Relation add_to_image(const Relation& r, const Value& key, const Value& x) {
  return foplus(r, key, with_element(apply_or_empty(r, key), x));
}

ActionOutcome fail(const char* op, int conjunct, std::string reason) {
  return ActionOutcome::error(PreconditionFailure{op, conjunct, std::move(reason)});
}

}  // namespace

ActionOutcome ActionOutcome::ok(System next, std::optional<bool> answer) {
  ActionOutcome out(std::move(next));
  out.answer_ = answer;
  return out;
}

ActionOutcome ActionOutcome::error(PreconditionFailure failure) {
  return ActionOutcome(std::move(failure));
}

std::string_view action_name(const Action& a) noexcept {
  constexpr std::array<std::string_view, 5> names = {"grantAuto", "grant", "revoke", "revokeGroup",
                                                     "hasPermission"};
  return names[a.index()];
}

bool group_authorized(const System& s, const Value& group, const Value& app) {
  auto groups = unique_image(granted_perm_groups(s), app);
  return groups && groups->as_set().contains(group);
}

PreCheck pre_grant_auto(const SystemPerms& sp, const System& s, const Perm& p, const AppId& a) {
  Value pv = p.to_value();
  Value av = a.value();
  if (int k = check_grant_common(sp, s, p, pv, av)) return PreCheck{k};
  if (!p.group || !group_authorized(s, p.group->value(), av)) return PreCheck{5};
  return PreCheck{};
}

ActionOutcome grant_auto(const SystemPerms& sp, const System& s, const Perm& p, const AppId& a) {
  if (auto pre = pre_grant_auto(sp, s, p, a); !pre) {
    return fail("grantAuto", pre.failed, kGrantAutoReasons[pre.failed - 1]);
  }
  return ActionOutcome::ok(with_perms(s, add_to_image(perms(s), a.value(), p.to_value())));
}

ActionOutcome grant(const SystemPerms& sp, const System& s, const Perm& p, const AppId& a) {
  Value pv = p.to_value();
  Value av = a.value();
  if (int k = check_grant_common(sp, s, p, pv, av)) return fail("grant", k, kGrantAutoReasons[k - 1]);
  if (p.group && granted_perm_groups(s).pairs_with_key(av).size() > 1) {
    return fail("grant", 5, "group authorizations of the app are ambiguous");
  }
  System next = with_perms(s, add_to_image(perms(s), av, pv));
  if (p.group) {
    next = with_granted_perm_groups(std::move(next),
                                    add_to_image(granted_perm_groups(s), av, p.group->value()));
  }
  return ActionOutcome::ok(std::move(next));
}

ActionOutcome revoke(const System& s, const Perm& p, const AppId& a) {
  if (p.group) return fail("revoke", 1, "permission belongs to a group");
  Value pv = p.to_value();
  Value av = a.value();
  auto ps = unique_image(perms(s), av);
  if (!ps || !ps->as_set().contains(pv)) return fail("revoke", 2, "permission is not granted to the app");
  return ActionOutcome::ok(with_perms(s, foplus(perms(s), av, without_element(ps->as_set(), pv))));
}

ActionOutcome revoke_group(const System& s, const GrpId& g, const AppId& a) {
  Value gv = g.value();
  Value av = a.value();
  if (!group_authorized(s, gv, av)) return fail("revokeGroup", 1, "group is not authorized for the app");
  if (perms(s).pairs_with_key(av).size() > 1) {
    return fail("revokeGroup", 2, "granted permissions of the app are ambiguous");
  }
  const Relation& groups = granted_perm_groups(s);
  System next = with_granted_perm_groups(
      s, foplus(groups, av, without_element(apply_or_empty(groups, av), gv)));
  if (auto ps = rel_apply(perms(s), av)) {
    std::vector<Value> kept;
    for (const Value& q : ps->as_set()) {
      if (Perm::group_of(q) != gv) kept.push_back(q);
    }
    next = with_perms(std::move(next), foplus(perms(s), av, Set::from_sorted(std::move(kept))));
  }
  return ActionOutcome::ok(std::move(next));
}

bool has_permission(const System& s, const Perm& p, const AppId& a) {
  auto ps = unique_image(perms(s), a.value());
  return ps && ps->as_set().contains(p.to_value());
}

ActionOutcome step(const SystemPerms& sp, const System& s, const Action& action) {
  struct Visitor {
    const SystemPerms& sp;
    const System& s;
    ActionOutcome operator()(const GrantAuto& x) const { return grant_auto(sp, s, x.perm, x.app); }
    ActionOutcome operator()(const Grant& x) const { return grant(sp, s, x.perm, x.app); }
    ActionOutcome operator()(const Revoke& x) const { return revoke(s, x.perm, x.app); }
    ActionOutcome operator()(const RevokeGroup& x) const { return revoke_group(s, x.group, x.app); }
    ActionOutcome operator()(const HasPermission& x) const {
      return ActionOutcome::ok(s, has_permission(s, x.perm, x.app));
    }
  };
  return std::visit(Visitor{sp, s}, action);
}

// ---------------------------------------------------------------------------
// Registry

OperationRegistry OperationRegistry::standard() {
  OperationRegistry r;
  r.add({"grantAuto", ParamShape::perm_app, true, TargetMode::grant_enabled,
         [](const SystemPerms& sp, const System& s, const ActionArgs& x) {
           return grant_auto(sp, s, *x.perm, x.app);
         }});
  r.add({"grant", ParamShape::perm_app, true, TargetMode::grant_enabled,
         [](const SystemPerms& sp, const System& s, const ActionArgs& x) {
           return grant(sp, s, *x.perm, x.app);
         }});
  r.add({"revoke", ParamShape::perm_app, true, TargetMode::none,
         [](const SystemPerms&, const System& s, const ActionArgs& x) {
           return revoke(s, *x.perm, x.app);
         }});
  r.add({"revokeGroup", ParamShape::group_app, true, TargetMode::none,
         [](const SystemPerms&, const System& s, const ActionArgs& x) {
           return revoke_group(s, *x.group, x.app);
         }});
  r.add({"hasPermission", ParamShape::perm_app, false, TargetMode::none,
         [](const SystemPerms&, const System& s, const ActionArgs& x) {
           return ActionOutcome::ok(s, has_permission(s, *x.perm, x.app));
         }});
  return r;
}

void OperationRegistry::add(OperationDef op) {
  auto it = std::find_if(ops_.begin(), ops_.end(), [&](const OperationDef& o) { return o.id == op.id; });
  if (it != ops_.end()) {
    *it = std::move(op);
  } else {
    ops_.push_back(std::move(op));
  }
}

const OperationDef* OperationRegistry::find(std::string_view id) const noexcept {
  auto it = std::find_if(ops_.begin(), ops_.end(), [&](const OperationDef& o) { return o.id == id; });
  return it == ops_.end() ? nullptr : &*it;
}

std::vector<const OperationDef*> OperationRegistry::mutating() const {
  std::vector<const OperationDef*> out;
  for (const auto& op : ops_) {
    if (op.mutating) out.push_back(&op);
  }
  return out;
}

std::pair<std::string, ActionArgs> to_args(const Action& action) {
  struct Visitor {
    ActionArgs operator()(const GrantAuto& x) const { return {x.perm, std::nullopt, x.app}; }
    ActionArgs operator()(const Grant& x) const { return {x.perm, std::nullopt, x.app}; }
    ActionArgs operator()(const Revoke& x) const { return {x.perm, std::nullopt, x.app}; }
    ActionArgs operator()(const RevokeGroup& x) const { return {std::nullopt, x.group, x.app}; }
    ActionArgs operator()(const HasPermission& x) const { return {x.perm, std::nullopt, x.app}; }
  };
  return {std::string(action_name(action)), std::visit(Visitor{}, action)};
}

}  // namespace permodel
