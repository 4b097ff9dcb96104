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

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "permodel/model.hpp"

namespace permodel {

/// A precondition that did not hold; `conjunct` is 1-based in the
/// operation's textual order.
struct PreconditionFailure {
  std::string op;
  int conjunct = 0;
  std::string reason;

  friend bool operator==(const PreconditionFailure&, const PreconditionFailure&) = default;
};

class ActionOutcome {
 public:
  static ActionOutcome ok(System next, std::optional<bool> answer = std::nullopt);
  static ActionOutcome error(PreconditionFailure failure);

  bool is_ok() const noexcept { return std::holds_alternative<System>(result_); }
  explicit operator bool() const noexcept { return is_ok(); }

  /// Precondition: is_ok().
  const System& next() const { return std::get<System>(result_); }
  /// Precondition: !is_ok().
  const PreconditionFailure& failure() const { return std::get<PreconditionFailure>(result_); }
  /// Side channel of read-only queries such as hasPermission.
  std::optional<bool> answer() const noexcept { return answer_; }

 private:
  explicit ActionOutcome(std::variant<System, PreconditionFailure> r) : result_(std::move(r)) {}

  std::variant<System, PreconditionFailure> result_;
  std::optional<bool> answer_;
};

struct GrantAuto {
  Perm perm;
  AppId app;
};
struct Grant {
  Perm perm;
  AppId app;
};
struct Revoke {
  Perm perm;
  AppId app;
};
struct RevokeGroup {
  GrpId group;
  AppId app;
};
struct HasPermission {
  Perm perm;
  AppId app;
};

using Action = std::variant<GrantAuto, Grant, Revoke, RevokeGroup, HasPermission>;

std::string_view action_name(const Action& a) noexcept;

/// Result of a precondition check; `failed` is the first conjunct that
/// does not hold, or 0.
struct PreCheck {
  int failed = 0;
  explicit operator bool() const noexcept { return failed == 0; }
};

/// The app may be granted `p` automatically:
///   1. the app's manifest lists p in `use`;
///   2. p is a system permission or defined by some app;
///   3. p is not already granted to the app;
///   4. p is dangerous;
///   5. p belongs to a group g the user has authorized for the app.
/// Relation lookups that are ambiguous make their conjunct fail.
PreCheck pre_grant_auto(const SystemPerms& sp, const System& s, const Perm& p, const AppId& a);

/// Adds p to perms(a); every other component is left unchanged.
ActionOutcome grant_auto(const SystemPerms& sp, const System& s, const Perm& p, const AppId& a);

/// Grant with explicit user consent.
///
/// DESIGN-DECISION: pre is conjuncts 1..4 of pre_grant_auto (no group
/// authorization needed). Post adds p to perms(a) and, when p is grouped in
/// g, also authorizes g for the app in grantedPermGroups.
ActionOutcome grant(const SystemPerms& sp, const System& s, const Perm& p, const AppId& a);

/// DESIGN-DECISION: pre is (1) p is ungrouped and (2) p is granted to a.
/// Post removes p from perms(a), keeping the key.
ActionOutcome revoke(const System& s, const Perm& p, const AppId& a);

/// DESIGN-DECISION: pre is (1) g is authorized for a. Post removes g from
/// grantedPermGroups(a) and every perm grouped g from perms(a), keeping keys.
ActionOutcome revoke_group(const System& s, const GrpId& g, const AppId& a);

/// DESIGN-DECISION: p is in perms(a). Read-only.
bool has_permission(const System& s, const Perm& p, const AppId& a);

/// g is in the image of a under grantedPermGroups (false when absent or
/// ambiguous).
bool group_authorized(const System& s, const Value& group, const Value& app);

/// Dispatches to the operation named by the action. hasPermission yields
/// ok(s) with the answer in the side channel.
ActionOutcome step(const SystemPerms& sp, const System& s, const Action& action);

// ---------------------------------------------------------------------------
// Registry used by the verifier.

enum class ParamShape { perm_app, group_app };

/// How the verifier biases its sampling toward states where an operation
/// (or a property built on grantAuto) applies.
enum class TargetMode {
  none,
  grant_enabled,   // pre_grant_auto holds for some (p, a)
  group_withheld,  // conjuncts 1..4 hold but the group is not authorized
};

struct ActionArgs {
  std::optional<Perm> perm;
  std::optional<GrpId> group;
  AppId app;

  friend bool operator==(const ActionArgs&, const ActionArgs&) = default;
};

struct OperationDef {
  std::string id;
  ParamShape shape = ParamShape::perm_app;
  bool mutating = true;
  TargetMode targeting = TargetMode::none;
  std::function<ActionOutcome(const SystemPerms&, const System&, const ActionArgs&)> apply;
};

class OperationRegistry {
 public:
  /// grantAuto, grant, revoke, revokeGroup, hasPermission.
  static OperationRegistry standard();

  /// Replaces an existing definition with the same id.
  void add(OperationDef op);

  const std::vector<OperationDef>& operations() const noexcept { return ops_; }
  const OperationDef* find(std::string_view id) const noexcept;
  std::vector<const OperationDef*> mutating() const;

 private:
  std::vector<OperationDef> ops_;
};

/// The registry entry for an action and the arguments it carries.
std::pair<std::string, ActionArgs> to_args(const Action& action);

}  // namespace permodel
