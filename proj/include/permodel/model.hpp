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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permodel/errors.hpp"
#include "permodel/value.hpp"

namespace permodel {

/// Identifier of one kind of entity. Different tags do not mix.
template <class Tag>
class Id {
 public:
  explicit Id(Atom atom) noexcept : atom_(atom) {}
  explicit Id(std::string_view name) : atom_(checked(name)) {}

  Atom atom() const noexcept { return atom_; }
  std::string_view name() const noexcept { return atom_.name(); }
  Value value() const noexcept { return Value(atom_); }

  friend bool operator==(const Id&, const Id&) = default;
  friend auto operator<=>(const Id&, const Id&) = default;

 private:
  static Atom checked(std::string_view name);
  Atom atom_;
};

struct AppTag {};
struct PermTag {};
struct GrpTag {};
struct CertTag {};

using AppId = Id<AppTag>;
using PermId = Id<PermTag>;
using GrpId = Id<GrpTag>;
using Cert = Id<CertTag>;

/// Nonempty and made of printable ASCII or UTF-8 continuation bytes.
bool is_valid_identifier(std::string_view name) noexcept;

template <class Tag>
Atom Id<Tag>::checked(std::string_view name) {
  if (!is_valid_identifier(name)) throw TypeMismatch("invalid identifier '" + std::string(name) + "'");
  return Atom(name);
}

enum class PermLevel : std::uint8_t { normal, signature, dangerous };

std::string_view to_string(PermLevel level) noexcept;
std::optional<PermLevel> parse_perm_level(std::string_view text) noexcept;

/// The five uninterpreted slots default to this atom.
Atom unused_atom();
std::array<Atom, 5> unused_slots();

/// A permission: identifier, optional group and protection level.
///
/// As a Value it is the triple [id, [group, level]] where the group is the
/// empty set when absent and the singleton {g} otherwise.
struct Perm {
  PermId id;
  std::optional<GrpId> group;
  PermLevel level;

  Value to_value() const;
  static Perm from_value(const Value& v);

  // Field access directly on the encoded form.
  static const Value& id_of(const Value& perm);
  static std::optional<Value> group_of(const Value& perm);
  static PermLevel level_of(const Value& perm);

  friend bool operator==(const Perm&, const Perm&) = default;
};

/// Only `use` is interpreted. Encoded as the 6-tuple
/// [x1, x2, x3, use, x4, x5]; extra holds x1..x5 in order.
struct Manifest {
  Set use;
  std::array<Atom, 5> extra = unused_slots();

  Value to_value() const;
  static Manifest from_value(const Value& v);
  static const Set& use_of(const Value& manifest);

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Pre-installed application with the permissions it defines.
/// Encoded as the pair [idSI, defPermsSI].
struct SysImgApp {
  AppId id;
  Set def_perms;

  Value to_value() const;
  static SysImgApp from_value(const Value& v);

  friend bool operator==(const SysImgApp&, const SysImgApp&) = default;
};

struct State {
  Set apps;
  Set already_verified;
  Relation granted_perm_groups;  // app -> set of groups
  Relation perms;                // app -> set of perms
  std::array<Atom, 5> opaque = unused_slots();  // slots 5..9

  friend bool operator==(const State&, const State&) = default;
};

struct Environment {
  Relation manifest;   // app -> Manifest
  Relation cert;       // app -> certificate atom
  Relation def_perms;  // app -> set of perms
  Set system_image;    // of SysImgApp

  friend bool operator==(const Environment&, const Environment&) = default;
};

struct System {
  State state;
  Environment environment;

  friend bool operator==(const System&, const System&) = default;
};

/// Permissions defined by the platform itself.
struct SystemPerms {
  Set perms;

  bool contains(const Value& perm) const { return perms.contains(perm); }
  friend bool operator==(const SystemPerms&, const SystemPerms&) = default;
};

// ---------------------------------------------------------------------------
// Accessors and updaters. Each updater replaces exactly one component.

inline const Set& apps(const System& s) noexcept { return s.state.apps; }
inline const Set& already_verified(const System& s) noexcept { return s.state.already_verified; }
inline const Relation& granted_perm_groups(const System& s) noexcept { return s.state.granted_perm_groups; }
inline const Relation& perms(const System& s) noexcept { return s.state.perms; }
inline const Relation& manifest(const System& s) noexcept { return s.environment.manifest; }
inline const Relation& cert(const System& s) noexcept { return s.environment.cert; }
inline const Relation& def_perms(const System& s) noexcept { return s.environment.def_perms; }
inline const Set& system_image(const System& s) noexcept { return s.environment.system_image; }

System with_apps(System s, Set v);
System with_already_verified(System s, Set v);
System with_granted_perm_groups(System s, Relation v);
System with_perms(System s, Relation v);
System with_manifest(System s, Relation v);
System with_cert(System s, Relation v);
System with_def_perms(System s, Relation v);
System with_system_image(System s, Set v);

/// Every component of a System, in document order.
enum class Slot : std::uint8_t {
  apps,
  already_verified,
  granted_perm_groups,
  perms,
  opaque5,
  opaque6,
  opaque7,
  opaque8,
  opaque9,
  manifest,
  cert,
  def_perms,
  system_image,
};

inline constexpr std::array<Slot, 13> kAllSlots = {
    Slot::apps,    Slot::already_verified, Slot::granted_perm_groups, Slot::perms,
    Slot::opaque5, Slot::opaque6,          Slot::opaque7,             Slot::opaque8,
    Slot::opaque9, Slot::manifest,         Slot::cert,                Slot::def_perms,
    Slot::system_image};

std::string_view slot_name(Slot slot) noexcept;
/// The component as a Value (relations as their set of pairs).
Value slot_value(const System& s, Slot slot);
/// Components whose values differ structurally.
std::vector<Slot> changed_slots(const System& before, const System& after);

// ---------------------------------------------------------------------------
// Helper predicates.

/// The manifest registered for `a`. Throws AmbiguousApplication if the
/// manifest map has several entries for `a`.
std::optional<Manifest> is_manifest_of_app(const System& s, const AppId& a);

/// Permissions `a` defines, from defPerms or else from the system image.
/// Throws AmbiguousDefinition when the sources disagree.
std::optional<Set> def_perms_for_app(const System& s, const AppId& a);

/// `p` is defined by some installed app or by a system-image app.
bool usr_def_perm(const System& s, const Value& perm);
bool usr_def_perm(const System& s, const Perm& p);

}  // namespace permodel
