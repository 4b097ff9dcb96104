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
#include "permodel/model.hpp"

#include <algorithm>

#include "permodel/kernel.hpp"

namespace permodel {

namespace {

const Atom& level_atom(PermLevel level) {
  static const Atom normal("normal");
  static const Atom signature("signature");
  static const Atom dangerous("dangerous");
  switch (level) {
    case PermLevel::normal: return normal;
    case PermLevel::signature: return signature;
    case PermLevel::dangerous: return dangerous;
  }
  return normal;
}

}  // namespace

bool is_valid_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || (u > 0x20 && u < 0x7f);
  });
}

std::string_view to_string(PermLevel level) noexcept { return level_atom(level).name(); }

std::optional<PermLevel> parse_perm_level(std::string_view text) noexcept {
  if (text == "normal") return PermLevel::normal;
  if (text == "signature") return PermLevel::signature;
  if (text == "dangerous") return PermLevel::dangerous;
  return std::nullopt;
}

Atom unused_atom() {
  static const Atom unused("unused");
  return unused;
}

std::array<Atom, 5> unused_slots() {
  Atom u = unused_atom();
  return {u, u, u, u, u};
}

// ---------------------------------------------------------------------------
// Perm

Value Perm::to_value() const {
  Set grp = group ? Set{group->value()} : Set();
  return Value::pair(id.value(), Value::pair(grp, level_atom(level)));
}

Perm Perm::from_value(const Value& v) {
  PermId id(v.first().as_atom().name());
  std::optional<GrpId> group;
  const Set& grp = v.second().first().as_set();
  if (grp.size() > 1) throw TypeMismatch("perm group holds more than one value: " + to_string(v));
  if (!grp.empty()) group = GrpId(grp[0].as_atom().name());
  return Perm{id, group, level_of(v)};
}

const Value& Perm::id_of(const Value& perm) { return perm.first(); }

std::optional<Value> Perm::group_of(const Value& perm) {
  const Set& grp = perm.second().first().as_set();
  if (grp.empty()) return std::nullopt;
  return grp[0];
}

PermLevel Perm::level_of(const Value& perm) {
  Atom a = perm.second().second().as_atom();
  for (PermLevel l : {PermLevel::normal, PermLevel::signature, PermLevel::dangerous}) {
    if (a == level_atom(l)) return l;
  }
  throw TypeMismatch("unknown protection level '" + a.str() + "'");
}

// ---------------------------------------------------------------------------
// Manifest, SysImgApp

Value Manifest::to_value() const {
  return tuple({extra[0], extra[1], extra[2], use, extra[3], extra[4]});
}

Manifest Manifest::from_value(const Value& v) {
  auto slots = untuple(v, 6);
  Manifest m;
  m.use = slots[3].as_set();
  m.extra = {slots[0].as_atom(), slots[1].as_atom(), slots[2].as_atom(), slots[4].as_atom(),
             slots[5].as_atom()};
  return m;
}

const Set& Manifest::use_of(const Value& manifest) {
  return manifest.second().second().second().first().as_set();
}

Value SysImgApp::to_value() const { return Value::pair(id.value(), def_perms); }

SysImgApp SysImgApp::from_value(const Value& v) {
  return SysImgApp{AppId(v.first().as_atom()), v.second().as_set()};
}

// ---------------------------------------------------------------------------
// Accessors

System with_apps(System s, Set v) {
  s.state.apps = std::move(v);
  return s;
}
System with_already_verified(System s, Set v) {
  s.state.already_verified = std::move(v);
  return s;
}
System with_granted_perm_groups(System s, Relation v) {
  s.state.granted_perm_groups = std::move(v);
  return s;
}
System with_perms(System s, Relation v) {
  s.state.perms = std::move(v);
  return s;
}
System with_manifest(System s, Relation v) {
  s.environment.manifest = std::move(v);
  return s;
}
System with_cert(System s, Relation v) {
  s.environment.cert = std::move(v);
  return s;
}
System with_def_perms(System s, Relation v) {
  s.environment.def_perms = std::move(v);
  return s;
}
System with_system_image(System s, Set v) {
  s.environment.system_image = std::move(v);
  return s;
}

std::string_view slot_name(Slot slot) noexcept {
  switch (slot) {
    case Slot::apps: return "apps";
    case Slot::already_verified: return "alreadyVerified";
    case Slot::granted_perm_groups: return "grantedPermGroups";
    case Slot::perms: return "perms";
    case Slot::opaque5: return "opaque5";
    case Slot::opaque6: return "opaque6";
    case Slot::opaque7: return "opaque7";
    case Slot::opaque8: return "opaque8";
    case Slot::opaque9: return "opaque9";
    case Slot::manifest: return "manifest";
    case Slot::cert: return "cert";
    case Slot::def_perms: return "defPerms";
    case Slot::system_image: return "systemImage";
  }
  return "?";
}

Value slot_value(const System& s, Slot slot) {
  switch (slot) {
    case Slot::apps: return s.state.apps;
    case Slot::already_verified: return s.state.already_verified;
    case Slot::granted_perm_groups: return s.state.granted_perm_groups.pairs();
    case Slot::perms: return s.state.perms.pairs();
    case Slot::opaque5: return s.state.opaque[0];
    case Slot::opaque6: return s.state.opaque[1];
    case Slot::opaque7: return s.state.opaque[2];
    case Slot::opaque8: return s.state.opaque[3];
    case Slot::opaque9: return s.state.opaque[4];
    case Slot::manifest: return s.environment.manifest.pairs();
    case Slot::cert: return s.environment.cert.pairs();
    case Slot::def_perms: return s.environment.def_perms.pairs();
    case Slot::system_image: return s.environment.system_image;
  }
  return Set();
}

std::vector<Slot> changed_slots(const System& before, const System& after) {
  std::vector<Slot> out;
  for (Slot slot : kAllSlots) {
    if (slot_value(before, slot) != slot_value(after, slot)) out.push_back(slot);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Helper predicates

std::optional<Manifest> is_manifest_of_app(const System& s, const AppId& a) {
  auto m = rel_apply(manifest(s), a.value());
  if (!m) return std::nullopt;
  return Manifest::from_value(*m);
}

std::optional<Set> def_perms_for_app(const System& s, const AppId& a) {
  std::optional<Set> found;
  if (auto image = rel_apply(def_perms(s), a.value())) found = image->as_set();
  for (const Value& entry : system_image(s)) {
    if (entry.first() != a.value()) continue;
    const Set& l = entry.second().as_set();
    if (found && *found != l) {
      throw AmbiguousDefinition("app " + a.atom().str() + " defines different permission sets");
    }
    found = l;
  }
  return found;
}

bool usr_def_perm(const System& s, const Value& perm) {
  for (const Value& p : def_perms(s)) {
    if (p.second().as_set().contains(perm)) return true;
  }
  for (const Value& app : system_image(s)) {
    if (app.second().as_set().contains(perm)) return true;
  }
  return false;
}

bool usr_def_perm(const System& s, const Perm& p) { return usr_def_perm(s, p.to_value()); }

}  // namespace permodel
