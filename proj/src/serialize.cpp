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
#include "permodel/serialize.hpp"

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "permodel/errors.hpp"

namespace permodel {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path, message);
}

std::string join(const std::string& path, std::string_view key) {
  if (path.empty()) return std::string(key);
  return path + "." + std::string(key);
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void expect_object(const Json& j, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(join(path, key), "unknown field");
    }
  }
}

const Json& required(const Json& obj, std::string_view key, const std::string& path) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(join(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Atom atom_from(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  const auto& s = j.get_ref<const std::string&>();
  if (!is_valid_identifier(s)) fail(path, "invalid identifier '" + s + "'");
  return Atom(s);
}

Atom opaque_from(const Json& obj, std::string_view key, const std::string& path) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) return unused_atom();
  return atom_from(*it, join(path, key));
}

template <class ElemFn>
Set set_from(const Json& j, const std::string& path, ElemFn&& elem) {
  array(j, path);
  std::vector<Value> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(elem(j[i], index(path, i)));
  try {
    return Set::from_unique(std::move(out));
  } catch (const DuplicateElement& e) {
    fail(path, e.what());
  }
}

template <class ValueFn>
Relation relation_from(const Json& j, const std::string& path, ValueFn&& value) {
  return Relation(set_from(j, path, [&](const Json& entry, const std::string& p) {
    if (!entry.is_array() || entry.size() != 2) fail(p, "expected a [key, value] pair");
    return Value::pair(atom_from(entry[0], index(p, 0)), value(entry[1], index(p, 1)));
  }));
}

template <class ElemFn>
Json set_json(const Set& s, ElemFn&& elem) {
  Json out = Json::array();
  for (const Value& v : s) out.push_back(elem(v));
  return out;
}

template <class ValueFn>
Json relation_json(const Relation& r, ValueFn&& value) {
  Json out = Json::array();
  for (const Value& p : r) out.push_back(Json::array({p.first().as_atom().str(), value(p.second())}));
  return out;
}

Json atom_json(const Value& v) { return v.as_atom().str(); }
Json perm_value_json(const Value& v) { return to_json(Perm::from_value(v)); }
Json perm_set_json(const Value& v) { return set_json(v.as_set(), perm_value_json); }
Json group_set_json(const Value& v) { return set_json(v.as_set(), atom_json); }

Value atom_value(const Json& j, const std::string& path) { return atom_from(j, path); }

Value perm_value(const Json& j, const std::string& path) {
  return perm_from_json(j, path).to_value();
}

Value perm_set_value(const Json& j, const std::string& path) {
  return perm_set_from_json(j, path);
}

Value group_set_value(const Json& j, const std::string& path) {
  return set_from(j, path, atom_value);
}

Manifest manifest_from(const Json& j, const std::string& path) {
  expect_object(j, path, {"use", "extra"});
  Manifest m;
  m.use = perm_set_from_json(required(j, "use", path), join(path, "use"));
  if (auto it = j.find("extra"); it != j.end()) {
    std::string p = join(path, "extra");
    if (!it->is_array() || it->size() != 5) fail(p, "expected an array of five strings");
    for (std::size_t i = 0; i < 5; ++i) m.extra[i] = atom_from((*it)[i], index(p, i));
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Emission

Json to_json(const Perm& p) {
  Json j = Json::object();
  j["id"] = p.id.atom().str();
  j["group"] = p.group ? Json(p.group->atom().str()) : Json(nullptr);
  j["level"] = std::string(to_string(p.level));
  return j;
}

Json to_json(const Manifest& m) {
  Json j = Json::object();
  j["use"] = set_json(m.use, perm_value_json);
  Json extra = Json::array();
  for (const Atom& a : m.extra) extra.push_back(a.str());
  j["extra"] = std::move(extra);
  return j;
}

Json to_json(const SysImgApp& app) {
  Json j = Json::object();
  j["idSI"] = app.id.atom().str();
  j["defPermsSI"] = set_json(app.def_perms, perm_value_json);
  return j;
}

Json to_json(const System& s) {
  Json st = Json::object();
  st["apps"] = set_json(s.state.apps, atom_json);
  st["alreadyVerified"] = set_json(s.state.already_verified, atom_json);
  st["grantedPermGroups"] = relation_json(s.state.granted_perm_groups, group_set_json);
  st["perms"] = relation_json(s.state.perms, perm_set_json);
  for (std::size_t i = 0; i < s.state.opaque.size(); ++i) {
    st["opaque" + std::to_string(i + 5)] = s.state.opaque[i].str();
  }

  Json env = Json::object();
  env["manifest"] =
      relation_json(s.environment.manifest, [](const Value& v) { return to_json(Manifest::from_value(v)); });
  env["cert"] = relation_json(s.environment.cert, atom_json);
  env["defPerms"] = relation_json(s.environment.def_perms, perm_set_json);
  env["systemImage"] =
      set_json(s.environment.system_image, [](const Value& v) { return to_json(SysImgApp::from_value(v)); });

  Json j = Json::object();
  j["state"] = std::move(st);
  j["environment"] = std::move(env);
  return j;
}

Json to_json(const SystemPerms& sp) {
  Json j = Json::object();
  j["systemPerms"] = set_json(sp.perms, perm_value_json);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Parsing

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail("", e.what());
  }
}

Perm perm_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"id", "group", "level"});
  PermId id(atom_from(required(j, "id", path), join(path, "id")));
  std::optional<GrpId> group;
  const Json& g = required(j, "group", path);
  if (!g.is_null()) group = GrpId(atom_from(g, join(path, "group")));
  const Json& l = required(j, "level", path);
  if (!l.is_string()) fail(join(path, "level"), "expected a string");
  auto level = parse_perm_level(l.get_ref<const std::string&>());
  if (!level) fail(join(path, "level"), "unknown protection level '" + l.get<std::string>() + "'");
  return Perm{id, group, *level};
}

Set perm_set_from_json(const Json& j, const std::string& path) {
  return set_from(j, path, perm_value);
}

System system_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"state", "environment"});

  std::string sp = join(path, "state");
  const Json& st = required(j, "state", path);
  expect_object(st, sp,
                {"apps", "alreadyVerified", "grantedPermGroups", "perms", "opaque5", "opaque6",
                 "opaque7", "opaque8", "opaque9"});
  System s;
  s.state.apps = set_from(required(st, "apps", sp), join(sp, "apps"), atom_value);
  s.state.already_verified =
      set_from(required(st, "alreadyVerified", sp), join(sp, "alreadyVerified"), atom_value);
  s.state.granted_perm_groups = relation_from(required(st, "grantedPermGroups", sp),
                                              join(sp, "grantedPermGroups"), group_set_value);
  s.state.perms = relation_from(required(st, "perms", sp), join(sp, "perms"), perm_set_value);
  for (std::size_t i = 0; i < s.state.opaque.size(); ++i) {
    s.state.opaque[i] = opaque_from(st, "opaque" + std::to_string(i + 5), sp);
  }

  std::string ep = join(path, "environment");
  const Json& env = required(j, "environment", path);
  expect_object(env, ep, {"manifest", "cert", "defPerms", "systemImage"});
  s.environment.manifest = relation_from(
      required(env, "manifest", ep), join(ep, "manifest"),
      [](const Json& m, const std::string& p) { return manifest_from(m, p).to_value(); });
  s.environment.cert = relation_from(required(env, "cert", ep), join(ep, "cert"), atom_value);
  s.environment.def_perms =
      relation_from(required(env, "defPerms", ep), join(ep, "defPerms"), perm_set_value);
  s.environment.system_image = set_from(
      required(env, "systemImage", ep), join(ep, "systemImage"),
      [](const Json& a, const std::string& p) {
        expect_object(a, p, {"idSI", "defPermsSI"});
        SysImgApp app{AppId(atom_from(required(a, "idSI", p), join(p, "idSI"))),
                      perm_set_from_json(required(a, "defPermsSI", p), join(p, "defPermsSI"))};
        return app.to_value();
      });
  return s;
}

SystemPerms system_perms_from_json(const Json& j, const std::string& path) {
  return SystemPerms{perm_set_from_json(j, path)};
}

std::string emit_state(const System& s) { return dump(to_json(s)); }

System parse_state(std::string_view text) { return system_from_json(parse_json(text)); }

std::string emit_system_perms(const SystemPerms& sp) { return dump(to_json(sp)); }

SystemPerms parse_system_perms(std::string_view text) {
  Json j = parse_json(text);
  expect_object(j, "", {"systemPerms"});
  return system_perms_from_json(required(j, "systemPerms", ""), "systemPerms");
}

}  // namespace permodel
