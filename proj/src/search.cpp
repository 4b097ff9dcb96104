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
#include <chrono>

#include "permodel/kernel.hpp"
#include "permodel/verifier.hpp"

namespace permodel {

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::string_view query_id) {
  return splitmix64(seed ^ fnv1a(query_id));
}

bool satisfied(const Query& q, const Candidate& c, const ActionArgs& args) {
  return q.hypothesis(c) && q.probe(c, args).found;
}

// ---------------------------------------------------------------------------
// One-step reductions of a witness, in component order.

using Shrink = std::function<std::vector<Value>(const Value&)>;

std::vector<Set> smaller_sets(const Set& s, const Shrink& inner = nullptr) {
  std::vector<Set> out;
  for (const Value& x : s) out.push_back(without_element(s, x));
  if (!inner) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Value& y : inner(s[i])) {
      std::vector<Value> elems(s.begin(), s.end());
      elems[i] = std::move(y);
      out.push_back(Set::from(std::move(elems)));
    }
  }
  return out;
}

std::vector<Value> smaller_set_values(const Value& v) {
  std::vector<Value> out;
  for (Set& s : smaller_sets(v.as_set())) out.emplace_back(std::move(s));
  return out;
}

Shrink image(Shrink inner) {
  return [inner = std::move(inner)](const Value& pr) {
    std::vector<Value> out;
    for (Value& y : inner(pr.second())) out.push_back(Value::pair(pr.first(), std::move(y)));
    return out;
  };
}

std::vector<Value> smaller_manifests(const Value& v) {
  std::vector<Value> out;
  Manifest m = Manifest::from_value(v);
  for (Set& use : smaller_sets(m.use)) {
    Manifest n = m;
    n.use = std::move(use);
    out.push_back(n.to_value());
  }
  return out;
}

std::vector<Value> smaller_sys_apps(const Value& v) {
  std::vector<Value> out;
  SysImgApp app = SysImgApp::from_value(v);
  for (Set& defs : smaller_sets(app.def_perms)) out.push_back(SysImgApp{app.id, std::move(defs)}.to_value());
  return out;
}

std::vector<Relation> smaller_relations(const Relation& r, const Shrink& inner = nullptr) {
  std::vector<Relation> out;
  for (Set& s : smaller_sets(r.pairs(), inner ? image(inner) : Shrink())) out.emplace_back(std::move(s));
  return out;
}

std::vector<Candidate> reductions(const Candidate& c) {
  std::vector<Candidate> out;
  const System& s = c.system;
  auto each_set = [&](const Set& cur, auto assign, const Shrink& inner = nullptr) {
    for (Set& smaller : smaller_sets(cur, inner)) {
      Candidate n = c;
      assign(n, std::move(smaller));
      out.push_back(std::move(n));
    }
  };
  auto each_rel = [&](const Relation& cur, auto assign, const Shrink& inner = nullptr) {
    for (Relation& smaller : smaller_relations(cur, inner)) {
      Candidate n = c;
      assign(n, std::move(smaller));
      out.push_back(std::move(n));
    }
  };
  each_set(apps(s), [](Candidate& n, Set v) { n.system.state.apps = std::move(v); });
  each_set(already_verified(s), [](Candidate& n, Set v) { n.system.state.already_verified = std::move(v); });
  each_rel(granted_perm_groups(s), [](Candidate& n, Relation v) { n.system.state.granted_perm_groups = std::move(v); },
           smaller_set_values);
  each_rel(perms(s), [](Candidate& n, Relation v) { n.system.state.perms = std::move(v); }, smaller_set_values);
  each_rel(manifest(s), [](Candidate& n, Relation v) { n.system.environment.manifest = std::move(v); },
           smaller_manifests);
  each_rel(cert(s), [](Candidate& n, Relation v) { n.system.environment.cert = std::move(v); });
  each_rel(def_perms(s), [](Candidate& n, Relation v) { n.system.environment.def_perms = std::move(v); },
           smaller_set_values);
  each_set(system_image(s), [](Candidate& n, Set v) { n.system.environment.system_image = std::move(v); },
           smaller_sys_apps);
  each_set(c.system_perms.perms, [](Candidate& n, Set v) { n.system_perms.perms = std::move(v); });
  return out;
}

Candidate concretize(const Query& q, Candidate c, const ActionArgs& args) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Candidate& r : reductions(c)) {
      if (satisfied(q, r, args)) {
        c = std::move(r);
        changed = true;
        break;
      }
    }
  }
  return c;
}

}  // namespace

std::string_view to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::holds_at_bounds:
      return "holds-at-bounds";
    case VerdictKind::counterexample:
      return "counterexample";
    case VerdictKind::witness:
      return "witness";
    case VerdictKind::no_witness_at_bounds:
      return "no-witness-at-bounds";
    case VerdictKind::budget_exhausted:
      return "budget-exhausted";
  }
  return "?";
}

Verdict check_query(const Query& query, const StateSpace& space, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.query_id = query.id;
  v.kind = query.kind;

  const std::vector<ActionArgs>& params = space.params(query.shape);
  CandidateSource source(space, space.bounds().budget, stream_seed(seed, query.id), query.targeting);
  v.exhaustive = source.exhaustive();

  while (!v.finding) {
    std::optional<Candidate> c = source.next();
    if (!c) break;
    ++v.states_examined;
    if (!query.hypothesis(*c)) continue;
    for (const ActionArgs& args : params) {
      Probe pr = query.probe(*c, args);
      if (pr.antecedent) ++v.antecedent_hits;
      if (pr.found) {
        v.finding = Finding{std::move(*c), query.op, args, std::move(pr.next)};
        break;
      }
    }
  }

  const bool existential = query.kind == QueryKind::existential;
  if (v.finding) {
    if (existential) v.finding->point = concretize(query, std::move(v.finding->point), v.finding->args);
    v.verdict = existential ? VerdictKind::witness : VerdictKind::counterexample;
    v.rechecked = recheck(query, v);
  } else if (v.exhaustive) {
    v.verdict = existential ? VerdictKind::no_witness_at_bounds : VerdictKind::holds_at_bounds;
  } else {
    v.verdict = !existential && v.antecedent_hits > 0 ? VerdictKind::holds_at_bounds : VerdictKind::budget_exhausted;
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

Verdict check_query(const Query& query, const Bounds& bounds) {
  StateSpace space(bounds);
  return check_query(query, space, bounds.seed);
}

bool recheck(const Query& query, const Verdict& verdict) {
  if (!verdict.finding || verdict.query_id != query.id) return false;
  const Finding& f = *verdict.finding;
  if (!query.hypothesis(f.point)) return false;
  Probe pr = query.probe(f.point, f.args);
  return pr.found && pr.next == f.next;
}

}  // namespace permodel
