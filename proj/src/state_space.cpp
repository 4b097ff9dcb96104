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
#include <algorithm>
#include <stdexcept>

#include "permodel/kernel.hpp"
#include "permodel/verifier.hpp"

namespace permodel {

namespace {

constexpr std::array<PermLevel, 3> kLevels = {PermLevel::normal, PermLevel::signature, PermLevel::dangerous};

template <class IdT>
std::vector<IdT> pool(const char* prefix, int n) {
  std::vector<IdT> out;
  for (int i = 1; i <= n; ++i) out.emplace_back(prefix + std::to_string(i));
  return out;
}

// Subsets of at most k elements of a canonical, duplicate-free pool: by
// size, then lexicographically by index.
std::vector<Set> subsets(std::vector<Value> items, int k) {
  std::sort(items.begin(), items.end());
  std::vector<Set> out;
  std::vector<std::size_t> idx;
  const std::size_t n = items.size();
  for (std::size_t size = 0; size <= std::min<std::size_t>(k, n); ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Value> elems;
      elems.reserve(size);
      for (std::size_t i : idx) elems.push_back(items[i]);
      out.push_back(Set::from_sorted(std::move(elems)));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// Partial functions from the pool apps into `images` with at most k pairs.
std::vector<Relation> keyed_relations(const std::vector<Value>& keys, const std::vector<Value>& images, int k) {
  std::vector<Relation> out;
  std::vector<Value> current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == keys.size()) {
      out.emplace_back(Set::from_sorted(current));
      return;
    }
    self(self, i + 1);
    if (static_cast<int>(current.size()) >= k) return;
    for (const Value& img : images) {
      current.push_back(Value::pair(keys[i], img));
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Value> as_values(const std::vector<Set>& sets) { return {sets.begin(), sets.end()}; }

template <class IdT>
std::vector<Value> as_values(const std::vector<IdT>& ids) {
  std::vector<Value> out;
  for (const auto& id : ids) out.push_back(id.value());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> checked_mul(std::optional<std::uint64_t> a, std::uint64_t b) {
  if (!a) return std::nullopt;
  if (b != 0 && *a > UINT64_MAX / b) return std::nullopt;
  return *a * b;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Adds x, evicting a random other element if the set is full.
Set bounded_insert(const Set& s, const Value& x, int k, std::mt19937_64& rng) {
  if (s.contains(x)) return s;
  if (static_cast<int>(s.size()) < k) return with_element(s, x);
  return with_element(without_element(s, s[pick(rng, s.size())]), x);
}

// Drops random pairs not keyed `keep` until at most k remain.
Relation bounded_pairs(Relation r, const Value& keep, int k, std::mt19937_64& rng) {
  while (static_cast<int>(r.size()) > k) {
    std::vector<Value> others;
    for (const Value& pr : r) {
      if (pr.first() != keep) others.push_back(pr);
    }
    r = Relation(without_element(r.pairs(), others[pick(rng, others.size())]));
  }
  return r;
}

std::optional<Value> unique_image(const Relation& r, const Value& key) {
  auto run = r.pairs_with_key(key);
  if (run.size() != 1) return std::nullopt;
  return run.front().second();
}

Relation put(const Relation& r, const Value& key, const Value& image, int k, std::mt19937_64& rng) {
  return bounded_pairs(foplus(r, key, image), key, k, rng);
}

}  // namespace

void Bounds::validate() const {
  if (apps < 1 || perm_ids < 1 || groups < 1) throw std::invalid_argument("pool sizes must be positive");
  if (max_card < 0) throw std::invalid_argument("maxcard must be non-negative");
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
}

StateSpace::StateSpace(const Bounds& bounds) : bounds_(bounds) {
  bounds_.validate();
  const int k = bounds_.max_card;
  apps_ = pool<AppId>("a", bounds_.apps);
  groups_ = pool<GrpId>("g", bounds_.groups);
  std::vector<Cert> certs = pool<Cert>("c", bounds_.apps);

  for (const PermId& id : pool<PermId>("p", bounds_.perm_ids)) {
    for (PermLevel level : kLevels) perms_.push_back(Perm{id, std::nullopt, level});
    for (const GrpId& g : groups_) {
      for (PermLevel level : kLevels) {
        perms_.push_back(Perm{id, g, level});
        if (level == PermLevel::dangerous) grouped_dangerous_.push_back(perms_.back());
      }
    }
  }
  std::vector<Value> perm_values;
  for (const Perm& p : perms_) perm_values.push_back(p.to_value());

  const std::vector<Value> app_values = as_values(apps_);
  const std::vector<Set> perm_sets = subsets(perm_values, k);

  system_perms_ = perm_sets;
  app_sets_ = subsets(app_values, k);
  granted_groups_ = keyed_relations(app_values, as_values(subsets(as_values(groups_), k)), k);
  perm_maps_ = keyed_relations(app_values, as_values(perm_sets), k);
  std::vector<Value> manifests;
  for (const Set& use : perm_sets) manifests.push_back(Manifest{use}.to_value());
  manifests_ = keyed_relations(app_values, manifests, k);
  certs_ = keyed_relations(app_values, as_values(certs), k);
  std::vector<Value> sys_apps;
  for (const AppId& a : apps_) {
    for (const Set& defs : perm_sets) sys_apps.push_back(SysImgApp{a, defs}.to_value());
  }
  system_images_ = subsets(std::move(sys_apps), k);

  for (const Perm& p : perms_) {
    for (const AppId& a : apps_) perm_app_args_.push_back(ActionArgs{p, std::nullopt, a});
  }
  for (const GrpId& g : groups_) {
    for (const AppId& a : apps_) group_app_args_.push_back(ActionArgs{std::nullopt, g, a});
  }

  std::optional<std::uint64_t> n = 1;
  for (const Component& c : components()) {
    if (c.name != "systemPerms") n = checked_mul(n, c.candidates);
  }
  system_count_ = n;
  size_ = checked_mul(n, system_perms_.size());
}

std::vector<StateSpace::Component> StateSpace::components() const {
  return {
      {"systemPerms", system_perms_.size()},   {"apps", app_sets_.size()},
      {"alreadyVerified", app_sets_.size()},   {"grantedPermGroups", granted_groups_.size()},
      {"perms", perm_maps_.size()},            {"manifest", manifests_.size()},
      {"cert", certs_.size()},                 {"defPerms", perm_maps_.size()},
      {"systemImage", system_images_.size()},
  };
}

System StateSpace::system_at(std::uint64_t index) const {
  auto digit = [&](std::size_t radix) {
    std::size_t d = index % radix;
    index /= radix;
    return d;
  };
  System s;
  s.state.apps = app_sets_[digit(app_sets_.size())];
  s.state.already_verified = app_sets_[digit(app_sets_.size())];
  s.state.granted_perm_groups = granted_groups_[digit(granted_groups_.size())];
  s.state.perms = perm_maps_[digit(perm_maps_.size())];
  s.environment.manifest = manifests_[digit(manifests_.size())];
  s.environment.cert = certs_[digit(certs_.size())];
  s.environment.def_perms = perm_maps_[digit(perm_maps_.size())];
  s.environment.system_image = system_images_[digit(system_images_.size())];
  return s;
}

Candidate StateSpace::at(std::uint64_t index) const {
  const std::size_t n = system_perms_.size();
  return Candidate{SystemPerms{system_perms_[index % n]}, system_at(index / n)};
}

Candidate StateSpace::sample(std::mt19937_64& rng) const {
  Candidate c;
  c.system_perms.perms = system_perms_[pick(rng, system_perms_.size())];
  System& s = c.system;
  s.state.apps = app_sets_[pick(rng, app_sets_.size())];
  s.state.already_verified = app_sets_[pick(rng, app_sets_.size())];
  s.state.granted_perm_groups = granted_groups_[pick(rng, granted_groups_.size())];
  s.state.perms = perm_maps_[pick(rng, perm_maps_.size())];
  s.environment.manifest = manifests_[pick(rng, manifests_.size())];
  s.environment.cert = certs_[pick(rng, certs_.size())];
  s.environment.def_perms = perm_maps_[pick(rng, perm_maps_.size())];
  s.environment.system_image = system_images_[pick(rng, system_images_.size())];
  return c;
}

Candidate StateSpace::targeted(std::mt19937_64& rng, TargetMode mode) const {
  Candidate c = sample(rng);
  const int k = bounds_.max_card;
  if (mode == TargetMode::none || k == 0) return c;

  const Perm& p = grouped_dangerous_[pick(rng, grouped_dangerous_.size())];
  const Value pv = p.to_value();
  const Value g = p.group->value();
  const Value a = apps_[pick(rng, apps_.size())].value();
  System& s = c.system;

  // 1. listed in the manifest's use
  Manifest m;
  if (auto cur = unique_image(manifest(s), a)) m = Manifest::from_value(*cur);
  m.use = bounded_insert(m.use, pv, k, rng);
  s.environment.manifest = put(manifest(s), a, m.to_value(), k, rng);

  // 2. defined by the platform or by some app, half the time with no other
  // definitions around
  if (pick(rng, 2) == 0) {
    s.environment.def_perms = Relation();
    s.environment.system_image = Set();
  }
  if (pick(rng, 2) == 0) {
    c.system_perms.perms = bounded_insert(c.system_perms.perms, pv, k, rng);
  } else {
    const Value definer = apps_[pick(rng, apps_.size())].value();
    Set defs = unique_image(def_perms(s), definer).value_or(Value(Set{})).as_set();
    s.environment.def_perms = put(def_perms(s), definer, bounded_insert(defs, pv, k, rng), k, rng);
  }

  // 3. not yet granted
  if (auto granted = unique_image(perms(s), a)) {
    s.state.perms = foplus(perms(s), a, without_element(granted->as_set(), pv));
  }

  // 5. group authorization
  Set groups = unique_image(granted_perm_groups(s), a).value_or(Value(Set{})).as_set();
  if (mode == TargetMode::grant_enabled) {
    s.state.granted_perm_groups = put(granted_perm_groups(s), a, bounded_insert(groups, g, k, rng), k, rng);
  } else if (pick(rng, 2) == 0) {
    std::vector<Value> rest;
    for (const Value& pr : granted_perm_groups(s)) {
      if (pr.first() != a) rest.push_back(pr);
    }
    s.state.granted_perm_groups = Relation(Set::from_sorted(std::move(rest)));
  } else {
    s.state.granted_perm_groups = foplus(granted_perm_groups(s), a, without_element(groups, g));
  }
  return c;
}

const std::vector<ActionArgs>& StateSpace::params(ParamShape shape) const noexcept {
  return shape == ParamShape::perm_app ? perm_app_args_ : group_app_args_;
}

// ---------------------------------------------------------------------------

CandidateSource::CandidateSource(const StateSpace& space, std::uint64_t budget, std::uint64_t seed,
                                 TargetMode targeting)
    : space_(space),
      limit_(budget),
      exhaustive_(space.size() && *space.size() <= budget),
      targeting_(targeting),
      rng_(seed) {
  if (exhaustive_) limit_ = *space.size();
}

std::optional<Candidate> CandidateSource::next() {
  if (produced_ >= limit_) return std::nullopt;
  std::uint64_t i = produced_++;
  if (exhaustive_) return space_.at(i);
  if (targeting_ != TargetMode::none && i % 2 == 1) return space_.targeted(rng_, targeting_);
  return space_.sample(rng_);
}

EnumerationStats enumerate_states(const Bounds& bounds, const CandidateFilter& filter,
                                  const CandidateVisitor& visit) {
  StateSpace space(bounds);
  CandidateSource source(space, bounds.budget, bounds.seed);
  EnumerationStats stats;
  stats.exhaustive = source.exhaustive();
  while (auto c = source.next()) {
    ++stats.examined;
    if (filter && !filter(*c)) continue;
    ++stats.yielded;
    if (!visit(*c)) break;
  }
  return stats;
}

}  // namespace permodel
