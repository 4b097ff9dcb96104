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
#include "permodel/kernel.hpp"

#include <algorithm>
#include <iterator>
#include <vector>

#include "permodel/errors.hpp"

namespace permodel {

Set set_union(const Set& a, const Set& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Value> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Set::from_sorted(std::move(out));
}

Set set_difference(const Set& a, const Set& b) {
  if (a.empty() || b.empty()) return a;
  std::vector<Value> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Set::from_sorted(std::move(out));
}

bool is_subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_member(const Value& x, const Set& a) { return a.contains(x); }

Set with_element(const Set& a, const Value& x) {
  if (a.contains(x)) return a;
  std::vector<Value> out(a.begin(), a.end());
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return Set::from_sorted(std::move(out));
}

Set without_element(const Set& a, const Value& x) {
  if (!a.contains(x)) return a;
  std::vector<Value> out;
  out.reserve(a.size() - 1);
  std::copy_if(a.begin(), a.end(), std::back_inserter(out), [&](const Value& v) { return v != x; });
  return Set::from_sorted(std::move(out));
}

Set dom(const Relation& r) {
  std::vector<Value> keys;
  keys.reserve(r.size());
  for (const Value& p : r) {
    // pairs are sorted by key, so equal keys are adjacent
    if (keys.empty() || keys.back() != p.first()) keys.push_back(p.first());
  }
  return Set::from_sorted(std::move(keys));
}

bool not_in_dom(const Relation& r, const Value& x) { return r.pairs_with_key(x).empty(); }

Relation comp(const Relation& r, const Relation& s) {
  std::vector<Value> out;
  for (const Value& p : r) {
    for (const Value& q : s.pairs_with_key(p.second())) out.push_back(Value::pair(p.first(), q.second()));
  }
  return Relation(Set::from(std::move(out)));
}

bool is_pfun(const Relation& r) {
  auto pairs = r.pairs().elements();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first() == pairs[i - 1].first()) return false;
  }
  return true;
}

std::optional<Value> rel_apply(const Relation& r, const Value& x) {
  auto run = r.pairs_with_key(x);
  if (run.empty()) return std::nullopt;
  if (run.size() > 1) throw AmbiguousApplication("key " + to_string(x) + " has several images");
  return run.front().second();
}

Set apply_or_empty(const Relation& r, const Value& x) {
  auto image = rel_apply(r, x);
  if (!image) return Set();
  return image->as_set();
}

Relation foplus(const Relation& f, const Value& x, const Value& y) {
  std::vector<Value> out;
  out.reserve(f.size() + 1);
  for (const Value& p : f) {
    if (p.first() != x) out.push_back(p);
  }
  Value added = Value::pair(x, y);
  out.insert(std::upper_bound(out.begin(), out.end(), added), std::move(added));
  return Relation(Set::from_sorted(std::move(out)));
}

}  // namespace permodel
