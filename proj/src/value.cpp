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
#include "permodel/value.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "permodel/errors.hpp"

namespace permodel {

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::unordered_set<std::string> table;
  std::lock_guard lock(mutex);
  return &*table.emplace(name).first;
}

const std::vector<Value>& empty_storage() {
  static const std::vector<Value> empty;
  return empty;
}

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::atom: return "atom";
    case Value::Kind::integer: return "integer";
    case Value::Kind::pair: return "pair";
    case Value::Kind::set: return "set";
  }
  return "?";
}

[[noreturn]] void mismatch(const char* wanted, Value::Kind got) {
  throw TypeMismatch(std::string("expected ") + wanted + ", got " + kind_name(got));
}

}  // namespace

Atom::Atom(std::string_view name) : name_(intern(name)) {}

// ---------------------------------------------------------------------------
// Set

Set::Set(std::initializer_list<Value> elements) : Set(from(std::vector<Value>(elements))) {}

Set Set::from(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return from_sorted(std::move(elements));
}

Set Set::from_unique(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  auto dup = std::adjacent_find(elements.begin(), elements.end());
  if (dup != elements.end()) throw DuplicateElement("duplicate set element " + to_string(*dup));
  return from_sorted(std::move(elements));
}

Set Set::from_sorted(std::vector<Value> elements) {
  if (elements.empty()) return Set();
  return Set(std::make_shared<const std::vector<Value>>(std::move(elements)));
}

const std::vector<Value>& Set::storage() const noexcept {
  return elements_ ? *elements_ : empty_storage();
}

std::size_t Set::size() const noexcept { return elements_ ? elements_->size() : 0; }
Set::const_iterator Set::begin() const noexcept { return storage().begin(); }
Set::const_iterator Set::end() const noexcept { return storage().end(); }
const Value& Set::operator[](std::size_t i) const { return storage().at(i); }
std::span<const Value> Set::elements() const noexcept { return storage(); }

bool Set::contains(const Value& x) const {
  const auto& s = storage();
  return std::binary_search(s.begin(), s.end(), x);
}

bool operator==(const Set& a, const Set& b) {
  if (a.elements_ == b.elements_) return true;
  return a.storage() == b.storage();
}

std::strong_ordering operator<=>(const Set& a, const Set& b) {
  if (a.elements_ == b.elements_) return std::strong_ordering::equal;
  const auto& x = a.storage();
  const auto& y = b.storage();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

// ---------------------------------------------------------------------------
// Value

Value Value::pair(Value first, Value second) {
  Value v(std::int64_t{0});
  v.rep_ = std::make_shared<const PairCell>(PairCell{std::move(first), std::move(second)});
  return v;
}

Atom Value::as_atom() const {
  if (!is_atom()) mismatch("atom", kind());
  return std::get<Atom>(rep_);
}

std::int64_t Value::as_integer() const {
  if (!is_integer()) mismatch("integer", kind());
  return std::get<std::int64_t>(rep_);
}

const Set& Value::as_set() const {
  if (!is_set()) mismatch("set", kind());
  return std::get<Set>(rep_);
}

const Value& Value::first() const {
  if (!is_pair()) mismatch("pair", kind());
  return std::get<std::shared_ptr<const PairCell>>(rep_)->first;
}

const Value& Value::second() const {
  if (!is_pair()) mismatch("pair", kind());
  return std::get<std::shared_ptr<const PairCell>>(rep_)->second;
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::atom: return std::get<Atom>(a.rep_) == std::get<Atom>(b.rep_);
    case Value::Kind::integer:
      return std::get<std::int64_t>(a.rep_) == std::get<std::int64_t>(b.rep_);
    case Value::Kind::pair: {
      const auto& pa = std::get<std::shared_ptr<const Value::PairCell>>(a.rep_);
      const auto& pb = std::get<std::shared_ptr<const Value::PairCell>>(b.rep_);
      return pa == pb || (pa->first == pb->first && pa->second == pb->second);
    }
    case Value::Kind::set: return std::get<Set>(a.rep_) == std::get<Set>(b.rep_);
  }
  return false;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Value::Kind::atom: return std::get<Atom>(a.rep_) <=> std::get<Atom>(b.rep_);
    case Value::Kind::integer:
      return std::get<std::int64_t>(a.rep_) <=> std::get<std::int64_t>(b.rep_);
    case Value::Kind::pair: {
      const auto& pa = std::get<std::shared_ptr<const Value::PairCell>>(a.rep_);
      const auto& pb = std::get<std::shared_ptr<const Value::PairCell>>(b.rep_);
      if (pa == pb) return std::strong_ordering::equal;
      if (auto c = pa->first <=> pb->first; c != 0) return c;
      return pa->second <=> pb->second;
    }
    case Value::Kind::set: return std::get<Set>(a.rep_) <=> std::get<Set>(b.rep_);
  }
  return std::strong_ordering::equal;
}

Value tuple(std::initializer_list<Value> items) {
  if (items.size() < 2) throw TypeMismatch("tuple needs at least two items");
  auto it = std::rbegin(items);
  Value acc = *it++;
  for (; it != std::rend(items); ++it) acc = Value::pair(*it, std::move(acc));
  return acc;
}

std::vector<Value> untuple(const Value& v, std::size_t arity) {
  if (arity < 2) throw TypeMismatch("tuple arity must be at least two");
  std::vector<Value> out;
  out.reserve(arity);
  const Value* cur = &v;
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    out.push_back(cur->first());
    cur = &cur->second();
  }
  out.push_back(*cur);
  return out;
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(Set pairs) : pairs_(std::move(pairs)) {
  for (const Value& p : pairs_) {
    if (!p.is_pair()) throw TypeMismatch("relation element is not a pair: " + to_string(p));
  }
}

Relation::Relation(std::initializer_list<std::pair<Value, Value>> pairs) {
  std::vector<Value> elems;
  elems.reserve(pairs.size());
  for (const auto& [x, y] : pairs) elems.push_back(Value::pair(x, y));
  pairs_ = Set::from(std::move(elems));
}

std::span<const Value> Relation::pairs_with_key(const Value& key) const {
  auto elems = pairs_.elements();
  auto lo = std::partition_point(elems.begin(), elems.end(),
                                 [&](const Value& p) { return p.first() < key; });
  auto hi = std::partition_point(lo, elems.end(),
                                 [&](const Value& p) { return p.first() == key; });
  return {lo, hi};
}

bool Relation::contains(const Value& x, const Value& y) const {
  for (const Value& p : pairs_with_key(x)) {
    if (p.second() == y) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Printing

std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.name(); }

std::ostream& operator<<(std::ostream& os, const Set& s) {
  os << '{';
  bool first = true;
  for (const Value& v : s) {
    if (!first) os << ',';
    first = false;
    os << v;
  }
  return os << '}';
}

std::ostream& operator<<(std::ostream& os, const Relation& r) { return os << r.pairs(); }

std::ostream& operator<<(std::ostream& os, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::atom: return os << v.as_atom();
    case Value::Kind::integer: return os << v.as_integer();
    case Value::Kind::pair: return os << '[' << v.first() << ',' << v.second() << ']';
    case Value::Kind::set: return os << v.as_set();
  }
  return os;
}

std::string to_string(const Value& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace permodel
