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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace permodel {

/// Interned symbol. Equality is pointer identity; ordering is lexicographic
/// on the spelling, so it does not depend on interning order.
class Atom {
 public:
  explicit Atom(std::string_view name);

  std::string_view name() const noexcept { return *name_; }
  const std::string& str() const noexcept { return *name_; }

  friend bool operator==(const Atom& a, const Atom& b) noexcept { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name_->compare(*b.name_) <=> 0;
  }

 private:
  const std::string* name_;
};

class Value;

/// Immutable finite set in canonical order without duplicates. Copies share
/// storage; no operation mutates a set after construction.
class Set {
 public:
  using const_iterator = std::vector<Value>::const_iterator;

  Set() noexcept = default;
  Set(std::initializer_list<Value> elements);

  /// Sorts and drops duplicates.
  static Set from(std::vector<Value> elements);
  /// Sorts; throws DuplicateElement if two elements are equal.
  static Set from_unique(std::vector<Value> elements);
  /// Trusts the caller: elements already canonical and duplicate-free.
  static Set from_sorted(std::vector<Value> elements);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const_iterator begin() const noexcept;
  const_iterator end() const noexcept;
  const Value& operator[](std::size_t i) const;
  std::span<const Value> elements() const noexcept;
  bool contains(const Value& x) const;

  friend bool operator==(const Set& a, const Set& b);
  friend std::strong_ordering operator<=>(const Set& a, const Set& b);

 private:
  explicit Set(std::shared_ptr<const std::vector<Value>> elements) noexcept
      : elements_(std::move(elements)) {}
  const std::vector<Value>& storage() const noexcept;

  std::shared_ptr<const std::vector<Value>> elements_;
};

/// Ground term: atom, integer, ordered pair or finite set.
///
/// Canonical order: atoms (by spelling) < integers < pairs (lexicographic)
/// < sets (lexicographic on sorted elements). Every serialized set and every
/// "first witness" uses this order.
class Value {
 public:
  enum class Kind : std::uint8_t { atom, integer, pair, set };

  Value(Atom a) noexcept : rep_(a) {}
  Value(std::int64_t i) noexcept : rep_(i) {}
  Value(Set s) noexcept : rep_(std::move(s)) {}

  static Value pair(Value first, Value second);

  Kind kind() const noexcept { return static_cast<Kind>(rep_.index()); }
  bool is_atom() const noexcept { return kind() == Kind::atom; }
  bool is_integer() const noexcept { return kind() == Kind::integer; }
  bool is_pair() const noexcept { return kind() == Kind::pair; }
  bool is_set() const noexcept { return kind() == Kind::set; }

  Atom as_atom() const;
  std::int64_t as_integer() const;
  const Set& as_set() const;
  const Value& first() const;
  const Value& second() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  struct PairCell;
  std::variant<Atom, std::int64_t, std::shared_ptr<const PairCell>, Set> rep_;
};

struct Value::PairCell {
  Value first;
  Value second;
};

/// Right-nested pairs: tuple({a, b, c}) == [a,[b,c]]. Needs two or more items.
Value tuple(std::initializer_list<Value> items);
/// Inverse of tuple(); throws TypeMismatch if `v` does not have `arity` slots.
std::vector<Value> untuple(const Value& v, std::size_t arity);

/// Binary relation: a set whose every element is a pair. Pairs sharing a
/// first component are adjacent, which makes key lookups logarithmic.
class Relation {
 public:
  using const_iterator = Set::const_iterator;

  Relation() noexcept = default;
  /// Throws TypeMismatch if some element is not a pair.
  explicit Relation(Set pairs);
  Relation(std::initializer_list<std::pair<Value, Value>> pairs);

  const Set& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const_iterator begin() const noexcept { return pairs_.begin(); }
  const_iterator end() const noexcept { return pairs_.end(); }

  /// Contiguous run of pairs whose first component equals `key`.
  std::span<const Value> pairs_with_key(const Value& key) const;
  bool contains(const Value& x, const Value& y) const;

  friend bool operator==(const Relation& a, const Relation& b) = default;
  friend std::strong_ordering operator<=>(const Relation& a, const Relation& b) = default;

 private:
  Set pairs_;
};

std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Value& v);
std::ostream& operator<<(std::ostream& os, const Set& s);
std::ostream& operator<<(std::ostream& os, const Relation& r);
std::string to_string(const Value& v);

}  // namespace permodel
