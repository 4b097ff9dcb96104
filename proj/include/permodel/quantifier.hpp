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
#include <span>
#include <vector>

#include "permodel/value.hpp"

// Restricted quantifiers over finite sets:
//
//   forall(x in A, [e1..en], body, bindings)
//     == for every x in A: exists e1..en. bindings(x,e) and body(x,e)
//
// where each binding is a functional predicate, i.e. it has exactly one
// result per input. Bindings are evaluated left to right and may read the
// results of earlier ones.
namespace permodel {

enum class Binder {
  element,  // x
  pair,     // [k, v]; every element of the domain must be a pair
};

/// What a binding or body sees for one domain element.
class Scope {
 public:
  Scope(const Value& element, std::span<const Value> results) noexcept
      : element_(element), results_(results) {}

  const Value& element() const noexcept { return element_; }
  const Value& key() const { return element_.first(); }
  const Value& value() const { return element_.second(); }
  /// Result of the i-th binding.
  const Value& operator[](std::size_t i) const { return results_[i]; }
  std::size_t bound() const noexcept { return results_.size(); }

 private:
  const Value& element_;
  std::span<const Value> results_;
};

/// Returns every y with p(scope, y). Functional when exactly one comes back.
using FunctionalPredicate = std::function<std::vector<Value>(const Scope&)>;
using Formula = std::function<bool(const Scope&)>;

struct Restriction {
  Binder binder = Binder::element;
  std::vector<FunctionalPredicate> bindings;
};

/// Throws BindingNotFunctional if a binding does not yield exactly one result,
/// and TypeMismatch if a pair binder meets a non-pair element.
bool forall_in(const Set& domain, const Restriction& restriction, const Formula& body);
bool forall_in(const Set& domain, const Formula& body);

/// First element (canonical order) for which the bindings and body hold.
std::optional<Value> exists_in(const Set& domain, const Restriction& restriction,
                               const Formula& body);
std::optional<Value> exists_in(const Set& domain, const Formula& body);

/// Adapts a partial lookup into a functional predicate: nullopt means no result.
FunctionalPredicate binding(std::function<std::optional<Value>(const Scope&)> f);

}  // namespace permodel
