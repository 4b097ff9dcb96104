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
#include "permodel/quantifier.hpp"

#include "permodel/errors.hpp"

namespace permodel {

namespace {

// Evaluates the bindings for one element; the scope handed to the body
// carries all results.
template <class Fn>
bool with_bindings(const Value& x, const Restriction& r, Fn&& fn) {
  if (r.binder == Binder::pair && !x.is_pair()) {
    throw TypeMismatch("pair binder over non-pair element " + to_string(x));
  }
  std::vector<Value> results;
  results.reserve(r.bindings.size());
  for (std::size_t i = 0; i < r.bindings.size(); ++i) {
    std::vector<Value> ys = r.bindings[i](Scope(x, results));
    if (ys.size() != 1) {
      throw BindingNotFunctional("binding " + std::to_string(i) + " yields " +
                                 std::to_string(ys.size()) + " results for " + to_string(x));
    }
    results.push_back(std::move(ys.front()));
  }
  return fn(Scope(x, results));
}

}  // namespace

bool forall_in(const Set& domain, const Restriction& restriction, const Formula& body) {
  for (const Value& x : domain) {
    if (!with_bindings(x, restriction, body)) return false;
  }
  return true;
}

bool forall_in(const Set& domain, const Formula& body) {
  return forall_in(domain, Restriction{}, body);
}

std::optional<Value> exists_in(const Set& domain, const Restriction& restriction,
                               const Formula& body) {
  for (const Value& x : domain) {
    if (with_bindings(x, restriction, body)) return x;
  }
  return std::nullopt;
}

std::optional<Value> exists_in(const Set& domain, const Formula& body) {
  return exists_in(domain, Restriction{}, body);
}

FunctionalPredicate binding(std::function<std::optional<Value>(const Scope&)> f) {
  return [f = std::move(f)](const Scope& s) {
    std::vector<Value> out;
    if (auto y = f(s)) out.push_back(std::move(*y));
    return out;
  };
}

}  // namespace permodel
