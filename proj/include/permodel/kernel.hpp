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

#include <optional>

#include "permodel/value.hpp"

// Ground evaluation of the set and relational constraints the permission
// model is written in. All functions are pure; arguments are never modified.
namespace permodel {

// Set algebra.
Set set_union(const Set& a, const Set& b);
Set set_difference(const Set& a, const Set& b);
bool is_subset(const Set& a, const Set& b);
bool is_member(const Value& x, const Set& a);
Set with_element(const Set& a, const Value& x);
Set without_element(const Set& a, const Value& x);

/// {x | exists y. (x,y) in r}
Set dom(const Relation& r);

/// x is not in dom(r). Equivalent to comp({(x,x)}, r) being empty.
bool not_in_dom(const Relation& r, const Value& x);

/// Relational composition: {(x,z) | exists y. (x,y) in r and (y,z) in s}.
Relation comp(const Relation& r, const Relation& s);

/// No two distinct pairs share a first component.
bool is_pfun(const Relation& r);

/// The unique image of `x`, or nullopt when x is not in dom(r).
/// Throws AmbiguousApplication when x has several images.
std::optional<Value> rel_apply(const Relation& r, const Value& x);

/// rel_apply(r, x) if present, else the empty set. The image must be a set.
Set apply_or_empty(const Relation& r, const Value& x);

/// Function override: `f` with every pair keyed `x` replaced by (x, y).
Relation foplus(const Relation& f, const Value& x, const Value& y);

}  // namespace permodel
