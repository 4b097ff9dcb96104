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
#include <string>
#include <vector>

#include "permodel/model.hpp"

namespace permodel {

/// One independently checkable conjunct of the valid-state predicate.
struct InvariantClause {
  std::string id;      // stable, e.g. "allMapsCorrect.perms"
  std::string family;  // the predicate it was split from, e.g. "allMapsCorrect"
  std::string description;
  std::function<bool(const System&)> eval;
};

/// `allMapsCorrect.<map>`: each of manifest, cert, defPerms,
/// grantedPermGroups and perms is a partial function.
std::vector<InvariantClause> all_maps_correct_clauses();

/// `notDupPerm.1..3`: two defined permissions with the same identifier are
/// the same permission defined by the same app. Clause 1 pairs defPerms
/// with itself, clause 2 the system image with itself, clause 3 defPerms
/// with the system image.
std::vector<InvariantClause> not_dup_perm_clauses();

class InvariantRegistry {
 public:
  /// The eight shipped clauses.
  static InvariantRegistry shipped();

  /// Throws std::invalid_argument on a duplicate id.
  void add(InvariantClause clause);

  const std::vector<InvariantClause>& clauses() const noexcept { return clauses_; }
  const InvariantClause* find(std::string_view id) const noexcept;
  std::size_t size() const noexcept { return clauses_.size(); }
  bool empty() const noexcept { return clauses_.empty(); }
  /// Distinct families, in registration order.
  std::vector<std::string> families() const;

 private:
  std::vector<InvariantClause> clauses_;
};

struct ValidityReport {
  bool valid = true;
  std::vector<std::string> failing;  // clause ids, registry order
};

ValidityReport valid_state(const System& s, const InvariantRegistry& registry);

}  // namespace permodel
