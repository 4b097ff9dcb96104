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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "permodel/invariants.hpp"
#include "permodel/model.hpp"
#include "permodel/operations.hpp"
#include "permodel/serialize.hpp"

// Bounded discharge of proof obligations over the permission model.
//
// A query is refuted by a concrete (systemPerms, system, arguments) point.
// "holds-at-bounds" means no such point exists among the states examined;
// it is never a proof.
namespace permodel {

/// Small-scope limits. Atom pools are a1..aN, p1..pN, g1..gN and c1..cN
/// (one certificate per app).
struct Bounds {
  int apps = 2;
  int perm_ids = 2;
  int groups = 2;
  int max_card = 2;  // for every generated set and relation
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless the counts are positive, max_card
  /// is non-negative and budget >= 1.
  void validate() const;
};

/// One point of the search space.
struct Candidate {
  SystemPerms system_perms;
  System system;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// The product of per-component candidate lists for given bounds.
///
/// Components vary in the order systemPerms (fastest), apps,
/// alreadyVerified, grantedPermGroups, perms, manifest, cert, defPerms,
/// systemImage. Index 0 of every component is its empty value. Relations
/// are keyed by distinct pool apps, so generated maps are always partial
/// functions. The five opaque state slots and manifest extras stay `unused`.
class StateSpace {
 public:
  explicit StateSpace(const Bounds& bounds);

  const Bounds& bounds() const noexcept { return bounds_; }
  const std::vector<AppId>& app_pool() const noexcept { return apps_; }
  const std::vector<GrpId>& group_pool() const noexcept { return groups_; }
  /// Every (id, group-or-none, level) triple.
  const std::vector<Perm>& perm_pool() const noexcept { return perms_; }

  struct Component {
    std::string_view name;
    std::size_t candidates;
  };
  std::vector<Component> components() const;

  /// nullopt when the product exceeds 2^64 - 1.
  std::optional<std::uint64_t> size() const noexcept { return size_; }
  /// Size without the systemPerms factor.
  std::optional<std::uint64_t> system_count() const noexcept { return system_count_; }

  Candidate at(std::uint64_t index) const;
  System system_at(std::uint64_t index) const;
  /// Uniform over the product.
  Candidate sample(std::mt19937_64& rng) const;
  /// A sample rewired so that grantAuto's conjuncts 1..4 hold for a random
  /// dangerous grouped perm and app; `mode` decides conjunct 5. Stays within
  /// the bounds. Returns a plain sample when mode is none or max_card is 0.
  Candidate targeted(std::mt19937_64& rng, TargetMode mode) const;

  /// Every argument tuple of the given shape over the pools.
  const std::vector<ActionArgs>& params(ParamShape shape) const noexcept;

 private:
  Bounds bounds_;
  std::vector<AppId> apps_;
  std::vector<GrpId> groups_;
  std::vector<Perm> perms_;
  std::vector<Perm> grouped_dangerous_;

  std::vector<Set> system_perms_;
  std::vector<Set> app_sets_;
  std::vector<Relation> granted_groups_;
  std::vector<Relation> perm_maps_;
  std::vector<Relation> manifests_;
  std::vector<Relation> certs_;
  std::vector<Set> system_images_;

  std::vector<ActionArgs> perm_app_args_;
  std::vector<ActionArgs> group_app_args_;

  std::optional<std::uint64_t> size_;
  std::optional<std::uint64_t> system_count_;
};

/// Yields up to `budget` candidates: every index in order when the space
/// fits in the budget, otherwise seeded uniform samples. With targeting,
/// every second sample comes from StateSpace::targeted.
class CandidateSource {
 public:
  CandidateSource(const StateSpace& space, std::uint64_t budget, std::uint64_t seed,
                  TargetMode targeting = TargetMode::none);

  bool exhaustive() const noexcept { return exhaustive_; }
  std::optional<Candidate> next();

 private:
  const StateSpace& space_;
  std::uint64_t limit_;
  std::uint64_t produced_ = 0;
  bool exhaustive_;
  TargetMode targeting_;
  std::mt19937_64 rng_;
};

struct EnumerationStats {
  std::uint64_t examined = 0;  // before filtering
  std::uint64_t yielded = 0;
  bool exhaustive = false;
};

using CandidateFilter = std::function<bool(const Candidate&)>;
/// Return false to stop early.
using CandidateVisitor = std::function<bool(const Candidate&)>;

/// Streams the space (or a seeded sample of it) through an optional filter.
EnumerationStats enumerate_states(const Bounds& bounds, const CandidateFilter& filter,
                                  const CandidateVisitor& visit);

// ---------------------------------------------------------------------------
// Queries

enum class QueryKind { invariance, universal, existential };
std::string_view to_string(QueryKind kind) noexcept;

/// Outcome of evaluating a query body at one (candidate, arguments) point.
struct Probe {
  bool antecedent = false;  // the implication's left side held (non-vacuous check)
  bool found = false;       // counterexample or witness
  std::optional<System> next;
};

struct Query {
  std::string id;
  QueryKind kind = QueryKind::invariance;
  std::string subject;  // clause id or property id
  std::string op;       // operation id; empty when none is executed
  ParamShape shape = ParamShape::perm_app;
  TargetMode targeting = TargetMode::none;
  /// Argument-free part of the left side, evaluated once per candidate.
  std::function<bool(const Candidate&)> hypothesis;
  std::function<Probe(const Candidate&, const ActionArgs&)> probe;
};

/// One query `inv/<clause>/<op>` per (clause, mutating operation), checking
/// clause(s) and s -op-> s' implies clause(s'). Only the clause itself is
/// assumed of s.
std::vector<Query> gen_invariance_queries(const OperationRegistry& ops,
                                          const InvariantRegistry& invariants);

/// `sec/cannotAutoGrantWithoutGroup`: a dangerous permission of group g is
/// never granted automatically while g is not authorized for the app.
/// Uses the registry's grantAuto, so a mutated registry can be checked.
Query cannot_auto_grant_without_group(const OperationRegistry& ops);

/// `sec/execAutoGrantWithoutIndividualPerms`: some valid state lets the app
/// receive a dangerous grouped permission automatically although it holds
/// no permission of that group.
Query exec_auto_grant_without_individual_perms(const InvariantRegistry& invariants);

std::vector<Query> security_queries(const OperationRegistry& ops, const InvariantRegistry& invariants);

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictKind { holds_at_bounds, counterexample, witness, no_witness_at_bounds, budget_exhausted };
std::string_view to_string(VerdictKind kind) noexcept;

struct Finding {
  Candidate point;
  std::string op;
  ActionArgs args;
  std::optional<System> next;
};

struct Verdict {
  std::string query_id;
  QueryKind kind = QueryKind::invariance;
  VerdictKind verdict = VerdictKind::holds_at_bounds;
  std::uint64_t states_examined = 0;
  std::uint64_t antecedent_hits = 0;
  bool exhaustive = false;
  std::optional<Finding> finding;
  bool rechecked = false;  // finding re-evaluated successfully
  double seconds = 0;
};

/// Searches for a refuting point (invariance, universal) or a witness
/// (existential).
///
/// Without a finding: an exhaustive search holds (or, for existentials,
/// has no witness) at the bounds. A sampled search holds only if some
/// examined point satisfied the antecedent; otherwise, and for existentials
/// in general, the budget is exhausted. Witnesses are reduced by emptying
/// every component element that the property does not need. The sampling
/// stream is derived from `seed` and the query id.
Verdict check_query(const Query& query, const StateSpace& space, std::uint64_t seed);
Verdict check_query(const Query& query, const Bounds& bounds);

/// Re-evaluates the query at the verdict's embedded point, independent of
/// how it was found. False when there is no finding.
bool recheck(const Query& query, const Verdict& verdict);

// ---------------------------------------------------------------------------
// Reports

enum class Suite { invariance, security, all };
std::string_view to_string(Suite suite) noexcept;
std::optional<Suite> parse_suite(std::string_view text) noexcept;

struct ReportRow {
  std::string name;
  std::size_t lemmas = 0;
  std::size_t queries = 0;
  std::size_t counterexamples = 0;
  double seconds = 0;
};

struct Report {
  Suite suite = Suite::all;
  Bounds bounds;
  std::vector<ReportRow> rows;  // invariance, security, totals
  std::vector<Verdict> verdicts;
  double elapsed_seconds = 0;

  /// Every finding passed recheck.
  bool sound() const noexcept;
  /// 1 on a counterexample or a missing witness, else 3 if any query ran out
  /// of budget, else 0.
  int exit_code() const noexcept;
};

/// Runs the queries on `workers` threads (0: hardware concurrency); verdicts
/// keep the query order and do not depend on the worker count.
std::vector<Verdict> run_queries(const std::vector<Query>& queries, const Bounds& bounds,
                                 unsigned workers = 0);

Report run_suite(Suite suite, const Bounds& bounds, unsigned workers = 0);
Report run_suite(Suite suite, const Bounds& bounds, const OperationRegistry& ops,
                 const InvariantRegistry& invariants, unsigned workers = 0);

Json to_json(const Bounds& b);
Json to_json(const ActionArgs& args);
Json to_json(const Finding& f);
/// Deterministic: no timing.
Json to_json(const Verdict& v);
Json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace permodel
