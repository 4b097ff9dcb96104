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
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "permodel/errors.hpp"
#include "permodel/kernel.hpp"
#include "permodel/quantifier.hpp"
#include "universe.hpp"

using namespace permodel;

namespace {

Value a(const char* s) { return Value(Atom(s)); }
Value pr(Value x, Value y) { return Value::pair(std::move(x), std::move(y)); }
Value i(std::int64_t n) { return Value(n); }

const std::vector<Value> kKeys = {a("k1"), a("k2")};
const std::vector<Value> kVals = {a("v1"), a("v2"), a("v3")};

}  // namespace

TEST_CASE("values compare structurally in canonical order") {
  CHECK(a("x") == a("x"));
  CHECK(a("x") < a("y"));
  CHECK(a("zzz") < i(0));
  CHECK(i(-5) < i(3));
  CHECK(i(99) < pr(a("a"), a("a")));
  CHECK(pr(a("a"), a("b")) < pr(a("a"), a("c")));
  CHECK(pr(a("a"), a("z")) < pr(a("b"), a("a")));
  CHECK(pr(i(1), i(1)) < Value(Set{}));
  CHECK(Value(Set{}) < Value(Set{a("a")}));
  CHECK(Value(Set{a("a")}) < Value(Set{a("a"), a("b")}));
  CHECK(Value(Set{a("a"), a("b")}) < Value(Set{a("b")}));
}

TEST_CASE("sets ignore construction order and reject duplicates on request") {
  CHECK(Set{a("b"), a("a")} == Set{a("a"), a("b")});
  CHECK(Set{a("a"), a("a")}.size() == 1);
  CHECK_THROWS_AS(Set::from_unique({a("a"), a("a")}), DuplicateElement);
  CHECK(Set::from_unique({a("b"), a("a")}) == Set{a("a"), a("b")});
  Set s{i(3), i(1), i(2)};
  CHECK(s[0] == i(1));
  CHECK(s.contains(i(2)));
  CHECK_FALSE(s.contains(i(4)));
}

TEST_CASE("value accessors check the kind") {
  CHECK_THROWS_AS(a("x").first(), TypeMismatch);
  CHECK_THROWS_AS(i(1).as_set(), TypeMismatch);
  CHECK_THROWS_AS(Value(Set{}).as_atom(), TypeMismatch);
  CHECK_THROWS_AS(Relation(Set{a("x")}), TypeMismatch);
  CHECK(tuple({a("x"), a("y"), a("z")}) == pr(a("x"), pr(a("y"), a("z"))));
  CHECK(untuple(tuple({a("x"), a("y"), a("z")}), 3) == std::vector<Value>{a("x"), a("y"), a("z")});
  CHECK_THROWS_AS(untuple(pr(a("x"), a("y")), 3), TypeMismatch);
}

TEST_CASE("printing uses bracket and brace syntax") {
  std::ostringstream os;
  os << Value(Set{pr(a("a1"), Value(Set{a("g1")})), i(7)});
  CHECK(os.str() == "{7,[a1,{g1}]}");
  CHECK(to_string(Value(Set{})) == "{}");
}

TEST_CASE("set algebra") {
  CHECK(set_union(Set{}, Set{a("a1")}) == Set{a("a1")});
  CHECK(is_subset(Set{a("a1")}, Set{a("a1"), a("a2")}));
  CHECK_FALSE(is_subset(Set{a("a3")}, Set{a("a1"), a("a2")}));
  CHECK_FALSE(is_member(a("p"), Set{a("q")}));
  CHECK(is_member(a("q"), Set{a("q")}));
  CHECK(set_difference(Set{a("a"), a("b")}, Set{a("b"), a("c")}) == Set{a("a")});
  CHECK(set_union(Set{a("a"), a("b")}, Set{a("b")}).size() == 2);
}

TEST_CASE("dom") {
  CHECK(dom(Relation{}) == Set{});
  CHECK(dom(Relation{{a("a1"), Set{a("g1")}}, {a("a2"), Set{a("g1")}}}) == Set{a("a1"), a("a2")});
  CHECK(dom(Relation{{a("a1"), Set{}}, {a("a1"), Set{a("g1")}}}) == Set{a("a1")});
}

TEST_CASE("not_in_dom") {
  CHECK(not_in_dom(Relation{}, a("a1")));
  CHECK_FALSE(not_in_dom(Relation{{a("a1"), Set{a("p")}}}, a("a1")));
  CHECK(not_in_dom(Relation{{a("a2"), Set{a("p")}}}, a("a1")));
}

TEST_CASE("comp") {
  Relation r{{a("a1"), Set{a("p")}}};
  CHECK(comp(Relation{}, r).empty());
  CHECK(comp(Relation{{a("a1"), a("a1")}}, r) == r);
  CHECK(comp(Relation{{a("a1"), a("a1")}}, Relation{{a("a2"), Set{a("p")}}}).empty());
}

TEST_CASE("is_pfun") {
  CHECK(is_pfun(Relation{}));
  CHECK_FALSE(is_pfun(Relation{{a("a1"), Set{a("g1")}}, {a("a1"), Set{a("g2")}}}));
  CHECK(is_pfun(Relation{{a("a1"), Set{a("g1")}}, {a("a2"), Set{a("g1")}}}));
}

TEST_CASE("rel_apply") {
  CHECK(rel_apply(Relation{{a("a1"), Set{a("p")}}}, a("a1")) == Value(Set{a("p")}));
  CHECK_FALSE(rel_apply(Relation{}, a("a1")).has_value());
  CHECK_THROWS_AS(rel_apply(Relation{{a("a1"), Set{a("p")}}, {a("a1"), Set{a("q")}}}, a("a1")),
                  AmbiguousApplication);
}

TEST_CASE("apply_or_empty") {
  CHECK(apply_or_empty(Relation{}, a("a1")) == Set{});
  CHECK(apply_or_empty(Relation{{a("a1"), Set{a("p")}}}, a("a1")) == Set{a("p")});
  CHECK(apply_or_empty(Relation{{a("a2"), Set{a("p")}}}, a("a1")) == Set{});
  CHECK_THROWS_AS(apply_or_empty(Relation{{a("a1"), Set{a("p")}}, {a("a1"), Set{}}}, a("a1")),
                  AmbiguousApplication);
}

TEST_CASE("foplus") {
  Value p = Value(Set{a("p")});
  Value q = Value(Set{a("q")});
  Value pq = Value(Set{a("p"), a("q")});
  CHECK(foplus(Relation{}, a("a1"), p) == Relation{{a("a1"), p}});
  CHECK(foplus(Relation{{a("a1"), p}}, a("a1"), q) == Relation{{a("a1"), q}});
  CHECK(foplus(Relation{{a("a1"), p}, {a("a2"), q}}, a("a2"), pq) == Relation{{a("a1"), p}, {a("a2"), pq}});
  // all pairs at the key go, not just one
  CHECK(foplus(Relation{{a("a1"), p}, {a("a1"), q}}, a("a1"), pq) == Relation{{a("a1"), pq}});
}

TEST_CASE("forall_in") {
  CHECK(forall_in(Set{}, [](const Scope&) { return false; }));
  CHECK(forall_in(Set{i(1), i(2), i(3)}, [](const Scope& s) { return s.element().as_integer() <= 3; }));
  CHECK_FALSE(forall_in(Set{i(1), i(2), i(4)}, [](const Scope& s) { return s.element().as_integer() <= 3; }));

  Relation dp{{a("a1"), Set{a("p")}}};
  Restriction r{Binder::pair, {binding([&](const Scope& s) { return rel_apply(dp, s.key()); })}};
  CHECK(forall_in(dp.pairs(), r, [&](const Scope& s) { return s[0].as_set().contains(a("p")); }));
}

TEST_CASE("forall_in rejects non-functional bindings") {
  Restriction none{Binder::element, {[](const Scope&) { return std::vector<Value>{}; }}};
  CHECK_THROWS_AS(forall_in(Set{i(1)}, none, [](const Scope&) { return true; }), BindingNotFunctional);
  Restriction many{Binder::element, {[](const Scope&) { return std::vector<Value>{i(1), i(2)}; }}};
  CHECK_THROWS_AS(forall_in(Set{i(1)}, many, [](const Scope&) { return true; }), BindingNotFunctional);
  CHECK_THROWS_AS(exists_in(Set{i(1)}, many, [](const Scope&) { return true; }), BindingNotFunctional);
  // empty domain never runs the binding
  CHECK(forall_in(Set{}, none, [](const Scope&) { return false; }));
  Restriction pairs{Binder::pair, {}};
  CHECK_THROWS_AS(forall_in(Set{i(1)}, pairs, [](const Scope&) { return true; }), TypeMismatch);
}

TEST_CASE("bindings see earlier results") {
  Restriction r{Binder::element,
                {binding([](const Scope& s) { return Value(s.element().as_integer() * 2); }),
                 binding([](const Scope& s) { return Value(s[0].as_integer() + 1); })}};
  CHECK(forall_in(Set{i(1), i(2)}, r, [](const Scope& s) { return s[1].as_integer() % 2 == 1 && s.bound() == 2; }));
}

TEST_CASE("exists_in") {
  CHECK_FALSE(exists_in(Set{}, [](const Scope&) { return true; }).has_value());
  CHECK(exists_in(Set{a("p"), a("q")}, [](const Scope& s) { return s.element() == a("q"); }) == a("q"));
  // first in canonical order
  CHECK(exists_in(Set{i(3), i(1), i(2)}, [](const Scope& s) { return s.element().as_integer() >= 2; }) == i(2));

  Perm p{PermId("p"), GrpId("g1"), PermLevel::dangerous};
  Restriction grp{Binder::element, {binding([](const Scope& s) { return Perm::group_of(s.element()); })}};
  CHECK(exists_in(Set{p.to_value()}, grp, [](const Scope& s) { return s[0] == a("g1"); }) == p.to_value());
}

// ---------------------------------------------------------------------------
// Exhaustive properties over a 2-key x 3-value universe.

TEST_CASE("kernel agrees with definitional evaluation on all small relations") {
  auto rels = fixture::all_relations(kKeys, kVals, 4);
  CHECK(rels.size() == 1 + 6 + 15 + 20 + 15);
  std::vector<Value> probes = kKeys;
  probes.push_back(a("k3"));
  for (const Relation& r : rels) {
    auto ps = oracle::pairs_of(r);
    CHECK(oracle::same_elements(oracle::dom(ps), dom(r)));
    CHECK(is_pfun(r) == oracle::is_pfun(ps));
    for (const Value& x : probes) {
      bool expected = !oracle::in_dom(ps, x);
      Relation id{{x, x}};
      CHECK(not_in_dom(r, x) == expected);
      CHECK(comp(id, r).empty() == expected);
      CHECK(dom(r).contains(x) == !expected);
    }
  }
}

TEST_CASE("rel_apply results are pairs of the relation") {
  for (const Relation& r : fixture::all_relations(kKeys, kVals, 3)) {
    for (const Value& x : kKeys) {
      auto expected = oracle::rel_apply(oracle::pairs_of(r), x);
      if (std::holds_alternative<oracle::Ambiguous>(expected)) {
        CHECK_THROWS_AS(rel_apply(r, x), AmbiguousApplication);
        continue;
      }
      auto got = rel_apply(r, x);
      if (auto* v = std::get_if<Value>(&expected)) {
        REQUIRE(got.has_value());
        CHECK(*got == *v);
        CHECK(r.contains(x, *got));
      } else {
        CHECK_FALSE(got.has_value());
      }
    }
  }
}

TEST_CASE("foplus laws hold on all small relations") {
  std::vector<Value> keys = kKeys;
  keys.push_back(a("k3"));
  for (const Relation& f : fixture::all_relations(kKeys, kVals, 3)) {
    Relation before = f;
    for (const Value& x : keys) {
      for (const Value& y : kVals) {
        Relation g = foplus(f, x, y);
        CHECK(oracle::same_pairs(oracle::foplus(oracle::pairs_of(f), x, y), g));
        CHECK(dom(g) == set_union(dom(f), Set{x}));
        CHECK(rel_apply(g, x) == y);
        if (is_pfun(f)) CHECK(is_pfun(g));
        for (const Value& k : keys) {
          if (k == x) continue;
          CHECK(std::equal(g.pairs_with_key(k).begin(), g.pairs_with_key(k).end(), f.pairs_with_key(k).begin(),
                           f.pairs_with_key(k).end()));
        }
      }
    }
    CHECK(f == before);
  }
}

TEST_CASE("forall_in is the negation of exists_in with a negated body") {
  for (const Relation& r : fixture::all_relations(kKeys, kVals, 3)) {
    for (const Value& target : kVals) {
      Formula body = [&](const Scope& s) { return s.value() != target; };
      Formula negated = [&](const Scope& s) { return !body(s); };
      Restriction pairs{Binder::pair, {}};
      bool all = forall_in(r.pairs(), pairs, body);
      CHECK(all == !exists_in(r.pairs(), pairs, negated).has_value());
      bool brute = true;
      for (const auto& [k, v] : oracle::pairs_of(r)) brute = brute && v != target;
      CHECK(all == brute);
      auto w = exists_in(r.pairs(), pairs, negated);
      if (w) {
        for (const Value& e : r) {
          if (e < *w) CHECK_FALSE(negated(Scope(e, {})));
        }
      }
    }
  }
}

TEST_CASE("operations are pure") {
  Relation r{{a("k1"), a("v1")}, {a("k2"), a("v2")}};
  Relation copy = r;
  foplus(r, a("k1"), a("v3"));
  comp(r, r);
  dom(r);
  CHECK(r == copy);
  CHECK(foplus(r, a("k1"), a("v3")) == foplus(copy, a("k1"), a("v3")));
}
