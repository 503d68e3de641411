/*
 * Copyright 2026 The ontosep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch_amalgamated.hpp>

#include "ontosep/concept.hpp"
#include "ontosep/error.hpp"
#include "ontosep/kb.hpp"

using namespace ontosep;

namespace {
Concept A() { return Concept::name(Symbol("A")); }
Concept B() { return Concept::name(Symbol("B")); }
const Role r{Symbol("r"), false};
}  // namespace

TEST_CASE("symbols are interned") {
  Symbol x("person"), y(std::string("per") + "son");
  CHECK(x == y);
  CHECK(x.str() == "person");
  CHECK(Symbol("a") != Symbol("b"));
}

TEST_CASE("structurally equal concepts share an id") {
  CHECK(Concept::conjunction(A(), B()) == Concept::conjunction(A(), B()));
  CHECK(Concept::conjunction(A(), B()) != Concept::conjunction(B(), A()));
  CHECK(Concept::exists(r, A()) != Concept::exists(r.inverse(), A()));
}

TEST_CASE("abbreviations expand to the primitives") {
  CHECK(Concept::top() == Concept::negation(Concept::bottom()));
  CHECK(Concept::bottom().kind() == ConceptKind::kAnd);
  CHECK(Concept::forall(r, A()) == Concept::negation(Concept::exists(r, Concept::negation(A()))));
  CHECK(Concept::disjunction(A(), B()) ==
        Concept::negation(Concept::conjunction(Concept::negation(A()), Concept::negation(B()))));
  CHECK(Concept::implies(A(), B()) == Concept::disjunction(Concept::negation(A()), B()));
  // No double-negation collapse: the value is kept as built.
  CHECK(Concept::negation(Concept::negation(A())) != A());
  CHECK(Concept::top().is_top());
  CHECK(Concept::bottom().is_bottom());
}

TEST_CASE("accessors match the constructor") {
  Concept e = Concept::exists(r.inverse(), A());
  CHECK(e.kind() == ConceptKind::kExists);
  CHECK(e.role() == r.inverse());
  CHECK(e.filler() == A());
  Concept c = Concept::conjunction(A(), B());
  CHECK(c.left() == A());
  CHECK(c.right() == B());
  CHECK_THROWS_AS(A().operand(), Error);
}

TEST_CASE("the reserved bottom name is invisible in signatures") {
  std::vector<Symbol> names;
  Concept::conjunction(A(), Concept::bottom()).collect_names(names);
  CHECK(names == std::vector<Symbol>{Symbol("A")});
  Ontology o({{Concept::top(), Concept::bottom()}});
  CHECK(o.signature().concept_names.empty());
}

TEST_CASE("concept size counts names as single symbols") {
  CHECK(A().size() == 1);
  CHECK(Concept::exists(r, A()).size() == 3);
  CHECK(Concept::conjunction(A(), Concept::negation(B())).size() == 4);
}

TEST_CASE("ontologies keep insertion order without duplicates") {
  Ontology o({{A(), B()}, {A(), B()}, {B(), A()}});
  CHECK(o.inclusions().size() == 2);
  CHECK(o.with({A(), B()}).inclusions().size() == 2);
  CHECK(o.with({A(), A()}).inclusions().size() == 3);
}

TEST_CASE("database constants and labels") {
  Database d({{Symbol("A"), Symbol("a")}}, {{Symbol("r"), Symbol("a"), Symbol("b")}});
  CHECK(d.constants() == std::set<Symbol>{Symbol("a"), Symbol("b")});
  CHECK(d.labels_of(Symbol("a")) == std::vector<Symbol>{Symbol("A")});
  CHECK(d.labels_of(Symbol("b")).empty());
  CHECK(d.size() == 2);
  Signature s = d.signature();
  CHECK(s.contains_concept(Symbol("A")));
  CHECK(s.contains_role(Symbol("r")));
  CHECK(d.with(UnaryAtom{Symbol("A"), Symbol("a")}) == d);
}

TEST_CASE("labeled KBs reject empty or unknown examples") {
  KB k{Ontology(), Database({{Symbol("A"), Symbol("a")}, {Symbol("A"), Symbol("b")}}, {})};
  CHECK_NOTHROW(LabeledKB(k, {Symbol("a")}, {Symbol("b")}));
  CHECK_THROWS_AS(LabeledKB(k, {}, {Symbol("b")}), Error);
  CHECK_THROWS_AS(LabeledKB(k, {Symbol("a")}, {}), Error);
  CHECK_THROWS_AS(LabeledKB(k, {Symbol("a")}, {Symbol("z")}), UnknownConstant);
  LabeledKB lk(k, {Symbol("b"), Symbol("a"), Symbol("a")}, {Symbol("b")});
  CHECK(lk.positives() == std::vector<Symbol>{Symbol("a"), Symbol("b")});
}

TEST_CASE("fresh concept names avoid the signature") {
  Signature sig;
  sig.concept_names = {Symbol("X"), Symbol("X0"), Symbol("X1")};
  Symbol f = fresh_concept_name(sig, "X");
  CHECK_FALSE(sig.contains_concept(f));
}
