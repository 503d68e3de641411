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

#include "corpus.hpp"
#include "ontosep/entailment.hpp"
#include "ontosep/graph_ops.hpp"
#include "ontosep/oracle.hpp"
#include "ontosep/syntax.hpp"

using namespace ontosep;

namespace {

LabeledKB kb(std::string_view text) { return parse_labeled_kb(text); }

const char* kLoops = R"(
ontology { top <= exists R. top and exists inv(R). top }
database { R(a, a)  R(b, c) }
positive { a }
negative { b }
)";

}  // namespace

TEST_CASE("empty ontology: entailment is a homomorphism into the database") {
  LabeledKB lk = kb("database { R(a,a) R(b,b) r(c,d) } positive { a } negative { b }");
  UCQ loop = parse_ucq("q(x) :- R(x,x)");
  CHECK(ucq_entailed(lk.kb(), loop, Symbol("b")));
  CHECK_FALSE(ucq_entailed(lk.kb(), loop, Symbol("c")));
  CHECK(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(x,y)"), Symbol("c")));
  CHECK_FALSE(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(y,x)"), Symbol("c")));
}

TEST_CASE("entailment through the ontology") {
  LabeledKB lk = kb(R"(ontology { A <= exists r. B  B <= exists r. A }
                       database { A(a) B(b) C(c) } positive { a } negative { c })");
  CHECK(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(x,y), B(y)"), Symbol("a")));
  CHECK(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(x,y), r(y,z), A(z)"), Symbol("a")));
  CHECK_FALSE(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(x,x)"), Symbol("a")));
  CHECK_FALSE(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(x,y), A(y)"), Symbol("a")));
  CHECK_FALSE(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(x,y)"), Symbol("c")));
}

TEST_CASE("disjunctive knowledge needs the union") {
  // Every element is A or B; b is forced to point at one of them.
  LabeledKB lk = kb(R"(ontology { top <= A or B } database { r(b, c) } positive { b } negative { c })");
  UCQ both = parse_ucq("q(x) :- r(x,y), A(y) | q(x) :- r(x,y), B(y)");
  CHECK(ucq_entailed(lk.kb(), both, Symbol("b")));
  CHECK_FALSE(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(x,y), A(y)"), Symbol("b")));
}

TEST_CASE("the self-loop example: R(b,b) is not entailed") {
  LabeledKB lk = kb(kLoops);
  Reasoner r(lk.kb());
  UCQ loop = parse_ucq("q(x) :- R(x,x)");
  EntailmentResult res = check_ucq(r, loop, Symbol("b"));
  REQUIRE_FALSE(res.entailed);
  REQUIRE(res.countermodel);
  CHECK(check_model(*res.countermodel, lk.kb()));
  CHECK_FALSE(oracle::naive_ucq_maps(loop, *res.countermodel, *res.countermodel->constant(Symbol("b"))));
  CHECK(res.skeleton.count(Symbol("b")));
  CHECK(check_ucq(r, loop, Symbol("a")).entailed);
}

TEST_CASE("unsatisfiable KBs entail everything") {
  LabeledKB lk = kb("ontology { A <= bot } database { A(a) B(b) } positive { a } negative { b }");
  CHECK(ucq_entailed(lk.kb(), parse_ucq("q(x) :- r(x,x)"), Symbol("b")));
}

TEST_CASE("queries must be rooted with one answer variable") {
  LabeledKB lk = kb("database { A(a) B(b) } positive { a } negative { b }");
  CHECK_THROWS_AS(ucq_entailed(lk.kb(), parse_ucq("q(x) :- A(x), B(y)"), Symbol("a")), Error);
}

TEST_CASE("verification of separators") {
  LabeledKB lk = kb(R"(database { born_in(a, c) citizen_of(a, c) born_in(b, c1) citizen_of(b, c2) Person(a) }
                       positive { a } negative { b })");
  const KB& k = lk.kb();
  CHECK(verify_weak_concept(k, parse_concept("Person"), lk.positives(), lk.negatives()));
  CHECK_FALSE(verify_weak_concept(k, Concept::top(), lk.positives(), lk.negatives()));
  CHECK_FALSE(verify_strong_concept(k, parse_concept("Person"), lk.positives(), lk.negatives()));
  CHECK(verify_weak_separator(k, canonical_ucq(k.database, lk.positives()), lk.positives(), lk.negatives()));
  CHECK_FALSE(verify_weak_separator(k, parse_ucq("q(x) :- born_in(x,y)"), lk.positives(), lk.negatives()));
}

TEST_CASE("countermodels are models without a match, on random KBs") {
  std::size_t refuted = 0;
  for (const auto& lk : testing::random_labeled_kbs(120, 99)) {
    Reasoner r(lk.kb());
    UCQ q = canonical_ucq(lk.kb().database, lk.positives());
    for (Symbol b : lk.negatives()) {
      EntailmentResult res = check_ucq(r, q, b);
      if (res.entailed) continue;
      ++refuted;
      const Structure& cm = *res.countermodel;
      CHECK(check_model(cm, lk.kb()));
      CHECK_FALSE(oracle::naive_ucq_maps(q, cm, *cm.constant(b)));
    }
  }
  CHECK(refuted > 0);
}

TEST_CASE("pinned types restrict the countermodel search") {
  LabeledKB lk = kb(R"(ontology { top <= A or B  exists r. A <= E }
                       database { r(a, c) A(c) r(b, d) } positive { a } negative { b })");
  Reasoner r(lk.kb());
  UCQ q = canonical_ucq(lk.kb().database, lk.positives());
  CHECK_FALSE(check_ucq(r, q, Symbol("b")).entailed);
  Concept some_a = parse_concept("exists r. A");
  std::vector<TypeId> with, without;
  for (TypeId t : r.types_at(Symbol("b"))) (r.holds(t, some_a) ? with : without).push_back(t);
  REQUIRE_FALSE(with.empty());
  REQUIRE_FALSE(without.empty());
  CHECK(check_ucq(r, q, Symbol("b"), &with).entailed);
  CHECK_FALSE(check_ucq(r, q, Symbol("b"), &without).entailed);
}
