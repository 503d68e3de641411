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

#include <random>

#include "corpus.hpp"
#include "json.hpp"
#include "ontosep/separability.hpp"
#include "ontosep/syntax.hpp"

using namespace ontosep;

namespace {

const char* kCitizens = R"(
# citizens
ontology {
  exists citizen_of. top <= Person
}
database {
  born_in(a, c) citizen_of(a, c)
  born_in(b, c1) citizen_of(b, c2)
  Person(a)
}
positive { a }
negative { b }
)";

std::string error_of(std::string_view text) {
  try {
    parse_labeled_kb(text);
  } catch (const ParseError& e) {
    return e.message();
  }
  return "";
}

}  // namespace

TEST_CASE("the citizen example parses") {
  LabeledKB lk = parse_labeled_kb(kCitizens);
  const KB& k = lk.kb();
  REQUIRE(k.ontology.inclusions().size() == 1);
  Role citizen{Symbol("citizen_of"), false};
  CHECK(k.ontology.inclusions()[0].lhs == Concept::exists(citizen, Concept::top()));
  CHECK(k.ontology.inclusions()[0].rhs == Concept::name(Symbol("Person")));
  CHECK(k.database.size() == 5);
  CHECK(k.database.contains(BinaryAtom{Symbol("citizen_of"), Symbol("b"), Symbol("c2")}));
  CHECK(lk.positives() == std::vector<Symbol>{Symbol("a")});
  CHECK(lk.negatives() == std::vector<Symbol>{Symbol("b")});
}

TEST_CASE("semantic errors are reported with positions") {
  CHECK(error_of("database { A(a) }\npositive { }\nnegative { a }") == "positive examples must be non-empty");
  CHECK(error_of("database { A(a) }\npositive { a }\nnegative { }") == "negative examples must be non-empty");
  CHECK(error_of("database { A(a) }\nnegative { a }") == "positive examples must be non-empty");
  CHECK(error_of("database { R(a) R(a, b) }\npositive { a }\nnegative { b }").find("both concept name and role name") !=
        std::string::npos);
  CHECK(error_of("database { A(a) }\npositive { a }\nnegative { z }").find("unknown constant") != std::string::npos);
  try {
    parse_labeled_kb("database {\n  A(a)\n  r(a b)\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 7);
    CHECK(e.expected() == "',' or ')'");
  }
}

TEST_CASE("keywords and malformed input are rejected") {
  CHECK_THROWS_AS(parse_concept("exists top. A"), ParseError);
  CHECK_THROWS_AS(parse_concept("A and"), ParseError);
  CHECK_THROWS_AS(parse_concept("(A"), ParseError);
  CHECK_THROWS_AS(parse_concept("A $ B"), ParseError);
  CHECK_THROWS_AS(parse_labeled_kb("database { A(B) } positive { B } negative { B }"), ParseError);
  std::string deep(5000, '(');
  CHECK_THROWS_AS(parse_concept(deep + "A"), ParseError);
}

TEST_CASE("precedence: not binds tighter than and, and tighter than or") {
  Concept a = Concept::name(Symbol("A")), b = Concept::name(Symbol("B")), c = Concept::name(Symbol("C"));
  Role r{Symbol("r"), false};
  CHECK(parse_concept("not A and B") == Concept::conjunction(Concept::negation(a), b));
  CHECK(parse_concept("A or B and C") == Concept::disjunction(a, Concept::conjunction(b, c)));
  CHECK(parse_concept("A and B and C") == Concept::conjunction(Concept::conjunction(a, b), c));
  CHECK(parse_concept("exists r. A and B") == Concept::conjunction(Concept::exists(r, a), b));
  CHECK(parse_concept("exists r. (A and B)") == Concept::exists(r, Concept::conjunction(a, b)));
  CHECK(parse_concept("forall inv(r). bot") == Concept::forall(r.inverse(), Concept::bottom()));
}

TEST_CASE("rendering follows the concrete syntax") {
  Concept a = Concept::name(Symbol("A"));
  Role big_r{Symbol("R"), false};
  Concept helper = Concept::implies(a, Concept::exists(big_r, a));
  CHECK(render_concept(helper) == "not A or exists R. A");
  CHECK(parse_concept(render_concept(helper)) == helper);
  CHECK(render_concept(Concept::top()) == "top");
  CHECK(render_concept(Concept::bottom()) == "bot");
  CHECK(render_concept(Concept::forall(big_r.inverse(), a)) == "forall inv(R). A");

  UCQ loop = parse_ucq("q(x) :- R(x,x)");
  CHECK(render_ucq(loop) == "q(x) :- R(x,x)");
  UCQ two = parse_ucq("q(x) :- A(x) | q(x) :- r(x,y), B(y)");
  CHECK(two.disjuncts().size() == 2);
  CHECK(parse_ucq(render_ucq(two)) == two);
  CHECK(std::holds_alternative<UCQ>(parse_formula("q(x) :- A(x)")));
  CHECK(std::holds_alternative<Concept>(parse_formula("A or B")));
}

TEST_CASE("random concepts round-trip") {
  std::mt19937_64 rng(42);
  testing::RandomShape shape{{Symbol("A"), Symbol("B")}, {Symbol("r"), Symbol("s")}, 4};
  for (int i = 0; i < 2000; ++i) {
    Concept c = testing::random_concept(rng, shape, 4);
    INFO(render_concept(c));
    CHECK(parse_concept(render_concept(c)) == c);
  }
}

TEST_CASE("rendered KBs re-parse to the same KB") {
  for (const auto& lk : testing::random_labeled_kbs(200, 3)) {
    std::string text = render_kb(lk.kb(), lk.positives(), lk.negatives());
    LabeledKB back = parse_labeled_kb(text);
    INFO(text);
    CHECK(back.kb().ontology == lk.kb().ontology);
    CHECK(back.kb().database == lk.kb().database);
    CHECK(back.positives() == lk.positives());
    CHECK(back.negatives() == lk.negatives());
  }
}

TEST_CASE("reports follow the JSON schema") {
  LabeledKB lk = parse_labeled_kb(kCitizens);
  for (Task t : {Task::kWeakProjective, Task::kWeakNonprojective, Task::kStrong}) {
    auto j = nlohmann::json::parse(render_report(run_task(t, lk)));
    CHECK(j["task"] == std::string(task_name(t)));
    CHECK((j["status"] == "separable" || j["status"] == "inseparable"));
    if (!j["separator"].is_null()) {
      CHECK((j["separator"]["kind"] == "ucq" || j["separator"]["kind"] == "concept"));
      CHECK(j["separator"]["text"].is_string());
    }
    CHECK(j["certificate"].is_object());
    CHECK(j["stats"]["types"].is_number_integer());
    CHECK(j["stats"]["closure"].is_number_integer());
    CHECK(j["stats"]["time_ms"].is_number_integer());
  }
  CHECK(task_from_name("strong") == Task::kStrong);
  CHECK_FALSE(task_from_name("weak").has_value());
}
