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

// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ontosep/entailment.hpp"
#include "ontosep/graph_ops.hpp"
#include "ontosep/oracle.hpp"
#include "ontosep/separability.hpp"
#include "ontosep/syntax.hpp"

namespace {

using namespace ontosep;
namespace tc = ontosep::testing;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failures; keeps the first few messages.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  void note(const std::string& s) { extra_ << s; }
  Outcome outcome() const {
    std::ostringstream d;
    d << checks_ << " checks, " << failures_ << " failures";
    if (!extra_.str().empty()) d << ", " << extra_.str();
    if (failures_) d << " [" << notes_.str() << "]";
    return {failures_ == 0, d.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::ostringstream notes_, extra_;
};

std::string describe(const LabeledKB& lk) {
  std::string s = render_kb(lk.kb(), lk.positives(), lk.negatives());
  for (char& c : s) {
    if (c == '\n') c = ' ';
  }
  return s;
}

const char* kCitizens = R"(
database {
  born_in(a, c)  citizen_of(a, c)  born_in(b, c1)  citizen_of(b, c2)  Person(a)
}
positive { a }
negative { b }
)";

const char* kCitizensPerson = R"(
ontology { exists citizen_of. top <= Person }
database {
  born_in(a, c)  citizen_of(a, c)  born_in(b, c1)  citizen_of(b, c2)  Person(a)
}
positive { a }
negative { b }
)";

const char* kLoops = R"(
ontology { top <= exists R. top and exists inv(R). top }
database { R(a, a)  R(b, c) }
positive { a }
negative { b }
)";

const char* kVotesK1 = R"(
database { votes(a, c1)  votes(b, c2)  Left(c1)  Right(c2) }
positive { a }
negative { b }
)";

const char* kVotesK2 = R"(
ontology { exists votes. Left <= not exists votes. Right }
database { votes(a, c1)  votes(b, c2)  Left(c1)  Right(c2) }
positive { a }
negative { b }
)";

Outcome citizens_example() {
  Tally t;
  LabeledKB k1 = parse_labeled_kb(kCitizens);
  LabeledKB k2 = parse_labeled_kb(kCitizensPerson);
  Concept person = parse_concept("Person");
  t.check(weak_projective(k1).separable, "K1 weakly separable");
  t.check(weak_projective(k2).separable, "K2 weakly separable");
  t.check(verify_weak_concept(k1.kb(), person, k1.positives(), k1.negatives()), "Person separates K1");
  t.check(!verify_weak_concept(k2.kb(), person, k2.positives(), k2.negatives()), "Person does not separate K2");
  t.check(entails_concept(k2.kb(), person, Symbol("b")), "K2 entails Person(b)");
  UCQ q = canonical_ucq(k2.kb().database, k2.positives());
  t.check(verify_weak_separator(k2.kb(), q, k2.positives(), k2.negatives()), "canonical UCQ separates K2");
  UCQ natural = parse_ucq("q(x) :- born_in(x,y), citizen_of(x,y)");
  t.check(verify_weak_separator(k2.kb(), natural, k2.positives(), k2.negatives()), "born_in/citizen_of CQ separates K2");
  return t.outcome();
}

Outcome loop_example() {
  Tally t;
  LabeledKB k = parse_labeled_kb(kLoops);
  SeparabilityReport wp = weak_projective(k);
  t.check(wp.separable, "weak projective separable");
  t.check(wp.separator && wp.separator->text == "q(x) :- R(x,x)", "separator is R(x,x)");
  t.check(wp.separator && wp.separator->verified, "separator verified");
  t.check(!weak_nonprojective(k).separable, "non-projective inseparable");
  t.check(projective_via_reduction(k).separable, "reduction separable");
  UCQ self_loop = parse_ucq("q(x) :- R(x,x)");
  t.check(ucq_entailed(k.kb(), self_loop, Symbol("a")), "K entails R(a,a)");
  t.check(!ucq_entailed(k.kb(), self_loop, Symbol("b")), "K does not entail R(b,b)");
  Concept helper = parse_concept("not A or exists R. A");
  t.check(verify_weak_concept(k.kb(), helper, k.positives(), k.negatives()), "A -> exists R.A separates");
  return t.outcome();
}

Outcome votes_example() {
  Tally t;
  LabeledKB k1 = parse_labeled_kb(kVotesK1);
  LabeledKB k2 = parse_labeled_kb(kVotesK2);
  SeparabilityReport s2 = strong(k2);
  t.check(s2.separable, "K2 strongly separable");
  t.check(s2.separator && s2.separator->verified, "type disjunction verified");
  Concept left = parse_concept("exists votes. Left");
  t.check(verify_strong_concept(k2.kb(), left, k2.positives(), k2.negatives()), "exists votes.Left strongly separates K2");
  t.check(!strong(k1).separable, "K1 not strongly separable");
  t.check(!verify_strong_concept(k1.kb(), left, k1.positives(), k1.negatives()), "exists votes.Left fails on K1");
  t.check(weak_projective(k1).separable, "K1 weakly separable by exists votes.Left");
  return t.outcome();
}

// Results of all tasks on one labeled KB, computed once and shared.
struct TaskRun {
  SeparabilityReport wp, wnp, reduction, strong;
};

TaskRun run_all(const LabeledKB& lk) {
  SeparabilityOptions opts;
  opts.verify = false;  // criterion 8 calls the verifiers itself
  return {weak_projective(lk, opts), weak_nonprojective(lk, opts), projective_via_reduction(lk, opts),
          strong(lk, opts)};
}

struct Corpus {
  std::vector<LabeledKB> instances;
  std::vector<TaskRun> runs;
};

const Corpus& exhaustive() {
  static const Corpus c = [] {
    Corpus c;
    c.instances = tc::exhaustive_corpus();
    for (const auto& lk : c.instances) c.runs.push_back(run_all(lk));
    return c;
  }();
  return c;
}

const Corpus& randomized() {
  static const Corpus c = [] {
    Corpus c;
    c.instances = tc::random_labeled_kbs(1000, 20261017);
    for (const auto& lk : c.instances) c.runs.push_back(run_all(lk));
    return c;
  }();
  return c;
}

Outcome strong_characterizations() {
  Tally t;
  const Corpus& c = exhaustive();
  std::size_t separable = 0;
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const auto& rep = c.runs[i].strong;
    separable += rep.separable;
    for (const auto& p : rep.pairs) {
      t.check(p.merged_unsatisfiable == p.types_disjoint, describe(c.instances[i]));
    }
  }
  t.note(std::to_string(c.instances.size()) + " instances, " + std::to_string(separable) + " strongly separable");
  return t.outcome();
}

oracle::ModelBudget oracle_budget(std::uint64_t nodes) {
  oracle::ModelBudget b;
  b.max_domain_size = 4;
  b.max_nodes = nodes;
  return b;
}

Outcome reasoner_vs_oracle() {
  Tally t;
  std::size_t inconclusive = 0, sat = 0, targeted = 0, targeted_inconclusive = 0;
  std::vector<KB> kbs = tc::exhaustive_kbs();
  for (const KB& k : kbs) {
    Reasoner r(k);
    oracle::ModelSearch m = oracle::find_model(k, oracle_budget(2'000'000));
    sat += r.satisfiable();
    if (!m.conclusive) {
      ++inconclusive;
      continue;
    }
    std::string what = render_kb(k);
    t.check(r.satisfiable() == m.model.has_value(), "satisfiability: " + what);
    if (!r.satisfiable()) continue;

    // Types of constants in oracle models must be among the realizable ones.
    oracle::ModelBudget few = oracle_budget(200'000);
    few.max_domain_size = 3;
    few.max_models = 60;
    oracle::enumerate_models(k, few, [&](const Structure& s) {
      for (Symbol c : k.database.constants()) {
        auto id = r.find_type(tc::type_in_structure(r.closure(), s, *s.constant(c)));
        const auto& at = r.types_at(c);
        t.check(id && std::find(at.begin(), at.end(), *id) != at.end(), "type at " + c.str() + ": " + what);
      }
      return true;
    });

    // Types the reasoner rules out at c admit no oracle model giving c that type.
    for (Symbol c : k.database.constants()) {
      const auto& at = r.types_at(c);
      for (TypeId ty = 0; ty < r.type_count(); ++ty) {
        if (std::find(at.begin(), at.end(), ty) != at.end()) continue;
        oracle::ModelConstraints pin;
        pin.assertions.push_back({r.type_concept(ty), c});
        oracle::ModelSearch found = oracle::find_model(k, oracle_budget(50'000), pin);
        ++targeted;
        if (!found.conclusive) {
          ++targeted_inconclusive;
          continue;
        }
        t.check(!found.model, "type excluded at " + c.str() + " but realized: " + what);
      }
    }
  }
  t.note(std::to_string(kbs.size()) + " KBs, " + std::to_string(sat) + " satisfiable, " +
         std::to_string(inconclusive) + " inconclusive; " + std::to_string(targeted) + " excluded-type searches, " +
         std::to_string(targeted_inconclusive) + " inconclusive");
  return t.outcome();
}

Outcome entailment_vs_oracle() {
  Tally t;
  std::size_t entailed = 0, refuted = 0, inconclusive = 0;
  for (const KB& k : tc::exhaustive_kbs()) {
    Reasoner r(k);
    std::set<std::pair<std::vector<Symbol>, Symbol>> done;
    for (const auto& [positives, negatives] : tc::labelings(k.database)) {
      UCQ q = canonical_ucq(k.database, positives);
      for (Symbol b : negatives) {
        if (!done.insert({positives, b}).second) continue;
        std::string key = render_kb(k) + " | " + render_ucq(q) + " at " + b.str();
        EntailmentResult res = check_ucq(r, q, b);
        if (!res.entailed) {
          ++refuted;
          const Structure& cm = *res.countermodel;
          Element eb = *cm.constant(b);
          t.check(check_model(cm, k), "countermodel is a model: " + key);
          t.check(!oracle::naive_ucq_maps(q, cm, eb), "no match in countermodel: " + key);
          for (Symbol a : positives) {
            t.check(!oracle::naive_hom(k.database, a, cm, eb), "no homomorphism from " + a.str() + ": " + key);
          }
          continue;
        }
        ++entailed;
        oracle::ModelConstraints avoid;
        avoid.avoid = &q;
        avoid.avoid_at = b;
        oracle::ModelSearch m = oracle::find_model(k, oracle_budget(200'000), avoid);
        if (!m.conclusive) {
          ++inconclusive;
          continue;
        }
        t.check(!m.model, "entailed but an oracle model avoids the query: " + key);
      }
    }
  }
  t.note(std::to_string(refuted) + " not entailed, " + std::to_string(entailed) + " entailed, " +
         std::to_string(inconclusive) + " oracle-inconclusive");
  return t.outcome();
}

Outcome metamorphic_laws() {
  Tally t;
  const Corpus& c = randomized();
  std::size_t incomplete = 0, sep = 0, unsat = 0;
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const TaskRun& run = c.runs[i];
    std::string what = describe(c.instances[i]);
    sep += run.wp.separable;
    if (run.strong.kb_satisfiable) {
      t.check(!run.strong.separable || run.wp.separable, "strong implies weak: " + what);
    } else {
      // Everything is entailed everywhere: strong holds vacuously, weak never.
      ++unsat;
      t.check(run.strong.separable && !run.wp.separable && !run.wnp.separable, "unsatisfiable KB: " + what);
    }
    t.check(!run.wnp.separable || run.wp.separable, "non-projective implies projective: " + what);
    t.check(run.reduction.separable == run.wp.separable, "reduction agrees: " + what);
    if (is_strongly_incomplete(c.instances[i])) {
      ++incomplete;
      t.check(run.wnp.separable == run.wp.separable, "strongly incomplete: " + what);
    }
  }
  t.note(std::to_string(c.instances.size()) + " KBs, " + std::to_string(sep) + " weakly separable, " +
         std::to_string(incomplete) + " strongly incomplete, " + std::to_string(unsat) + " unsatisfiable");
  return t.outcome();
}

void verify_separators(Tally& t, const Corpus& c, std::size_t& count) {
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const LabeledKB& lk = c.instances[i];
    const KB& k = lk.kb();
    const TaskRun& run = c.runs[i];
    for (const SeparabilityReport* rep : {&run.wp, &run.wnp, &run.reduction, &run.strong}) {
      if (!rep->separator) continue;
      ++count;
      const Separator& s = *rep->separator;
      bool ok = false;
      if (s.ucq) ok = verify_weak_separator(k, *s.ucq, lk.positives(), lk.negatives());
      else if (rep->task == Task::kStrong) ok = verify_strong_concept(k, *s.concept_, lk.positives(), lk.negatives());
      else ok = verify_weak_concept(k, *s.concept_, lk.positives(), lk.negatives());
      t.check(ok, std::string(task_name(rep->task)) + " separator " + s.text + ": " + describe(lk));
    }
  }
}

Outcome separators_verify() {
  Tally t;
  std::size_t count = 0;
  verify_separators(t, exhaustive(), count);
  verify_separators(t, randomized(), count);
  t.note(std::to_string(count) + " separators");
  return t.outcome();
}

Outcome parser_roundtrip_and_fuzz() {
  Tally t;
  std::mt19937_64 rng(7);
  tc::RandomShape shape{{Symbol("A"), Symbol("B"), Symbol("Person")}, {Symbol("r"), Symbol("votes")}, 4};
  for (int i = 0; i < 10000; ++i) {
    Concept c = tc::random_concept(rng, shape, 1 + static_cast<int>(rng() % 4));
    std::string text = render_concept(c);
    bool ok = false;
    try {
      ok = parse_concept(text) == c;
    } catch (const ParseError&) {
    }
    t.check(ok, "round trip of " + text);
  }

  std::vector<std::string> seeds{kCitizens, kCitizensPerson, kLoops, kVotesK1, kVotesK2};
  const std::string alphabet = "(){},.<=#_ \n\tabcxyzABRtopbotnotandorexistsforallinv:-0123456789\x01\xff";
  std::size_t accepted = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string s = seeds[rng() % seeds.size()];
    for (int edits = 1 + static_cast<int>(rng() % 4); edits > 0; --edits) {
      std::size_t pos = s.empty() ? 0 : rng() % s.size();
      switch (rng() % 4) {
        case 0: if (!s.empty()) s.erase(pos, 1 + rng() % 3); break;
        case 1: s.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
        case 2: if (!s.empty()) s[pos] = static_cast<char>(rng() % 256); break;
        default: if (!s.empty()) s[pos] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    try {
      parse_labeled_kb(s);
      ++accepted;
      t.check(true, "");
    } catch (const ParseError& e) {
      t.check(e.line() >= 1 && e.column() >= 1, "error without position");
    } catch (const std::exception& e) {
      t.check(false, std::string("non-parse exception: ") + e.what());
    }
  }
  t.note(std::to_string(accepted) + " fuzzed inputs parsed");
  return t.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "citizen example: weak separability and Person", citizens_example},
      {2, "self-loop example: projective vs non-projective", loop_example},
      {3, "votes example: strong separability", votes_example},
      {4, "strong separability: merge test agrees with type disjointness", strong_characterizations},
      {5, "reasoner agrees with brute-force models", reasoner_vs_oracle},
      {6, "UCQ entailment agrees with brute-force models", entailment_vs_oracle},
      {7, "metamorphic laws on random labeled KBs", metamorphic_laws},
      {8, "every emitted separator verifies", separators_verify},
      {9, "parser round trip and fuzzing", parser_roundtrip_and_fuzz},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s - %s (%s; %.1fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
