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

#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

namespace ontosep::testing {
namespace {

Symbol sym(const char* s) { return Symbol(s); }

std::string key_of(const std::vector<UnaryAtom>& u, const std::vector<BinaryAtom>& b) {
  std::vector<std::string> parts;
  for (const auto& a : u) parts.push_back(a.concept_name.str() + "(" + a.constant.str() + ")");
  for (const auto& a : b) parts.push_back(a.role.str() + "(" + a.from.str() + "," + a.to.str() + ")");
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + ";";
  return out;
}

}  // namespace

const std::vector<ConceptInclusion>& ci_pool() {
  static const std::vector<ConceptInclusion> pool = [] {
    Concept a = Concept::name(sym("A"));
    Concept b = Concept::name(sym("B"));
    Role r{sym("r"), false};
    return std::vector<ConceptInclusion>{
        {a, Concept::exists(r, b)},
        {b, Concept::exists(r.inverse(), a)},
        {Concept::conjunction(a, b), Concept::bottom()},
        {Concept::exists(r, a), a},
        {Concept::top(), Concept::disjunction(a, b)},
        {b, Concept::forall(r, Concept::negation(b))},
    };
  }();
  return pool;
}

std::vector<Database> small_databases() {
  const std::array<Symbol, 3> cs{sym("a"), sym("b"), sym("c")};
  struct Atom {
    bool unary;
    Symbol pred;
    int x, y;
  };
  std::vector<Atom> atoms;
  for (int x = 0; x < 3; ++x) {
    atoms.push_back({true, sym("A"), x, x});
    atoms.push_back({true, sym("B"), x, x});
  }
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) atoms.push_back({false, sym("r"), x, y});
  }

  std::set<std::string> seen;
  std::vector<Database> out;
  auto consider = [&](const std::vector<Atom>& chosen) {
    std::array<int, 3> perm{0, 1, 2};
    std::string best;
    Database best_db;
    do {
      std::vector<UnaryAtom> u;
      std::vector<BinaryAtom> b;
      for (const Atom& a : chosen) {
        if (a.unary) u.push_back({a.pred, cs[perm[a.x]]});
        else b.push_back({a.pred, cs[perm[a.x]], cs[perm[a.y]]});
      }
      std::string k = key_of(u, b);
      if (best.empty() || k < best) {
        best = k;
        best_db = Database(u, b);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(best_db);
  };
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    consider({atoms[i]});
    for (std::size_t j = i + 1; j < atoms.size(); ++j) consider({atoms[i], atoms[j]});
  }
  return out;
}

std::vector<KB> exhaustive_kbs() {
  const auto& pool = ci_pool();
  std::vector<KB> out;
  std::vector<Database> dbs = small_databases();
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<ConceptInclusion> cis;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) cis.push_back(pool[i]);
    }
    Ontology o(cis);
    for (const Database& d : dbs) out.push_back(KB{o, d});
  }
  return out;
}

std::vector<std::pair<std::vector<Symbol>, std::vector<Symbol>>> labelings(const Database& d) {
  std::vector<Symbol> cs(d.constants().begin(), d.constants().end());
  std::vector<std::pair<std::vector<Symbol>, std::vector<Symbol>>> out;
  for (Symbol a : cs) {
    for (Symbol b : cs) {
      if (a != b) out.push_back({{a}, {b}});
    }
  }
  if (cs.size() == 3) {
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<Symbol> rest;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) rest.push_back(cs[j]);
      }
      out.push_back({{cs[i]}, rest});
      out.push_back({rest, {cs[i]}});
    }
  }
  return out;
}

std::vector<LabeledKB> exhaustive_corpus() {
  std::vector<LabeledKB> out;
  for (const KB& k : exhaustive_kbs()) {
    for (auto& [p, n] : labelings(k.database)) out.emplace_back(k, p, n);
  }
  return out;
}

Concept random_concept(std::mt19937_64& rng, const RandomShape& shape, int depth) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto name = [&] { return Concept::name(shape.names[pick(shape.names.size())]); };
  auto role = [&] { return Role{shape.roles[pick(shape.roles.size())], pick(3) == 0}; };
  if (depth <= 0) {
    std::size_t k = pick(10);
    if (k == 0) return Concept::top();
    if (k == 1) return Concept::bottom();
    return name();
  }
  switch (pick(8)) {
    case 0: return Concept::negation(random_concept(rng, shape, depth - 1));
    case 1: return Concept::conjunction(random_concept(rng, shape, depth - 1), random_concept(rng, shape, depth - 1));
    case 2: return Concept::disjunction(random_concept(rng, shape, depth - 1), random_concept(rng, shape, depth - 1));
    case 3:
    case 4: return Concept::exists(role(), random_concept(rng, shape, depth - 1));
    case 5: return Concept::forall(role(), random_concept(rng, shape, depth - 1));
    default: return random_concept(rng, shape, 0);
  }
}

std::vector<LabeledKB> random_labeled_kbs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  RandomShape shape{{sym("A"), sym("B")}, {sym("r"), sym("s")}, 2};
  const std::array<Symbol, 4> cs{sym("a"), sym("b"), sym("c"), sym("d")};
  std::vector<LabeledKB> out;
  while (out.size() < count) {
    std::vector<ConceptInclusion> cis;
    for (std::size_t i = pick(4); i > 0; --i) {
      Concept lhs = pick(4) == 0 ? Concept::top() : random_concept(rng, shape, static_cast<int>(pick(2)));
      cis.push_back({lhs, random_concept(rng, shape, static_cast<int>(pick(3)))});
    }
    std::vector<UnaryAtom> u;
    std::vector<BinaryAtom> b;
    for (std::size_t i = 2 + pick(4); i > 0; --i) {
      if (pick(5) < 2) u.push_back({shape.names[pick(2)], cs[pick(4)]});
      else b.push_back({shape.roles[pick(2)], cs[pick(4)], cs[pick(4)]});
    }
    Database d(u, b);
    std::vector<Symbol> cons(d.constants().begin(), d.constants().end());
    if (cons.size() < 2) continue;
    std::shuffle(cons.begin(), cons.end(), rng);
    std::size_t np = 1 + pick(cons.size() - 1);
    std::size_t nn = 1 + pick(cons.size() - np);
    std::vector<Symbol> p(cons.begin(), cons.begin() + np);
    std::vector<Symbol> n(cons.begin() + np, cons.begin() + np + nn);
    out.emplace_back(KB{Ontology(cis), d}, p, n);
  }
  return out;
}

KType type_in_structure(const Closure& cl, const Structure& s, Element e) {
  ConceptEvaluator ev(s);
  KType t(cl.size());
  for (std::uint32_t i = 0; i < cl.size(); ++i) t.set(i, ev.holds(cl.entry(i).concept_, e));
  return t;
}

}  // namespace ontosep::testing
