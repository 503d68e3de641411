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

#include "ontosep/graph_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ontosep/error.hpp"

namespace ontosep {

Database connected_restriction(const Database& d, Symbol a) {
  if (!d.has_constant(a)) throw UnknownConstant(a.str());
  std::map<Symbol, std::vector<Symbol>> adj;
  for (const auto& e : d.binary_atoms()) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::set<Symbol> seen{a};
  std::vector<Symbol> stack{a};
  while (!stack.empty()) {
    Symbol c = stack.back();
    stack.pop_back();
    for (Symbol n : adj[c]) {
      if (seen.insert(n).second) stack.push_back(n);
    }
  }
  std::vector<UnaryAtom> unary;
  std::vector<BinaryAtom> binary;
  for (const auto& u : d.unary_atoms()) {
    if (seen.count(u.constant)) unary.push_back(u);
  }
  for (const auto& e : d.binary_atoms()) {
    if (seen.count(e.from)) binary.push_back(e);
  }
  return Database(std::move(unary), std::move(binary));
}

CQ canonical_cq(const Database& d, const std::vector<Symbol>& point) {
  if (point.empty()) throw Error("canonical query needs a non-empty point");
  std::map<Symbol, Symbol> var;
  std::vector<Symbol> answer;
  std::vector<QueryEquality> eqs;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!d.has_constant(point[i])) throw UnknownConstant(point[i].str());
    Symbol x(point.size() == 1 ? std::string("x") : "x" + std::to_string(i + 1));
    answer.push_back(x);
    auto [it, fresh] = var.emplace(point[i], x);
    if (!fresh) eqs.push_back({it->second, x});
  }
  for (Symbol c : d.constants()) var.emplace(c, Symbol("y_" + c.str()));
  std::vector<QueryUnaryAtom> unary;
  std::vector<QueryBinaryAtom> binary;
  for (const auto& u : d.unary_atoms()) unary.push_back({u.concept_name, var.at(u.constant)});
  for (const auto& e : d.binary_atoms()) binary.push_back({e.role, var.at(e.from), var.at(e.to)});
  return CQ(std::move(answer), std::move(unary), std::move(binary), std::move(eqs));
}

CQ canonical_cq(const Database& d, Symbol a) { return canonical_cq(d, std::vector<Symbol>{a}); }

UCQ canonical_ucq(const Database& d, const std::vector<Symbol>& positives) {
  // Components that map into each other both ways give equivalent disjuncts.
  std::vector<std::pair<Database, Symbol>> kept;
  std::vector<CQ> ds;
  for (Symbol a : positives) {
    Database c = connected_restriction(d, a);
    Structure sc = structure_of_database(c);
    bool dup = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
      Structure sk = structure_of_database(k.first);
      return hom_exists({c, {a}}, {&sk, {*sk.constant(k.second)}}) &&
             hom_exists({k.first, {k.second}}, {&sc, {*sc.constant(a)}});
    });
    if (dup) continue;
    ds.push_back(canonical_cq(c, a));
    kept.emplace_back(std::move(c), a);
  }
  return UCQ(std::move(ds));
}

Database merge_databases(const Database& d, Symbol a, Symbol b) {
  if (!d.has_constant(a)) throw UnknownConstant(a.str());
  if (!d.has_constant(b)) throw UnknownConstant(b.str());
  std::map<Symbol, Symbol> copy;
  for (Symbol c : d.constants()) {
    std::string name = c.str() + "'";
    while (d.has_constant(Symbol(name))) name += "'";
    copy[c] = Symbol(name);
  }
  copy[b] = a;
  std::vector<UnaryAtom> unary(d.unary_atoms().begin(), d.unary_atoms().end());
  std::vector<BinaryAtom> binary(d.binary_atoms().begin(), d.binary_atoms().end());
  for (const auto& u : d.unary_atoms()) unary.push_back({u.concept_name, copy.at(u.constant)});
  for (const auto& e : d.binary_atoms()) binary.push_back({e.role, copy.at(e.from), copy.at(e.to)});
  return Database(std::move(unary), std::move(binary));
}

bool cq_maps(const CQ& q, const Structure& s, const std::vector<Element>& answer) {
  if (answer.size() != q.answer_vars().size()) throw Error("answer tuple has the wrong length");
  std::map<Symbol, std::size_t> index;
  std::vector<Symbol> order;
  auto add = [&](Symbol v) {
    if (index.emplace(v, order.size()).second) order.push_back(v);
  };
  std::vector<long> fixed;
  for (std::size_t i = 0; i < answer.size(); ++i) {
    Symbol v = q.answer_vars()[i];
    if (index.count(v)) {
      if (fixed[index[v]] != static_cast<long>(answer[i])) return false;
      continue;
    }
    add(v);
    fixed.push_back(answer[i]);
  }
  for (const auto& e : q.equalities()) {
    if (fixed.at(index.at(e.lhs)) != fixed.at(index.at(e.rhs))) return false;
  }
  // Breadth-first from the answer variables so that every later variable has
  // an already-placed neighbour whenever the query is connected.
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& a : q.binary_atoms()) {
      if (a.from == order[i]) add(a.to);
      if (a.to == order[i]) add(a.from);
    }
  }
  for (Symbol v : q.variables()) {
    add(v);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const auto& a : q.binary_atoms()) {
        if (a.from == order[i]) add(a.to);
        if (a.to == order[i]) add(a.from);
      }
    }
  }
  const std::size_t n = order.size();
  fixed.resize(n, -1);
  std::vector<std::vector<Symbol>> labels(n);
  for (const auto& a : q.unary_atoms()) labels[index.at(a.var)].push_back(a.predicate);
  struct Edge {
    Symbol role;
    std::size_t from, to;
  };
  // Atoms checked when their later endpoint is placed.
  std::vector<std::vector<Edge>> checks(n);
  for (const auto& a : q.binary_atoms()) {
    Edge e{a.predicate, index.at(a.from), index.at(a.to)};
    checks[std::max(e.from, e.to)].push_back(e);
  }
  std::vector<Element> img(n, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    std::vector<Element> cands;
    if (fixed[i] >= 0) {
      cands.push_back(static_cast<Element>(fixed[i]));
    } else {
      const Edge* anchor = nullptr;
      for (const auto& e : checks[i]) {
        if (e.from != e.to) {
          anchor = &e;
          break;
        }
      }
      if (anchor) {
        bool fwd = anchor->to == i;
        std::size_t other = fwd ? anchor->from : anchor->to;
        cands = s.neighbors(Role{anchor->role, !fwd}, img[other]);
      } else {
        for (Element e = 0; e < s.domain_size(); ++e) cands.push_back(e);
      }
    }
    for (Element e : cands) {
      bool ok = std::all_of(labels[i].begin(), labels[i].end(), [&](Symbol a) { return s.has_label(a, e); });
      if (!ok) continue;
      img[i] = e;
      for (const auto& c : checks[i]) {
        if (!s.has_edge(c.role, img[c.from], img[c.to])) {
          ok = false;
          break;
        }
      }
      if (ok && place(i + 1)) return true;
    }
    return false;
  };
  return place(0);
}

bool ucq_maps(const UCQ& q, const Structure& s, Element answer) {
  return std::any_of(q.disjuncts().begin(), q.disjuncts().end(),
                     [&](const CQ& d) { return cq_maps(d, s, {answer}); });
}

bool hom_exists(const PointedDatabase& p, const PointedStructure& s) {
  if (p.point.size() != s.point.size()) throw Error("point arity mismatch");
  return cq_maps(canonical_cq(p.database, p.point), *s.structure, s.point);
}

std::vector<std::size_t> bisimulation_classes(const Structure& s, const Signature& sigma) {
  const std::size_t n = s.domain_size();
  std::vector<std::size_t> cls(n, 0);
  {
    std::map<std::vector<bool>, std::size_t> ids;
    for (Element e = 0; e < n; ++e) {
      std::vector<bool> key;
      for (Symbol a : sigma.concept_names) key.push_back(s.has_label(a, e));
      cls[e] = ids.emplace(key, ids.size()).first->second;
    }
  }
  std::vector<Role> roles;
  for (Symbol r : sigma.role_names) {
    roles.push_back(Role{r, false});
    roles.push_back(Role{r, true});
  }
  std::size_t count = n == 0 ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::set<std::size_t>>>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (Element e = 0; e < n; ++e) {
      std::vector<std::set<std::size_t>> succ;
      for (const Role& r : roles) {
        std::set<std::size_t> cs;
        for (Element f : s.neighbors(r, e)) cs.insert(cls[f]);
        succ.push_back(std::move(cs));
      }
      next[e] = ids.emplace(std::make_pair(cls[e], std::move(succ)), ids.size()).first->second;
    }
    cls = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return cls;
}

bool bisimilar(const PointedStructure& s1, const PointedStructure& s2, const Signature& sigma) {
  if (s1.point.size() != 1 || s2.point.size() != 1) throw Error("bisimilarity needs single points");
  const Structure& a = *s1.structure;
  const Structure& b = *s2.structure;
  const auto off = static_cast<Element>(a.domain_size());
  Structure u(a.domain_size() + b.domain_size());
  for (Symbol name : sigma.concept_names) {
    for (Element e : a.label_extension(name)) u.add_label(name, e);
    for (Element e : b.label_extension(name)) u.add_label(name, e + off);
  }
  for (Symbol r : sigma.role_names) {
    for (auto [x, y] : a.edges(r)) u.add_edge(r, x, y);
    for (auto [x, y] : b.edges(r)) u.add_edge(r, x + off, y + off);
  }
  auto cls = bisimulation_classes(u, sigma);
  return cls[s1.point[0]] == cls[s2.point[0] + off];
}

bool embedding_exists(const Database& d, Symbol a, const PointedStructure& s, const Signature& sigma) {
  if (s.point.size() != 1) throw Error("embedding needs a single point");
  const Structure& st = *s.structure;
  Database con = connected_restriction(d, a);
  std::vector<Symbol> consts(con.constants().begin(), con.constants().end());
  std::map<Symbol, std::size_t> pos;
  for (std::size_t i = 0; i < consts.size(); ++i) pos[consts[i]] = i;
  auto cls = bisimulation_classes(st, sigma);
  const std::size_t ncls = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<Element>> members(ncls);
  for (Element e = 0; e < st.domain_size(); ++e) members[cls[e]].push_back(e);

  auto atoms_hold = [&](std::size_t c, Element e) {
    for (Symbol l : con.labels_of(consts[c])) {
      if (!st.has_label(l, e)) return false;
    }
    return true;
  };
  // Largest relation inside the chosen classes satisfying (atom) and (forth).
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> choice(consts.size(), kNone);
  auto fixpoint = [&]() {
    std::vector<std::vector<Element>> rel(consts.size());
    for (std::size_t c = 0; c < consts.size(); ++c) {
      if (choice[c] == kNone) continue;
      for (Element e : members[choice[c]]) {
        if (atoms_hold(c, e)) rel[c].push_back(e);
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& atom : con.binary_atoms()) {
        auto& from = rel[pos.at(atom.from)];
        const auto& to = rel[pos.at(atom.to)];
        auto bad = [&](Element e) {
          return std::none_of(to.begin(), to.end(), [&](Element f) { return st.has_edge(atom.role, e, f); });
        };
        auto it = std::remove_if(from.begin(), from.end(), bad);
        if (it != from.end()) {
          from.erase(it, from.end());
          changed = true;
        }
      }
    }
    const auto& root = rel[pos.at(a)];
    return std::find(root.begin(), root.end(), s.point[0]) != root.end();
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == consts.size()) return fixpoint();
    if (consts[i] == a) {
      choice[i] = cls[s.point[0]];
      return assign(i + 1);
    }
    choice[i] = kNone;
    if (assign(i + 1)) return true;
    for (std::size_t k = 0; k < ncls; ++k) {
      bool any = std::any_of(members[k].begin(), members[k].end(), [&](Element e) { return atoms_hold(i, e); });
      if (!any) continue;
      choice[i] = k;
      if (assign(i + 1)) return true;
    }
    choice[i] = kNone;
    return false;
  };
  return assign(0);
}

}  // namespace ontosep
