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

#include "ontosep/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ontosep::oracle {
namespace {

enum Tri : std::uint8_t { kF = 0, kT = 1, kU = 2 };

Tri tri_not(Tri v) { return v == kU ? kU : (v == kT ? kF : kT); }

class Enumerator {
 public:
  Enumerator(const KB& k, const ModelBudget& budget, const ModelVisitor& visit, const ModelConstraints& cons)
      : k_(k), budget_(budget), visit_(visit), cons_(cons) {
    Signature sig = k.signature();
    for (const auto& [c, _] : cons.assertions) {
      std::vector<Symbol> ns, rs;
      c.collect_names(ns);
      c.collect_roles(rs);
      sig.concept_names.insert(ns.begin(), ns.end());
      sig.role_names.insert(rs.begin(), rs.end());
    }
    if (cons.avoid) {
      for (const CQ& cq : cons.avoid->disjuncts()) {
        for (const auto& u : cq.unary_atoms()) sig.concept_names.insert(u.predicate);
        for (const auto& b : cq.binary_atoms()) sig.role_names.insert(b.predicate);
      }
    }
    names_.assign(sig.concept_names.begin(), sig.concept_names.end());
    roles_.assign(sig.role_names.begin(), sig.role_names.end());
    for (std::size_t i = 0; i < names_.size(); ++i) name_index_[names_[i]] = i;
    for (std::size_t i = 0; i < roles_.size(); ++i) role_index_[roles_[i]] = i;

    std::set<Symbol> constants = k.database.constants();
    for (const auto& [_, c] : cons.assertions) constants.insert(c);
    if (cons.avoid) constants.insert(cons.avoid_at);
    constants_.assign(constants.begin(), constants.end());

    for (const auto& ci : k.ontology.inclusions()) {
      add_sub(ci.lhs);
      add_sub(ci.rhs);
    }
    for (const auto& [c, _] : cons.assertions) add_sub(c);
  }

  EnumerationResult run() {
    for (std::size_t n = 1; n <= budget_.max_domain_size && !done(); ++n) {
      n_ = n;
      map_.assign(constants_.size(), 0);
      constant_maps(0, 0);
    }
    if (exhausted_) result_.status = EnumerationStatus::kBudgetExhausted;
    else if (stopped_) result_.status = EnumerationStatus::kStopped;
    return result_;
  }

 private:
  struct Bit {
    bool label;
    std::size_t sym;
    Element from, to;
  };

  bool done() const { return exhausted_ || stopped_; }

  void add_sub(Concept c) {
    if (sub_index_.count(c.id())) return;
    switch (c.kind()) {
      case ConceptKind::kName: break;
      case ConceptKind::kNot: add_sub(c.operand()); break;
      case ConceptKind::kAnd:
        add_sub(c.left());
        add_sub(c.right());
        break;
      case ConceptKind::kExists: add_sub(c.filler()); break;
    }
    sub_index_[c.id()] = subs_.size();
    subs_.push_back(c);
  }

  void constant_maps(std::size_t i, Element used) {
    if (done()) return;
    if (i == constants_.size()) {
      start();
      return;
    }
    for (Element e = 0; e < n_ && e <= used; ++e) {
      map_[i] = e;
      constant_maps(i + 1, std::max<Element>(used, e + 1));
    }
  }

  Element element_of(Symbol c) const {
    auto it = std::lower_bound(constants_.begin(), constants_.end(), c);
    return map_[it - constants_.begin()];
  }

  Tri& label(std::size_t name, Element e) { return labels_[name * n_ + e]; }
  Tri& edge(std::size_t role, Element from, Element to) { return edges_[(role * n_ + from) * n_ + to]; }

  void start() {
    labels_.assign(names_.size() * n_, kU);
    edges_.assign(roles_.size() * n_ * n_, kU);
    for (const auto& a : k_.database.unary_atoms()) label(name_index_.at(a.concept_name), element_of(a.constant)) = kT;
    for (const auto& a : k_.database.binary_atoms()) {
      edge(role_index_.at(a.role), element_of(a.from), element_of(a.to)) = kT;
    }
    bits_.clear();
    for (Element e = 0; e < n_; ++e) {
      for (std::size_t c = 0; c < names_.size(); ++c) {
        if (label(c, e) == kU) bits_.push_back({true, c, e, e});
      }
      for (Element f = 0; f <= e; ++f) {
        for (std::size_t r = 0; r < roles_.size(); ++r) {
          if (edge(r, e, f) == kU) bits_.push_back({false, r, e, f});
          if (f != e && edge(r, f, e) == kU) bits_.push_back({false, r, f, e});
        }
      }
    }
    search(0);
  }

  Tri& value(const Bit& b) { return b.label ? label(b.sym, b.from) : edge(b.sym, b.from, b.to); }

  void search(std::size_t i) {
    if (done()) return;
    if (++result_.nodes > budget_.max_nodes) {
      exhausted_ = true;
      return;
    }
    if (violated()) return;
    if (i == bits_.size()) {
      leaf();
      return;
    }
    Tri& v = value(bits_[i]);
    v = kF;
    search(i + 1);
    v = kT;
    search(i + 1);
    v = kU;
  }

  Tri edge_tri(const Role& r, Element from, Element to) {
    auto it = role_index_.find(r.name);
    if (it == role_index_.end()) return kF;
    return r.inverted ? edge(it->second, to, from) : edge(it->second, from, to);
  }

  void evaluate() {
    ext_.assign(subs_.size() * n_, kF);
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      Concept c = subs_[i];
      Tri* out = &ext_[i * n_];
      switch (c.kind()) {
        case ConceptKind::kName: {
          auto it = name_index_.find(c.concept_name());
          for (Element e = 0; e < n_; ++e) out[e] = it == name_index_.end() ? kF : label(it->second, e);
          break;
        }
        case ConceptKind::kNot: {
          const Tri* in = &ext_[sub_index_.at(c.operand().id()) * n_];
          for (Element e = 0; e < n_; ++e) out[e] = tri_not(in[e]);
          break;
        }
        case ConceptKind::kAnd: {
          const Tri* l = &ext_[sub_index_.at(c.left().id()) * n_];
          const Tri* r = &ext_[sub_index_.at(c.right().id()) * n_];
          for (Element e = 0; e < n_; ++e) {
            out[e] = (l[e] == kF || r[e] == kF) ? kF : (l[e] == kT && r[e] == kT ? kT : kU);
          }
          break;
        }
        case ConceptKind::kExists: {
          const Tri* f = &ext_[sub_index_.at(c.filler().id()) * n_];
          for (Element e = 0; e < n_; ++e) {
            Tri v = kF;
            for (Element g = 0; g < n_ && v != kT; ++g) {
              Tri ed = edge_tri(c.role(), e, g);
              if (ed == kT && f[g] == kT) v = kT;
              else if (ed != kF && f[g] != kF) v = kU;
            }
            out[e] = v;
          }
          break;
        }
      }
    }
  }

  Tri at(Concept c, Element e) const { return ext_[sub_index_.at(c.id()) * n_ + e]; }

  bool violated() {
    evaluate();
    for (const auto& ci : k_.ontology.inclusions()) {
      for (Element e = 0; e < n_; ++e) {
        if (at(ci.lhs, e) == kT && at(ci.rhs, e) == kF) return true;
      }
    }
    for (const auto& [c, a] : cons_.assertions) {
      if (at(c, element_of(a)) == kF) return true;
    }
    // Facts already true stay true, so a match now persists in every completion.
    if (cons_.avoid && definite_match()) return true;
    return false;
  }

  bool definite_match() {
    Element target = element_of(cons_.avoid_at);
    for (const CQ& cq : cons_.avoid->disjuncts()) {
      const std::set<Symbol> vs = cq.variables();
      std::vector<Symbol> vars(vs.begin(), vs.end());
      std::vector<Element> assign(vars.size(), 0);
      auto idx = [&](Symbol v) { return std::lower_bound(vars.begin(), vars.end(), v) - vars.begin(); };
      std::size_t total = 1;
      for (std::size_t i = 0; i < vars.size(); ++i) total *= n_;
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (auto& a : assign) {
          a = static_cast<Element>(rest % n_);
          rest /= n_;
        }
        bool ok = true;
        for (Symbol x : cq.answer_vars()) ok = ok && assign[idx(x)] == target;
        for (const auto& u : cq.unary_atoms()) {
          if (!ok) break;
          auto it = name_index_.find(u.predicate);
          ok = it != name_index_.end() && label(it->second, assign[idx(u.var)]) == kT;
        }
        for (const auto& b : cq.binary_atoms()) {
          if (!ok) break;
          auto it = role_index_.find(b.predicate);
          ok = it != role_index_.end() && edge(it->second, assign[idx(b.from)], assign[idx(b.to)]) == kT;
        }
        if (ok) return true;
      }
    }
    return false;
  }

  void leaf() {
    Structure s(n_);
    for (std::size_t c = 0; c < names_.size(); ++c) {
      for (Element e = 0; e < n_; ++e) {
        if (label(c, e) == kT) s.add_label(names_[c], e);
      }
    }
    for (std::size_t r = 0; r < roles_.size(); ++r) {
      for (Element e = 0; e < n_; ++e) {
        for (Element f = 0; f < n_; ++f) {
          if (edge(r, e, f) == kT) s.add_edge(roles_[r], e, f);
        }
      }
    }
    for (std::size_t i = 0; i < constants_.size(); ++i) s.set_constant(constants_[i], map_[i]);
    if (!check_model(s, k_)) throw std::logic_error("oracle produced a structure that is not a model");
    ++result_.models;
    if (!visit_(s)) {
      stopped_ = true;
      return;
    }
    if (result_.models >= budget_.max_models) exhausted_ = true;
  }

  const KB& k_;
  const ModelBudget& budget_;
  const ModelVisitor& visit_;
  const ModelConstraints& cons_;

  std::vector<Symbol> names_, roles_, constants_;
  std::map<Symbol, std::size_t> name_index_, role_index_;
  std::vector<Concept> subs_;  // children before parents
  std::unordered_map<std::uint32_t, std::size_t> sub_index_;

  std::size_t n_ = 0;
  std::vector<Element> map_;
  std::vector<Tri> labels_, edges_, ext_;
  std::vector<Bit> bits_;

  EnumerationResult result_;
  bool exhausted_ = false;
  bool stopped_ = false;
};

bool maps_with(const std::vector<Symbol>& vars, const std::function<bool(const std::vector<Element>&)>& ok,
               std::size_t n) {
  std::vector<Element> assign(vars.size(), 0);
  while (true) {
    if (ok(assign)) return true;
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == n) assign[i++] = 0;
    if (i == assign.size()) return false;
  }
}

}  // namespace

EnumerationResult enumerate_models(const KB& k, const ModelBudget& budget, const ModelVisitor& visit,
                                   const ModelConstraints& constraints) {
  return Enumerator(k, budget, visit, constraints).run();
}

ModelSearch find_model(const KB& k, const ModelBudget& budget, const ModelConstraints& constraints) {
  ModelSearch out;
  EnumerationResult r = enumerate_models(
      k, budget,
      [&](const Structure& s) {
        out.model = s;
        return false;
      },
      constraints);
  out.conclusive = r.status != EnumerationStatus::kBudgetExhausted;
  return out;
}

bool naive_ucq_maps(const UCQ& q, const Structure& s, Element answer) {
  for (const CQ& cq : q.disjuncts()) {
    std::set<Symbol> vs = cq.variables();
    std::vector<Symbol> vars(vs.begin(), vs.end());
    auto idx = [&](Symbol v) { return std::lower_bound(vars.begin(), vars.end(), v) - vars.begin(); };
    bool found = maps_with(
        vars,
        [&](const std::vector<Element>& h) {
          for (Symbol x : cq.answer_vars()) {
            if (h[idx(x)] != answer) return false;
          }
          for (const auto& u : cq.unary_atoms()) {
            if (!s.has_label(u.predicate, h[idx(u.var)])) return false;
          }
          for (const auto& b : cq.binary_atoms()) {
            if (!s.has_edge(b.predicate, h[idx(b.from)], h[idx(b.to)])) return false;
          }
          return true;
        },
        s.domain_size());
    if (found) return true;
  }
  return false;
}

bool naive_hom(const Database& d, Symbol a, const Structure& s, Element to) {
  // Gaifman component of a, by repeated sweeps.
  std::set<Symbol> comp{a};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& b : d.binary_atoms()) {
      if (comp.count(b.from) != comp.count(b.to)) {
        comp.insert(b.from);
        comp.insert(b.to);
        grew = true;
      }
    }
  }
  std::vector<Symbol> cs(comp.begin(), comp.end());
  auto idx = [&](Symbol c) { return std::lower_bound(cs.begin(), cs.end(), c) - cs.begin(); };
  return maps_with(
      cs,
      [&](const std::vector<Element>& h) {
        if (h[idx(a)] != to) return false;
        for (const auto& u : d.unary_atoms()) {
          if (comp.count(u.constant) && !s.has_label(u.concept_name, h[idx(u.constant)])) return false;
        }
        for (const auto& b : d.binary_atoms()) {
          if (comp.count(b.from) && !s.has_edge(b.role, h[idx(b.from)], h[idx(b.to)])) return false;
        }
        return true;
      },
      s.domain_size());
}

bool brute_weak_separable_empty_ontology(const Database& d, const std::vector<Symbol>& positives,
                                         const std::vector<Symbol>& negatives) {
  Structure s = structure_of_database(d);
  for (Symbol b : negatives) {
    Element eb = *s.constant(b);
    for (Symbol a : positives) {
      if (naive_hom(d, a, s, eb)) return false;
    }
  }
  return true;
}

bool bisim_game(const PointedStructure& s1, const PointedStructure& s2, const Signature& sigma, std::size_t rounds) {
  const Structure& a = *s1.structure;
  const Structure& b = *s2.structure;
  std::size_t n1 = a.domain_size(), n2 = b.domain_size();
  // win[d][e]: the duplicator survives the remaining rounds from (d, e).
  std::vector<std::vector<bool>> win(n1, std::vector<bool>(n2));
  std::vector<std::vector<bool>> atoms(n1, std::vector<bool>(n2, true));
  for (std::size_t d = 0; d < n1; ++d) {
    for (std::size_t e = 0; e < n2; ++e) {
      for (Symbol c : sigma.concept_names) {
        if (a.has_label(c, d) != b.has_label(c, e)) atoms[d][e] = false;
      }
      win[d][e] = atoms[d][e];
    }
  }
  std::vector<Role> moves;
  for (Symbol r : sigma.role_names) {
    moves.push_back(Role{r, false});
    moves.push_back(Role{r, true});
  }
  for (std::size_t k = 0; k < rounds; ++k) {
    auto next = win;
    for (std::size_t d = 0; d < n1; ++d) {
      for (std::size_t e = 0; e < n2; ++e) {
        if (!atoms[d][e]) continue;
        bool ok = true;
        for (const Role& r : moves) {
          const auto& nd = a.neighbors(r, d);
          const auto& ne = b.neighbors(r, e);
          for (Element x : nd) {
            ok = ok && std::any_of(ne.begin(), ne.end(), [&](Element y) { return win[x][y]; });
          }
          for (Element y : ne) {
            ok = ok && std::any_of(nd.begin(), nd.end(), [&](Element x) { return win[x][y]; });
          }
        }
        next[d][e] = ok;
      }
    }
    win = std::move(next);
  }
  return win[s1.point.at(0)][s2.point.at(0)];
}

}  // namespace ontosep::oracle
