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

#include "ontosep/entailment.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "ontosep/error.hpp"
#include "ontosep/graph_ops.hpp"

namespace ontosep {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Part of a query mapped into the subtree of a node: all of W, with exactly
// W0 on the node itself. Atoms leaving W start in W0.
struct Entry {
  Mask w = 0;
  Mask w0 = 0;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

// Every entry realizable in a given subtree; sorted and duplicate-free.
using Profile = std::vector<Entry>;

bool profile_has(const Profile& p, const Entry& e) { return std::binary_search(p.begin(), p.end(), e); }
bool profile_subset(const Profile& a, const Profile& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

struct QAtom {
  Symbol role;
  int from;
  int to;
};

// The disjuncts of a UCQ with globally numbered variables.
struct CompiledQuery {
  int n = 0;
  int radius = 0;
  std::vector<int> disjunct;
  std::vector<Mask> vars_of;
  std::vector<int> answer;
  std::vector<int> dist;
  std::vector<std::vector<Symbol>> labels;
  std::vector<QAtom> atoms;
  std::vector<Mask> nbr;
  std::vector<std::vector<int>> order;  // per disjunct, breadth-first from the answer
};

CompiledQuery compile(const UCQ& q) {
  if (q.answer_vars().size() != 1) throw Error("query must have exactly one answer variable");
  if (!q.rooted()) throw Error("query is not rooted");
  CompiledQuery c;
  for (std::size_t i = 0; i < q.disjuncts().size(); ++i) {
    const CQ& d = q.disjuncts()[i];
    std::map<Symbol, int> idx;
    auto var = [&](Symbol v) {
      auto [it, fresh] = idx.emplace(v, c.n);
      if (fresh) {
        if (c.n >= 64) throw ResourceLimit("query has more than 64 variables");
        ++c.n;
        c.disjunct.push_back(static_cast<int>(i));
        c.labels.emplace_back();
        c.nbr.push_back(0);
        c.dist.push_back(-1);
      }
      return it->second;
    };
    int x = var(d.answer_vars().front());
    c.answer.push_back(x);
    for (Symbol v : d.variables()) var(v);
    for (const auto& a : d.unary_atoms()) c.labels[var(a.var)].push_back(a.predicate);
    for (const auto& a : d.binary_atoms()) {
      QAtom qa{a.predicate, var(a.from), var(a.to)};
      c.atoms.push_back(qa);
      if (qa.from != qa.to) {
        c.nbr[qa.from] |= bit(qa.to);
        c.nbr[qa.to] |= bit(qa.from);
      }
    }
    Mask vars = 0;
    for (const auto& [s, v] : idx) vars |= bit(v);
    c.vars_of.push_back(vars);
    std::vector<int> order{x};
    c.dist[x] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      int v = order[k];
      for (int w = 0; w < c.n; ++w) {
        if ((c.nbr[v] & bit(w)) && c.dist[w] < 0) {
          c.dist[w] = c.dist[v] + 1;
          c.radius = std::max(c.radius, c.dist[w]);
          order.push_back(w);
        }
      }
    }
    c.order.push_back(std::move(order));
  }
  return c;
}

struct Requirement {
  std::size_t near;
  Entry entry;
  friend auto operator<=>(const Requirement&, const Requirement&) = default;
};

// A way of mapping one disjunct: the entries each near constant's root
// profile must contain.
using Placement = std::vector<Requirement>;

class CountermodelSearch {
 public:
  CountermodelSearch(const Reasoner& r, const CompiledQuery& q, Symbol b) : r_(r), q_(q), b_(b) {
    const auto& types = r_.types();
    unary_ok_.assign(types.size(), 0);
    for (TypeId t = 0; t < types.size(); ++t) {
      for (int v = 0; v < q_.n; ++v) {
        bool ok = std::all_of(q_.labels[v].begin(), q_.labels[v].end(), [&](Symbol a) {
          auto lit = r_.closure().name_literal(a);
          return lit && types[t].holds(*lit);
        });
        if (ok) unary_ok_[t] |= bit(v);
      }
    }
    const Database& d = r_.kb().database;
    std::map<Symbol, std::vector<Symbol>> adj;
    for (const auto& e : d.binary_atoms()) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
    near_dist_[b_] = 0;
    near_.push_back(b_);
    for (std::size_t k = 0; k < near_.size(); ++k) {
      Symbol c = near_[k];
      int dc = near_dist_[c];
      if (dc >= q_.radius) continue;
      for (Symbol n : adj[c]) {
        if (near_dist_.emplace(n, dc + 1).second) near_.push_back(n);
      }
    }
    for (std::size_t k = 0; k < near_.size(); ++k) near_index_[near_[k]] = k;
  }

  EntailmentResult run(const std::vector<TypeId>* b_types) {
    EntailmentResult res;
    res.radius = q_.radius;
    for (std::size_t i = 0; i < q_.vars_of.size(); ++i) enumerate_placements(static_cast<int>(i));
    std::sort(placements_.begin(), placements_.end());
    placements_.erase(std::unique(placements_.begin(), placements_.end()), placements_.end());
    std::map<Symbol, std::vector<TypeId>> allowed;
    if (b_types) allowed[b_] = *b_types;
    r_.enumerate_partial(near_, representatives(allowed), [&](const TypeAssignment& partial) {
      // Root options only look at near constants, so the cheap profile test
      // runs before the extension to the whole database.
      std::vector<const std::vector<Option>*> roots;
      std::vector<Mask> skips;
      for (Symbol c : near_) {
        Mask skip = 0;
        roots.push_back(&root_options(c, partial, skip));
        skips.push_back(skip);
      }
      std::vector<std::size_t> choice;
      if (!choose(roots, choice)) return true;
      auto full = r_.find_assignment(partial, allowed);
      if (!full) return true;
      res.entailed = false;
      res.skeleton = *full;
      res.countermodel = build(*full, roots, choice, skips);
      return false;
    });
    if (!res.entailed) verify(res);
    return res;
  }

 private:
  struct ChildPick {
    Role role;
    TypeId type;
    Mask skip;
    int beta;
    std::size_t option;
  };

  struct Option {
    Profile profile;
    std::vector<ChildPick> picks;
  };

  struct Root {
    Symbol constant;
    bool is_b;
  };

  // Two types with the same query labels, obligations, filler literals and
  // coherence rows can replace each other at a near constant without
  // changing root options or extendability, so one per class is enough.
  std::map<Symbol, std::vector<TypeId>> representatives(const std::map<Symbol, std::vector<TypeId>>& allowed) const {
    const std::size_t n = r_.type_count();
    std::vector<Literal> fillers;
    for (TypeId t = 0; t < n; ++t) {
      for (const auto& ob : r_.obligations(t)) {
        if (std::find(fillers.begin(), fillers.end(), ob.filler) == fillers.end()) fillers.push_back(ob.filler);
      }
    }
    std::map<std::vector<std::uint64_t>, TypeId> classes;
    std::vector<TypeId> cls(n);
    for (TypeId t = 0; t < n; ++t) {
      std::vector<std::uint64_t> key{unary_ok_[t]};
      for (const auto& ob : r_.obligations(t)) key.push_back(ob.exists_index);
      key.push_back(~std::uint64_t{0});
      std::vector<bool> bits;
      for (Literal l : fillers) bits.push_back(r_.holds(t, l));
      for (const Role& role : r_.roles()) {
        for (TypeId x = 0; x < n; ++x) bits.push_back(r_.coherent(t, role, x));
      }
      for (std::size_t i = 0; i < bits.size(); i += 64) {
        std::uint64_t word = 0;
        for (std::size_t j = i; j < std::min(bits.size(), i + 64); ++j) word |= std::uint64_t{bits[j]} << (j - i);
        key.push_back(word);
      }
      cls[t] = classes.emplace(std::move(key), t).first->second;
    }
    std::map<Symbol, std::vector<TypeId>> out;
    for (Symbol c : near_) {
      auto it = allowed.find(c);
      std::vector<TypeId> domain = it != allowed.end() ? it->second : r_.candidates(c);
      std::set<TypeId> seen;
      auto& reps = out[c];
      for (TypeId t : domain) {
        if (seen.insert(cls[t]).second) reps.push_back(t);
      }
    }
    return out;
  }

  void tick() {
    if (++nodes_ > r_.limits().max_nodes) throw ResourceLimit("entailment search node limit exceeded");
  }

  Mask outside(Mask w) const {
    Mask out = 0;
    for (Mask rest = w; rest; rest &= rest - 1) out |= q_.nbr[std::countr_zero(rest)];
    return out & ~w;
  }

  // Obligations of t (as a bitmask over r_.obligations(t)) already met by a
  // neighbour of type other reached via `edge`.
  Mask witnessed_by(TypeId t, const Role& edge, TypeId other) const {
    Mask m = 0;
    const auto& obs = r_.obligations(t);
    if (obs.size() > 64) throw ResourceLimit("type has more than 64 existential restrictions");
    for (std::size_t j = 0; j < obs.size(); ++j) {
      if (obs[j].role == edge && r_.holds(other, obs[j].filler)) m |= bit(static_cast<int>(j));
    }
    return m;
  }

  std::vector<std::size_t> active_obligations(TypeId t, Mask skip) const {
    const auto& obs = r_.obligations(t);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < obs.size(); ++j) {
      if (skip & bit(static_cast<int>(j))) continue;
      if (obs[j].trivial_filler) {
        bool covered = false;
        for (std::size_t k = 0; k < obs.size(); ++k) {
          if (k != j && !(skip & bit(static_cast<int>(k))) && !obs[k].trivial_filler && obs[k].role == obs[j].role) {
            covered = true;
          }
        }
        if (covered) continue;
      }
      out.push_back(j);
    }
    return out;
  }

  Profile compose(TypeId t, int d, const std::vector<std::pair<Role, const Profile*>>& kids, const Root* root) {
    Profile out;
    const Database& db = r_.kb().database;
    for (std::size_t i = 0; i < q_.vars_of.size(); ++i) {
      const int x = q_.answer[i];
      Mask cand = 0;
      for (Mask rest = q_.vars_of[i]; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (v == x ? !(root && root->is_b) : q_.dist[v] < d) continue;
        if (unary_ok_[t] & bit(v)) cand |= bit(v);
      }
      const Mask required = root && root->is_b ? bit(x) : 0;
      if ((cand & required) != required) continue;
      for (Mask s = cand; s; s = (s - 1) & cand) {
        tick();
        if ((s & required) != required) continue;
        bool ok = true;
        for (const auto& a : q_.atoms) {
          if ((s & bit(a.from)) && (s & bit(a.to))) {
            if (!root || !db.contains(BinaryAtom{a.role, root->constant, root->constant})) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        std::vector<std::vector<Mask>> compat(kids.size());
        for (std::size_t j = 0; j < kids.size(); ++j) {
          const Role& role = kids[j].first;
          for (const Entry& e : *kids[j].second) {
            if ((e.w & ~q_.vars_of[i]) || (e.w & s) || (outside(e.w) & ~s)) continue;
            bool fits = true;
            for (const auto& a : q_.atoms) {
              if ((s & bit(a.from)) && (e.w0 & bit(a.to)) && !(role == Role{a.role, false})) fits = false;
              if ((s & bit(a.to)) && (e.w0 & bit(a.from)) && !(role == Role{a.role, true})) fits = false;
            }
            if (fits) compat[j].push_back(e.w);
          }
        }
        std::function<void(std::size_t, Mask)> pick = [&](std::size_t j, Mask w) {
          if (j == kids.size()) {
            out.push_back(Entry{w, s});
            return;
          }
          pick(j + 1, w);
          for (Mask cw : compat[j]) {
            tick();
            if (!(cw & w)) pick(j + 1, w | cw);
          }
        };
        pick(0, s);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  static void insert_minimal(std::vector<Option>& set, Option o) {
    for (const auto& e : set) {
      if (profile_subset(e.profile, o.profile)) return;
    }
    set.erase(std::remove_if(set.begin(), set.end(),
                             [&](const Option& e) { return profile_subset(o.profile, e.profile); }),
              set.end());
    set.push_back(std::move(o));
  }

  // Minimal profiles achievable by a node of type t at distance radius-beta
  // whose obligations in `skip` are met by its parent (or database
  // neighbours for a root).
  std::vector<Option> options(TypeId t, Mask skip, int beta, const Root* root) {
    const int d = q_.radius - beta;
    std::vector<std::size_t> active = active_obligations(t, skip);
    std::vector<Option> result;
    if (beta == 0 || active.empty()) {
      result.push_back(Option{compose(t, d, {}, root), {}});
      return result;
    }
    struct Cand {
      ChildPick pick;
      const Profile* profile;
    };
    const auto& obs = r_.obligations(t);
    std::vector<std::vector<Cand>> cands(active.size());
    for (std::size_t j = 0; j < active.size(); ++j) {
      const Obligation& ob = obs[active[j]];
      for (TypeId w : r_.witnesses(t, ob)) {
        Mask wskip = witnessed_by(w, ob.role.inverse(), t);
        const auto& opts = achievable(w, wskip, beta - 1);
        for (std::size_t k = 0; k < opts.size(); ++k) {
          Cand c{ChildPick{ob.role, w, wskip, beta - 1, k}, &opts[k].profile};
          bool dominated = std::any_of(cands[j].begin(), cands[j].end(),
                                       [&](const Cand& o) { return profile_subset(*o.profile, *c.profile); });
          if (dominated) continue;
          cands[j].erase(std::remove_if(cands[j].begin(), cands[j].end(),
                                        [&](const Cand& o) { return profile_subset(*c.profile, *o.profile); }),
                         cands[j].end());
          cands[j].push_back(c);
        }
      }
    }
    std::vector<std::pair<Role, const Profile*>> kids(active.size());
    std::vector<ChildPick> picks(active.size());
    std::function<void(std::size_t)> combine = [&](std::size_t j) {
      if (j == active.size()) {
        insert_minimal(result, Option{compose(t, d, kids, root), picks});
        return;
      }
      for (const Cand& c : cands[j]) {
        tick();
        kids[j] = {c.pick.role, c.profile};
        picks[j] = c.pick;
        combine(j + 1);
      }
    };
    combine(0);
    return result;
  }

  const std::vector<Option>& achievable(TypeId t, Mask skip, int beta) {
    auto key = std::make_tuple(t, skip, beta);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto opts = options(t, skip, beta, nullptr);
    return memo_.emplace(key, std::move(opts)).first->second;
  }

  const std::vector<Option>& root_options(Symbol c, const TypeAssignment& types, Mask& skip) {
    TypeId t = types.at(c);
    skip = 0;
    for (const auto& e : r_.kb().database.binary_atoms()) {
      if (e.from == c && near_index_.count(e.to)) skip |= witnessed_by(t, Role{e.role, false}, types.at(e.to));
      if (e.to == c && near_index_.count(e.from)) skip |= witnessed_by(t, Role{e.role, true}, types.at(e.from));
    }
    auto key = std::make_tuple(near_index_.at(c), t, skip);
    if (auto it = root_memo_.find(key); it != root_memo_.end()) return it->second;
    Root root{c, c == b_};
    auto opts = options(t, skip, q_.radius - near_dist_.at(c), &root);
    return root_memo_.emplace(key, std::move(opts)).first->second;
  }

  void enumerate_placements(int i) {
    const auto& order = q_.order[i];
    const Database& db = r_.kb().database;
    std::vector<long> at(q_.n, -2);  // -2 unplaced, -1 tree, else near index
    std::function<void(std::size_t)> place = [&](std::size_t k) {
      tick();
      if (k == order.size()) {
        finish_placement(i, at);
        return;
      }
      int v = order[k];
      std::vector<long> opts;
      if (v == q_.answer[i]) {
        opts.push_back(0);
      } else {
        opts.push_back(-1);
        for (std::size_t c = 0; c < near_.size(); ++c) {
          if (near_dist_.at(near_[c]) <= q_.dist[v]) opts.push_back(static_cast<long>(c));
        }
      }
      for (long o : opts) {
        at[v] = o;
        bool ok = true;
        if (o >= 0) {
          for (const auto& a : q_.atoms) {
            int other = a.from == v ? a.to : a.to == v ? a.from : -1;
            if (other < 0 || other == v || at[other] < 0 || at[other] == o) continue;
            Symbol cf = near_[at[a.from]], ct = near_[at[a.to]];
            if (!db.contains(BinaryAtom{a.role, cf, ct})) {
              ok = false;
              break;
            }
          }
        }
        if (ok) place(k + 1);
      }
      at[v] = -2;
    };
    place(0);
  }

  void finish_placement(int i, const std::vector<long>& at) {
    std::map<std::size_t, Entry> req;
    Mask tree = 0;
    for (Mask rest = q_.vars_of[i]; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (at[v] == -1) {
        tree |= bit(v);
      } else {
        auto& e = req[static_cast<std::size_t>(at[v])];
        e.w |= bit(v);
        e.w0 |= bit(v);
      }
    }
    while (tree) {
      Mask comp = tree & -tree;
      while (true) {
        Mask grown = comp | ((outside(comp)) & tree);
        if (grown == comp) break;
        comp = grown;
      }
      tree &= ~comp;
      std::set<long> anchors;
      for (Mask rest = outside(comp); rest; rest &= rest - 1) anchors.insert(at[std::countr_zero(rest)]);
      if (anchors.size() != 1) return;
      req[static_cast<std::size_t>(*anchors.begin())].w |= comp;
    }
    Placement p;
    for (const auto& [c, e] : req) p.push_back(Requirement{c, e});
    placements_.push_back(std::move(p));
  }

  // Picks one root option per near constant so that every placement of
  // every disjunct fails somewhere.
  bool choose(const std::vector<const std::vector<Option>*>& roots, std::vector<std::size_t>& choice) {
    const std::size_t m = near_.size();
    std::vector<std::vector<const Placement*>> closing(m);
    std::vector<char> mentioned(m, 0);
    for (const auto& p : placements_) {
      std::size_t last = 0;
      for (const auto& rq : p) {
        last = std::max(last, rq.near);
        mentioned[rq.near] = 1;
      }
      closing[last].push_back(&p);
    }
    choice.assign(m, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
      if (i == m) return true;
      std::size_t limit = mentioned[i] ? roots[i]->size() : 1;
      for (std::size_t k = 0; k < limit; ++k) {
        tick();
        choice[i] = k;
        bool ok = true;
        for (const Placement* p : closing[i]) {
          bool killed = std::any_of(p->begin(), p->end(), [&](const Requirement& rq) {
            return !profile_has((*roots[rq.near])[choice[rq.near]].profile, rq.entry);
          });
          if (!killed) {
            ok = false;
            break;
          }
        }
        if (ok && go(i + 1)) return true;
      }
      return false;
    };
    return go(0);
  }

  Structure build(const TypeAssignment& types, const std::vector<const std::vector<Option>*>& roots,
                  const std::vector<std::size_t>& choice, const std::vector<Mask>& skips) {
    Structure s;
    const Symbol reserved = Concept::bottom_name();
    auto label = [&](Element e, TypeId t) {
      const auto& cl = r_.closure();
      for (std::uint32_t i = 0; i < cl.size(); ++i) {
        const auto& en = cl.entry(i);
        if (en.kind == ConceptKind::kName && en.concept_.concept_name() != reserved && r_.types()[t].test(i)) {
          s.add_label(en.concept_.concept_name(), e);
        }
      }
    };
    std::map<TypeId, Element> type_elem;
    std::function<Element(TypeId)> type_element = [&](TypeId t) -> Element {
      if (auto it = type_elem.find(t); it != type_elem.end()) return it->second;
      Element e = s.add_element();
      label(e, t);
      type_elem[t] = e;
      for (const auto& ob : r_.obligations(t)) s.add_edge(ob.role, e, type_element(r_.witnesses(t, ob).front()));
      return e;
    };
    auto link = [&](Element e, TypeId t, Mask skip) {
      const auto& obs = r_.obligations(t);
      for (std::size_t j = 0; j < obs.size(); ++j) {
        if (skip & bit(static_cast<int>(j))) continue;
        s.add_edge(obs[j].role, e, type_element(r_.witnesses(t, obs[j]).front()));
      }
    };
    std::function<void(Element, TypeId, Mask, int, const Option&)> attach = [&](Element e, TypeId t, Mask skip,
                                                                                 int beta, const Option& o) {
      if (beta == 0) {
        link(e, t, skip);
        return;
      }
      for (const auto& pk : o.picks) {
        Element child = s.add_element();
        label(child, pk.type);
        s.add_edge(pk.role, e, child);
        attach(child, pk.type, pk.skip, pk.beta, memo_.at(std::make_tuple(pk.type, pk.skip, pk.beta))[pk.option]);
      }
    };
    std::map<Symbol, Element> celem;
    for (const auto& [c, t] : types) {
      Element e = s.add_element();
      s.set_constant(c, e);
      label(e, t);
      celem[c] = e;
    }
    for (const auto& a : r_.kb().database.binary_atoms()) s.add_edge(a.role, celem.at(a.from), celem.at(a.to));
    for (const auto& [c, t] : types) {
      auto it = near_index_.find(c);
      if (it == near_index_.end()) {
        link(celem.at(c), t, 0);
        continue;
      }
      std::size_t k = it->second;
      attach(celem.at(c), t, skips[k], q_.radius - near_dist_.at(c), (*roots[k])[choice[k]]);
    }
    return s;
  }

  void verify(const EntailmentResult& res) const {
    if (!check_model(*res.countermodel, r_.kb())) {
      throw std::logic_error("internal error: countermodel is not a model of the KB");
    }
  }

  const Reasoner& r_;
  const CompiledQuery& q_;
  Symbol b_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> unary_ok_;
  std::vector<Symbol> near_;
  std::map<Symbol, int> near_dist_;
  std::map<Symbol, std::size_t> near_index_;
  std::vector<Placement> placements_;
  std::map<std::tuple<TypeId, Mask, int>, std::vector<Option>> memo_;
  std::map<std::tuple<std::size_t, TypeId, Mask>, std::vector<Option>> root_memo_;
};

}  // namespace

EntailmentResult check_ucq(const Reasoner& r, const UCQ& q, Symbol b, const std::vector<TypeId>* b_types) {
  if (!r.kb().database.has_constant(b)) throw UnknownConstant(b.str());
  CompiledQuery cq = compile(q);
  EntailmentResult res;
  res.radius = cq.radius;
  if (!r.satisfiable()) return res;
  // Every model contains a homomorphic image of the database.
  Structure sd = structure_of_database(r.kb().database);
  if (ucq_maps(q, sd, *sd.constant(b))) return res;
  CountermodelSearch search(r, cq, b);
  res = search.run(b_types);
  if (!res.entailed && ucq_maps(q, *res.countermodel, *res.countermodel->constant(b))) {
    throw std::logic_error("internal error: countermodel admits the query");
  }
  return res;
}

bool ucq_entailed(const KB& k, const UCQ& q, Symbol b) { return check_ucq(Reasoner(k), q, b).entailed; }

bool verify_weak_separator(const KB& k, const UCQ& q, const std::vector<Symbol>& positives,
                           const std::vector<Symbol>& negatives) {
  Reasoner r(k);
  for (Symbol a : positives) {
    if (!check_ucq(r, q, a).entailed) return false;
  }
  for (Symbol b : negatives) {
    if (check_ucq(r, q, b).entailed) return false;
  }
  return true;
}

namespace {

// One reasoner whose closure contains c; the tautology C <= C keeps the models.
Reasoner concept_reasoner(const KB& k, Concept c) { return Reasoner(KB{k.ontology.with(ConceptInclusion{c, c}), k.database}); }

// K |= c(a): every type realizable at a contains c (vacuous if K has no model).
bool entailed_at(const Reasoner& r, Concept c, Symbol a) {
  const auto& ts = r.types_at(a);
  return std::all_of(ts.begin(), ts.end(), [&](TypeId t) { return r.holds(t, c); });
}

}  // namespace

bool verify_weak_concept(const KB& k, Concept c, const std::vector<Symbol>& positives,
                         const std::vector<Symbol>& negatives) {
  Reasoner r = concept_reasoner(k, c);
  for (Symbol a : positives) {
    if (!entailed_at(r, c, a)) return false;
  }
  for (Symbol b : negatives) {
    if (entailed_at(r, c, b)) return false;
  }
  return true;
}

bool verify_strong_concept(const KB& k, Concept c, const std::vector<Symbol>& positives,
                           const std::vector<Symbol>& negatives) {
  Reasoner r = concept_reasoner(k, c);
  for (Symbol a : positives) {
    if (!entailed_at(r, c, a)) return false;
  }
  for (Symbol b : negatives) {
    if (!entailed_at(r, Concept::negation(c), b)) return false;
  }
  return true;
}

}  // namespace ontosep
