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

#include "ontosep/reasoner.hpp"

#include <algorithm>
#include <set>

#include "ontosep/error.hpp"

namespace ontosep {

// ---------------------------------------------------------------- closure

std::uint32_t Closure::add(Concept c) {
  if (auto it = index_.find(c); it != index_.end()) return it->second;
  Entry e{c, c.kind(), {}, {}, {}};
  switch (c.kind()) {
    case ConceptKind::kName:
      break;
    case ConceptKind::kAnd: {
      auto lit = [&](Concept sub) {
        if (sub.kind() == ConceptKind::kNot) return *find_or_add_negation(sub);
        return Literal{add(sub), true};
      };
      e.left = lit(c.left());
      e.right = lit(c.right());
      break;
    }
    case ConceptKind::kExists: {
      Concept f = c.filler();
      e.left = f.kind() == ConceptKind::kNot ? *find_or_add_negation(f) : Literal{add(f), true};
      e.role = c.role();
      if (std::find(roles_.begin(), roles_.end(), e.role.name) == roles_.end()) roles_.push_back(e.role.name);
      break;
    }
    case ConceptKind::kNot:
      throw Error("negations are not indexed");
  }
  auto id = static_cast<std::uint32_t>(entries_.size());
  entries_.push_back(e);
  index_.emplace(c, id);
  if (e.kind == ConceptKind::kExists) exists_.push_back(id);
  return id;
}

std::optional<Literal> Closure::find_or_add_negation(Concept c) {
  bool positive = true;
  while (c.kind() == ConceptKind::kNot) {
    c = c.operand();
    positive = !positive;
  }
  return Literal{add(c), positive};
}

Closure Closure::of(const Ontology& o, const Signature& sig, std::span<const Concept> extra) {
  Closure cl;
  for (const auto& ci : o.inclusions()) {
    cl.find_or_add_negation(ci.lhs);
    cl.find_or_add_negation(ci.rhs);
  }
  for (Concept c : extra) cl.find_or_add_negation(c);
  Signature all = sig;
  all.add(o.signature());
  for (Symbol a : all.concept_names) cl.add(Concept::name(a));
  for (Symbol r : all.role_names) {
    cl.add(Concept::exists(Role{r, false}, Concept::top()));
    cl.add(Concept::exists(Role{r, true}, Concept::top()));
  }
  return cl;
}

Closure Closure::of(const KB& k) { return of(k.ontology, k.signature()); }

std::optional<Literal> Closure::find(Concept c) const {
  bool positive = true;
  while (c.kind() == ConceptKind::kNot) {
    c = c.operand();
    positive = !positive;
  }
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return Literal{it->second, positive};
}

std::optional<Literal> Closure::name_literal(Symbol concept_name) const { return find(Concept::name(concept_name)); }

std::size_t KType::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
  return h;
}

bool r_coherent(const Closure& cl, const KType& t1, const Role& r, const KType& t2) {
  for (std::uint32_t i : cl.exists_indices()) {
    const auto& e = cl.entry(i);
    if (e.role == r && t2.holds(e.left) && !t1.test(i)) return false;
    if (e.role == r.inverse() && t1.holds(e.left) && !t2.test(i)) return false;
  }
  return true;
}

bool is_connected_type(const Closure& cl, const KType& t) {
  for (std::uint32_t i : cl.exists_indices()) {
    const auto& e = cl.entry(i);
    if (e.concept_.filler().is_top() && t.test(i)) return true;
  }
  return false;
}

// --------------------------------------------------------------- reasoner

namespace {

// Fixed-width bitset used for the per-role coherence masks.
struct Mask {
  std::vector<std::uint64_t> w;
  explicit Mask(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool subset_of(const Mask& o) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] & ~o.w[i]) return false;
    }
    return true;
  }
};

// Masks of one type for one role name: which forward / inverse existentials
// are in the type (e) and which of their fillers hold (f).
struct RoleMasks {
  Mask e_fwd, f_fwd, e_inv, f_inv;
};

struct RoleIndex {
  std::vector<std::uint32_t> fwd;  // exists r.D
  std::vector<std::uint32_t> inv;  // exists r^-.D
};

RoleMasks masks_of(const Closure& cl, const RoleIndex& ri, const KType& t) {
  RoleMasks m{Mask(ri.fwd.size()), Mask(ri.fwd.size()), Mask(ri.inv.size()), Mask(ri.inv.size())};
  for (std::size_t j = 0; j < ri.fwd.size(); ++j) {
    if (t.test(ri.fwd[j])) m.e_fwd.set(j);
    if (t.holds(cl.entry(ri.fwd[j]).left)) m.f_fwd.set(j);
  }
  for (std::size_t j = 0; j < ri.inv.size(); ++j) {
    if (t.test(ri.inv[j])) m.e_inv.set(j);
    if (t.holds(cl.entry(ri.inv[j]).left)) m.f_inv.set(j);
  }
  return m;
}

// t1 -r-> t2 for a forward role name r.
bool masks_coherent(const RoleMasks& m1, const RoleMasks& m2) {
  return m2.f_fwd.subset_of(m1.e_fwd) && m1.f_inv.subset_of(m2.e_inv);
}

void bump(std::uint64_t& counter, std::uint64_t limit) {
  if (++counter > limit) throw ResourceLimit("search node limit exceeded");
}

}  // namespace

struct Reasoner::Cache {
  std::mutex mu;
  std::optional<bool> satisfiable;
  std::map<Symbol, std::vector<TypeId>> types_at;
  std::map<Symbol, std::vector<TypeId>> candidates;
  // Coherence components (reachability is symmetric since every role comes
  // with its inverse) and whether each one is free of defects.
  std::vector<std::size_t> component;
  std::vector<std::optional<bool>> component_complete;
  std::vector<std::vector<std::pair<std::size_t, TypeId>>> witness_table;
};

Reasoner::Reasoner(KB kb, ReasonerLimits limits) : kb_(std::move(kb)), limits_(limits) {
  closure_ = Closure::of(kb_);
  build();
}

Reasoner::Reasoner(const Ontology& o, const Signature& sig, ReasonerLimits limits) : limits_(limits) {
  kb_.ontology = o;
  closure_ = Closure::of(o, sig);
  build();
}

void Reasoner::enumerate_hintikka(std::vector<KType>& out) const {
  const std::size_t n = closure_.size();
  // CI checks run as soon as both sides are decided.
  std::vector<std::vector<std::pair<Literal, Literal>>> checks(n);
  for (const auto& ci : kb_.ontology.inclusions()) {
    Literal l = *closure_.find(ci.lhs);
    Literal r = *closure_.find(ci.rhs);
    checks[std::max(l.index, r.index)].emplace_back(l, r);
  }
  const Symbol reserved = Concept::bottom_name();
  KType t(n);
  std::uint64_t nodes = 0;
  std::function<void(std::uint32_t)> dfs = [&](std::uint32_t i) {
    bump(nodes, limits_.max_nodes);
    if (i == n) {
      out.push_back(t);
      return;
    }
    const auto& e = closure_.entry(i);
    auto try_value = [&](bool v) {
      t.set(i, v);
      for (const auto& [l, r] : checks[i]) {
        if (t.holds(l) && !t.holds(r)) return;
      }
      dfs(i + 1);
    };
    switch (e.kind) {
      case ConceptKind::kName:
        if (e.concept_.concept_name() == reserved) {
          try_value(false);
        } else {
          try_value(false);
          try_value(true);
        }
        break;
      case ConceptKind::kAnd:
        try_value(t.holds(e.left) && t.holds(e.right));
        break;
      case ConceptKind::kExists:
        try_value(false);
        try_value(true);
        break;
      case ConceptKind::kNot:
        break;
    }
    t.set(i, false);
  };
  dfs(0);
}

void Reasoner::eliminate(std::vector<KType>& cands) const {
  const std::size_t h = cands.size();
  std::vector<RoleIndex> index(closure_.role_names().size());
  std::map<Symbol, std::size_t> slot;
  for (std::size_t k = 0; k < closure_.role_names().size(); ++k) slot[closure_.role_names()[k]] = k;
  for (std::uint32_t i : closure_.exists_indices()) {
    const auto& e = closure_.entry(i);
    auto& ri = index[slot.at(e.role.name)];
    (e.role.inverted ? ri.inv : ri.fwd).push_back(i);
  }
  std::vector<std::vector<RoleMasks>> masks(index.size());
  for (std::size_t k = 0; k < index.size(); ++k) {
    masks[k].reserve(h);
    for (const auto& t : cands) masks[k].push_back(masks_of(closure_, index[k], t));
  }
  auto coherent = [&](std::size_t a, const Role& r, std::size_t b) {
    std::size_t k = slot.at(r.name);
    return r.inverted ? masks_coherent(masks[k][b], masks[k][a]) : masks_coherent(masks[k][a], masks[k][b]);
  };
  std::vector<char> alive(h, 1);
  // Cached witness per (candidate, existential); rechecked only when it dies.
  std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> witness;
  std::uint64_t nodes = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < h; ++a) {
      if (!alive[a]) continue;
      for (std::uint32_t i : closure_.exists_indices()) {
        if (!cands[a].test(i)) continue;
        const auto& e = closure_.entry(i);
        auto key = std::make_pair(a, i);
        if (auto it = witness.find(key); it != witness.end() && alive[it->second]) continue;
        bool found = false;
        for (std::size_t b = 0; b < h && !found; ++b) {
          bump(nodes, limits_.max_nodes);
          if (alive[b] && cands[b].holds(e.left) && coherent(a, e.role, b)) {
            witness[key] = b;
            found = true;
          }
        }
        if (!found) {
          alive[a] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<KType> kept;
  for (std::size_t a = 0; a < h; ++a) {
    if (alive[a]) kept.push_back(std::move(cands[a]));
  }
  cands = std::move(kept);
}

void Reasoner::build() {
  if (closure_.size() > limits_.max_closure) {
    throw ResourceLimit("closure has " + std::to_string(closure_.size()) + " concepts, limit is " +
                        std::to_string(limits_.max_closure));
  }
  cache_ = std::make_shared<Cache>();
  std::vector<KType> cands;
  enumerate_hintikka(cands);
  eliminate(cands);
  types_ = std::move(cands);
  const std::size_t n = types_.size();
  for (TypeId t = 0; t < n; ++t) type_index_.emplace(types_[t], t);

  for (std::size_t k = 0; k < closure_.role_names().size(); ++k) {
    Symbol r = closure_.role_names()[k];
    role_slot_[r] = k;
    all_roles_.push_back(Role{r, false});
    all_roles_.push_back(Role{r, true});
  }
  std::sort(all_roles_.begin(), all_roles_.end(), [](const Role& a, const Role& b) {
    return a.name == b.name ? a.inverted < b.inverted : a.name < b.name;
  });
  coherent_.assign(closure_.role_names().size(), std::vector<bool>(n * n, false));
  for (std::size_t k = 0; k < closure_.role_names().size(); ++k) {
    Role r{closure_.role_names()[k], false};
    for (TypeId a = 0; a < n; ++a) {
      for (TypeId b = 0; b < n; ++b) coherent_[k][a * n + b] = r_coherent(closure_, types_[a], r, types_[b]);
    }
  }
  obligations_.resize(n);
  for (TypeId t = 0; t < n; ++t) {
    for (std::uint32_t i : closure_.exists_indices()) {
      if (!types_[t].test(i)) continue;
      const auto& e = closure_.entry(i);
      obligations_[t].push_back(Obligation{e.role, e.left, i, e.concept_.filler().is_top()});
    }
  }
}

std::optional<TypeId> Reasoner::find_type(const KType& t) const {
  auto it = type_index_.find(t);
  if (it == type_index_.end()) return std::nullopt;
  return it->second;
}

bool Reasoner::coherent(TypeId t1, const Role& r, TypeId t2) const {
  auto it = role_slot_.find(r.name);
  if (it == role_slot_.end()) return false;
  const std::size_t n = types_.size();
  return r.inverted ? coherent_[it->second][t2 * n + t1] : coherent_[it->second][t1 * n + t2];
}

std::vector<TypeId> Reasoner::witnesses(TypeId t, const Obligation& o) const {
  std::vector<TypeId> out;
  for (TypeId w = 0; w < types_.size(); ++w) {
    if (types_[w].holds(o.filler) && coherent(t, o.role, w)) out.push_back(w);
  }
  return out;
}

bool Reasoner::holds(TypeId t, Concept c) const {
  auto l = closure_.find(c);
  if (!l) throw Error("concept is not in the closure");
  return types_[t].holds(*l);
}

bool Reasoner::connected(TypeId t) const { return is_connected_type(closure_, types_[t]); }

Concept Reasoner::type_concept(TypeId t) const {
  std::optional<Concept> conj;
  const Symbol reserved = Concept::bottom_name();
  for (std::uint32_t i = 0; i < closure_.size(); ++i) {
    const auto& e = closure_.entry(i);
    if (e.kind == ConceptKind::kAnd) continue;
    if (e.kind == ConceptKind::kName && e.concept_.concept_name() == reserved) continue;
    Concept lit = types_[t].test(i) ? e.concept_ : Concept::negation(e.concept_);
    conj = conj ? Concept::conjunction(*conj, lit) : lit;
  }
  return conj ? *conj : Concept::top();
}

std::vector<TypeId> Reasoner::candidates(Symbol constant) const {
  {
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->candidates.find(constant); it != cache_->candidates.end()) return it->second;
  }
  std::vector<Literal> required;
  for (Symbol a : kb_.database.labels_of(constant)) required.push_back(*closure_.name_literal(a));
  std::vector<TypeId> out;
  for (TypeId t = 0; t < types_.size(); ++t) {
    if (std::all_of(required.begin(), required.end(), [&](Literal l) { return types_[t].holds(l); })) {
      out.push_back(t);
    }
  }
  std::lock_guard lock(cache_->mu);
  cache_->candidates.emplace(constant, out);
  return out;
}

// ---------------------------------------------------------- constant types

namespace {

// Assignment of realizable types to constants such that every database edge
// is coherent. Solved by backtracking with forward checking.
class TypeCsp {
 public:
  TypeCsp(const Reasoner& r, const std::vector<Symbol>& vars, const std::map<Symbol, std::vector<TypeId>>& allowed)
      : r_(r), vars_(vars) {
    std::map<Symbol, std::size_t> pos;
    for (std::size_t i = 0; i < vars_.size(); ++i) pos[vars_[i]] = i;
    arcs_.resize(vars_.size());
    domains_.resize(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      domains_[i] = r.candidates(vars_[i]);
      if (auto it = allowed.find(vars_[i]); it != allowed.end()) {
        std::vector<TypeId> keep;
        for (TypeId t : domains_[i]) {
          if (std::find(it->second.begin(), it->second.end(), t) != it->second.end()) keep.push_back(t);
        }
        domains_[i] = std::move(keep);
      }
    }
    for (const auto& a : r.kb().database.binary_atoms()) {
      auto f = pos.find(a.from);
      auto t = pos.find(a.to);
      if (f == pos.end() || t == pos.end()) continue;
      Role role{a.role, false};
      if (f->second == t->second) {
        auto& d = domains_[f->second];
        d.erase(std::remove_if(d.begin(), d.end(), [&](TypeId x) { return !r.coherent(x, role, x); }), d.end());
        continue;
      }
      arcs_[f->second].push_back({t->second, role});
      arcs_[t->second].push_back({f->second, role.inverse()});
    }
  }

  // Visits solutions until the visitor returns false. Returns false if stopped.
  bool solve(const std::function<bool(const std::vector<TypeId>&)>& visit) {
    std::vector<TypeId> value(vars_.size(), 0);
    std::vector<char> assigned(vars_.size(), 0);
    nodes_ = 0;
    return search(domains_, value, assigned, 0, visit);
  }

  // Solves each connected component on its own.
  std::optional<std::vector<TypeId>> first_by_components() {
    std::vector<int> comp(vars_.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < vars_.size(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& arc : arcs_[v]) {
          if (comp[arc.other] < 0) {
            comp[arc.other] = ncomp;
            stack.push_back(arc.other);
          }
        }
      }
      ++ncomp;
    }
    std::vector<TypeId> result(vars_.size(), 0);
    nodes_ = 0;
    for (int c = 0; c < ncomp; ++c) {
      std::vector<char> assigned(vars_.size(), 1);
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        if (comp[v] == c) assigned[v] = 0;
      }
      bool found = false;
      std::vector<TypeId> value = result;
      search(domains_, value, assigned, 0, [&](const std::vector<TypeId>& sol) {
        for (std::size_t v = 0; v < vars_.size(); ++v) {
          if (comp[v] == c) result[v] = sol[v];
        }
        found = true;
        return false;
      });
      if (!found) return std::nullopt;
    }
    return result;
  }

 private:
  struct Arc {
    std::size_t other;
    Role role;
  };

  bool search(const std::vector<std::vector<TypeId>>& domains, std::vector<TypeId>& value,
              std::vector<char>& assigned, std::size_t depth,
              const std::function<bool(const std::vector<TypeId>&)>& visit) {
    bump(nodes_, r_.limits().max_nodes);
    std::size_t best = vars_.size();
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (assigned[v]) continue;
      if (domains[v].empty()) return true;
      if (best == vars_.size() || domains[v].size() < domains[best].size()) best = v;
    }
    if (best == vars_.size()) return visit(value);
    assigned[best] = 1;
    for (TypeId t : domains[best]) {
      value[best] = t;
      std::vector<std::vector<TypeId>> next = domains;
      next[best] = {t};
      bool wiped = false;
      for (const auto& arc : arcs_[best]) {
        if (assigned[arc.other]) continue;
        auto& d = next[arc.other];
        d.erase(std::remove_if(d.begin(), d.end(), [&](TypeId x) { return !r_.coherent(t, arc.role, x); }),
                d.end());
        if (d.empty()) {
          wiped = true;
          break;
        }
      }
      if (wiped) continue;
      if (!search(next, value, assigned, depth + 1, visit)) {
        assigned[best] = 0;
        return false;
      }
    }
    assigned[best] = 0;
    return true;
  }

  const Reasoner& r_;
  std::vector<Symbol> vars_;
  std::vector<std::vector<TypeId>> domains_;
  std::vector<std::vector<Arc>> arcs_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<TypeAssignment> Reasoner::find_assignment(const TypeAssignment& fixed,
                                                        const std::map<Symbol, std::vector<TypeId>>& allowed) const {
  std::map<Symbol, std::vector<TypeId>> domains = allowed;
  for (const auto& [c, t] : fixed) {
    if (!kb_.database.has_constant(c)) throw UnknownConstant(c.str());
    auto it = domains.find(c);
    if (it != domains.end() && std::find(it->second.begin(), it->second.end(), t) == it->second.end()) {
      return std::nullopt;
    }
    domains[c] = {t};
  }
  std::vector<Symbol> vars(kb_.database.constants().begin(), kb_.database.constants().end());
  TypeCsp csp(*this, vars, domains);
  auto sol = csp.first_by_components();
  if (!sol) return std::nullopt;
  TypeAssignment out;
  for (std::size_t i = 0; i < vars.size(); ++i) out[vars[i]] = (*sol)[i];
  return out;
}

void Reasoner::enumerate_partial(const std::vector<Symbol>& subset,
                                 const std::map<Symbol, std::vector<TypeId>>& allowed,
                                 const std::function<bool(const TypeAssignment&)>& visit) const {
  TypeCsp csp(*this, subset, allowed);
  csp.solve([&](const std::vector<TypeId>& sol) {
    TypeAssignment a;
    for (std::size_t i = 0; i < subset.size(); ++i) a[subset[i]] = sol[i];
    return visit(a);
  });
}

bool Reasoner::satisfiable() const {
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->satisfiable) return *cache_->satisfiable;
  }
  bool sat = !types_.empty() && find_assignment().has_value();
  std::lock_guard lock(cache_->mu);
  cache_->satisfiable = sat;
  return sat;
}

const std::vector<TypeId>& Reasoner::types_at(Symbol b) const {
  if (!kb_.database.has_constant(b)) throw UnknownConstant(b.str());
  {
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->types_at.find(b); it != cache_->types_at.end()) return it->second;
  }
  std::vector<TypeId> out;
  if (satisfiable()) {
    for (TypeId t : candidates(b)) {
      if (find_assignment({{b, t}})) out.push_back(t);
    }
  }
  std::lock_guard lock(cache_->mu);
  return cache_->types_at.emplace(b, std::move(out)).first->second;
}

std::vector<TypeId> Reasoner::reachable(TypeId t) const {
  std::vector<char> seen(types_.size(), 0);
  std::vector<TypeId> out{t}, stack{t};
  seen[t] = 1;
  while (!stack.empty()) {
    TypeId u = stack.back();
    stack.pop_back();
    for (const Role& r : all_roles_) {
      for (TypeId v = 0; v < types_.size(); ++v) {
        if (!seen[v] && coherent(u, r, v)) {
          seen[v] = 1;
          out.push_back(v);
          stack.push_back(v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Reasoner::alci_complete(TypeId t) const {
  const std::size_t n = types_.size();
  std::lock_guard lock(cache_->mu);
  auto& comp = cache_->component;
  auto& wit = cache_->witness_table;
  if (comp.empty()) {
    comp.assign(n, n);
    std::size_t next = 0;
    for (TypeId s = 0; s < n; ++s) {
      if (comp[s] != n) continue;
      for (TypeId u : reachable(s)) comp[u] = next;
      ++next;
    }
    cache_->component_complete.assign(next, std::nullopt);
    // Witness count and first witness of every obligation of every type.
    wit.resize(n);
    for (TypeId v = 0; v < n; ++v) {
      for (const auto& o : obligations_[v]) {
        auto ws = witnesses(v, o);
        wit[v].emplace_back(ws.size(), ws.empty() ? 0 : ws.front());
      }
    }
  }
  auto& known = cache_->component_complete[comp[t]];
  if (known) return *known;
  // Can an element of type v with an R-predecessor of type u omit every
  // S-neighbour of type w?
  auto defect = [&](TypeId u, const Role& r, TypeId v, const Role& s, TypeId w) {
    const bool back = s == r.inverse();
    if (back && w == u) return false;
    const auto& obs = obligations_[v];
    for (std::size_t i = 0; i < obs.size(); ++i) {
      if (!(obs[i].role == s)) continue;
      if (back && types_[u].holds(obs[i].filler)) continue;
      auto [count, first] = wit[v][i];
      if (count >= 2 || (count == 1 && first != w)) continue;
      return false;
    }
    return true;
  };
  auto complete = [&] {
    for (TypeId u = 0; u < n; ++u) {
      if (comp[u] != comp[t]) continue;
      for (const Role& r : all_roles_) {
        for (TypeId v = 0; v < n; ++v) {
          if (!coherent(u, r, v)) continue;
          for (const Role& s : all_roles_) {
            for (TypeId w = 0; w < n; ++w) {
              if (coherent(v, s, w) && defect(u, r, v, s, w)) return false;
            }
          }
        }
      }
    }
    return true;
  };
  known = complete();
  return *known;
}

KB pin_type(const Reasoner& r, Symbol b, TypeId t) {
  Signature sig = r.kb().signature();
  Symbol x = fresh_concept_name(sig, "X");
  KB out = r.kb();
  out.ontology = out.ontology.with(ConceptInclusion{Concept::name(x), r.type_concept(t)});
  out.database = out.database.with(UnaryAtom{x, b});
  return out;
}

// ------------------------------------------------------------ free forms

Closure closure(const KB& k) { return Closure::of(k); }

std::vector<KType> realizable_types(const Ontology& o, const Signature& sig) { return Reasoner(o, sig).types(); }

bool kb_satisfiable(const KB& k) { return Reasoner(k).satisfiable(); }

bool entails_concept(const KB& k, Concept c, Symbol a) {
  if (!k.database.has_constant(a)) throw UnknownConstant(a.str());
  Signature sig = k.signature();
  std::vector<Symbol> names;
  c.collect_names(names);
  sig.concept_names.insert(names.begin(), names.end());
  Symbol x = fresh_concept_name(sig, "X");
  KB aux{k.ontology.with(ConceptInclusion{Concept::name(x), Concept::negation(c)}),
         k.database.with(UnaryAtom{x, a})};
  return !kb_satisfiable(aux);
}

std::vector<KType> realizable_types_at(const KB& k, Symbol b) {
  Reasoner r(k);
  std::vector<KType> out;
  for (TypeId t : r.types_at(b)) out.push_back(r.types()[t]);
  return out;
}

bool is_alci_complete(const KB& k, const KType& t) {
  Reasoner r(k);
  auto id = r.find_type(t);
  if (!id) throw Error("type is not realizable");
  return r.alci_complete(*id);
}

bool is_strongly_incomplete(const LabeledKB& lk) {
  Reasoner r(lk.kb());
  for (Symbol b : lk.negatives()) {
    for (TypeId t : r.types_at(b)) {
      if (r.connected(t) && r.alci_complete(t)) return false;
    }
  }
  return true;
}

}  // namespace ontosep
