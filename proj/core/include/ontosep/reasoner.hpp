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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ontosep/concept.hpp"
#include "ontosep/kb.hpp"

namespace ontosep {

/// A closure concept or its complement: `index` names a non-negated closure
/// concept, `positive` selects the concept (true) or its negation (false).
struct Literal {
  std::uint32_t index = 0;
  bool positive = true;

  Literal negated() const { return Literal{index, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// cl(K): every concept of the ontology, every concept name of the database,
/// and exists R.top / exists R^-.top for every role name, closed under
/// subconcepts and single negation. Only non-negated concepts get an index;
/// negations are literals with positive == false.
class Closure {
 public:
  struct Entry {
    Concept concept_;
    ConceptKind kind;
    Literal left;    // kAnd; filler for kExists
    Literal right;   // kAnd
    Role role;       // kExists
  };

  Closure() = default;
  static Closure of(const Ontology& o, const Signature& sig, std::span<const Concept> extra = {});
  static Closure of(const KB& k);

  /// Number of indexed (non-negated) concepts.
  std::size_t size() const { return entries_.size(); }
  /// |cl(K)| counting each concept and its complement.
  std::size_t full_size() const { return 2 * entries_.size(); }

  const Entry& entry(std::uint32_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::optional<Literal> find(Concept c) const;
  bool contains(Concept c) const { return find(c).has_value(); }
  /// Literal for a concept name; nullopt when the name is not in the closure.
  std::optional<Literal> name_literal(Symbol concept_name) const;

  const std::vector<Symbol>& role_names() const { return roles_; }
  /// Indices of exists-restrictions, in closure order.
  const std::vector<std::uint32_t>& exists_indices() const { return exists_; }

 private:
  std::uint32_t add(Concept c);
  std::optional<Literal> find_or_add_negation(Concept c);

  std::vector<Entry> entries_;  // children precede parents
  std::unordered_map<Concept, std::uint32_t> index_;
  std::vector<Symbol> roles_;
  std::vector<std::uint32_t> exists_;
};

/// A set of closure concepts, stored as one bit per indexed closure concept.
class KType {
 public:
  KType() = default;
  explicit KType(std::size_t closure_size) : words_((closure_size + 63) / 64, 0) {}

  bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint32_t i, bool value) {
    if (value) {
      words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    } else {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }
  bool holds(Literal l) const { return test(l.index) == l.positive; }

  std::size_t hash() const;
  friend bool operator==(const KType&, const KType&) = default;
  friend bool operator<(const KType& a, const KType& b) { return a.words_ < b.words_; }

 private:
  std::vector<std::uint64_t> words_;
};

struct KTypeHash {
  std::size_t operator()(const KType& t) const noexcept { return t.hash(); }
};

/// Syntactic R-coherence of two types over a closure.
bool r_coherent(const Closure& cl, const KType& t1, const Role& r, const KType& t2);

/// True iff t contains exists R.top or exists R^-.top for some role name.
bool is_connected_type(const Closure& cl, const KType& t);

using TypeId = std::uint32_t;
using TypeAssignment = std::map<Symbol, TypeId>;

struct ReasonerLimits {
  std::size_t max_closure = 512;              // indexed closure concepts
  std::uint64_t max_nodes = 200'000'000;      // search nodes per operation
};

/// An existential restriction exists S.C contained in a type.
struct Obligation {
  Role role;
  Literal filler;
  std::uint32_t exists_index = 0;
  bool trivial_filler = false;  // C is top
};

/// Type-level reasoning for one KB. The closure, the realizable types and the
/// coherence relation are computed on construction and read-only afterwards.
class Reasoner {
 public:
  explicit Reasoner(KB kb, ReasonerLimits limits = {});
  /// Reasoner for (O, {}) over the closure of O and the given signature.
  Reasoner(const Ontology& o, const Signature& sig, ReasonerLimits limits = {});

  const KB& kb() const { return kb_; }
  const Closure& closure() const { return closure_; }
  const ReasonerLimits& limits() const { return limits_; }

  /// Realizable types: the Hintikka sets that survive type elimination.
  const std::vector<KType>& types() const { return types_; }
  std::size_t type_count() const { return types_.size(); }
  std::optional<TypeId> find_type(const KType& t) const;

  bool coherent(TypeId t1, const Role& r, TypeId t2) const;
  /// Every role name of the closure in both directions.
  const std::vector<Role>& roles() const { return all_roles_; }
  const std::vector<Obligation>& obligations(TypeId t) const { return obligations_[t]; }
  /// Realizable types w with filler in w and t ~>_S w.
  std::vector<TypeId> witnesses(TypeId t, const Obligation& o) const;

  bool holds(TypeId t, Literal l) const { return types_[t].holds(l); }
  /// Truth of a closure concept in a type; throws if c is not in the closure.
  bool holds(TypeId t, Concept c) const;
  bool connected(TypeId t) const;
  /// Conjunction of the literals over concept names and existential
  /// restrictions of t; equivalent to the conjunction of all of t.
  Concept type_concept(TypeId t) const;

  /// Types a constant may take given its database labels.
  std::vector<TypeId> candidates(Symbol constant) const;

  /// Some assignment of realizable types to all constants respects D.
  bool satisfiable() const;
  /// Realizable types t such that some model of K gives b type t.
  const std::vector<TypeId>& types_at(Symbol b) const;
  /// Finds a full assignment extending `fixed`; constants in `allowed`
  /// are restricted to the listed types.
  std::optional<TypeAssignment> find_assignment(const TypeAssignment& fixed = {},
                                                const std::map<Symbol, std::vector<TypeId>>& allowed = {}) const;
  /// Enumerates assignments of `subset` consistent with the database edges
  /// among them; callback returns false to stop. Does not check
  /// extendability to the remaining constants.
  void enumerate_partial(const std::vector<Symbol>& subset, const std::map<Symbol, std::vector<TypeId>>& allowed,
                         const std::function<bool(const TypeAssignment&)>& visit) const;

  /// Types reachable from t along coherence edges (t included).
  std::vector<TypeId> reachable(TypeId t) const;
  bool alci_complete(TypeId t) const;

 private:
  void build();
  void enumerate_hintikka(std::vector<KType>& out) const;
  void eliminate(std::vector<KType>& candidates) const;

  KB kb_;
  Signature extra_sig_;
  ReasonerLimits limits_;
  Closure closure_;
  std::vector<KType> types_;
  std::unordered_map<KType, TypeId, KTypeHash> type_index_;
  std::vector<Role> all_roles_;
  std::unordered_map<Symbol, std::size_t> role_slot_;
  std::vector<std::vector<bool>> coherent_;  // per role name, T*T row-major forward
  std::vector<std::vector<Obligation>> obligations_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// cl(K).
Closure closure(const KB& k);
/// Realizable types of O over the closure of O and sig.
std::vector<KType> realizable_types(const Ontology& o, const Signature& sig);
bool kb_satisfiable(const KB& k);
/// K |= C(a), decided as unsatisfiability of (O + {X <= not C}, D + {X(a)}).
bool entails_concept(const KB& k, Concept c, Symbol a);
std::vector<KType> realizable_types_at(const KB& k, Symbol b);
bool is_alci_complete(const KB& k, const KType& t);
bool is_strongly_incomplete(const LabeledKB& lk);

/// K_t = (O + {X <= conj(t)}, D + {X(b)}) for a fresh concept name X.
KB pin_type(const Reasoner& r, Symbol b, TypeId t);

}  // namespace ontosep
