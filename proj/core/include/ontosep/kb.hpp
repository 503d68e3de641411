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

#include <set>
#include <string>
#include <vector>

#include "ontosep/concept.hpp"
#include "ontosep/symbol.hpp"

namespace ontosep {

struct Signature {
  std::set<Symbol> concept_names;
  std::set<Symbol> role_names;

  void add(const Signature& other);
  bool contains_concept(Symbol s) const { return concept_names.count(s) != 0; }
  bool contains_role(Symbol s) const { return role_names.count(s) != 0; }
};

struct ConceptInclusion {
  Concept lhs;
  Concept rhs;

  friend bool operator==(const ConceptInclusion&, const ConceptInclusion&) = default;
  friend bool operator<(const ConceptInclusion& a, const ConceptInclusion& b) {
    return a.lhs == b.lhs ? a.rhs < b.rhs : a.lhs < b.lhs;
  }
};

class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::vector<ConceptInclusion> inclusions);

  const std::vector<ConceptInclusion>& inclusions() const { return inclusions_; }
  bool empty() const { return inclusions_.empty(); }

  /// Returns a copy with one more inclusion (no-op if already present).
  Ontology with(ConceptInclusion ci) const;

  Signature signature() const;
  /// ||O||: every name counts as a single symbol.
  std::size_t size() const;

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  std::vector<ConceptInclusion> inclusions_;  // insertion order, duplicate-free
};

struct UnaryAtom {
  Symbol concept_name;
  Symbol constant;
  friend auto operator<=>(const UnaryAtom&, const UnaryAtom&) = default;
  friend bool operator==(const UnaryAtom&, const UnaryAtom&) = default;
};

struct BinaryAtom {
  Symbol role;
  Symbol from;
  Symbol to;
  friend auto operator<=>(const BinaryAtom&, const BinaryAtom&) = default;
  friend bool operator==(const BinaryAtom&, const BinaryAtom&) = default;
};

/// A finite set of ground atoms over unary and binary symbols. The constant
/// set is exactly the set of constants mentioned by some atom.
class Database {
 public:
  Database() = default;
  Database(std::vector<UnaryAtom> unary, std::vector<BinaryAtom> binary);

  const std::set<UnaryAtom>& unary_atoms() const { return unary_; }
  const std::set<BinaryAtom>& binary_atoms() const { return binary_; }
  const std::set<Symbol>& constants() const { return constants_; }

  bool has_constant(Symbol c) const { return constants_.count(c) != 0; }
  bool contains(const UnaryAtom& a) const { return unary_.count(a) != 0; }
  bool contains(const BinaryAtom& a) const { return binary_.count(a) != 0; }
  std::size_t size() const { return unary_.size() + binary_.size(); }
  bool empty() const { return size() == 0; }

  Database with(const UnaryAtom& a) const;
  Database with(const BinaryAtom& a) const;
  Database united(const Database& other) const;

  /// Concept names asserted for c.
  std::vector<Symbol> labels_of(Symbol c) const;

  Signature signature() const;

  friend bool operator==(const Database& a, const Database& b) {
    return a.unary_ == b.unary_ && a.binary_ == b.binary_;
  }

 private:
  std::set<UnaryAtom> unary_;
  std::set<BinaryAtom> binary_;
  std::set<Symbol> constants_;
};

struct KB {
  Ontology ontology;
  Database database;

  Signature signature() const;
};

/// A KB together with non-empty sets of positive and negative example
/// constants, all taken from cons(D).
class LabeledKB {
 public:
  /// Throws Error if an example set is empty, UnknownConstant if an example
  /// is not a constant of the database.
  LabeledKB(KB kb, std::vector<Symbol> positives, std::vector<Symbol> negatives);

  const KB& kb() const { return kb_; }
  const std::vector<Symbol>& positives() const { return positives_; }
  const std::vector<Symbol>& negatives() const { return negatives_; }

  LabeledKB with_ontology(Ontology o) const;

 private:
  KB kb_;
  std::vector<Symbol> positives_;  // sorted, duplicate-free
  std::vector<Symbol> negatives_;
};

/// A concept name not occurring in sig.
Symbol fresh_concept_name(const Signature& sig, std::string_view prefix = "Fresh");

}  // namespace ontosep
