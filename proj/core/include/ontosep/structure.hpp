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
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ontosep/concept.hpp"
#include "ontosep/kb.hpp"

namespace ontosep {

using Element = std::uint32_t;
using ElementSet = std::vector<bool>;

/// Finite relational structure over unary and binary symbols. Constants are
/// interpreted by a total map over the declared constants; the map need not
/// be injective.
class Structure {
 public:
  Structure() = default;
  explicit Structure(std::size_t domain_size) : size_(domain_size) {}

  std::size_t domain_size() const { return size_; }
  Element add_element() { return static_cast<Element>(size_++); }

  void add_label(Symbol concept_name, Element e);
  void add_edge(Symbol role, Element from, Element to);
  /// Adds the edge of `role`, reversing it when the role is inverted.
  void add_edge(const Role& role, Element from, Element to);
  void set_constant(Symbol constant, Element e) { constants_[constant] = e; }

  bool has_label(Symbol concept_name, Element e) const;
  bool has_edge(Symbol role, Element from, Element to) const;
  bool has_edge(const Role& role, Element from, Element to) const;

  /// Elements reachable in one step along the role (inverse roles follow
  /// edges backwards).
  const std::vector<Element>& neighbors(const Role& role, Element e) const;

  std::optional<Element> constant(Symbol c) const;
  const std::map<Symbol, Element>& constant_map() const { return constants_; }

  /// Concept and role names with a non-empty extension, plus declared ones.
  Signature signature() const;
  std::vector<Element> label_extension(Symbol concept_name) const;
  const std::vector<std::pair<Element, Element>>& edges(Symbol role) const;

 private:
  struct RoleAdjacency {
    std::vector<std::pair<Element, Element>> edges;
    std::vector<std::vector<Element>> out;
    std::vector<std::vector<Element>> in;
  };

  std::size_t size_ = 0;
  std::map<Symbol, std::vector<bool>> labels_;
  std::map<Symbol, RoleAdjacency> roles_;
  std::map<Symbol, Element> constants_;
};

/// Extension of a concept in a structure; memoises subconcepts.
class ConceptEvaluator {
 public:
  explicit ConceptEvaluator(const Structure& s) : s_(s) {}
  const ElementSet& extension(Concept c);
  bool holds(Concept c, Element e) { return extension(c)[e]; }

 private:
  const Structure& s_;
  std::unordered_map<Concept, ElementSet> memo_;
};

/// The structure A_D: domain cons(D), identity constant map. Constants in
/// `declared` that occur in no atom become isolated elements.
Structure structure_of_database(const Database& d, const std::set<Symbol>& declared = {});

/// Element order of structure_of_database (sorted constant names).
std::vector<Symbol> database_elements(const Database& d);

/// True iff every inclusion holds at every element and every atom of D holds
/// under the constant map.
bool check_model(const Structure& s, const KB& k);

}  // namespace ontosep
