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

#include "ontosep/kb.hpp"

#include <algorithm>

#include "ontosep/error.hpp"

namespace ontosep {

void Signature::add(const Signature& other) {
  concept_names.insert(other.concept_names.begin(), other.concept_names.end());
  role_names.insert(other.role_names.begin(), other.role_names.end());
}

Ontology::Ontology(std::vector<ConceptInclusion> inclusions) {
  for (const auto& ci : inclusions) {
    if (std::find(inclusions_.begin(), inclusions_.end(), ci) == inclusions_.end()) inclusions_.push_back(ci);
  }
}

Ontology Ontology::with(ConceptInclusion ci) const {
  Ontology o = *this;
  if (std::find(o.inclusions_.begin(), o.inclusions_.end(), ci) == o.inclusions_.end()) o.inclusions_.push_back(ci);
  return o;
}

Signature Ontology::signature() const {
  Signature sig;
  std::vector<Symbol> names, roles;
  for (const auto& ci : inclusions_) {
    ci.lhs.collect_names(names);
    ci.rhs.collect_names(names);
    ci.lhs.collect_roles(roles);
    ci.rhs.collect_roles(roles);
  }
  sig.concept_names.insert(names.begin(), names.end());
  sig.role_names.insert(roles.begin(), roles.end());
  return sig;
}

std::size_t Ontology::size() const {
  std::size_t n = 0;
  for (const auto& ci : inclusions_) n += ci.lhs.size() + ci.rhs.size() + 1;
  return n;
}

Database::Database(std::vector<UnaryAtom> unary, std::vector<BinaryAtom> binary) {
  for (const auto& a : unary) {
    unary_.insert(a);
    constants_.insert(a.constant);
  }
  for (const auto& a : binary) {
    binary_.insert(a);
    constants_.insert(a.from);
    constants_.insert(a.to);
  }
}

Database Database::with(const UnaryAtom& a) const {
  Database d = *this;
  d.unary_.insert(a);
  d.constants_.insert(a.constant);
  return d;
}

Database Database::with(const BinaryAtom& a) const {
  Database d = *this;
  d.binary_.insert(a);
  d.constants_.insert(a.from);
  d.constants_.insert(a.to);
  return d;
}

Database Database::united(const Database& other) const {
  Database d = *this;
  d.unary_.insert(other.unary_.begin(), other.unary_.end());
  d.binary_.insert(other.binary_.begin(), other.binary_.end());
  d.constants_.insert(other.constants_.begin(), other.constants_.end());
  return d;
}

std::vector<Symbol> Database::labels_of(Symbol c) const {
  std::vector<Symbol> out;
  for (const auto& a : unary_) {
    if (a.constant == c) out.push_back(a.concept_name);
  }
  return out;
}

Signature Database::signature() const {
  Signature sig;
  for (const auto& a : unary_) sig.concept_names.insert(a.concept_name);
  for (const auto& a : binary_) sig.role_names.insert(a.role);
  return sig;
}

Signature KB::signature() const {
  Signature sig = ontology.signature();
  sig.add(database.signature());
  return sig;
}

namespace {

std::vector<Symbol> normalized(std::vector<Symbol> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

LabeledKB::LabeledKB(KB kb, std::vector<Symbol> positives, std::vector<Symbol> negatives)
    : kb_(std::move(kb)), positives_(normalized(std::move(positives))), negatives_(normalized(std::move(negatives))) {
  if (positives_.empty()) throw Error("positive examples must be non-empty");
  if (negatives_.empty()) throw Error("negative examples must be non-empty");
  for (Symbol c : positives_) {
    if (!kb_.database.has_constant(c)) throw UnknownConstant(c.str());
  }
  for (Symbol c : negatives_) {
    if (!kb_.database.has_constant(c)) throw UnknownConstant(c.str());
  }
}

LabeledKB LabeledKB::with_ontology(Ontology o) const {
  return LabeledKB(KB{std::move(o), kb_.database}, positives_, negatives_);
}

Symbol fresh_concept_name(const Signature& sig, std::string_view prefix) {
  std::string base(prefix);
  if (!sig.contains_concept(Symbol(base)) && !sig.contains_role(Symbol(base))) return Symbol(base);
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!sig.contains_concept(Symbol(candidate)) && !sig.contains_role(Symbol(candidate))) return Symbol(candidate);
  }
}

}  // namespace ontosep
