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

#include "ontosep/structure.hpp"

#include <algorithm>

#include "ontosep/error.hpp"

namespace ontosep {

void Structure::add_label(Symbol concept_name, Element e) {
  if (e >= size_) throw Error("element out of range");
  auto& ext = labels_[concept_name];
  if (ext.size() < size_) ext.resize(size_, false);
  ext[e] = true;
}

void Structure::add_edge(Symbol role, Element from, Element to) {
  if (from >= size_ || to >= size_) throw Error("element out of range");
  auto& adj = roles_[role];
  if (adj.out.size() < size_) {
    adj.out.resize(size_);
    adj.in.resize(size_);
  }
  auto& out = adj.out[from];
  if (std::find(out.begin(), out.end(), to) != out.end()) return;
  out.push_back(to);
  adj.in[to].push_back(from);
  adj.edges.emplace_back(from, to);
}

void Structure::add_edge(const Role& role, Element from, Element to) {
  if (role.inverted) {
    add_edge(role.name, to, from);
  } else {
    add_edge(role.name, from, to);
  }
}

bool Structure::has_label(Symbol concept_name, Element e) const {
  auto it = labels_.find(concept_name);
  return it != labels_.end() && e < it->second.size() && it->second[e];
}

bool Structure::has_edge(Symbol role, Element from, Element to) const {
  auto it = roles_.find(role);
  if (it == roles_.end() || from >= it->second.out.size()) return false;
  const auto& out = it->second.out[from];
  return std::find(out.begin(), out.end(), to) != out.end();
}

bool Structure::has_edge(const Role& role, Element from, Element to) const {
  return role.inverted ? has_edge(role.name, to, from) : has_edge(role.name, from, to);
}

const std::vector<Element>& Structure::neighbors(const Role& role, Element e) const {
  static const std::vector<Element> kNone;
  auto it = roles_.find(role.name);
  if (it == roles_.end()) return kNone;
  const auto& lists = role.inverted ? it->second.in : it->second.out;
  return e < lists.size() ? lists[e] : kNone;
}

std::optional<Element> Structure::constant(Symbol c) const {
  auto it = constants_.find(c);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

Signature Structure::signature() const {
  Signature sig;
  for (const auto& [name, ext] : labels_) sig.concept_names.insert(name);
  for (const auto& [name, adj] : roles_) sig.role_names.insert(name);
  return sig;
}

std::vector<Element> Structure::label_extension(Symbol concept_name) const {
  std::vector<Element> out;
  auto it = labels_.find(concept_name);
  if (it == labels_.end()) return out;
  for (Element e = 0; e < it->second.size(); ++e) {
    if (it->second[e]) out.push_back(e);
  }
  return out;
}

const std::vector<std::pair<Element, Element>>& Structure::edges(Symbol role) const {
  static const std::vector<std::pair<Element, Element>> kNone;
  auto it = roles_.find(role);
  return it == roles_.end() ? kNone : it->second.edges;
}

const ElementSet& ConceptEvaluator::extension(Concept c) {
  if (auto it = memo_.find(c); it != memo_.end()) return it->second;
  const std::size_t n = s_.domain_size();
  ElementSet ext(n, false);
  switch (c.kind()) {
    case ConceptKind::kName: {
      Symbol name = c.concept_name();
      for (Element e = 0; e < n; ++e) ext[e] = s_.has_label(name, e);
      break;
    }
    case ConceptKind::kNot: {
      const ElementSet& inner = extension(c.operand());
      for (Element e = 0; e < n; ++e) ext[e] = !inner[e];
      break;
    }
    case ConceptKind::kAnd: {
      ElementSet lhs = extension(c.left());
      const ElementSet& rhs = extension(c.right());
      for (Element e = 0; e < n; ++e) ext[e] = lhs[e] && rhs[e];
      break;
    }
    case ConceptKind::kExists: {
      const ElementSet& filler = extension(c.filler());
      Role r = c.role();
      for (Element e = 0; e < n; ++e) {
        for (Element d : s_.neighbors(r, e)) {
          if (filler[d]) {
            ext[e] = true;
            break;
          }
        }
      }
      break;
    }
  }
  return memo_.emplace(c, std::move(ext)).first->second;
}

std::vector<Symbol> database_elements(const Database& d) {
  return std::vector<Symbol>(d.constants().begin(), d.constants().end());
}

Structure structure_of_database(const Database& d, const std::set<Symbol>& declared) {
  std::set<Symbol> all = d.constants();
  all.insert(declared.begin(), declared.end());
  std::vector<Symbol> elements(all.begin(), all.end());
  Structure s(elements.size());
  std::map<Symbol, Element> index;
  for (Element i = 0; i < elements.size(); ++i) {
    index[elements[i]] = i;
    s.set_constant(elements[i], i);
  }
  for (const auto& a : d.unary_atoms()) s.add_label(a.concept_name, index.at(a.constant));
  for (const auto& a : d.binary_atoms()) s.add_edge(a.role, index.at(a.from), index.at(a.to));
  return s;
}

bool check_model(const Structure& s, const KB& k) {
  if (s.domain_size() == 0) return false;
  for (Symbol c : k.database.constants()) {
    if (!s.constant(c)) throw UnknownConstant(c.str());
  }
  for (const auto& a : k.database.unary_atoms()) {
    if (!s.has_label(a.concept_name, *s.constant(a.constant))) return false;
  }
  for (const auto& a : k.database.binary_atoms()) {
    if (!s.has_edge(a.role, *s.constant(a.from), *s.constant(a.to))) return false;
  }
  ConceptEvaluator eval(s);
  for (const auto& ci : k.ontology.inclusions()) {
    ElementSet lhs = eval.extension(ci.lhs);
    const ElementSet& rhs = eval.extension(ci.rhs);
    for (Element e = 0; e < s.domain_size(); ++e) {
      if (lhs[e] && !rhs[e]) return false;
    }
  }
  return true;
}

}  // namespace ontosep
