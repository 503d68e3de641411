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

#include "ontosep/concept.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "ontosep/error.hpp"

namespace ontosep {
namespace {

struct Node {
  ConceptKind kind;
  bool inverted = false;
  std::uint32_t a = 0;  // symbol id or first child
  std::uint32_t b = 0;  // second child / filler

  bool operator==(const Node&) const = default;
};

struct NodeHash {
  std::size_t operator()(const Node& n) const noexcept {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ull;
    h ^= (static_cast<std::size_t>(n.a) << 1) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= (static_cast<std::size_t>(n.b) << 1) + 0x85ebca6b + (h << 6) + (h >> 2);
    return h ^ (n.inverted ? 0x27d4eb2f : 0);
  }
};

struct NodeStore {
  std::shared_mutex mutex;
  std::deque<Node> nodes;
  std::unordered_map<Node, std::uint32_t, NodeHash> ids;
};

NodeStore& store() {
  static NodeStore s;
  return s;
}

std::uint32_t intern(const Node& n) {
  NodeStore& s = store();
  {
    std::shared_lock lock(s.mutex);
    if (auto it = s.ids.find(n); it != s.ids.end()) return it->second;
  }
  std::unique_lock lock(s.mutex);
  if (auto it = s.ids.find(n); it != s.ids.end()) return it->second;
  auto id = static_cast<std::uint32_t>(s.nodes.size());
  s.nodes.push_back(n);
  s.ids.emplace(n, id);
  return id;
}

Node node(std::uint32_t id) {
  NodeStore& s = store();
  std::shared_lock lock(s.mutex);
  return s.nodes.at(id);
}

}  // namespace

Symbol Concept::bottom_name() {
  static const Symbol kName("A*");
  return kName;
}

Concept Concept::name(Symbol concept_name) {
  return Concept(intern(Node{ConceptKind::kName, false, concept_name.id(), 0}));
}

Concept Concept::negation(Concept c) { return Concept(intern(Node{ConceptKind::kNot, false, c.id_, 0})); }

Concept Concept::conjunction(Concept lhs, Concept rhs) {
  return Concept(intern(Node{ConceptKind::kAnd, false, lhs.id_, rhs.id_}));
}

Concept Concept::exists(Role role, Concept filler) {
  return Concept(intern(Node{ConceptKind::kExists, role.inverted, role.name.id(), filler.id_}));
}

Concept Concept::bottom() {
  static const Concept kBot = conjunction(name(bottom_name()), negation(name(bottom_name())));
  return kBot;
}

Concept Concept::top() {
  static const Concept kTop = negation(bottom());
  return kTop;
}

Concept Concept::disjunction(Concept lhs, Concept rhs) {
  return negation(conjunction(negation(lhs), negation(rhs)));
}

Concept Concept::implies(Concept lhs, Concept rhs) { return disjunction(negation(lhs), rhs); }

Concept Concept::forall(Role role, Concept filler) { return negation(exists(role, negation(filler))); }

ConceptKind Concept::kind() const { return node(id_).kind; }

Symbol Concept::concept_name() const {
  Node n = node(id_);
  if (n.kind != ConceptKind::kName) throw Error("concept is not a name");
  return Symbol::from_id(n.a);
}

Concept Concept::operand() const {
  Node n = node(id_);
  if (n.kind != ConceptKind::kNot) throw Error("concept is not a negation");
  return Concept(n.a);
}

Concept Concept::left() const {
  Node n = node(id_);
  if (n.kind != ConceptKind::kAnd) throw Error("concept is not a conjunction");
  return Concept(n.a);
}

Concept Concept::right() const {
  Node n = node(id_);
  if (n.kind != ConceptKind::kAnd) throw Error("concept is not a conjunction");
  return Concept(n.b);
}

Role Concept::role() const {
  Node n = node(id_);
  if (n.kind != ConceptKind::kExists) throw Error("concept is not an existential restriction");
  return Role{Symbol::from_id(n.a), n.inverted};
}

Concept Concept::filler() const {
  Node n = node(id_);
  if (n.kind != ConceptKind::kExists) throw Error("concept is not an existential restriction");
  return Concept(n.b);
}

void Concept::collect_names(std::vector<Symbol>& out) const {
  switch (kind()) {
    case ConceptKind::kName:
      if (concept_name() != bottom_name()) out.push_back(concept_name());
      break;
    case ConceptKind::kNot:
      operand().collect_names(out);
      break;
    case ConceptKind::kAnd:
      left().collect_names(out);
      right().collect_names(out);
      break;
    case ConceptKind::kExists:
      filler().collect_names(out);
      break;
  }
}

void Concept::collect_roles(std::vector<Symbol>& out) const {
  switch (kind()) {
    case ConceptKind::kName:
      break;
    case ConceptKind::kNot:
      operand().collect_roles(out);
      break;
    case ConceptKind::kAnd:
      left().collect_roles(out);
      right().collect_roles(out);
      break;
    case ConceptKind::kExists:
      out.push_back(role().name);
      filler().collect_roles(out);
      break;
  }
}

std::size_t Concept::size() const {
  switch (kind()) {
    case ConceptKind::kName:
      return 1;
    case ConceptKind::kNot:
      return 1 + operand().size();
    case ConceptKind::kAnd:
      return 1 + left().size() + right().size();
    case ConceptKind::kExists:
      return 2 + filler().size();
  }
  return 0;
}

namespace {

// C†(v): `var` is the free variable, `other` the one to reuse below an
// existential.
std::string fo(Concept c, const std::string& var, const std::string& other) {
  switch (c.kind()) {
    case ConceptKind::kName:
      return c.concept_name().str() + "(" + var + ")";
    case ConceptKind::kNot:
      return "¬" + [&] {
        std::string inner = fo(c.operand(), var, other);
        return c.operand().kind() == ConceptKind::kAnd ? "(" + inner + ")" : inner;
      }();
    case ConceptKind::kAnd:
      return fo(c.left(), var, other) + " ∧ " + fo(c.right(), var, other);
    case ConceptKind::kExists: {
      Role r = c.role();
      std::string edge = r.inverted ? r.name.str() + "(" + other + "," + var + ")"
                                    : r.name.str() + "(" + var + "," + other + ")";
      return "∃" + other + "(" + edge + " ∧ " + fo(c.filler(), other, var) + ")";
    }
  }
  return {};
}

}  // namespace

std::string concept_to_fo_description(Concept c) { return fo(c, "x", "y"); }

}  // namespace ontosep
