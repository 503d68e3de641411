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
#include <vector>

#include "ontosep/symbol.hpp"

namespace ontosep {

/// A role name, possibly inverted.
struct Role {
  Symbol name;
  bool inverted = false;

  Role inverse() const { return Role{name, !inverted}; }

  friend bool operator==(const Role&, const Role&) = default;
  friend auto operator<=>(const Role&, const Role&) = default;
};

enum class ConceptKind : std::uint8_t { kName, kNot, kAnd, kExists };

/// Hash-consed ALCI concept. Only the four primitive constructors are stored;
/// top, bottom, disjunction, implication and value restriction expand to them.
/// Two structurally equal concepts always share the same id.
class Concept {
 public:
  Concept() = default;

  static Concept name(Symbol concept_name);
  static Concept negation(Concept c);
  static Concept conjunction(Concept lhs, Concept rhs);
  static Concept exists(Role role, Concept filler);

  // Abbreviations.
  static Concept bottom();  // A* and not A*, A* a reserved name
  static Concept top();     // not bottom
  static Concept disjunction(Concept lhs, Concept rhs);
  static Concept implies(Concept lhs, Concept rhs);
  static Concept forall(Role role, Concept filler);

  /// Reserved name used to build bottom; never produced by the parser.
  static Symbol bottom_name();

  std::uint32_t id() const { return id_; }
  bool valid() const { return id_ != kInvalid; }

  ConceptKind kind() const;
  Symbol concept_name() const;  // kName
  Concept operand() const;      // kNot
  Concept left() const;         // kAnd
  Concept right() const;        // kAnd
  Role role() const;            // kExists
  Concept filler() const;       // kExists

  bool is_top() const { return *this == top(); }
  bool is_bottom() const { return *this == bottom(); }

  /// Concept names occurring in the concept (the reserved bottom name excluded).
  void collect_names(std::vector<Symbol>& out) const;
  void collect_roles(std::vector<Symbol>& out) const;

  /// Number of symbols, counting each name as one.
  std::size_t size() const;

  friend bool operator==(Concept a, Concept b) { return a.id_ == b.id_; }
  friend bool operator<(Concept a, Concept b) { return a.id_ < b.id_; }

 private:
  static constexpr std::uint32_t kInvalid = 0xffffffffu;
  explicit Concept(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = kInvalid;
};

/// Renders the first-order translation with one free variable x, reusing
/// variables x and y. Used for reports.
std::string concept_to_fo_description(Concept c);

}  // namespace ontosep

template <>
struct std::hash<ontosep::Concept> {
  std::size_t operator()(ontosep::Concept c) const noexcept { return std::hash<std::uint32_t>{}(c.id()); }
};

template <>
struct std::hash<ontosep::Role> {
  std::size_t operator()(const ontosep::Role& r) const noexcept {
    return std::hash<std::uint32_t>{}(r.name.id()) * 2 + (r.inverted ? 1 : 0);
  }
};
