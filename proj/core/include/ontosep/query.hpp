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
#include <vector>

#include "ontosep/symbol.hpp"

namespace ontosep {

struct QueryUnaryAtom {
  Symbol predicate;
  Symbol var;
  friend bool operator==(const QueryUnaryAtom&, const QueryUnaryAtom&) = default;
};

struct QueryBinaryAtom {
  Symbol predicate;
  Symbol from;
  Symbol to;
  friend bool operator==(const QueryBinaryAtom&, const QueryBinaryAtom&) = default;
};

struct QueryEquality {
  Symbol lhs;
  Symbol rhs;
  friend bool operator==(const QueryEquality&, const QueryEquality&) = default;
};

/// Conjunctive query. Equalities may only relate answer variables; every
/// other variable is existentially quantified.
class CQ {
 public:
  CQ() = default;
  /// Throws Error if an equality mentions a non-answer variable or the answer
  /// variable list is empty.
  CQ(std::vector<Symbol> answer_vars, std::vector<QueryUnaryAtom> unary,
     std::vector<QueryBinaryAtom> binary, std::vector<QueryEquality> equalities = {});

  const std::vector<Symbol>& answer_vars() const { return answer_; }
  const std::vector<QueryUnaryAtom>& unary_atoms() const { return unary_; }
  const std::vector<QueryBinaryAtom>& binary_atoms() const { return binary_; }
  const std::vector<QueryEquality>& equalities() const { return equalities_; }

  std::set<Symbol> variables() const;
  std::set<Symbol> existential_vars() const;
  std::size_t atom_count() const { return unary_.size() + binary_.size(); }

  /// Every variable is reachable from an answer variable in the Gaifman graph.
  bool rooted() const;

  friend bool operator==(const CQ&, const CQ&) = default;

 private:
  std::vector<Symbol> answer_;
  std::vector<QueryUnaryAtom> unary_;
  std::vector<QueryBinaryAtom> binary_;
  std::vector<QueryEquality> equalities_;
};

class UCQ {
 public:
  UCQ() = default;
  /// Throws Error if empty or the disjuncts disagree on the answer variables.
  explicit UCQ(std::vector<CQ> disjuncts);

  const std::vector<CQ>& disjuncts() const { return disjuncts_; }
  const std::vector<Symbol>& answer_vars() const { return disjuncts_.front().answer_vars(); }
  bool rooted() const;

  friend bool operator==(const UCQ&, const UCQ&) = default;

 private:
  std::vector<CQ> disjuncts_;
};

}  // namespace ontosep
