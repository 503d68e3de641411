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

#include "ontosep/query.hpp"

#include <algorithm>
#include <map>

#include "ontosep/error.hpp"

namespace ontosep {

CQ::CQ(std::vector<Symbol> answer_vars, std::vector<QueryUnaryAtom> unary, std::vector<QueryBinaryAtom> binary,
       std::vector<QueryEquality> equalities)
    : answer_(std::move(answer_vars)),
      unary_(std::move(unary)),
      binary_(std::move(binary)),
      equalities_(std::move(equalities)) {
  if (answer_.empty()) throw Error("a conjunctive query needs at least one answer variable");
  auto is_answer = [&](Symbol v) { return std::find(answer_.begin(), answer_.end(), v) != answer_.end(); };
  for (const auto& eq : equalities_) {
    if (!is_answer(eq.lhs) || !is_answer(eq.rhs)) {
      throw Error("equality " + eq.lhs.str() + " = " + eq.rhs.str() + " relates a non-answer variable");
    }
  }
}

std::set<Symbol> CQ::variables() const {
  std::set<Symbol> vars(answer_.begin(), answer_.end());
  for (const auto& a : unary_) vars.insert(a.var);
  for (const auto& a : binary_) {
    vars.insert(a.from);
    vars.insert(a.to);
  }
  return vars;
}

std::set<Symbol> CQ::existential_vars() const {
  std::set<Symbol> vars = variables();
  for (Symbol v : answer_) vars.erase(v);
  return vars;
}

bool CQ::rooted() const {
  std::set<Symbol> vars = variables();
  std::map<Symbol, std::vector<Symbol>> adj;
  for (const auto& a : binary_) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  for (const auto& eq : equalities_) {
    adj[eq.lhs].push_back(eq.rhs);
    adj[eq.rhs].push_back(eq.lhs);
  }
  std::set<Symbol> seen(answer_.begin(), answer_.end());
  std::vector<Symbol> stack(answer_.begin(), answer_.end());
  while (!stack.empty()) {
    Symbol v = stack.back();
    stack.pop_back();
    for (Symbol w : adj[v]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == vars.size();
}

UCQ::UCQ(std::vector<CQ> disjuncts) : disjuncts_(std::move(disjuncts)) {
  if (disjuncts_.empty()) throw Error("a UCQ needs at least one disjunct");
  for (const auto& q : disjuncts_) {
    if (q.answer_vars() != disjuncts_.front().answer_vars()) {
      throw Error("all disjuncts of a UCQ must have the same answer variables");
    }
  }
}

bool UCQ::rooted() const {
  return std::all_of(disjuncts_.begin(), disjuncts_.end(), [](const CQ& q) { return q.rooted(); });
}

}  // namespace ontosep
