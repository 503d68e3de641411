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

#include <optional>
#include <vector>

#include "ontosep/kb.hpp"
#include "ontosep/query.hpp"
#include "ontosep/reasoner.hpp"
#include "ontosep/structure.hpp"

namespace ontosep {

struct EntailmentResult {
  bool entailed = true;
  /// Finite model of K in which no disjunct maps with its answer variable at
  /// b; present iff not entailed.
  std::optional<Structure> countermodel;
  /// Types of the constants in the countermodel.
  TypeAssignment skeleton;
  /// Gaifman radius of the query around its answer variable.
  int radius = 0;
};

/// Decides K |= q(b) for a rooted UCQ with one answer variable by searching
/// for a forest countermodel. If `b_types` is given, only models in which b
/// realizes one of these types are considered. An unsatisfiable KB entails
/// everything.
EntailmentResult check_ucq(const Reasoner& r, const UCQ& q, Symbol b,
                           const std::vector<TypeId>* b_types = nullptr);

bool ucq_entailed(const KB& k, const UCQ& q, Symbol b);

bool verify_weak_separator(const KB& k, const UCQ& q, const std::vector<Symbol>& positives,
                           const std::vector<Symbol>& negatives);
bool verify_weak_concept(const KB& k, Concept c, const std::vector<Symbol>& positives,
                         const std::vector<Symbol>& negatives);
bool verify_strong_concept(const KB& k, Concept c, const std::vector<Symbol>& positives,
                           const std::vector<Symbol>& negatives);

}  // namespace ontosep
