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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ontosep/graph_ops.hpp"
#include "ontosep/kb.hpp"
#include "ontosep/query.hpp"
#include "ontosep/structure.hpp"

// Brute-force ground truth used by the property tests. Nothing here is
// clever on purpose: models are enumerated bit by bit, homomorphisms by
// trying every map.

namespace ontosep::oracle {

struct ModelBudget {
  std::size_t max_domain_size = 4;
  std::size_t max_models = std::numeric_limits<std::size_t>::max();
  /// Search nodes across all domain sizes before giving up.
  std::uint64_t max_nodes = 20'000'000;
};

/// Extra conditions on the enumerated models.
struct ModelConstraints {
  /// Each concept must hold at the element of the constant.
  std::vector<std::pair<Concept, Symbol>> assertions;
  /// If set, only models where no disjunct maps with its answer variable at
  /// the element of `avoid_at` are produced.
  const UCQ* avoid = nullptr;
  Symbol avoid_at;
};

enum class EnumerationStatus {
  kComplete,         // every model within the bound was visited
  kStopped,          // the visitor asked to stop
  kBudgetExhausted,  // node or model cap hit before the search finished
};

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::kComplete;
  std::size_t models = 0;
  std::uint64_t nodes = 0;
};

/// Return false to stop the enumeration.
using ModelVisitor = std::function<bool(const Structure&)>;

/// Visits models of k over domains {0..n-1}, n = 1..max_domain_size. Constant
/// maps are canonical (the i-th constant goes to an element at most one past
/// the largest element used so far), which loses no model up to relabeling.
/// Symbols outside sig(k) and the constraints are empty in every model.
/// Throws std::logic_error if a produced structure fails check_model.
EnumerationResult enumerate_models(const KB& k, const ModelBudget& budget, const ModelVisitor& visit,
                                   const ModelConstraints& constraints = {});

struct ModelSearch {
  std::optional<Structure> model;
  /// False when the budget ran out before a model was found.
  bool conclusive = true;
};

ModelSearch find_model(const KB& k, const ModelBudget& budget, const ModelConstraints& constraints = {});

/// Tries every map from the variables into the domain.
bool naive_ucq_maps(const UCQ& q, const Structure& s, Element answer);
/// Tries every map from cons(D_con(a)) into the domain with a mapped to `to`.
bool naive_hom(const Database& d, Symbol a, const Structure& s, Element to);

/// Weak separability of (empty ontology, D, P, N): for every b in N no
/// positive's component maps homomorphically into A_D with a sent to b.
bool brute_weak_separable_empty_ontology(const Database& d, const std::vector<Symbol>& positives,
                                         const std::vector<Symbol>& negatives);

/// Value of the k-round Sigma-bisimulation game from the two points.
bool bisim_game(const PointedStructure& s1, const PointedStructure& s2, const Signature& sigma, std::size_t rounds);

}  // namespace ontosep::oracle
