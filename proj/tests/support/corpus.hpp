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
#include <random>
#include <vector>

#include "ontosep/kb.hpp"
#include "ontosep/reasoner.hpp"
#include "ontosep/structure.hpp"

namespace ontosep::testing {

/// Six inclusions over one role r and names A, B. Every corpus ontology is a
/// subset of these.
const std::vector<ConceptInclusion>& ci_pool();

/// Databases with one or two atoms over r, A, B and at most three constants,
/// one representative per renaming of constants.
std::vector<Database> small_databases();

/// Every subset of ci_pool() paired with every small database.
std::vector<KB> exhaustive_kbs();

/// Example splits for a database: each ordered pair of distinct constants
/// as singletons, and with three constants each one-against-two split in
/// both directions.
std::vector<std::pair<std::vector<Symbol>, std::vector<Symbol>>> labelings(const Database& d);

/// exhaustive_kbs() with every labeling.
std::vector<LabeledKB> exhaustive_corpus();

struct RandomShape {
  std::vector<Symbol> names;
  std::vector<Symbol> roles;
  int max_depth = 2;
};

Concept random_concept(std::mt19937_64& rng, const RandomShape& shape, int depth);

/// Random labeled KBs over names A, B and roles r, s: up to three inclusions,
/// two to five atoms, disjoint non-empty example sets.
std::vector<LabeledKB> random_labeled_kbs(std::size_t count, std::uint64_t seed);

/// The set of closure concepts true at e, computed by evaluating every
/// closure concept in the structure.
KType type_in_structure(const Closure& cl, const Structure& s, Element e);

}  // namespace ontosep::testing
