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

#include <vector>

#include "ontosep/kb.hpp"
#include "ontosep/query.hpp"
#include "ontosep/structure.hpp"

namespace ontosep {

struct PointedDatabase {
  Database database;
  std::vector<Symbol> point;
};

struct PointedStructure {
  const Structure* structure = nullptr;
  std::vector<Element> point;
};

/// Sub-database induced by the constants Gaifman-reachable from a.
Database connected_restriction(const Database& d, Symbol a);

/// The database read as a CQ with answer variable x for a; every other
/// constant c becomes the existential variable y_c.
CQ canonical_cq(const Database& d, Symbol a);
/// Tuple version: answer variables x1..xn, equalities for repeated constants.
CQ canonical_cq(const Database& d, const std::vector<Symbol>& point);
/// Disjunction over a in positives of canonical_cq(connected_restriction(d, a), a),
/// keeping one disjunct per homomorphic-equivalence class.
UCQ canonical_ucq(const Database& d, const std::vector<Symbol>& positives);

/// D together with a renamed copy of D in which the copy of b is a.
Database merge_databases(const Database& d, Symbol a, Symbol b);

/// Homomorphism from the query into s mapping the answer variables to
/// `answer`. Equalities must hold in the answer tuple.
bool cq_maps(const CQ& q, const Structure& s, const std::vector<Element>& answer);
bool ucq_maps(const UCQ& q, const Structure& s, Element answer);

bool hom_exists(const PointedDatabase& p, const PointedStructure& s);

/// Greatest Sigma-bisimulation between the two structures relates the points.
bool bisimilar(const PointedStructure& s1, const PointedStructure& s2, const Signature& sigma);

/// Sigma-bisimilarity classes of one structure: class id per element.
std::vector<std::size_t> bisimulation_classes(const Structure& s, const Signature& sigma);

/// D_con(a), a embeds into s with (atom), (bisim) and (forth).
bool embedding_exists(const Database& d, Symbol a, const PointedStructure& s, const Signature& sigma);

}  // namespace ontosep
