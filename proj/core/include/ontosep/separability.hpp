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

#include "ontosep/kb.hpp"
#include "ontosep/reasoner.hpp"
#include "ontosep/report.hpp"

namespace ontosep {

struct SeparabilityOptions {
  ReasonerLimits limits;
  /// Re-check emitted separators with the verify_* procedures.
  bool verify = true;
};

/// Weak separability by UCQs, which coincides with projective ALCI
/// separability. The separator is the canonical UCQ of the positives.
SeparabilityReport weak_projective(const LabeledKB& lk, const SeparabilityOptions& opts = {});

/// Weak separability by ALCI concepts over sig(K). Emits the negated type
/// conjunction when the witnessing type is realizable at no positive,
/// otherwise reports the witnessing type only.
SeparabilityReport weak_nonprojective(const LabeledKB& lk, const SeparabilityOptions& opts = {});

/// weak_nonprojective on the KB extended by A <= A for a fresh name A.
SeparabilityReport projective_via_reduction(const LabeledKB& lk, const SeparabilityOptions& opts = {});

/// Strong separability: merged databases unsatisfiable for every pair,
/// cross-checked against disjointness of the realizable types. Emits the
/// disjunction of the type conjunctions realizable at the positives.
SeparabilityReport strong(const LabeledKB& lk, const SeparabilityOptions& opts = {});

SeparabilityReport run_task(Task task, const LabeledKB& lk, const SeparabilityOptions& opts = {});

}  // namespace ontosep
