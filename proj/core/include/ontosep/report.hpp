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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontosep/concept.hpp"
#include "ontosep/query.hpp"
#include "ontosep/structure.hpp"

namespace ontosep {

enum class Task { kWeakProjective, kWeakNonprojective, kStrong };

std::string_view task_name(Task t);
/// Inverse of task_name; nullopt for unknown names.
std::optional<Task> task_from_name(std::string_view name);

enum class SeparatorKind { kUcq, kConcept };

struct Separator {
  SeparatorKind kind = SeparatorKind::kConcept;
  std::string text;
  bool verified = false;
  std::optional<UCQ> ucq;
  std::optional<Concept> concept_;
};

/// Verdict for one negative example of a weak task.
struct NegativeOutcome {
  Symbol negative;
  bool separable = false;
  /// A finite model of K in which no positive's canonical query maps to the
  /// negative (weak tasks, when separable).
  std::optional<Structure> countermodel;
  /// Rendering of the witnessing type (non-projective task).
  std::string witness_type;
  /// The witnessing type is realizable at no positive example.
  bool witness_unrealizable_at_positives = false;
};

/// Verdict for one (positive, negative) pair of the strong task.
struct PairOutcome {
  Symbol positive;
  Symbol negative;
  bool merged_unsatisfiable = false;
  bool types_disjoint = false;
};

struct ReportStats {
  std::size_t types = 0;
  std::size_t closure = 0;
  std::int64_t time_ms = 0;
};

struct SeparabilityReport {
  Task task = Task::kWeakProjective;
  bool separable = false;
  bool kb_satisfiable = true;
  std::optional<Separator> separator;
  std::vector<NegativeOutcome> negatives;
  std::vector<PairOutcome> pairs;
  /// JSON object with the task-specific evidence.
  std::string certificate_json;
  ReportStats stats;
};

}  // namespace ontosep
