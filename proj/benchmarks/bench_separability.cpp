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

#include <benchmark/benchmark.h>

#include <string>

#include "ontosep/reasoner.hpp"
#include "ontosep/separability.hpp"
#include "ontosep/syntax.hpp"

namespace {

using namespace ontosep;

// A chain of n existential steps forces n+1 elements and grows the closure
// linearly, which is what drives the type count.
LabeledKB chain_kb(int n) {
  std::string o = "ontology {\n";
  for (int i = 0; i < n; ++i) {
    o += "  A" + std::to_string(i) + " <= exists r. A" + std::to_string(i + 1) + "\n";
  }
  o += "}\ndatabase { A0(a) r(b,c) A1(c) }\npositive { a }\nnegative { b }\n";
  return parse_labeled_kb(o);
}

const char* kVotes = R"(
ontology { exists votes. Left <= not exists votes. Right }
database { votes(a,c1) Left(c1) votes(b,c2) Right(c2) }
positive { a }
negative { b }
)";

void BM_TypeElimination(benchmark::State& state) {
  LabeledKB lk = chain_kb(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Reasoner r(lk.kb());
    benchmark::DoNotOptimize(r.type_count());
  }
}
BENCHMARK(BM_TypeElimination)->DenseRange(1, 5);

void BM_Task(benchmark::State& state, Task task) {
  LabeledKB lk = chain_kb(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_task(task, lk, {}).separable);
}
BENCHMARK_CAPTURE(BM_Task, weak_projective, Task::kWeakProjective)->DenseRange(1, 4);
BENCHMARK_CAPTURE(BM_Task, weak_nonprojective, Task::kWeakNonprojective)->DenseRange(1, 4);
BENCHMARK_CAPTURE(BM_Task, strong, Task::kStrong)->DenseRange(1, 4);

void BM_StrongVotes(benchmark::State& state) {
  LabeledKB lk = parse_labeled_kb(kVotes);
  for (auto _ : state) benchmark::DoNotOptimize(strong(lk, {}).separable);
}
BENCHMARK(BM_StrongVotes);

}  // namespace
BENCHMARK_MAIN();
