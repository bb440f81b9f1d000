// Copyright 2026 The stsp Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "stsp/exact.h"
#include "stsp/feasibility.h"
#include "stsp/generators.h"
#include "stsp/heuristic.h"
#include "stsp/matching.h"
#include "stsp/tour_synthesis.h"

namespace {

using stsp::Goal;

stsp::Instance Random(int n, Goal goal = Goal::kMin) {
  return stsp::GenRandom(n, stsp::ParseWeightSet("0..99"), 12345, goal);
}

void BM_Heuristic(benchmark::State& state) {
  const stsp::Instance inst = Random(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stsp::SolveHeuristic(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Heuristic)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Matching(benchmark::State& state) {
  const stsp::Instance inst = Random(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stsp::OptimumMatching(inst.pickup(), Goal::kMin));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Matching)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_BestToursForPacking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const stsp::Instance inst = Random(n);
  std::vector<std::vector<int>> stacks(2);
  std::mt19937_64 rng(7);
  for (int i = 1; i <= n; ++i) stacks[rng() % 2].push_back(i);
  const stsp::Packing packing(stacks);
  for (auto _ : state) benchmark::DoNotOptimize(stsp::BestToursForPacking(inst, packing));
  state.SetComplexityN(n);
}
BENCHMARK(BM_BestToursForPacking)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_MinStacks(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> a(n), b(n);
  for (int i = 0; i < n; ++i) a[i] = b[i] = i + 1;
  std::mt19937_64 rng(9);
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  const stsp::Tour ta(a), tb(b);
  for (auto _ : state) benchmark::DoNotOptimize(stsp::MinStacks(ta, tb));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MinStacks)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_PartialConsistency(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const stsp::Instance inst = Random(n);
  stsp::HeuristicTrace trace;
  stsp::SolveHeuristic(inst, &trace);
  std::vector<stsp::Edge> edges = trace.pickup_matching.edges;
  if (trace.extra_edge) edges.push_back(trace.extra_edge->edge);
  const stsp::ChainCollection chains(n, edges);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stsp::CheckPartialConsistency(chains, trace.packing.packing));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_PartialConsistency)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_ExactOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const stsp::Instance inst = Random(n, Goal::kMax);
  for (auto _ : state) benchmark::DoNotOptimize(stsp::SolveExact(inst, n));
}
BENCHMARK(BM_ExactOracle)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
