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

#ifndef STSP_TOOLS_BENCH_H_
#define STSP_TOOLS_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsp/model.h"

namespace stsp::cli {

// Guarantee of the heuristic relative to the optimum, APX / OPT.
enum class Bound { kNone, kAtLeastHalf, kAtLeastThreeQuarters, kAtMostThreeHalves };

Bound BoundFor(Goal goal, const std::vector<Weight>& weights);
const char* BoundName(Bound bound);
// Exact check with integer arithmetic; OPT = 0 counts as ratio 1.
bool WithinBound(Bound bound, Weight apx, Weight opt);

struct BenchCategory {
  Goal goal;
  std::string weights;  // weight-set text, e.g. "0..9"
};

struct BenchSpec {
  std::vector<int> sizes{3, 4, 5, 6, 7};
  std::vector<BenchCategory> categories;
  int count = 10;  // instances per category and size
  std::uint64_t seed = 1;
  bool tight = true;  // tight-family rows for n in {7, 8}
  std::vector<int> large_sizes{16, 32, 48};  // heuristic-only rows
  int oracle_cap = 7;
  int tight_oracle_cap = 8;
  bool timing = false;
};

BenchSpec DefaultBenchSpec();

struct BenchRow {
  int id = 0;
  std::string kind;  // "random" or "tight"
  int n = 0;
  Goal goal = Goal::kMin;
  std::string weights;
  std::uint64_t seed = 0;  // random rows only
  Weight heuristic = 0;
  std::optional<Weight> oracle;
  Bound bound = Bound::kNone;
  bool violation = false;
  double millis = 0;
};

struct BenchSummary {
  std::string label;
  int rows = 0;
  int with_oracle = 0;
  double worst_ratio = 0;
  double mean_ratio = 0;
  int violations = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchSummary> summaries;
  int violations = 0;
};

BenchReport RunBench(const BenchSpec& spec);
std::string FormatBench(const BenchReport& report, const BenchSpec& spec,
                        bool tsv);

}  // namespace stsp::cli

#endif  // STSP_TOOLS_BENCH_H_
