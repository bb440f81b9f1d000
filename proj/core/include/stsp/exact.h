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

// Exhaustive solvers for small instances. These are verification oracles:
// the running time is factorial in n and every entry point refuses
// instances above a size cap.

#ifndef STSP_EXACT_H_
#define STSP_EXACT_H_

#include "stsp/model.h"

namespace stsp {

inline constexpr int kDefaultOracleCap = 7;

// Optimum over every pair of tours whose conflict graph colors with at most
// k colors. Among optimal pairs the lexicographically smallest
// (tour_a, tour_b) is returned, with the patience-sorting packing padded to k
// stacks. Throws SizeLimitError if n > max_n.
Solution SolveExact(const Instance& instance, int max_n = kDefaultOracleCap);

// Same, with the pickup tour fixed.
Solution SolveExactGivenTourA(const Instance& instance, const Tour& tour_a,
                              int max_n = kDefaultOracleCap);

struct TspResult {
  Tour tour;
  Weight value = 0;
};

// Optimal tour from and back to vertex 0 over {1..n}; lexicographically
// smallest among optima. Throws SizeLimitError if n > max_n.
TspResult SolveTspExact(const DistanceMatrix& d, Goal goal,
                        int max_n = kDefaultOracleCap);

// With at least n stacks every tour pair is consistent, so the problem
// splits into two independent TSPs; items go one per stack. Throws
// UnsupportedParameterError if k < n.
Solution SolveIndependentTours(const Instance& instance,
                               int max_n = kDefaultOracleCap);

}  // namespace stsp

#endif  // STSP_EXACT_H_
