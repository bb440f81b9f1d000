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

// Brute-force reference implementations used only by the tests. Each one
// recomputes its quantity from the definition, sharing no code with the
// library beyond the model types.

#ifndef STSP_TESTS_ORACLES_H_
#define STSP_TESTS_ORACLES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "stsp/model.h"

namespace stsp::oracle {

// Sum of d over 0 -> t_1 -> ... -> t_n -> 0.
Weight SumTour(const DistanceMatrix& d, const std::vector<int>& items);

// Items i != i' ordered the same way in both tours, as adjacency matrix.
std::vector<std::vector<bool>> ConflictMatrix(const std::vector<int>& a,
                                              const std::vector<int>& b);

// Chromatic number by trying k = 1, 2, ... with backtracking.
int ChromaticNumber(const std::vector<std::vector<bool>>& adjacent);

// Direct check of the LIFO rule on every pair in every stack.
bool LifoHolds(const std::vector<std::vector<int>>& stacks,
               const std::vector<int>& a, const std::vector<int>& b);

// Optimum weight among maximum-cardinality matchings, by subset DP.
Weight MatchingOptimum(const DistanceMatrix& d, Goal goal);

// Best tour over all interleavings of the sequences (each read front to
// back), by explicit enumeration.
Weight BestInterleavingValue(const DistanceMatrix& d,
                             const std::vector<std::vector<int>>& sequences,
                             Goal goal);

// Every tour edge set (undirected, depot included) readable from the two
// stacks bottom-up.
bool CompletionExists(const std::vector<Edge>& edges,
                      const std::vector<std::vector<int>>& stacks);

// Optimum by enumerating ordered packings into k stacks and every pair of
// interleavings; independent of the tour-pair enumeration.
Weight PackingFirstOptimum(const Instance& instance);

// Optimum tour value by depth-first enumeration.
Weight TspOptimum(const DistanceMatrix& d, Goal goal);

// Uniform permutation of {1..n}.
std::vector<int> RandomTour(int n, std::mt19937_64& rng);

// Random symmetric matrix of the given size with entries in [lo, hi].
DistanceMatrix RandomSymmetric(int size, Weight lo, Weight hi,
                               std::mt19937_64& rng);

// Random (not necessarily symmetric) matrix with zero diagonal.
DistanceMatrix RandomMatrix(int size, Weight lo, Weight hi,
                            std::mt19937_64& rng);

}  // namespace stsp::oracle

#endif  // STSP_TESTS_ORACLES_H_
