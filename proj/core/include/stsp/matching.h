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

#ifndef STSP_MATCHING_H_
#define STSP_MATCHING_H_

#include <span>
#include <vector>

#include "stsp/model.h"

namespace stsp {

struct WeightedEdge {
  int u;
  int v;
  Weight weight;
};

// Maximum-weight matching in a general graph (Edmonds' blossom algorithm
// with dual adjustments, O(V^3)). With max_cardinality set, the result is a
// maximum-weight matching among the maximum-cardinality ones. Weights may be
// any non-negative integers. Returns mate[v], or -1 for exposed vertices.
std::vector<int> MaxWeightMatching(int num_vertices,
                                   std::span<const WeightedEdge> edges,
                                   bool max_cardinality);

struct Matching {
  std::vector<Edge> edges;  // sorted
  Weight weight = 0;

  // Partner of v, or -1.
  int Mate(int v) const;
  bool Contains(const Edge& e) const;
};

// Goal-optimal matching of cardinality floor(size/2) on the complete graph
// with symmetric weights d. Among optimal matchings, returns the one whose
// sorted edge list is lexicographically smallest. Throws
// UnsupportedParameterError if d is not symmetric.
Matching OptimumMatching(const DistanceMatrix& d, Goal goal);

}  // namespace stsp

#endif  // STSP_MATCHING_H_
