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

// Matching-based approximation for the symmetric 2-stack problem.
//
// Pipeline:
//   1. optimum matchings M^A, M^B on the two networks (maximum cardinality);
//   2. components of the multigraph H = M^A + M^B, depot first; for even n,
//      an extra edge e* chosen optimally among pairs that join components
//      (or, with a single component, that close the chain around the depot);
//   3. a 2-stack packing built component by component such that M^A (+ e*)
//      and M^B (+ e*) each extend to a tour reading the stacks in order;
//   4. the best tour pair for that packing.
// The result is a 1/2-approximation for maximization, 3/4 for maximization
// with weights in {1,2} and 3/2 for minimization with weights in {1,2}.

#ifndef STSP_HEURISTIC_H_
#define STSP_HEURISTIC_H_

#include <optional>
#include <vector>

#include "stsp/matching.h"
#include "stsp/model.h"

namespace stsp {

// One connected component of H as a cyclic vertex sequence c_1..c_q whose
// consecutive pairs alternate between the two matchings. A chain component
// is the same sequence with the pair (c_gap, c_gap+1) missing (gap == q
// means the closing pair (c_q, c_1) is missing).
struct Component {
  std::vector<int> vertices;
  bool is_chain = false;
  int gap = 0;  // 1-based; meaningful for chains only

  int size() const { return static_cast<int>(vertices.size()); }
  // 1-based access, c(1) is the first vertex.
  int c(int j) const { return vertices[j - 1]; }
};

struct ComponentDecomposition {
  int n = 0;
  std::vector<Component> components;  // components[0] holds the depot first
  std::vector<int> mate_a;            // partner in M^A, -1 if exposed
  std::vector<int> mate_b;

  int p() const { return static_cast<int>(components.size()); }
  // Index into components of the component holding v.
  int ComponentOf(int v) const;
};

// Canonical decomposition of M^A + M^B. Component 0 starts at the depot and
// steps first along its M^A edge (if any); the depot's chain, when it has
// one, runs to one end and wraps around from the other. Remaining components
// are ordered by smallest vertex; cycles start there and step along M^A,
// chains start at their lower end. Throws StructuralError if the matchings
// are not maximum-cardinality matchings over {0..n}.
ComponentDecomposition Decompose(const Matching& pickup,
                                 const Matching& delivery, int n);

struct ExtraEdge {
  Edge edge;
  Weight pickup_weight = 0;
  Weight delivery_weight = 0;
};

// Candidate pairs for the extra edge: all pairs across components when there
// are at least two; with a single chain around the depot, pairs from
// ({0} + {c_3..c_gap}) x ({0} + {c_gap+1..c_n}) except {0,0}.
std::vector<Edge> ExtraEdgeCandidates(const ComponentDecomposition& dec);

// argopt over the candidates of opt(dA(f), dB(f)); ties go to the
// lexicographically smallest pair. Throws InternalError on an empty
// candidate set.
ExtraEdge SelectExtraEdge(const ComponentDecomposition& dec,
                          const Instance& instance);

struct PackingResult {
  Packing packing;
  // 0 for the direct construction, >0 for the fallback variant that was
  // accepted.
  int variant = 0;
};

// Builds the 2-stack packing from the decomposition (extra edge required
// iff n is even) and validates that M^A (+ e*) and M^B (+ e*) are both
// consistent with it. Throws InternalError if no construction validates.
PackingResult BuildPacking(const ComponentDecomposition& dec,
                           const std::optional<ExtraEdge>& extra);

struct HeuristicTrace {
  Matching pickup_matching;
  Matching delivery_matching;
  ComponentDecomposition decomposition;
  std::optional<ExtraEdge> extra_edge;
  PackingResult packing;
  // weight(M^A) + weight(M^B), plus both weights of e* for even n.
  Weight matching_bound = 0;
};

// Runs the full heuristic. Requires k == 2 and symmetric networks (throws
// UnsupportedParameterError otherwise). Instances with n <= 2 are solved by
// enumerating every packing.
Solution SolveHeuristic(const Instance& instance,
                        HeuristicTrace* trace = nullptr);

}  // namespace stsp

#endif  // STSP_HEURISTIC_H_
