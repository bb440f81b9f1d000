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

// LIFO consistency between packings and tours.
//
// A triple (P, TA, TB) is consistent iff every item stacked below another
// item is picked up earlier and delivered later. Two items can share a stack
// only if the tours order them oppositely, so the minimum number of stacks
// for a tour pair is the chromatic number of the "same order" conflict
// graph. That graph is a permutation graph, and its chromatic number is the
// longest increasing subsequence of the tourA -> tourB position map.

#ifndef STSP_FEASIBILITY_H_
#define STSP_FEASIBILITY_H_

#include <span>
#include <vector>

#include "stsp/model.h"

namespace stsp {

// Throws StructuralError if the packing and the tours disagree on n.
bool IsConsistent(const Packing& packing, const Tour& tour_a,
                  const Tour& tour_b);

// Items i != i' are adjacent iff both tours visit them in the same relative
// order, i.e. they cannot share a stack.
class ConflictGraph {
 public:
  ConflictGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool HasEdge(int i, int j) const;

 private:
  int n_;
  std::vector<Edge> edges_;  // sorted
  std::vector<std::vector<bool>> adjacent_;
};

ConflictGraph BuildConflictGraph(const Tour& tour_a, const Tour& tour_b);

struct StackCover {
  int count = 0;
  Packing witness;  // exactly `count` stacks, all nonempty
};

// Minimum number of stacks admitting a consistent packing, with a witness
// from the patience-sorting decomposition into decreasing runs.
StackCover MinStacks(const Tour& tour_a, const Tour& tour_b);

// Fast test for MinStacks(a, b).count <= k without building the witness.
bool FitsInStacks(std::span<const int> b_position_by_a_rank, int k);

// Pairwise vertex-disjoint elementary paths over {0..n}, given as an edge
// set. The depot 0 may have degree two; every vertex has degree at most two
// and the edge set has no cycle.
class ChainCollection {
 public:
  // Throws StructuralError on out-of-range vertices, self-loops, duplicate
  // edges, degree > 2 or cycles.
  ChainCollection(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

 private:
  int n_;
  std::vector<Edge> edges_;  // sorted
};

enum class Violation { kNone, kJump, kCrossing, kWayBack };

const char* ViolationName(Violation v);

struct PartialConsistency {
  bool consistent = true;
  Violation violation = Violation::kNone;
};

// Whether the chains can be completed into a tour that reads both stacks of
// a 2-stack packing in order (bottom-to-top in one direction, top-to-bottom
// in the other). Evaluated by three local conditions over the stack indices
// extended with the depot at position 0 and p+1 of each stack:
//   jump     - a chain links two positions of a stack, directly or through
//              a run of the other stack, that are not adjacent;
//   crossing - two edges between the stacks cross;
//   way back - two parallel in-stack edges joined at the same end.
// On failure the first violated condition is reported, in that order.
// Throws UnsupportedParameterError unless the packing has 2 stacks.
PartialConsistency CheckPartialConsistency(const ChainCollection& chains,
                                           const Packing& packing);

}  // namespace stsp

#endif  // STSP_FEASIBILITY_H_
