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

// Optimal tours for a fixed packing.
//
// With the packing fixed, the LIFO constraints split per tour: the pickup
// tour must read every stack bottom-to-top and the delivery tour every stack
// top-to-bottom, and any such pair is consistent. Each tour is therefore an
// optimal interleaving of k sequences, found by dynamic programming over the
// consumed prefix of every stack plus the stack that supplied the last item.
// For k = 2 that is O((n+1)^2) states.

#ifndef STSP_TOUR_SYNTHESIS_H_
#define STSP_TOUR_SYNTHESIS_H_

#include <span>
#include <vector>

#include "stsp/model.h"

namespace stsp {

// Goal-optimal depot-anchored tour on d among the interleavings of
// `sequences`, which must together cover {1..n} exactly once. Ties go to the
// lowest-index sequence at each step.
Tour BestInterleaving(const DistanceMatrix& d,
                      std::span<const std::vector<int>> sequences,
                      GoalOrder order);

struct TourPair {
  Tour tour_a;
  Tour tour_b;
  Weight value = 0;
};

// Best pickup tour (stacks bottom-to-top on the pickup network) and best
// delivery tour (stacks top-to-bottom on the delivery network). Throws
// StructuralError if the packing does not cover {1..n} or has more than k
// stacks, SizeLimitError if the DP state space is unreasonably large.
TourPair BestToursForPacking(const Instance& instance, const Packing& packing);

}  // namespace stsp

#endif  // STSP_TOUR_SYNTHESIS_H_
