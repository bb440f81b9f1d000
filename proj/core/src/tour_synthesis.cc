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

#include "stsp/tour_synthesis.h"

#include <algorithm>
#include <string>

#include "stsp/errors.h"

namespace stsp {
namespace {

constexpr std::size_t kMaxStates = std::size_t{1} << 26;

}  // namespace

Tour BestInterleaving(const DistanceMatrix& d,
                      std::span<const std::vector<int>> sequences,
                      GoalOrder order) {
  const int k = static_cast<int>(sequences.size());
  std::vector<std::size_t> stride(k + 1, 1);
  std::size_t total_items = 0;
  for (int s = 0; s < k; ++s) {
    stride[s + 1] = stride[s] * (sequences[s].size() + 1);
    total_items += sequences[s].size();
    if (stride[s + 1] * k > kMaxStates) {
      throw SizeLimitError("interleaving state space too large");
    }
  }
  if (static_cast<int>(total_items) + 1 != d.size()) {
    throw StructuralError("stacks hold " + std::to_string(total_items) +
                          " items, network has " +
                          std::to_string(d.size() - 1));
  }
  const std::size_t num_states = stride[k];
  auto position = [&](std::size_t state, int s) {
    return static_cast<int>((state / stride[s]) % (sequences[s].size() + 1));
  };
  // Vertex last visited in `state` when stack `last` supplied it.
  auto current = [&](std::size_t state, int last) {
    return sequences[last][position(state, last) - 1];
  };

  // best[state * k + last]: optimal cost to finish the tour from the item
  // most recently taken from stack `last`. Successor states have larger
  // encodings, so a reverse sweep sees them first.
  std::vector<Weight> best(num_states * k, order.Worst());
  for (std::size_t state = num_states; state-- > 1;) {
    for (int last = 0; last < k; ++last) {
      if (position(state, last) == 0) continue;
      const int from = current(state, last);
      Weight value;
      if (state == num_states - 1) {
        value = d(from, 0);
      } else {
        value = order.Worst();
        for (int s = 0; s < k; ++s) {
          const int pos = position(state, s);
          if (pos == static_cast<int>(sequences[s].size())) continue;
          const Weight cand =
              d(from, sequences[s][pos]) + best[(state + stride[s]) * k + s];
          if (order.StrictlyBetter(cand, value)) value = cand;
        }
      }
      best[state * k + last] = value;
    }
  }

  std::vector<int> items;
  items.reserve(total_items);
  std::size_t state = 0;
  int from = 0;
  while (items.size() < total_items) {
    int chosen = -1;
    Weight chosen_value = order.Worst();
    for (int s = 0; s < k; ++s) {
      const int pos = position(state, s);
      if (pos == static_cast<int>(sequences[s].size())) continue;
      const Weight cand =
          d(from, sequences[s][pos]) + best[(state + stride[s]) * k + s];
      if (chosen < 0 || order.StrictlyBetter(cand, chosen_value)) {
        chosen = s;
        chosen_value = cand;
      }
    }
    from = sequences[chosen][position(state, chosen)];
    items.push_back(from);
    state += stride[chosen];
  }
  return Tour(std::move(items));
}

TourPair BestToursForPacking(const Instance& instance, const Packing& packing) {
  if (packing.num_items() != instance.n()) {
    throw StructuralError("packing holds " +
                          std::to_string(packing.num_items()) +
                          " items, instance has " +
                          std::to_string(instance.n()));
  }
  if (packing.num_stacks() > instance.k()) {
    throw StructuralError("packing uses " +
                          std::to_string(packing.num_stacks()) +
                          " stacks, instance allows " +
                          std::to_string(instance.k()));
  }
  const GoalOrder order = instance.order();
  std::vector<std::vector<int>> top_down = packing.stacks();
  for (auto& s : top_down) std::reverse(s.begin(), s.end());

  TourPair result;
  result.tour_a = BestInterleaving(instance.pickup(), packing.stacks(), order);
  result.tour_b = BestInterleaving(instance.delivery(), top_down, order);
  result.value = SolutionValue(instance, result.tour_a, result.tour_b);
  return result;
}

}  // namespace stsp
