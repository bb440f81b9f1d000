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

#include "stsp/reductions.h"

#include <string>
#include <vector>

#include "stsp/errors.h"

namespace stsp {

Solution SingleTourSolution(const Instance& instance, const Tour& t) {
  if (t.size() != instance.n()) {
    throw StructuralError("tour has " + std::to_string(t.size()) +
                          " items, instance has " +
                          std::to_string(instance.n()));
  }
  std::vector<std::vector<int>> stacks(instance.k());
  stacks[0].assign(t.items().begin(), t.items().end());
  Tour reversed = t.Reversed();
  const Weight value = SolutionValue(instance, t, reversed);
  return {Packing(std::move(stacks)), t, std::move(reversed), value};
}

Solution CombineTspTours(const Instance& instance, const Tour& t_a,
                         const Tour& t_b) {
  Solution from_a = SingleTourSolution(instance, t_a);
  Solution from_b = SingleTourSolution(instance, t_b.Reversed());
  return instance.order().Better(from_a.value, from_b.value) ? from_a : from_b;
}

Instance TspToStsp(const DistanceMatrix& d, Goal goal) {
  return Instance(2, d, ReverseNetwork(d), goal);
}

DistanceMatrix CollapseOneStack(const Instance& instance) {
  const int size = instance.n() + 1;
  DistanceMatrix out(size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i != j) out.Set(i, j, instance.pickup()(i, j) + instance.delivery()(j, i));
    }
  }
  return out;
}

}  // namespace stsp
