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

#include "stsp/exact.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "stsp/errors.h"
#include "stsp/feasibility.h"

namespace stsp {
namespace {

void CheckCap(int n, int max_n) {
  if (n > max_n) {
    throw SizeLimitError("n = " + std::to_string(n) +
                         " exceeds the exact solver cap of " +
                         std::to_string(max_n));
  }
}

// Every tour of {1..n} in lexicographic order, flattened n entries apiece.
std::vector<int> AllTours(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> out;
  do {
    out.insert(out.end(), perm.begin(), perm.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Weight PathValue(const DistanceMatrix& d, const int* items, int n) {
  Weight v = d(0, items[0]) + d(items[n - 1], 0);
  for (int i = 0; i + 1 < n; ++i) v += d(items[i], items[i + 1]);
  return v;
}

// Delivery tours ranked best first (ties in lexicographic order), with
// their item positions.
struct RankedTours {
  int n = 0;
  std::vector<int> order;       // indices into the tour table
  std::vector<Weight> value;    // by tour index
  std::vector<int> position;    // position[t * (n + 1) + item]
};

RankedTours RankTours(const DistanceMatrix& d, const std::vector<int>& tours,
                      int n, GoalOrder goal) {
  RankedTours r;
  r.n = n;
  const int count = static_cast<int>(tours.size() / n);
  r.value.resize(count);
  r.position.assign(static_cast<std::size_t>(count) * (n + 1), 0);
  for (int t = 0; t < count; ++t) {
    const int* items = &tours[static_cast<std::size_t>(t) * n];
    r.value[t] = PathValue(d, items, n);
    for (int i = 0; i < n; ++i) {
      r.position[static_cast<std::size_t>(t) * (n + 1) + items[i]] = i;
    }
  }
  r.order.resize(count);
  std::iota(r.order.begin(), r.order.end(), 0);
  std::stable_sort(r.order.begin(), r.order.end(), [&](int x, int y) {
    return goal.StrictlyBetter(r.value[x], r.value[y]);
  });
  return r;
}

Tour TourAt(const std::vector<int>& tours, int t, int n) {
  const auto begin = tours.begin() + static_cast<std::ptrdiff_t>(t) * n;
  return Tour(std::vector<int>(begin, begin + n));
}

// Best delivery tour compatible with the pickup tour `items`, or -1.
int BestPartner(const RankedTours& ranked, const int* items, int k,
                std::vector<int>& scratch) {
  const int n = ranked.n;
  for (int t : ranked.order) {
    const int* pos = &ranked.position[static_cast<std::size_t>(t) * (n + 1)];
    for (int i = 0; i < n; ++i) scratch[i] = pos[items[i]];
    if (FitsInStacks(scratch, k)) return t;
  }
  return -1;
}

Solution MakeSolution(const Instance& instance, Tour a, Tour b) {
  Packing packing = MinStacks(a, b).witness.PaddedTo(instance.k());
  const Weight value = SolutionValue(instance, a, b);
  return {std::move(packing), std::move(a), std::move(b), value};
}

}  // namespace

Solution SolveExact(const Instance& instance, int max_n) {
  const int n = instance.n();
  CheckCap(n, max_n);
  const GoalOrder goal = instance.order();
  const std::vector<int> tours = AllTours(n);
  const RankedTours ranked = RankTours(instance.delivery(), tours, n, goal);
  const Weight best_b = ranked.value[ranked.order.front()];
  const int count = static_cast<int>(ranked.order.size());

  std::vector<int> scratch(n);
  int best_a = -1;
  int best_partner = -1;
  Weight best_value = goal.Worst();
  for (int t = 0; t < count; ++t) {
    const int* items = &tours[static_cast<std::size_t>(t) * n];
    const Weight value_a = PathValue(instance.pickup(), items, n);
    if (best_a >= 0 && !goal.StrictlyBetter(value_a + best_b, best_value)) {
      continue;
    }
    const int partner = BestPartner(ranked, items, instance.k(), scratch);
    if (partner < 0) continue;
    const Weight value = value_a + ranked.value[partner];
    if (best_a < 0 || goal.StrictlyBetter(value, best_value)) {
      best_a = t;
      best_partner = partner;
      best_value = value;
    }
  }
  // The reversed tour is always compatible, so a solution exists.
  return MakeSolution(instance, TourAt(tours, best_a, n),
                      TourAt(tours, best_partner, n));
}

Solution SolveExactGivenTourA(const Instance& instance, const Tour& tour_a,
                              int max_n) {
  const int n = instance.n();
  CheckCap(n, max_n);
  if (tour_a.size() != n) {
    throw StructuralError("pickup tour has " + std::to_string(tour_a.size()) +
                          " items, instance has " + std::to_string(n));
  }
  const std::vector<int> tours = AllTours(n);
  const RankedTours ranked =
      RankTours(instance.delivery(), tours, n, instance.order());
  std::vector<int> scratch(n);
  const int partner =
      BestPartner(ranked, tour_a.items().data(), instance.k(), scratch);
  return MakeSolution(instance, tour_a, TourAt(tours, partner, n));
}

TspResult SolveTspExact(const DistanceMatrix& d, Goal goal, int max_n) {
  const int n = d.size() - 1;
  if (n < 1) throw StructuralError("a tour needs at least one item");
  CheckCap(n, max_n);
  const GoalOrder order(goal);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> best = perm;
  Weight best_value = PathValue(d, perm.data(), n);
  while (std::next_permutation(perm.begin(), perm.end())) {
    const Weight v = PathValue(d, perm.data(), n);
    if (order.StrictlyBetter(v, best_value)) {
      best_value = v;
      best = perm;
    }
  }
  return {Tour(std::move(best)), best_value};
}

Solution SolveIndependentTours(const Instance& instance, int max_n) {
  const int n = instance.n();
  if (instance.k() < n) {
    throw UnsupportedParameterError(
        "independent tours need at least one stack per item");
  }
  TspResult a = SolveTspExact(instance.pickup(), instance.goal(), max_n);
  TspResult b = SolveTspExact(instance.delivery(), instance.goal(), max_n);
  std::vector<std::vector<int>> stacks(instance.k());
  for (int i = 1; i <= n; ++i) stacks[i - 1].push_back(i);
  return {Packing(std::move(stacks)), std::move(a.tour), std::move(b.tour),
          a.value + b.value};
}

}  // namespace stsp
