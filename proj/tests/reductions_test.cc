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

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "stsp/exact.h"
#include "stsp/feasibility.h"
#include "stsp/reductions.h"

namespace stsp {
namespace {

TEST(SingleTourSolutionTest, OneStackReadsTheTour) {
  DistanceMatrix a(4, 1), b(4, 2);
  const Instance inst(2, a, b, Goal::kMin);
  const Solution s = SingleTourSolution(inst, Tour({2, 3, 1}));
  EXPECT_EQ(s.packing.stack(0), (std::vector<int>{2, 3, 1}));
  EXPECT_TRUE(s.packing.stack(1).empty());
  EXPECT_EQ(s.tour_b, Tour({1, 3, 2}));
  EXPECT_EQ(s.value, 4 + 8);
  EXPECT_TRUE(IsConsistent(s.packing, s.tour_a, s.tour_b));
}

TEST(CombineTspToursTest, KeepsTheBetterAndPrefersPickupOnTies) {
  DistanceMatrix a(3, 1), b(3, 1);
  a.Set(0, 1, 5);
  const Instance inst(1, a, b, Goal::kMax);
  // Only pickup order (1,2) uses the heavy edge 0-1.
  EXPECT_EQ(CombineTspTours(inst, Tour({2, 1}), Tour({2, 1})).tour_a, Tour({1, 2}));
  EXPECT_EQ(CombineTspTours(inst, Tour({1, 2}), Tour({1, 2})).tour_a, Tour({1, 2}));
  const Instance flat(1, b, b, Goal::kMax);
  EXPECT_EQ(CombineTspTours(flat, Tour({1, 2}), Tour({1, 2})).tour_a, Tour({1, 2}));
}

TEST(TspToStspTest, ReverseDelivery) {
  std::mt19937_64 rng(31);
  const DistanceMatrix d = oracle::RandomMatrix(5, 0, 9, rng);
  const Instance inst = TspToStsp(d, Goal::kMax);
  EXPECT_EQ(inst.k(), 2);
  EXPECT_EQ(inst.pickup(), d);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) EXPECT_EQ(inst.delivery()(i, j), d(j, i));
  }
}

TEST(TspToStspTest, OptimumDoubles) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const Goal goal = trial % 2 ? Goal::kMax : Goal::kMin;
    const DistanceMatrix d = oracle::RandomMatrix(n + 1, 0, 9, rng);
    EXPECT_EQ(SolveExact(TspToStsp(d, goal)).value, 2 * oracle::TspOptimum(d, goal));
  }
}

TEST(CollapseOneStackTest, Entries) {
  DistanceMatrix a(3), b(3);
  a.Set(1, 2, 4);
  b.Set(2, 1, 7);
  const DistanceMatrix c = CollapseOneStack(Instance(1, a, b, Goal::kMin));
  EXPECT_EQ(c(1, 2), 11);
  EXPECT_EQ(c(2, 1), 0);
}

TEST(CollapseOneStackTest, PricesOneStackSolutions) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const Goal goal = trial % 2 ? Goal::kMax : Goal::kMin;
    const Instance inst(1, oracle::RandomMatrix(n + 1, 0, 9, rng),
                        oracle::RandomMatrix(n + 1, 0, 9, rng), goal);
    const DistanceMatrix c = CollapseOneStack(inst);
    EXPECT_EQ(SolveExact(inst).value, oracle::TspOptimum(c, goal));
    const Tour t(oracle::RandomTour(n, rng));
    EXPECT_EQ(SingleTourSolution(inst, t).value, TourValue(c, t));
  }
}

}  // namespace
}  // namespace stsp
