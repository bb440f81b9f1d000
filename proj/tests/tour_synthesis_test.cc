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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "stsp/errors.h"
#include "stsp/feasibility.h"
#include "stsp/tour_synthesis.h"

namespace stsp {
namespace {

Instance RandomInstance(int n, Goal goal, std::mt19937_64& rng, bool symmetric) {
  if (symmetric) {
    return Instance(2, oracle::RandomSymmetric(n + 1, 0, 20, rng),
                    oracle::RandomSymmetric(n + 1, 0, 20, rng), goal);
  }
  return Instance(2, oracle::RandomMatrix(n + 1, 0, 20, rng),
                  oracle::RandomMatrix(n + 1, 0, 20, rng), goal);
}

Packing RandomPacking(int n, int k, std::mt19937_64& rng) {
  std::vector<std::vector<int>> stacks(k);
  for (int item : oracle::RandomTour(n, rng)) stacks[rng() % k].push_back(item);
  return Packing(std::move(stacks));
}

TEST(BestToursTest, SingleStackForcesBothTours) {
  std::mt19937_64 rng(1);
  const Instance inst = RandomInstance(5, Goal::kMin, rng, false);
  const TourPair t = BestToursForPacking(inst, Packing({{1, 2, 3, 4, 5}, {}}));
  EXPECT_EQ(t.tour_a, Tour({1, 2, 3, 4, 5}));
  EXPECT_EQ(t.tour_b, Tour({5, 4, 3, 2, 1}));
}

TEST(BestToursTest, TwoSingletonsPickTheBetterOrder) {
  DistanceMatrix a(3, 1), b(3, 1);
  a.Set(0, 2, 5);  // favours 2 first under MAX
  b.Set(1, 0, 5);  // favours 1 last under MAX
  const Instance inst(2, a, b, Goal::kMax);
  const TourPair t = BestToursForPacking(inst, Packing({{1}, {2}}));
  EXPECT_EQ(t.tour_a, Tour({2, 1}));
  EXPECT_EQ(t.tour_b, Tour({2, 1}));
  EXPECT_EQ(t.value, 7 + 7);
}

TEST(BestToursTest, TiesPreferTheFirstStack) {
  const Instance inst(2, DistanceMatrix(4, 1), DistanceMatrix(4, 1), Goal::kMin);
  const TourPair t = BestToursForPacking(inst, Packing({{2, 3}, {1}}));
  EXPECT_EQ(t.tour_a, Tour({2, 3, 1}));
  EXPECT_EQ(t.tour_b, Tour({3, 2, 1}));
}

TEST(BestToursTest, MatchesInterleavingBruteForce) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    const Goal goal = trial % 2 ? Goal::kMax : Goal::kMin;
    const Instance inst = RandomInstance(n, goal, rng, trial % 4 < 2);
    const Packing p = RandomPacking(n, 2, rng);
    const TourPair t = BestToursForPacking(inst, p);
    std::vector<std::vector<int>> down = p.stacks();
    for (auto& s : down) std::reverse(s.begin(), s.end());
    const Weight a = oracle::BestInterleavingValue(inst.pickup(), p.stacks(), goal);
    const Weight b = oracle::BestInterleavingValue(inst.delivery(), down, goal);
    EXPECT_EQ(TourValue(inst.pickup(), t.tour_a), a);
    EXPECT_EQ(TourValue(inst.delivery(), t.tour_b), b);
    EXPECT_EQ(t.value, a + b);
    EXPECT_TRUE(IsConsistent(p, t.tour_a, t.tour_b));
  }
}

TEST(BestToursTest, ThreeStacks) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 7;
    const Instance inst = RandomInstance(n, Goal::kMin, rng, false).WithStacks(3);
    const Packing p = RandomPacking(n, 3, rng);
    const TourPair t = BestToursForPacking(inst, p);
    EXPECT_EQ(TourValue(inst.pickup(), t.tour_a),
              oracle::BestInterleavingValue(inst.pickup(), p.stacks(), Goal::kMin));
    EXPECT_TRUE(IsConsistent(p, t.tour_a, t.tour_b));
  }
}

TEST(BestToursTest, DominatesAnyConsistentPair) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const Goal goal = trial % 2 ? Goal::kMax : Goal::kMin;
    const Instance inst = RandomInstance(n, goal, rng, false);
    const Tour a(oracle::RandomTour(n, rng));
    const Tour b(oracle::RandomTour(n, rng));
    const StackCover cover = MinStacks(a, b);
    if (cover.count > 2) continue;
    const TourPair t = BestToursForPacking(inst, cover.witness.PaddedTo(2));
    EXPECT_TRUE(GoalOrder(goal).Better(t.value, SolutionValue(inst, a, b)));
  }
}

TEST(BestToursTest, RejectsMismatchedPackings) {
  const Instance inst(2, DistanceMatrix(4, 1), DistanceMatrix(4, 1), Goal::kMin);
  EXPECT_THROW(BestToursForPacking(inst, Packing({{1}, {2}})), StructuralError);
  EXPECT_THROW(BestToursForPacking(inst, Packing({{1}, {2}, {3}})), StructuralError);
}

TEST(BestInterleavingTest, RefusesHugeStateSpaces) {
  const int per_stack = 400;
  const DistanceMatrix d(3 * per_stack + 1);
  std::vector<std::vector<int>> stacks(3);
  for (int i = 0; i < 3 * per_stack; ++i) stacks[i % 3].push_back(i + 1);
  EXPECT_THROW(BestInterleaving(d, stacks, GoalOrder(Goal::kMin)), SizeLimitError);
}

}  // namespace
}  // namespace stsp
