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

#include <set>

#include <gtest/gtest.h>

#include "stsp/errors.h"
#include "stsp/generators.h"

namespace stsp {
namespace {

// The tight-family rule written out per pair, for comparison.
bool TightPair(int u, int v, bool pickup) {
  if (v == u + 2 && u % 4 == 1) return true;
  if (v == u + 2 && u % 4 == 0) return pickup;
  if (v == u + 2 && u % 4 == 2) return !pickup;
  if (v == u + 1 && u % 2 == 1) return pickup;
  if (v == u + 1 && u % 2 == 0) return !pickup;
  return false;
}

TEST(GenTightTest, SmallCaseByHand) {
  const Instance inst = GenTight(4, 1, 0, Goal::kMax);
  EXPECT_EQ(inst.k(), 2);
  EXPECT_EQ(inst.goal(), Goal::kMax);
  const auto& a = inst.pickup();
  const auto& b = inst.delivery();
  EXPECT_EQ(a(1, 2), 1);
  EXPECT_EQ(a(1, 3), 1);
  EXPECT_EQ(a(3, 4), 1);
  EXPECT_EQ(a(2, 3), 0);
  EXPECT_EQ(b(2, 3), 1);
  EXPECT_EQ(b(2, 4), 1);
  EXPECT_EQ(b(1, 3), 1);
  EXPECT_EQ(b(1, 2), 0);
  EXPECT_EQ(a(0, 1), 0);
  EXPECT_EQ(b(0, 4), 0);
}

TEST(GenTightTest, FollowsTheRule) {
  for (int n = 1; n <= 12; ++n) {
    const Instance inst = GenTight(n, 2, 1, Goal::kMax);
    EXPECT_TRUE(inst.pickup().IsSymmetric());
    EXPECT_TRUE(inst.delivery().IsSymmetric());
    for (int u = 0; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        const bool in_range = u >= 1;
        EXPECT_EQ(inst.pickup()(u, v), in_range && TightPair(u, v, true) ? 2 : 1);
        EXPECT_EQ(inst.delivery()(u, v), in_range && TightPair(u, v, false) ? 2 : 1);
      }
    }
  }
}

TEST(GenTightTest, RejectsBadArguments) {
  EXPECT_THROW(GenTight(0, 1, 2, Goal::kMin), StructuralError);
  EXPECT_THROW(GenTight(4, -1, 2, Goal::kMin), Error);
}

TEST(ParseWeightSetTest, Forms) {
  EXPECT_EQ(ParseWeightSet("0..3").values, (std::vector<Weight>{0, 1, 2, 3}));
  EXPECT_EQ(ParseWeightSet("2,1,2").values, (std::vector<Weight>{1, 2}));
  EXPECT_EQ(ParseWeightSet("7").values, (std::vector<Weight>{7}));
  for (const char* bad : {"", "3..1", "a", "1,,2", "-1..2", "1..", ",", "1,x"}) {
    EXPECT_THROW(ParseWeightSet(bad), ParseError) << bad;
  }
}

TEST(GenRandomTest, DeterministicAndInRange) {
  const WeightSet w = ParseWeightSet("1,2");
  const Instance x = GenRandom(9, w, 42, Goal::kMin);
  EXPECT_EQ(x, GenRandom(9, w, 42, Goal::kMin));
  EXPECT_NE(x, GenRandom(9, w, 43, Goal::kMin));
  EXPECT_TRUE(x.pickup().IsSymmetric());
  std::set<Weight> seen;
  for (int u = 0; u <= 9; ++u) {
    for (int v = 0; v <= 9; ++v) {
      if (u == v) continue;
      seen.insert(x.pickup()(u, v));
      seen.insert(x.delivery()(u, v));
    }
  }
  EXPECT_EQ(seen, (std::set<Weight>{1, 2}));
  EXPECT_EQ(GenRandom(3, w, 1, Goal::kMax, 5).k(), 5);
}

TEST(GenRandomTest, CoversTheWholeRange) {
  const Instance x = GenRandom(12, ParseWeightSet("0..9"), 5, Goal::kMax);
  std::set<Weight> seen;
  for (int u = 0; u <= 12; ++u) {
    for (int v = u + 1; v <= 12; ++v) seen.insert(x.pickup()(u, v));
  }
  EXPECT_EQ(seen.size(), 10u);
}

}  // namespace
}  // namespace stsp
