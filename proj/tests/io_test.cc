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
#include <string>

#include <gtest/gtest.h>

#include "oracles.h"
#include "stsp/errors.h"
#include "stsp/generators.h"
#include "stsp/heuristic.h"
#include "stsp/io.h"

namespace stsp {
namespace {

int ParseErrorLine(const std::string& text) {
  try {
    ReadInstance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(InstanceIoTest, WritesTheDocumentedLayout) {
  DistanceMatrix a(2), b(2);
  a.SetSymmetric(0, 1, 3);
  b.Set(0, 1, 4);
  b.Set(1, 0, 5);
  EXPECT_EQ(WriteInstance(Instance(2, a, b, Goal::kMax)),
            "STSP 2 1 MAX\n0 3\n3 0\n0 4\n5 0\n");
}

TEST(InstanceIoTest, RoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 9;
    const Instance inst(1 + trial % 3, oracle::RandomMatrix(n + 1, 0, 99, rng),
                        oracle::RandomMatrix(n + 1, 0, 99, rng),
                        trial % 2 ? Goal::kMax : Goal::kMin);
    const std::string text = WriteInstance(inst);
    EXPECT_EQ(ReadInstance(text), inst);
    EXPECT_EQ(WriteInstance(ReadInstance(text)), text);
  }
}

TEST(InstanceIoTest, CommentsAndFreeWhitespace) {
  const Instance inst =
      ReadInstance("# header\nSTSP 2 1 min\n  # pickup\n0  1\n1 0\n\n0\t2\n2 0\n");
  EXPECT_EQ(inst.goal(), Goal::kMin);
  EXPECT_EQ(inst.pickup()(0, 1), 1);
  EXPECT_EQ(inst.delivery()(1, 0), 2);
}

TEST(InstanceIoTest, ParseErrorsCarryLines) {
  EXPECT_EQ(ParseErrorLine(""), 1);
  EXPECT_EQ(ParseErrorLine("TSP 2 1 MIN\n"), 1);
  EXPECT_EQ(ParseErrorLine("STSP 2 1 BEST\n"), 1);
  EXPECT_EQ(ParseErrorLine("STSP 2 x MIN\n"), 1);
  EXPECT_EQ(ParseErrorLine("STSP 2 1 MIN\n0 1\n1 0\n0 1 5\n1 0\n"), 4);
  EXPECT_EQ(ParseErrorLine("STSP 2 1 MIN\n0 1\n1 0\n0 -1\n1 0\n"), 4);
  EXPECT_EQ(ParseErrorLine("STSP 2 1 MIN\n0 1\n1 0\n0 1\n"), 5);
  EXPECT_EQ(ParseErrorLine("STSP 2 1 MIN\n1 1\n1 0\n0 1\n1 0\n"), 2);
  EXPECT_EQ(ParseErrorLine("STSP 2 1 MIN\n0 1\n1 0\n0 1\n1 0\nextra\n"), 6);
  EXPECT_EQ(ParseErrorLine("STSP 0 1 MIN\n0 1\n1 0\n0 1\n1 0\n"), 1);
}

TEST(TspIoTest, RoundTripAndErrors) {
  std::mt19937_64 rng(42);
  const DistanceMatrix d = oracle::RandomMatrix(4, 0, 9, rng);
  const TspMatrix back = ReadTspMatrix(WriteTspMatrix(d, Goal::kMax));
  EXPECT_EQ(back.d, d);
  EXPECT_EQ(back.goal, Goal::kMax);
  EXPECT_THROW(ReadTspMatrix("STSP 2 1 MIN\n"), ParseError);
  EXPECT_THROW(ReadTspMatrix("TSP 1 MIN\n0 1\n"), ParseError);
}

TEST(SolutionIoTest, RoundTrip) {
  const Instance inst = GenRandom(6, ParseWeightSet("0..9"), 3, Goal::kMin);
  const Solution s = SolveHeuristic(inst);
  const std::string text = WriteSolution(s);
  EXPECT_EQ(text.rfind("VALUE ", 0), 0u);
  const SolutionRecord r = ReadSolution(text);
  EXPECT_EQ(r.value, s.value);
  EXPECT_EQ(r.tour_a, std::vector<int>(s.tour_a.items().begin(), s.tour_a.items().end()));
  EXPECT_EQ(r.tour_b, std::vector<int>(s.tour_b.items().begin(), s.tour_b.items().end()));
  EXPECT_EQ(r.stacks, s.packing.stacks());
}

TEST(SolutionIoTest, SyntaxErrors) {
  EXPECT_THROW(ReadSolution(""), ParseError);
  EXPECT_THROW(ReadSolution("VALUE 3\nTOURA 1 2 0\nTOURB 0 2 1 0\nSTACK1 1 2\n"), ParseError);
  EXPECT_THROW(ReadSolution("VALUE x\nTOURA 0 1 0\nTOURB 0 1 0\nSTACK1 1\n"), ParseError);
  EXPECT_THROW(ReadSolution("VALUE 3\nTOURA 0 1 0\nSTACK1 1\n"), ParseError);
  // Structure is not checked here.
  EXPECT_NO_THROW(ReadSolution("VALUE 3\nTOURA 0 1 0\nTOURB 0 1 0\nSTACK1 1 1\n"));
}

}  // namespace
}  // namespace stsp
