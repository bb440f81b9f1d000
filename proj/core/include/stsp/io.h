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

// Plain-text formats, one matrix row per line with entries separated by
// spaces or tabs. Blank lines and lines whose first non-blank character is
// '#' are ignored.
//
// Instance:   STSP <k> <n> <MIN|MAX>
//             n+1 rows of the pickup matrix, then n+1 rows of the delivery
//             matrix, n+1 integers per row.
// TSP matrix: TSP <n> <MIN|MAX> followed by n+1 rows.
// Solution:   VALUE <v>
//             TOURA 0 <items> 0
//             TOURB 0 <items> 0
//             STACK1 <items bottom..top>   (one line per stack)

#ifndef STSP_IO_H_
#define STSP_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "stsp/model.h"

namespace stsp {

std::string WriteInstance(const Instance& instance);
// Throws ParseError carrying the offending line number.
Instance ReadInstance(std::string_view text);

struct TspMatrix {
  DistanceMatrix d;
  Goal goal = Goal::kMin;
};

std::string WriteTspMatrix(const DistanceMatrix& d, Goal goal);
TspMatrix ReadTspMatrix(std::string_view text);

std::string WriteSolution(const Solution& solution);

// A solution as written, before any structural validation.
struct SolutionRecord {
  Weight value = 0;
  std::vector<int> tour_a;  // depot markers stripped
  std::vector<int> tour_b;
  std::vector<std::vector<int>> stacks;
};

// Checks the syntax only (keywords, integers, depot markers); partition
// and consistency are left to the caller.
SolutionRecord ReadSolution(std::string_view text);

}  // namespace stsp

#endif  // STSP_IO_H_
