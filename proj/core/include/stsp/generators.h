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

#ifndef STSP_GENERATORS_H_
#define STSP_GENERATORS_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "stsp/model.h"

namespace stsp {

// The tight family: dα(u,v) = a for 1 <= u < v <= n when
//   v = u+2, u = 1 mod 4;          v = u+2, u = 0 mod 4, α = A;
//   v = u+2, u = 2 mod 4, α = B;   v = u+1, u odd, α = A;
//   v = u+1, u even, α = B;
// b otherwise (depot edges included). Both matrices are symmetric.
Instance GenTight(int n, Weight a, Weight b, Goal goal);

// Distinct weights sorted ascending.
struct WeightSet {
  std::vector<Weight> values;
};

// "lo..hi" or a comma-separated list such as "1,2". Throws ParseError on
// malformed text, negative or empty sets.
WeightSet ParseWeightSet(std::string_view text);

// Symmetric instance with off-diagonal entries drawn uniformly from
// `weights`. The pickup matrix is filled row by row over u < v, then the
// delivery matrix. Output depends only on the arguments.
Instance GenRandom(int n, const WeightSet& weights, std::uint64_t seed,
                   Goal goal, int k = 2);

}  // namespace stsp

#endif  // STSP_GENERATORS_H_
