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

#ifndef STSP_REDUCTIONS_H_
#define STSP_REDUCTIONS_H_

#include "stsp/model.h"

namespace stsp {

// One stack holding t bottom-up (remaining stacks empty), pickup along t,
// delivery along its reverse. Always consistent.
Solution SingleTourSolution(const Instance& instance, const Tour& t);

// The better of SingleTourSolution(t_a) and SingleTourSolution(reverse(t_b)),
// preferring t_a on ties.
Solution CombineTspTours(const Instance& instance, const Tour& t_a,
                         const Tour& t_b);

// The instance (d, d^-1) with two stacks.
Instance TspToStsp(const DistanceMatrix& d, Goal goal);

// d(i, i') = dA(i, i') + dB(i', i): a tour on it prices the one-stack
// solution that picks up along the tour and delivers along its reverse.
DistanceMatrix CollapseOneStack(const Instance& instance);

}  // namespace stsp

#endif  // STSP_REDUCTIONS_H_
