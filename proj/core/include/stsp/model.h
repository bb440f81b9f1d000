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

// Data model for the multiple-stack TSP: two complete networks over the
// vertices {0..n} (0 is the depot), a stack count, and an optimization goal.
// A solution is a packing of the items {1..n} into stacks together with a
// pickup tour and a delivery tour that respect the stacks' LIFO discipline.

#ifndef STSP_MODEL_H_
#define STSP_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stsp {

using Weight = std::int64_t;

enum class Goal { kMin, kMax };

std::string_view GoalName(Goal goal);  // "MIN" / "MAX"
Goal ParseGoal(std::string_view text);  // case-insensitive; throws ParseError

// Goal-directed comparisons. Better(x, y) is x ⪰ y: x >= y when maximizing,
// x <= y when minimizing.
class GoalOrder {
 public:
  explicit GoalOrder(Goal goal) : goal_(goal) {}

  Goal goal() const { return goal_; }
  bool Better(Weight x, Weight y) const {
    return goal_ == Goal::kMax ? x >= y : x <= y;
  }
  bool StrictlyBetter(Weight x, Weight y) const {
    return goal_ == Goal::kMax ? x > y : x < y;
  }
  Weight Opt(Weight x, Weight y) const { return Better(x, y) ? x : y; }
  // Opt over a nonempty range.
  Weight Opt(std::span<const Weight> values) const;
  // The neutral element of Opt: strictly worse than every reachable value.
  Weight Worst() const;

 private:
  Goal goal_;
};

// Square matrix of non-negative integer distances, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int size, Weight fill = 0);
  // Throws StructuralError if rows are ragged or an entry is negative.
  static DistanceMatrix FromRows(const std::vector<std::vector<Weight>>& rows);

  int size() const { return size_; }
  Weight operator()(int from, int to) const {
    return data_[static_cast<std::size_t>(from) * size_ + to];
  }
  void Set(int from, int to, Weight value);
  // Sets both (u, v) and (v, u).
  void SetSymmetric(int u, int v, Weight value);

  bool IsSymmetric() const;
  std::vector<std::vector<Weight>> Rows() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int size_ = 0;
  std::vector<Weight> data_;
};

// d^{-1}(i, i') = d(i', i).
DistanceMatrix ReverseNetwork(const DistanceMatrix& d);

// A depot-anchored tour: the visiting order of the items {1..n}. The depot is
// implicit at both ends.
class Tour {
 public:
  Tour() = default;
  // Throws StructuralError unless `items` is a permutation of {1..n}.
  explicit Tour(std::vector<int> items);
  static Tour Identity(int n);

  int size() const { return static_cast<int>(items_.size()); }
  std::span<const int> items() const { return items_; }
  int operator[](int i) const { return items_[i]; }

  Tour Reversed() const;
  // positions()[item] = 0-based rank of item in the tour; index 0 unused.
  std::vector<int> Positions() const;

  friend bool operator==(const Tour&, const Tour&) = default;
  friend auto operator<=>(const Tour&, const Tour&) = default;

 private:
  std::vector<int> items_;
};

// An ordered partition of {1..n} into stacks; index 0 of each stack is the
// bottom. Empty stacks are allowed.
class Packing {
 public:
  Packing() = default;
  // Throws StructuralError unless the stacks partition {1..n} for
  // n = total item count.
  explicit Packing(std::vector<std::vector<int>> stacks);

  int num_stacks() const { return static_cast<int>(stacks_.size()); }
  int num_items() const { return num_items_; }
  const std::vector<int>& stack(int s) const { return stacks_[s]; }
  const std::vector<std::vector<int>>& stacks() const { return stacks_; }
  int NonEmptyStacks() const;
  // Same stacks, with empty stacks appended up to `k`.
  Packing PaddedTo(int k) const;

  friend bool operator==(const Packing&, const Packing&) = default;

 private:
  std::vector<std::vector<int>> stacks_;
  int num_items_ = 0;
};

class Instance {
 public:
  // Throws StructuralError on: n < 1, k < 1, matrix size != n + 1, nonzero
  // diagonal.
  Instance(int k, DistanceMatrix pickup, DistanceMatrix delivery, Goal goal);

  int n() const { return pickup_.size() - 1; }
  int k() const { return k_; }
  const DistanceMatrix& pickup() const { return pickup_; }
  const DistanceMatrix& delivery() const { return delivery_; }
  Goal goal() const { return goal_; }
  GoalOrder order() const { return GoalOrder(goal_); }

  Instance WithStacks(int k) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int k_;
  DistanceMatrix pickup_;
  DistanceMatrix delivery_;
  Goal goal_;
};

// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool Has(int x) const { return u == x || v == x; }
  int Other(int x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Solution {
  Packing packing;
  Tour tour_a;
  Tour tour_b;
  Weight value = 0;
};

// d[0][t1] + sum d[ti][ti+1] + d[tn][0]. Throws StructuralError if the tour
// does not cover exactly the items of the matrix.
Weight TourValue(const DistanceMatrix& d, const Tour& tour);

Weight SolutionValue(const Instance& instance, const Tour& tour_a,
                     const Tour& tour_b);

}  // namespace stsp

#endif  // STSP_MODEL_H_
