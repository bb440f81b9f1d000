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

#include "stsp/model.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "stsp/errors.h"

namespace stsp {

std::string_view GoalName(Goal goal) {
  return goal == Goal::kMax ? "MAX" : "MIN";
}

Goal ParseGoal(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "MIN") return Goal::kMin;
  if (upper == "MAX") return Goal::kMax;
  throw ParseError(0, "unknown goal '" + std::string(text) +
                          "' (expected MIN or MAX)");
}

Weight GoalOrder::Opt(std::span<const Weight> values) const {
  Weight best = values.front();
  for (Weight v : values.subspan(1)) best = Opt(best, v);
  return best;
}

Weight GoalOrder::Worst() const {
  return goal_ == Goal::kMax ? std::numeric_limits<Weight>::min()
                             : std::numeric_limits<Weight>::max();
}

DistanceMatrix::DistanceMatrix(int size, Weight fill)
    : size_(size),
      data_(static_cast<std::size_t>(size) * size, fill) {
  for (int i = 0; i < size; ++i) data_[static_cast<std::size_t>(i) * size + i] = 0;
}

DistanceMatrix DistanceMatrix::FromRows(
    const std::vector<std::vector<Weight>>& rows) {
  const int size = static_cast<int>(rows.size());
  DistanceMatrix d(size);
  for (int i = 0; i < size; ++i) {
    if (static_cast<int>(rows[i].size()) != size) {
      throw StructuralError("row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(size));
    }
    for (int j = 0; j < size; ++j) d.Set(i, j, rows[i][j]);
  }
  return d;
}

void DistanceMatrix::Set(int from, int to, Weight value) {
  if (value < 0) {
    throw StructuralError("negative distance at (" + std::to_string(from) +
                          ", " + std::to_string(to) + ")");
  }
  data_[static_cast<std::size_t>(from) * size_ + to] = value;
}

void DistanceMatrix::SetSymmetric(int u, int v, Weight value) {
  Set(u, v, value);
  Set(v, u, value);
}

bool DistanceMatrix::IsSymmetric() const {
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Weight>> DistanceMatrix::Rows() const {
  std::vector<std::vector<Weight>> rows(size_);
  for (int i = 0; i < size_; ++i) {
    rows[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i) * size_,
                   data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * size_);
  }
  return rows;
}

DistanceMatrix ReverseNetwork(const DistanceMatrix& d) {
  DistanceMatrix r(d.size());
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) r.Set(i, j, d(j, i));
  }
  return r;
}

Tour::Tour(std::vector<int> items) : items_(std::move(items)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int item : items_) {
    if (item < 1 || item > n || seen[item]) {
      throw StructuralError("tour is not a permutation of {1.." +
                            std::to_string(n) + "}");
    }
    seen[item] = true;
  }
}

Tour Tour::Identity(int n) {
  std::vector<int> items(n);
  std::iota(items.begin(), items.end(), 1);
  return Tour(std::move(items));
}

Tour Tour::Reversed() const {
  Tour r;
  r.items_.assign(items_.rbegin(), items_.rend());
  return r;
}

std::vector<int> Tour::Positions() const {
  std::vector<int> pos(items_.size() + 1, -1);
  for (int i = 0; i < size(); ++i) pos[items_[i]] = i;
  return pos;
}

Packing::Packing(std::vector<std::vector<int>> stacks)
    : stacks_(std::move(stacks)) {
  for (const auto& s : stacks_) num_items_ += static_cast<int>(s.size());
  std::vector<bool> seen(num_items_ + 1, false);
  for (const auto& s : stacks_) {
    for (int item : s) {
      if (item < 1 || item > num_items_ || seen[item]) {
        throw StructuralError("stacks do not partition {1.." +
                              std::to_string(num_items_) + "}");
      }
      seen[item] = true;
    }
  }
}

int Packing::NonEmptyStacks() const {
  return static_cast<int>(std::count_if(
      stacks_.begin(), stacks_.end(), [](const auto& s) { return !s.empty(); }));
}

Packing Packing::PaddedTo(int k) const {
  Packing p = *this;
  if (p.num_stacks() < k) p.stacks_.resize(k);
  return p;
}

Instance::Instance(int k, DistanceMatrix pickup, DistanceMatrix delivery,
                   Goal goal)
    : k_(k),
      pickup_(std::move(pickup)),
      delivery_(std::move(delivery)),
      goal_(goal) {
  if (pickup_.size() < 2) {
    throw StructuralError("an instance needs at least one item");
  }
  if (delivery_.size() != pickup_.size()) {
    throw StructuralError("pickup and delivery networks differ in size");
  }
  if (k_ < 1) throw StructuralError("stack count must be positive");
  for (int i = 0; i < pickup_.size(); ++i) {
    if (pickup_(i, i) != 0 || delivery_(i, i) != 0) {
      throw StructuralError("nonzero diagonal entry at vertex " +
                            std::to_string(i));
    }
  }
}

Instance Instance::WithStacks(int k) const {
  return Instance(k, pickup_, delivery_, goal_);
}

Weight TourValue(const DistanceMatrix& d, const Tour& tour) {
  if (tour.size() + 1 != d.size()) {
    throw StructuralError("tour over " + std::to_string(tour.size()) +
                          " items does not fit a matrix of size " +
                          std::to_string(d.size()));
  }
  Weight total = 0;
  int prev = 0;
  for (int item : tour.items()) {
    total += d(prev, item);
    prev = item;
  }
  return total + d(prev, 0);
}

Weight SolutionValue(const Instance& instance, const Tour& tour_a,
                     const Tour& tour_b) {
  return TourValue(instance.pickup(), tour_a) +
         TourValue(instance.delivery(), tour_b);
}

}  // namespace stsp
