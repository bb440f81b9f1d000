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

#include "stsp/feasibility.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "stsp/errors.h"

namespace stsp {
namespace {

void RequireSameItems(const Tour& a, const Tour& b) {
  if (a.size() != b.size()) {
    throw StructuralError("pickup tour has " + std::to_string(a.size()) +
                          " items, delivery tour has " +
                          std::to_string(b.size()));
  }
}

// pi[r] = delivery rank of the item picked up at rank r.
std::vector<int> RankMap(const Tour& a, const Tour& b) {
  const std::vector<int> pos_b = b.Positions();
  std::vector<int> pi(a.size());
  for (int r = 0; r < a.size(); ++r) pi[r] = pos_b[a[r]];
  return pi;
}

}  // namespace

bool IsConsistent(const Packing& packing, const Tour& tour_a,
                  const Tour& tour_b) {
  RequireSameItems(tour_a, tour_b);
  if (packing.num_items() != tour_a.size()) {
    throw StructuralError("packing holds " +
                          std::to_string(packing.num_items()) +
                          " items, tours visit " +
                          std::to_string(tour_a.size()));
  }
  const std::vector<int> pos_a = tour_a.Positions();
  const std::vector<int> pos_b = tour_b.Positions();
  // Checking adjacent positions suffices: both orders are transitive.
  for (const auto& stack : packing.stacks()) {
    for (std::size_t j = 1; j < stack.size(); ++j) {
      const int below = stack[j - 1];
      const int above = stack[j];
      if (pos_a[below] > pos_a[above] || pos_b[below] < pos_b[above]) {
        return false;
      }
    }
  }
  return true;
}

ConflictGraph::ConflictGraph(int n, std::vector<Edge> edges)
    : n_(n),
      edges_(std::move(edges)),
      adjacent_(n + 1, std::vector<bool>(n + 1, false)) {
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    adjacent_[e.u][e.v] = true;
    adjacent_[e.v][e.u] = true;
  }
}

bool ConflictGraph::HasEdge(int i, int j) const { return adjacent_[i][j]; }

ConflictGraph BuildConflictGraph(const Tour& tour_a, const Tour& tour_b) {
  RequireSameItems(tour_a, tour_b);
  const int n = tour_a.size();
  const std::vector<int> pos_a = tour_a.Positions();
  const std::vector<int> pos_b = tour_b.Positions();
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((pos_a[i] < pos_a[j]) == (pos_b[i] < pos_b[j])) {
        edges.emplace_back(i, j);
      }
    }
  }
  return ConflictGraph(n, std::move(edges));
}

StackCover MinStacks(const Tour& tour_a, const Tour& tour_b) {
  RequireSameItems(tour_a, tour_b);
  const std::vector<int> pi = RankMap(tour_a, tour_b);
  // Greedy cover of pi by decreasing subsequences: each value goes on the
  // leftmost pile whose top exceeds it. Pile tops stay increasing from left
  // to right, and the pile count equals the longest increasing subsequence.
  std::vector<int> tops;
  std::vector<std::vector<int>> piles;
  for (int r = 0; r < static_cast<int>(pi.size()); ++r) {
    auto it = std::upper_bound(tops.begin(), tops.end(), pi[r]);
    const auto pile = static_cast<std::size_t>(it - tops.begin());
    if (it == tops.end()) {
      tops.push_back(pi[r]);
      piles.emplace_back();
    } else {
      *it = pi[r];
    }
    piles[pile].push_back(tour_a[r]);
  }
  StackCover cover;
  cover.count = static_cast<int>(piles.size());
  cover.witness = Packing(std::move(piles));
  return cover;
}

bool FitsInStacks(std::span<const int> b_position_by_a_rank, int k) {
  std::vector<int> tails;
  tails.reserve(k + 1);
  for (int x : b_position_by_a_rank) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      if (static_cast<int>(tails.size()) == k) return false;
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return true;
}

ChainCollection::ChainCollection(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw StructuralError("duplicate edge in chain collection");
  }
  std::vector<int> degree(n + 1, 0);
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v > n || e.u == e.v) {
      throw StructuralError("chain edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} is not a valid pair");
    }
    if (++degree[e.u] > 2 || ++degree[e.v] > 2) {
      throw StructuralError("chain collection has a vertex of degree > 2");
    }
    const int ru = find(e.u);
    const int rv = find(e.v);
    if (ru == rv) throw StructuralError("chain collection contains a cycle");
    parent[ru] = rv;
  }
}

const char* ViolationName(Violation v) {
  switch (v) {
    case Violation::kNone:
      return "NONE";
    case Violation::kJump:
      return "JUMP";
    case Violation::kCrossing:
      return "CROSSING";
    case Violation::kWayBack:
      return "WAY_BACK";
  }
  return "?";
}

}  // namespace stsp
