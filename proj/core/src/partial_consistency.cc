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
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stsp/errors.h"
#include "stsp/feasibility.h"

namespace stsp {
namespace {

// The depot is split into a start copy S (position 0 of both stacks) and an
// end copy T (position p+1 of both stacks). Each depot edge of the chain
// collection is attached to one of the copies; the collection is consistent
// iff some attachment satisfies all three conditions.
class SplitView {
 public:
  SplitView(const Packing& packing, int n)
      : n_(n), stack_of_(n + 3, -1), index_of_(n + 3, 0) {
    for (int s = 0; s < 2; ++s) {
      const auto& stack = packing.stack(s);
      height_[s] = static_cast<int>(stack.size());
      for (int j = 0; j < height_[s]; ++j) {
        stack_of_[stack[j]] = s;
        index_of_[stack[j]] = j + 1;
      }
    }
    adjacency_.assign(n + 3, {});
  }

  int start() const { return n_ + 1; }
  int end() const { return n_ + 2; }
  bool IsDepot(int v) const { return v > n_; }

  void Reset() {
    for (auto& a : adjacency_) a.clear();
    edges_.clear();
  }
  void AddEdge(int u, int v) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    edges_.insert(Edge(u, v));
  }
  bool HasEdge(int u, int v) const { return edges_.count(Edge(u, v)) > 0; }
  const std::vector<int>& Neighbors(int v) const { return adjacency_[v]; }

  // Depot copies belong to both stacks.
  bool InStack(int v, int s) const { return IsDepot(v) || stack_of_[v] == s; }
  int Index(int v, int s) const {
    if (v == start()) return 0;
    if (v == end()) return height_[s] + 1;
    return index_of_[v];
  }
  // Vertex at extended position j of stack s (0 and p+1 are the depot).
  int At(int s, int j, const Packing& packing) const {
    if (j == 0) return start();
    if (j == height_[s] + 1) return end();
    return packing.stack(s)[j - 1];
  }
  int height(int s) const { return height_[s]; }

 private:
  int n_;
  std::array<int, 2> height_{};
  std::vector<int> stack_of_;
  std::vector<int> index_of_;
  std::vector<std::vector<int>> adjacency_;
  std::set<Edge> edges_;
};

// From `from` (a member of stack s), leave through `first` and follow the
// chain while it stays on items of the other stack. Returns the first member
// of stack s reached, or -1.
int FollowRun(const SplitView& view, int from, int first, int s) {
  int prev = from;
  int cur = first;
  while (true) {
    if (view.InStack(cur, s)) return cur;
    int next = -1;
    for (int w : view.Neighbors(cur)) {
      if (w != prev) next = w;
    }
    if (next < 0) return -1;
    prev = cur;
    cur = next;
  }
}

bool HasJump(const SplitView& view, const Packing& packing) {
  for (int s = 0; s < 2; ++s) {
    for (int j = 0; j <= view.height(s) + 1; ++j) {
      const int u = view.At(s, j, packing);
      for (int w : view.Neighbors(u)) {
        const int reached = FollowRun(view, u, w, s);
        if (reached < 0) continue;
        const int other = view.Index(reached, s);
        if (other != j + 1 && other != j - 1) return true;
      }
    }
  }
  return false;
}

bool HasCrossing(const SplitView& view, const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> cross;
  for (const Edge& e : edges) {
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (view.InStack(x, 0) && view.InStack(y, 1) &&
          !(view.IsDepot(x) && view.IsDepot(y))) {
        cross.emplace_back(view.Index(x, 0), view.Index(y, 1));
      }
    }
  }
  std::sort(cross.begin(), cross.end());
  for (std::size_t a = 0; a < cross.size(); ++a) {
    for (std::size_t b = a + 1; b < cross.size(); ++b) {
      const auto [j, h] = cross[a];
      const auto [j2, h2] = cross[b];
      if (j == j2 || h == h2) continue;
      if ((j < j2) != (h < h2)) return true;
    }
  }
  return false;
}

bool HasWayBack(const SplitView& view, const Packing& packing) {
  for (int j = 0; j <= view.height(0); ++j) {
    const int a0 = view.At(0, j, packing);
    const int a1 = view.At(0, j + 1, packing);
    if (!view.HasEdge(a0, a1)) continue;
    for (int h = 0; h <= view.height(1); ++h) {
      const int b0 = view.At(1, h, packing);
      const int b1 = view.At(1, h + 1, packing);
      if (!view.HasEdge(b0, b1)) continue;
      if ((a0 != b0 && view.HasEdge(a0, b0)) ||
          (a1 != b1 && view.HasEdge(a1, b1))) {
        return true;
      }
    }
  }
  return false;
}

Violation FirstViolation(const SplitView& view, const Packing& packing,
                         const std::vector<Edge>& split_edges) {
  if (HasJump(view, packing)) return Violation::kJump;
  if (HasCrossing(view, split_edges)) return Violation::kCrossing;
  if (HasWayBack(view, packing)) return Violation::kWayBack;
  return Violation::kNone;
}

}  // namespace

PartialConsistency CheckPartialConsistency(const ChainCollection& chains,
                                           const Packing& packing) {
  if (packing.num_stacks() != 2) {
    throw UnsupportedParameterError(
        "partial consistency is defined for 2 stacks, got " +
        std::to_string(packing.num_stacks()));
  }
  const int n = chains.n();
  if (packing.num_items() != n) {
    throw StructuralError("packing holds " +
                          std::to_string(packing.num_items()) +
                          " items, chains span " + std::to_string(n));
  }
  if (chains.empty()) return {};

  std::vector<Edge> item_edges;
  std::vector<int> depot_neighbors;
  for (const Edge& e : chains.edges()) {
    if (e.u == 0) {
      depot_neighbors.push_back(e.v);
    } else {
      item_edges.push_back(e);
    }
  }

  // Attachments of the depot edges to (S, T), lower neighbor to S first.
  std::vector<std::vector<std::pair<int, bool>>> attachments;
  if (depot_neighbors.empty()) {
    attachments.push_back({});
  } else if (depot_neighbors.size() == 1) {
    attachments.push_back({{depot_neighbors[0], true}});
    attachments.push_back({{depot_neighbors[0], false}});
  } else {
    attachments.push_back({{depot_neighbors[0], true}, {depot_neighbors[1], false}});
    attachments.push_back({{depot_neighbors[0], false}, {depot_neighbors[1], true}});
  }

  SplitView view(packing, n);
  Violation first = Violation::kNone;
  for (const auto& attachment : attachments) {
    view.Reset();
    std::vector<Edge> split_edges = item_edges;
    for (const Edge& e : item_edges) view.AddEdge(e.u, e.v);
    for (auto [item, to_start] : attachment) {
      const int depot = to_start ? view.start() : view.end();
      view.AddEdge(item, depot);
      split_edges.emplace_back(item, depot);
    }
    const Violation v = FirstViolation(view, packing, split_edges);
    if (v == Violation::kNone) return {};
    if (first == Violation::kNone) first = v;
  }
  return {false, first};
}

}  // namespace stsp
