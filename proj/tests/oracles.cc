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

#include "oracles.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace stsp::oracle {
namespace {

bool Prefer(Goal goal, Weight x, Weight y) {
  return goal == Goal::kMax ? x > y : x < y;
}

}  // namespace

Weight SumTour(const DistanceMatrix& d, const std::vector<int>& items) {
  Weight total = 0;
  int prev = 0;
  for (int i : items) {
    total += d(prev, i);
    prev = i;
  }
  return total + d(prev, 0);
}

std::vector<std::vector<bool>> ConflictMatrix(const std::vector<int>& a,
                                              const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  auto before = [](const std::vector<int>& t, int x, int y) {
    return std::find(t.begin(), t.end(), x) < std::find(t.begin(), t.end(), y);
  };
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && before(a, i, j) == before(b, i, j)) adj[i][j] = true;
    }
  }
  return adj;
}

int ChromaticNumber(const std::vector<std::vector<bool>>& adjacent) {
  const int n = static_cast<int>(adjacent.size()) - 1;
  if (n <= 0) return 0;
  std::vector<int> color(n + 1, -1);
  for (int k = 1;; ++k) {
    std::function<bool(int)> place = [&](int v) {
      if (v > n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 1; u < v && ok; ++u) ok = !(adjacent[v][u] && color[u] == c);
        if (!ok) continue;
        color[v] = c;
        if (place(v + 1)) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(1)) return k;
  }
}

bool LifoHolds(const std::vector<std::vector<int>>& stacks,
               const std::vector<int>& a, const std::vector<int>& b) {
  auto pos = [](const std::vector<int>& t, int x) {
    return std::find(t.begin(), t.end(), x) - t.begin();
  };
  for (const auto& s : stacks) {
    for (std::size_t lo = 0; lo < s.size(); ++lo) {
      for (std::size_t hi = lo + 1; hi < s.size(); ++hi) {
        if (!(pos(a, s[lo]) < pos(a, s[hi]) && pos(b, s[lo]) > pos(b, s[hi]))) {
          return false;
        }
      }
    }
  }
  return true;
}

Weight MatchingOptimum(const DistanceMatrix& d, Goal goal) {
  const int v = d.size();
  const int full = (1 << v) - 1;
  // best[mask] = (edges, weight) over vertices in mask.
  std::vector<std::pair<int, Weight>> best(full + 1, {0, 0});
  for (int mask = 1; mask <= full; ++mask) {
    const int u = std::countr_zero(static_cast<unsigned>(mask));
    const int rest = mask & ~(1 << u);
    auto pick = best[rest];
    for (int w = u + 1; w < v; ++w) {
      if (!(rest >> w & 1)) continue;
      auto cand = best[rest & ~(1 << w)];
      cand.first += 1;
      cand.second += d(u, w);
      if (cand.first > pick.first ||
          (cand.first == pick.first && Prefer(goal, cand.second, pick.second))) {
        pick = cand;
      }
    }
    best[mask] = pick;
  }
  return best[full].second;
}

Weight BestInterleavingValue(const DistanceMatrix& d,
                             const std::vector<std::vector<int>>& sequences,
                             Goal goal) {
  std::vector<std::size_t> next(sequences.size(), 0);
  std::vector<int> tour;
  bool have = false;
  Weight best = 0;
  std::function<void()> rec = [&]() {
    bool extended = false;
    for (std::size_t s = 0; s < sequences.size(); ++s) {
      if (next[s] == sequences[s].size()) continue;
      extended = true;
      tour.push_back(sequences[s][next[s]++]);
      rec();
      --next[s];
      tour.pop_back();
    }
    if (!extended) {
      const Weight v = SumTour(d, tour);
      if (!have || Prefer(goal, v, best)) best = v;
      have = true;
    }
  };
  rec();
  return best;
}

bool CompletionExists(const std::vector<Edge>& edges,
                      const std::vector<std::vector<int>>& stacks) {
  const auto& s1 = stacks[0];
  const auto& s2 = stacks[1];
  const int n = static_cast<int>(s1.size() + s2.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != static_cast<int>(s1.size())) continue;
    std::vector<int> seq{0};
    std::size_t x = 0, y = 0;
    for (int i = 0; i < n; ++i) seq.push_back((mask >> i & 1) ? s1[x++] : s2[y++]);
    seq.push_back(0);
    std::set<std::pair<int, int>> tour;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      tour.insert(std::minmax(seq[i], seq[i + 1]));
    }
    bool all = true;
    for (const Edge& e : edges) all = all && tour.count({e.u, e.v}) > 0;
    if (all) return true;
  }
  return false;
}

Weight PackingFirstOptimum(const Instance& instance) {
  const int n = instance.n();
  const int k = instance.k();
  const Goal goal = instance.goal();
  bool have = false;
  Weight best = 0;
  // Assign each item a stack, then try every order within every stack.
  std::vector<int> assign(n + 1, 0);
  std::function<void(int)> rec = [&](int item) {
    if (item <= n) {
      for (int s = 0; s < k; ++s) {
        assign[item] = s;
        rec(item + 1);
      }
      return;
    }
    std::vector<std::vector<int>> stacks(k);
    for (int i = 1; i <= n; ++i) stacks[assign[i]].push_back(i);
    std::function<void(int)> orders = [&](int s) {
      if (s == k) {
        std::vector<std::vector<int>> down = stacks;
        for (auto& st : down) std::reverse(st.begin(), st.end());
        const Weight v =
            BestInterleavingValue(instance.pickup(), stacks, goal) +
            BestInterleavingValue(instance.delivery(), down, goal);
        if (!have || Prefer(goal, v, best)) best = v;
        have = true;
        return;
      }
      std::sort(stacks[s].begin(), stacks[s].end());
      do {
        orders(s + 1);
      } while (std::next_permutation(stacks[s].begin(), stacks[s].end()));
    };
    orders(0);
  };
  rec(1);
  return best;
}

Weight TspOptimum(const DistanceMatrix& d, Goal goal) {
  const int n = d.size() - 1;
  std::vector<bool> used(n + 1, false);
  bool have = false;
  Weight best = 0;
  std::function<void(int, int, Weight)> rec = [&](int depth, int last, Weight acc) {
    if (depth == n) {
      const Weight v = acc + d(last, 0);
      if (!have || Prefer(goal, v, best)) best = v;
      have = true;
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      rec(depth + 1, i, acc + d(last, i));
      used[i] = false;
    }
  };
  rec(0, 0, 0);
  return best;
}

std::vector<int> RandomTour(int n, std::mt19937_64& rng) {
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(t[i], t[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  return t;
}

DistanceMatrix RandomSymmetric(int size, Weight lo, Weight hi,
                               std::mt19937_64& rng) {
  DistanceMatrix d(size);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  for (int u = 0; u < size; ++u) {
    for (int v = u + 1; v < size; ++v) {
      d.SetSymmetric(u, v, lo + static_cast<Weight>(rng() % span));
    }
  }
  return d;
}

DistanceMatrix RandomMatrix(int size, Weight lo, Weight hi,
                            std::mt19937_64& rng) {
  DistanceMatrix d(size);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  for (int u = 0; u < size; ++u) {
    for (int v = 0; v < size; ++v) {
      if (u != v) d.Set(u, v, lo + static_cast<Weight>(rng() % span));
    }
  }
  return d;
}

}  // namespace stsp::oracle
