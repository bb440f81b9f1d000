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

#include "stsp/heuristic.h"

#include <algorithm>
#include <string>
#include <utility>

#include "stsp/errors.h"
#include "stsp/feasibility.h"
#include "stsp/tour_synthesis.h"

namespace stsp {
namespace {

std::vector<int> MateVector(const Matching& m, int n, const char* name) {
  std::vector<int> mate(n + 1, -1);
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v > n || e.u == e.v) {
      throw StructuralError(std::string(name) + " matching has an edge outside {0.." +
                            std::to_string(n) + "}");
    }
    if (mate[e.u] >= 0 || mate[e.v] >= 0) {
      throw StructuralError(std::string(name) +
                            " matching covers a vertex twice");
    }
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  const int exposed = static_cast<int>(std::count(mate.begin(), mate.end(), -1));
  if (exposed != (n + 1) % 2) {
    throw StructuralError(std::string(name) +
                          " matching is not of maximum cardinality");
  }
  return mate;
}

// Walks alternately along `first` then `second` from `start` until the walk
// returns to `start` or runs out of edges. Returns the visited vertices
// (start included) and whether the walk closed.
std::pair<std::vector<int>, bool> Walk(int start, const std::vector<int>& first,
                                       const std::vector<int>& second) {
  std::vector<int> path{start};
  int v = start;
  bool use_first = true;
  while (true) {
    const int next = use_first ? first[v] : second[v];
    if (next < 0) return {path, false};
    if (next == start) return {path, true};
    path.push_back(next);
    v = next;
    use_first = !use_first;
  }
}

Component BuildComponent(int start, const std::vector<int>& mate_a,
                         const std::vector<int>& mate_b) {
  Component c;
  const bool a_first = mate_a[start] >= 0;
  const auto& first = a_first ? mate_a : mate_b;
  const auto& second = a_first ? mate_b : mate_a;
  auto [forward, closed] = Walk(start, first, second);
  if (closed) {
    c.vertices = std::move(forward);
    return c;
  }
  c.is_chain = true;
  c.gap = static_cast<int>(forward.size());
  // Wrap around from the other end of the chain back toward `start`.
  auto [backward, unused] = Walk(start, second, first);
  (void)unused;
  c.vertices = std::move(forward);
  for (std::size_t i = backward.size(); i-- > 1;) c.vertices.push_back(backward[i]);
  return c;
}

// Cyclic rotation so that vertex v lands at 1-based index `target`.
std::vector<int> Rotated(const std::vector<int>& seq, int v, int target) {
  const int q = static_cast<int>(seq.size());
  const int at = static_cast<int>(std::find(seq.begin(), seq.end(), v) - seq.begin());
  std::vector<int> out(q);
  for (int i = 0; i < q; ++i) out[((i - at + target - 1) % q + q) % q] = seq[i];
  return out;
}

// Reverses the cyclic orientation while keeping seq[0] first.
std::vector<int> ReversedCyclic(const std::vector<int>& seq) {
  std::vector<int> out{seq.front()};
  for (std::size_t i = seq.size(); i-- > 1;) out.push_back(seq[i]);
  return out;
}

int IndexOf(const std::vector<int>& seq, int v) {
  return static_cast<int>(std::find(seq.begin(), seq.end(), v) - seq.begin()) + 1;
}

int CeilHalf(int x) { return (x + 1) / 2; }

// A component laid out for stacking: `seq` read as c_1..c_q, c_1..c_split go
// to the first stack bottom-up and c_q..c_{split+1} to the second.
struct Block {
  std::vector<int> seq;
  int split = 0;
};

Packing Assemble(const std::vector<Block>& blocks) {
  std::vector<std::vector<int>> stacks(2);
  for (const Block& b : blocks) {
    const int q = static_cast<int>(b.seq.size());
    for (int j = 1; j <= b.split; ++j) {
      if (b.seq[j - 1] != 0) stacks[0].push_back(b.seq[j - 1]);
    }
    for (int j = q; j > b.split; --j) {
      if (b.seq[j - 1] != 0) stacks[1].push_back(b.seq[j - 1]);
    }
  }
  return Packing(std::move(stacks));
}

// Knobs for the construction. The all-false setting is the direct reading;
// the others form the fallback family.
struct Variant {
  bool swap_roles = false;   // exchange the roles of the two endpoints of e*
  bool reverse_x = false;    // reverse the component whose endpoint tops P1
  bool reverse_y = false;    // reverse the component whose endpoint starts it
  bool toggle_3b = false;    // flip the decision of the reversal rule
  bool alt_j1 = false;       // other branch of the j1 assignment
  bool alt_j2 = false;       // other branch of the j2 assignment
  bool reverse_first = false;  // reverse the depot component
};

constexpr int kVariantBits = 7;

Variant VariantFromIndex(int index) {
  Variant v;
  v.swap_roles = index & 1;
  v.reverse_x = index & 2;
  v.reverse_y = index & 4;
  v.toggle_3b = index & 8;
  v.alt_j1 = index & 16;
  v.alt_j2 = index & 32;
  v.reverse_first = index & 64;
  return v;
}

// Reindexing and stack assembly for n odd or p >= 2.
Packing BuildMulti(const ComponentDecomposition& dec,
                   const std::optional<ExtraEdge>& extra, const Variant& var) {
  const int p = dec.p();
  std::vector<std::vector<int>> seqs;
  for (const Component& c : dec.components) seqs.push_back(c.vertices);

  std::vector<int> order(p);
  for (int h = 0; h < p; ++h) order[h] = h;
  bool edge_at_first = false;  // e* = {c1_j, c2_1}
  int j = 0;
  if (!extra && var.reverse_first) seqs[0] = ReversedCyclic(seqs[0]);

  if (extra) {
    int x = extra->edge.u;
    int y = extra->edge.v;
    const int cx = dec.ComponentOf(x);
    const int cy = dec.ComponentOf(y);
    const bool first_touched = (cx == 0 && x != 0) || (cy == 0 && y != 0);
    if (var.reverse_first && !first_touched) seqs[0] = ReversedCyclic(seqs[0]);
    if (x == 0 || y == 0) {
      // The depot closes the stacks: the other endpoint tops P1 in the last
      // component.
      const int other = x == 0 ? y : x;
      const int co = dec.ComponentOf(other);
      std::erase(order, co);
      order.push_back(co);
      if (var.reverse_x) seqs[co] = ReversedCyclic(seqs[co]);
      seqs[co] = Rotated(seqs[co], other, CeilHalf(static_cast<int>(seqs[co].size())));
    } else if (cx == 0 || cy == 0) {
      // The endpoint in the depot component tops its P1 block, the
      // other endpoint starts component 2.
      const int in_first = cx == 0 ? x : y;
      const int outside = cx == 0 ? y : x;
      const int co = dec.ComponentOf(outside);
      std::erase(order, co);
      order.insert(order.begin() + 1, co);
      if (var.reverse_y) seqs[co] = ReversedCyclic(seqs[co]);
      seqs[co] = Rotated(seqs[co], outside, 1);
      edge_at_first = true;
      // Orient the depot component so that c1_{j+1} exists.
      const bool last = IndexOf(seqs[0], in_first) == static_cast<int>(seqs[0].size());
      if (last != var.reverse_first) seqs[0] = ReversedCyclic(seqs[0]);
      j = IndexOf(seqs[0], in_first);
    } else {
      if (var.swap_roles) std::swap(x, y);
      const int ca = dec.ComponentOf(x);
      const int cb = dec.ComponentOf(y);
      std::erase(order, ca);
      std::erase(order, cb);
      order.insert(order.begin() + 1, ca);
      order.insert(order.begin() + 2, cb);
      if (var.reverse_x) seqs[ca] = ReversedCyclic(seqs[ca]);
      if (var.reverse_y) seqs[cb] = ReversedCyclic(seqs[cb]);
      seqs[ca] = Rotated(seqs[ca], x, CeilHalf(static_cast<int>(seqs[ca].size())));
      seqs[cb] = Rotated(seqs[cb], y, 1);
    }
  }

  std::vector<Block> blocks;
  for (int h : order) blocks.push_back({seqs[h], 0});
  for (std::size_t h = 0; h < blocks.size(); ++h) {
    blocks[h].split = CeilHalf(static_cast<int>(blocks[h].seq.size()));
  }

  // Turn component 2 around when the depot edge and the edge closing
  // component 2 belong to the same matching.
  if (edge_at_first && p >= 2) {
    const auto& s1 = blocks[0].seq;
    auto& s2 = blocks[1].seq;
    const int q2 = static_cast<int>(s2.size());
    bool reverse = false;
    if (q2 != 2 && s1.size() >= 2) {
      for (const auto* mates : {&dec.mate_a, &dec.mate_b}) {
        if ((*mates)[0] == s1[1] && (*mates)[s2.front()] == s2.back()) {
          reverse = true;
        }
      }
    }
    if (reverse != var.toggle_3b) s2 = ReversedCyclic(s2);
  }

  // Split points.
  const int q1 = static_cast<int>(blocks[0].seq.size());
  const int default_j1 = CeilHalf(q1 - 1) + 1;
  blocks[0].split = (edge_at_first != var.alt_j1) && j > 0 ? j : default_j1;
  if (p >= 2) {
    const int q2 = static_cast<int>(blocks[1].seq.size());
    const bool full = edge_at_first && j == 2 && q2 == 2;
    blocks[1].split = full != var.alt_j2 ? q2 : CeilHalf(q2);
  }
  return Assemble(blocks);
}

// Assembly for n even and p == 1: the depot chain c_1..c_{n+1} with gap l.
Packing BuildSingleChain(const ComponentDecomposition& dec,
                         const ExtraEdge& extra, int variant) {
  std::vector<int> seq = dec.components[0].vertices;
  int gap = dec.components[0].gap;
  const int q = static_cast<int>(seq.size());
  const bool reverse = variant & 8;
  if (reverse) {
    seq = ReversedCyclic(seq);
    gap = q + 1 - gap;
  }
  auto c = [&](int idx) { return seq[idx - 1]; };
  auto index_of = [&](int v) { return v == 0 ? 1 : IndexOf(seq, v); };
  int j = index_of(extra.edge.u);
  int jp = index_of(extra.edge.v);
  if (j > gap || (j == 1 && jp != 1 && jp <= gap)) std::swap(j, jp);
  if (variant & 4) std::swap(j, jp);

  int branch;
  if (j != 1 && jp != 1) {
    branch = (j % 2) != (jp % 2) ? 0 : 1;
  } else {
    branch = jp == 1 ? 2 : 3;
  }
  branch = (branch + (variant & 3)) % 4;

  std::vector<std::vector<int>> stacks(2);
  // c_from..c_to read in the written direction; empty when inverted.
  auto up = [&](std::vector<int>& out, int from, int to) {
    for (int i = std::max(from, 1); i <= std::min(to, q); ++i) {
      if (c(i) != 0) out.push_back(c(i));
    }
  };
  auto down = [&](std::vector<int>& out, int from, int to) {
    for (int i = std::min(from, q); i >= std::max(to, 1); --i) {
      if (c(i) != 0) out.push_back(c(i));
    }
  };
  switch (branch) {
    case 0:
      up(stacks[0], 2, gap);
      down(stacks[1], q, gap + 1);
      break;
    case 1:
      up(stacks[0], 2, gap);
      up(stacks[1], gap + 1, q);
      break;
    case 2:
      up(stacks[0], 2, j);
      down(stacks[1], q, j + 1);
      break;
    default:
      up(stacks[0], 2, jp - 1);
      down(stacks[1], q, jp);
      break;
  }
  return Packing(std::move(stacks));
}

bool Validates(const ComponentDecomposition& dec,
               const std::optional<ExtraEdge>& extra, const Packing& packing) {
  if (packing.num_items() != dec.n) return false;
  for (const auto* mates : {&dec.mate_a, &dec.mate_b}) {
    std::vector<Edge> edges;
    for (int v = 0; v <= dec.n; ++v) {
      if ((*mates)[v] > v) edges.emplace_back(v, (*mates)[v]);
    }
    if (extra) {
      if (std::find(edges.begin(), edges.end(), extra->edge) != edges.end()) {
        return false;
      }
      edges.push_back(extra->edge);
    }
    try {
      const ChainCollection chains(dec.n, std::move(edges));
      if (!CheckPartialConsistency(chains, packing).consistent) return false;
    } catch (const StructuralError&) {
      return false;
    }
  }
  return true;
}

}  // namespace

int ComponentDecomposition::ComponentOf(int v) const {
  for (int h = 0; h < p(); ++h) {
    const auto& vs = components[h].vertices;
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) return h;
  }
  throw StructuralError("vertex " + std::to_string(v) + " in no component");
}

ComponentDecomposition Decompose(const Matching& pickup,
                                 const Matching& delivery, int n) {
  if (n < 0) throw StructuralError("negative item count");
  ComponentDecomposition dec;
  dec.n = n;
  dec.mate_a = MateVector(pickup, n, "pickup");
  dec.mate_b = MateVector(delivery, n, "delivery");

  std::vector<bool> done(n + 1, false);
  auto take = [&](int start) {
    Component c = BuildComponent(start, dec.mate_a, dec.mate_b);
    for (int v : c.vertices) done[v] = true;
    dec.components.push_back(std::move(c));
  };
  take(0);
  for (int v = 1; v <= n; ++v) {
    if (done[v]) continue;
    int start = v;
    // Chains start at their lower end.
    auto [path, closed] = Walk(v, dec.mate_a, dec.mate_b);
    if (!closed) {
      auto [other, unused] = Walk(v, dec.mate_b, dec.mate_a);
      (void)unused;
      start = std::min(path.back(), other.back());
    }
    take(start);
  }
  int chains = 0;
  for (const Component& c : dec.components) chains += c.is_chain;
  if (chains != (n % 2 == 0 ? 1 : 0)) {
    throw StructuralError("matching union has an unexpected chain count");
  }
  return dec;
}

std::vector<Edge> ExtraEdgeCandidates(const ComponentDecomposition& dec) {
  std::vector<Edge> out;
  if (dec.p() >= 2) {
    std::vector<int> comp(dec.n + 1);
    for (int h = 0; h < dec.p(); ++h) {
      for (int v : dec.components[h].vertices) comp[v] = h;
    }
    for (int u = 0; u <= dec.n; ++u) {
      for (int v = u + 1; v <= dec.n; ++v) {
        if (comp[u] != comp[v]) out.emplace_back(u, v);
      }
    }
    return out;
  }
  const Component& c = dec.components.front();
  if (!c.is_chain) return out;
  std::vector<int> left{0};
  std::vector<int> right{0};
  for (int j = 3; j <= c.gap; ++j) left.push_back(c.c(j));
  for (int j = c.gap + 1; j <= dec.n; ++j) right.push_back(c.c(j));
  for (int a : left) {
    for (int b : right) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtraEdge SelectExtraEdge(const ComponentDecomposition& dec,
                          const Instance& instance) {
  const std::vector<Edge> candidates = ExtraEdgeCandidates(dec);
  if (candidates.empty()) throw InternalError("no candidate for the extra edge");
  const GoalOrder order = instance.order();
  ExtraEdge best;
  Weight best_value = order.Worst();
  bool have = false;
  for (const Edge& f : candidates) {
    const Weight a = instance.pickup()(f.u, f.v);
    const Weight b = instance.delivery()(f.u, f.v);
    const Weight value = order.Opt(a, b);
    if (!have || order.StrictlyBetter(value, best_value)) {
      best = {f, a, b};
      best_value = value;
      have = true;
    }
  }
  return best;
}

PackingResult BuildPacking(const ComponentDecomposition& dec,
                           const std::optional<ExtraEdge>& extra) {
  const bool even = dec.n % 2 == 0;
  if (even != extra.has_value()) {
    throw StructuralError(even ? "even item count requires an extra edge"
                               : "odd item count takes no extra edge");
  }
  if (even && dec.p() == 1) {
    for (int variant = 0; variant < 16; ++variant) {
      std::optional<Packing> packing;
      try {
        packing = BuildSingleChain(dec, *extra, variant);
      } catch (const StructuralError&) {
        continue;  // the formula left items out
      }
      if (Validates(dec, extra, *packing)) return {std::move(*packing), variant};
    }
  } else {
    for (int variant = 0; variant < (1 << kVariantBits); ++variant) {
      Packing packing = BuildMulti(dec, extra, VariantFromIndex(variant));
      if (Validates(dec, extra, packing)) return {std::move(packing), variant};
    }
  }
  throw InternalError("no packing construction is consistent with the matchings");
}

Solution SolveHeuristic(const Instance& instance, HeuristicTrace* trace) {
  if (instance.k() != 2) {
    throw UnsupportedParameterError("the heuristic requires exactly 2 stacks");
  }
  if (!instance.pickup().IsSymmetric() || !instance.delivery().IsSymmetric()) {
    throw UnsupportedParameterError("the heuristic requires symmetric networks");
  }
  const int n = instance.n();
  if (n <= 2) {
    // Singleton stacks leave both tours unconstrained, so this is optimal.
    std::vector<std::vector<int>> stacks(2);
    for (int i = 1; i <= n; ++i) stacks[i - 1].push_back(i);
    Packing packing(std::move(stacks));
    TourPair tours = BestToursForPacking(instance, packing);
    return {std::move(packing), tours.tour_a, tours.tour_b, tours.value};
  }

  HeuristicTrace local;
  HeuristicTrace& t = trace ? *trace : local;
  t.pickup_matching = OptimumMatching(instance.pickup(), instance.goal());
  t.delivery_matching = OptimumMatching(instance.delivery(), instance.goal());
  t.decomposition = Decompose(t.pickup_matching, t.delivery_matching, n);
  t.extra_edge.reset();
  t.matching_bound = t.pickup_matching.weight + t.delivery_matching.weight;
  if (n % 2 == 0) {
    t.extra_edge = SelectExtraEdge(t.decomposition, instance);
    t.matching_bound += t.extra_edge->pickup_weight + t.extra_edge->delivery_weight;
  }
  t.packing = BuildPacking(t.decomposition, t.extra_edge);
  TourPair tours = BestToursForPacking(instance, t.packing.packing);
  return {t.packing.packing, tours.tour_a, tours.tour_b, tours.value};
}

}  // namespace stsp
