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

#include "stsp/matching.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include "stsp/errors.h"

namespace stsp {
namespace {

// Primal-dual blossom algorithm after Galil, "Efficient algorithms for
// finding maximum matching in graphs" (1986), in the formulation popularized
// by J. van Rantwijk's reference implementation. Vertices are 0..nv-1,
// blossoms nv..2nv-1. Edge k has endpoints 2k and 2k+1; endpoint p belongs
// to vertex endpoint_[p], and p ^ 1 is the opposite endpoint.
class BlossomMatcher {
 public:
  BlossomMatcher(int nv, std::span<const WeightedEdge> edges, bool max_card)
      : nv_(nv), max_card_(max_card) {
    const int ne = static_cast<int>(edges.size());
    edge_u_.resize(ne);
    edge_v_.resize(ne);
    edge_w_.resize(ne);
    Weight max_weight = 0;
    for (int k = 0; k < ne; ++k) {
      edge_u_[k] = edges[k].u;
      edge_v_[k] = edges[k].v;
      // Doubling keeps every dual update integral.
      edge_w_[k] = 2 * edges[k].weight;
      max_weight = std::max(max_weight, edge_w_[k]);
    }
    endpoint_.resize(2 * ne);
    neighbend_.assign(nv, {});
    for (int k = 0; k < ne; ++k) {
      endpoint_[2 * k] = edge_u_[k];
      endpoint_[2 * k + 1] = edge_v_[k];
      neighbend_[edge_u_[k]].push_back(2 * k + 1);
      neighbend_[edge_v_[k]].push_back(2 * k);
    }
    mate_.assign(nv, -1);
    label_.assign(2 * nv, 0);
    labelend_.assign(2 * nv, -1);
    inblossom_.resize(nv);
    for (int v = 0; v < nv; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * nv, -1);
    blossomchilds_.assign(2 * nv, {});
    blossombase_.assign(2 * nv, -1);
    for (int v = 0; v < nv; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * nv, {});
    bestedge_.assign(2 * nv, -1);
    blossombestedges_.assign(2 * nv, std::nullopt);
    for (int b = 2 * nv - 1; b >= nv; --b) unused_.push_back(b);
    dualvar_.assign(2 * nv, 0);
    for (int v = 0; v < nv; ++v) dualvar_[v] = max_weight;
    allowedge_.assign(ne, false);
  }

  std::vector<int> Solve() {
    for (int stage = 0; stage < nv_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nv_; b < 2 * nv_; ++b) blossombestedges_[b].reset();
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < nv_; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) AssignLabel(v, 1, -1);
      }
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            Weight kslack = 0;
            if (!allowedge_[k]) {
              kslack = Slack(k);
              if (kslack <= 0) allowedge_[k] = true;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                AssignLabel(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                const int base = ScanBlossom(v, w);
                if (base >= 0) {
                  AddBlossom(base, k);
                } else {
                  AugmentMatching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < Slack(bestedge_[b])) {
                bestedge_[b] = k;
              }
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < Slack(bestedge_[w])) {
                bestedge_[w] = k;
              }
            }
          }
        }
        if (augmented) break;

        int deltatype = -1;
        Weight delta = 0;
        int deltaedge = -1;
        int deltablossom = -1;
        if (!max_card_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_);
        }
        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const Weight d = Slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * nv_; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            const Weight d = Slack(bestedge_[b]) / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
              label_[b] == 2 && (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          // No further progress possible; final dual adjustment.
          deltatype = 1;
          delta = std::max<Weight>(
              0, *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_));
        }

        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 1) {
            dualvar_[v] -= delta;
          } else if (label_[inblossom_[v]] == 2) {
            dualvar_[v] += delta;
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dualvar_[b] += delta;
            } else if (label_[b] == 2) {
              dualvar_[b] -= delta;
            }
          }
        }

        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = edge_u_[deltaedge];
          if (label_[inblossom_[i]] == 0) i = edge_v_[deltaedge];
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          queue_.push_back(edge_u_[deltaedge]);
        } else {
          ExpandBlossom(deltablossom, false);
        }
      }
      if (!augmented) break;

      for (int b = nv_; b < 2 * nv_; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 &&
            label_[b] == 1 && dualvar_[b] == 0) {
          ExpandBlossom(b, true);
        }
      }
    }
    std::vector<int> result(nv_, -1);
    for (int v = 0; v < nv_; ++v) {
      if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
    }
    return result;
  }

 private:
  Weight Slack(int k) const {
    return dualvar_[edge_u_[k]] + dualvar_[edge_v_[k]] - 2 * edge_w_[k];
  }

  void Leaves(int b, std::vector<int>& out) const {
    if (b < nv_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) Leaves(t, out);
  }
  std::vector<int> Leaves(int b) const {
    std::vector<int> out;
    Leaves(b, out);
    return out;
  }

  void AssignLabel(int w, int t, int p) {
    const int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      Leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossombase_[b];
      AssignLabel(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Traces back from v and w to find either a new blossom base or an
  // augmenting path (returns -1).
  int ScanBlossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void AddBlossom(int base, int k) {
    int v = edge_u_[k];
    int w = edge_v_[k];
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int>& path = blossomchilds_[b];
    std::vector<int>& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int leaf : Leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }
    std::vector<int> bestedgeto(2 * nv_, -1);
    for (int child : path) {
      std::vector<std::vector<int>> nblists;
      if (!blossombestedges_[child].has_value()) {
        for (int leaf : Leaves(child)) {
          std::vector<int> list;
          for (int p : neighbend_[leaf]) list.push_back(p / 2);
          nblists.push_back(std::move(list));
        }
      } else {
        nblists.push_back(*blossombestedges_[child]);
      }
      for (const auto& nblist : nblists) {
        for (int e : nblist) {
          int i = edge_u_[e];
          int j = edge_v_[e];
          if (inblossom_[j] == b) std::swap(i, j);
          const int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (bestedgeto[bj] == -1 || Slack(e) < Slack(bestedgeto[bj]))) {
            bestedgeto[bj] = e;
          }
        }
      }
      blossombestedges_[child].reset();
      bestedge_[child] = -1;
    }
    std::vector<int> best;
    for (int e : bestedgeto) {
      if (e != -1) best.push_back(e);
    }
    bestedge_[b] = -1;
    for (int e : best) {
      if (bestedge_[b] == -1 || Slack(e) < Slack(bestedge_[b])) bestedge_[b] = e;
    }
    blossombestedges_[b] = std::move(best);
  }

  void ExpandBlossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        ExpandBlossom(s, endstage);
      } else {
        for (int leaf : Leaves(s)) inblossom_[leaf] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const std::vector<int> childs = blossomchilds_[b];
      const std::vector<int> endps = blossomendps_[b];
      const int len = static_cast<int>(childs.size());
      auto at = [len](const std::vector<int>& xs, int i) {
        return xs[((i % len) + len) % len];
      };
      const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(
          std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[at(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
        AssignLabel(endpoint_[p ^ 1], 2, p);
        allowedge_[at(endps, j - endptrick) / 2] = true;
        j += jstep;
        p = at(endps, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = at(childs, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (at(childs, j) != entrychild) {
        bv = at(childs, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int labeled = -1;
        for (int leaf : Leaves(bv)) {
          if (label_[leaf] != 0) {
            labeled = leaf;
            break;
          }
        }
        if (labeled >= 0) {
          label_[labeled] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          AssignLabel(labeled, 2, labelend_[labeled]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].reset();
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  // Swaps matched and unmatched edges along the even path from vertex v to
  // the base of blossom b.
  void AugmentBlossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) AugmentBlossom(t, v);
    std::vector<int>& childs = blossomchilds_[b];
    std::vector<int>& endps = blossomendps_[b];
    const int len = static_cast<int>(childs.size());
    auto at = [len](const std::vector<int>& xs, int i) {
      return xs[((i % len) + len) % len];
    };
    const int i =
        static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = at(childs, j);
      const int p = at(endps, j - endptrick) ^ endptrick;
      if (t >= nv_) AugmentBlossom(t, endpoint_[p]);
      j += jstep;
      t = at(childs, j);
      if (t >= nv_) AugmentBlossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[childs[0]];
  }

  void AugmentMatching(int k) {
    const int v = edge_u_[k];
    const int w = edge_v_[k];
    for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
      while (true) {
        const int bs = inblossom_[s];
        if (bs >= nv_) AugmentBlossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= nv_) AugmentBlossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nv_;
  bool max_card_;
  std::vector<int> edge_u_, edge_v_;
  std::vector<Weight> edge_w_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::optional<std::vector<int>>> blossombestedges_;
  std::vector<int> unused_;
  std::vector<Weight> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

// Optimum max-cardinality matching restricted to `vertices` of d. With
// `favored` = vertices[f], f >= 0, the optimum is further steered so that
// the favored vertex gets the earliest partner in `vertices` that any
// optimal matching allows (exposed only if none does): every weight is
// scaled by K = m + 1 and edge (favored, vertices[b]) earns m - b < K.
struct SubsetSolution {
  Weight weight = 0;
  std::vector<int> mate;  // indexed by vertex of d; -1 outside or exposed
};

SubsetSolution SolveSubset(const DistanceMatrix& d, GoalOrder order,
                           std::span<const int> vertices, int favored = -1) {
  const int m = static_cast<int>(vertices.size());
  Weight max_w = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      max_w = std::max(max_w, d(vertices[a], vertices[b]));
    }
  }
  const Weight scale = favored >= 0 ? m + 1 : 1;
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Weight w = d(vertices[a], vertices[b]);
      // Cardinality is fixed, so minimizing sum(w) maximizes sum(max_w - w).
      Weight x = (order.goal() == Goal::kMax ? w : max_w - w) * scale;
      if (a == favored) x += m - b;
      edges.push_back({a, b, x});
    }
  }
  const std::vector<int> local = MaxWeightMatching(m, edges, true);
  SubsetSolution sol;
  sol.mate.assign(d.size(), -1);
  for (int a = 0; a < m; ++a) {
    if (local[a] < 0) continue;
    sol.mate[vertices[a]] = vertices[local[a]];
    if (a < local[a]) sol.weight += d(vertices[a], vertices[local[a]]);
  }
  return sol;
}

}  // namespace

std::vector<int> MaxWeightMatching(int num_vertices,
                                   std::span<const WeightedEdge> edges,
                                   bool max_cardinality) {
  for (const WeightedEdge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices ||
        e.u == e.v) {
      throw StructuralError("matching edge out of range");
    }
    if (e.weight < 0) throw StructuralError("negative matching weight");
  }
  if (num_vertices == 0 || edges.empty()) {
    return std::vector<int>(num_vertices, -1);
  }
  return BlossomMatcher(num_vertices, edges, max_cardinality).Solve();
}

int Matching::Mate(int v) const {
  for (const Edge& e : edges) {
    if (e.Has(v)) return e.Other(v);
  }
  return -1;
}

bool Matching::Contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

Matching OptimumMatching(const DistanceMatrix& d, Goal goal) {
  if (!d.IsSymmetric()) {
    throw UnsupportedParameterError(
        "optimum matching requires a symmetric distance matrix");
  }
  const GoalOrder order(goal);
  std::vector<int> remaining(d.size());
  for (int v = 0; v < d.size(); ++v) remaining[v] = v;

  // Canonicalize among optimal matchings: repeatedly match the smallest
  // undecided vertex to its smallest partner that still admits an optimal
  // completion, exposing it only if no partner does. `remaining` stays
  // sorted, so the front vertex is favored at index 0.
  Weight max_w = 0;
  for (int u = 0; u < d.size(); ++u) {
    for (int v = 0; v < d.size(); ++v) max_w = std::max(max_w, d(u, v));
  }
  const Weight limit = std::numeric_limits<Weight>::max() / 4;
  if (max_w > limit / (d.size() + 1) / std::max(d.size(), 1)) {
    throw UnsupportedParameterError("distance entries too large for matching");
  }
  SubsetSolution current = SolveSubset(d, order, remaining);
  Matching result;
  while (remaining.size() >= 2) {
    const int u = remaining.front();
    // The current solution already answers when no earlier partner exists.
    if (current.mate[u] != remaining[1]) {
      current = SolveSubset(d, order, remaining, 0);
    }
    const int chosen = current.mate[u];
    if (chosen >= 0) {
      result.edges.emplace_back(u, chosen);
      result.weight += d(u, chosen);
    }
    std::erase_if(remaining, [u, chosen](int x) { return x == u || x == chosen; });
  }
  return result;
}

}  // namespace stsp
