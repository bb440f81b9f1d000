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

#include "stsp/generators.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>
#include <string>

#include "stsp/errors.h"

namespace stsp {
namespace {

bool TightEdge(int u, int v, bool pickup) {
  if (u < 1) return false;
  if (v == u + 2) {
    if (u % 4 == 1) return true;
    if (u % 4 == 0) return pickup;
    if (u % 4 == 2) return !pickup;
    return false;
  }
  if (v == u + 1) return (u % 2 == 1) == pickup;
  return false;
}

Weight ParseWeight(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  Weight w = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(0, "bad weight '" + std::string(text) + "'");
  }
  if (w < 0) throw ParseError(0, "negative weight " + std::to_string(w));
  return w;
}

// Uniform draw from [0, bound) by rejection; the standard distributions
// are not reproducible across library implementations.
std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Instance GenTight(int n, Weight a, Weight b, Goal goal) {
  if (n < 1) throw StructuralError("tight family needs n >= 1");
  if (a < 0 || b < 0) throw StructuralError("tight family weights must be >= 0");
  DistanceMatrix pickup(n + 1);
  DistanceMatrix delivery(n + 1);
  for (int u = 0; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      pickup.SetSymmetric(u, v, TightEdge(u, v, true) ? a : b);
      delivery.SetSymmetric(u, v, TightEdge(u, v, false) ? a : b);
    }
  }
  return Instance(2, std::move(pickup), std::move(delivery), goal);
}

WeightSet ParseWeightSet(std::string_view text) {
  WeightSet set;
  const auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    const Weight lo = ParseWeight(text.substr(0, dots));
    const Weight hi = ParseWeight(text.substr(dots + 2));
    if (lo > hi) throw ParseError(0, "empty weight range");
    if (hi - lo > 1'000'000) throw ParseError(0, "weight range too wide");
    for (Weight w = lo; w <= hi; ++w) set.values.push_back(w);
    return set;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    set.values.push_back(ParseWeight(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(set.values.begin(), set.values.end());
  set.values.erase(std::unique(set.values.begin(), set.values.end()),
                   set.values.end());
  return set;
}

Instance GenRandom(int n, const WeightSet& weights, std::uint64_t seed,
                   Goal goal, int k) {
  if (n < 1) throw StructuralError("random instance needs n >= 1");
  if (weights.values.empty()) throw StructuralError("empty weight set");
  std::mt19937_64 rng(seed);
  const std::uint64_t count = weights.values.size();
  auto fill = [&](DistanceMatrix& d) {
    for (int u = 0; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        d.SetSymmetric(u, v, weights.values[Draw(rng, count)]);
      }
    }
  };
  DistanceMatrix pickup(n + 1);
  DistanceMatrix delivery(n + 1);
  fill(pickup);
  fill(delivery);
  return Instance(k, std::move(pickup), std::move(delivery), goal);
}

}  // namespace stsp
