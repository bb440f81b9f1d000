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

#include "bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "stsp/exact.h"
#include "stsp/generators.h"
#include "stsp/heuristic.h"

namespace stsp::cli {
namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t InstanceSeed(std::uint64_t base, int category, int n, int index) {
  std::uint64_t h = SplitMix(base);
  h = SplitMix(h ^ static_cast<std::uint64_t>(category));
  h = SplitMix(h ^ static_cast<std::uint64_t>(n));
  return SplitMix(h ^ static_cast<std::uint64_t>(index));
}

double Ratio(Weight apx, Weight opt) {
  if (opt == 0) return apx == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(apx) / static_cast<double>(opt);
}

std::string FormatRatio(double r) {
  if (std::isinf(r)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", r);
  return buf;
}

std::string WeightsOf(Weight a, Weight b) {
  return std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b));
}

}  // namespace

Bound BoundFor(Goal goal, const std::vector<Weight>& weights) {
  const bool one_two = std::all_of(weights.begin(), weights.end(),
                                   [](Weight w) { return w == 1 || w == 2; });
  if (goal == Goal::kMax) {
    return one_two ? Bound::kAtLeastThreeQuarters : Bound::kAtLeastHalf;
  }
  return one_two ? Bound::kAtMostThreeHalves : Bound::kNone;
}

const char* BoundName(Bound bound) {
  switch (bound) {
    case Bound::kAtLeastHalf:
      return ">=1/2";
    case Bound::kAtLeastThreeQuarters:
      return ">=3/4";
    case Bound::kAtMostThreeHalves:
      return "<=3/2";
    case Bound::kNone:
      break;
  }
  return "-";
}

bool WithinBound(Bound bound, Weight apx, Weight opt) {
  if (opt == 0) return bound != Bound::kAtMostThreeHalves || apx == 0;
  switch (bound) {
    case Bound::kAtLeastHalf:
      return 2 * apx >= opt;
    case Bound::kAtLeastThreeQuarters:
      return 4 * apx >= 3 * opt;
    case Bound::kAtMostThreeHalves:
      return 2 * apx <= 3 * opt;
    case Bound::kNone:
      break;
  }
  return true;
}

BenchSpec DefaultBenchSpec() {
  BenchSpec spec;
  spec.categories = {{Goal::kMax, "0..9"},
                     {Goal::kMax, "1,2"},
                     {Goal::kMin, "1,2"},
                     {Goal::kMin, "0..9"}};
  return spec;
}

BenchReport RunBench(const BenchSpec& spec) {
  BenchReport report;
  auto run = [&](BenchRow row, const Instance& instance, int cap) {
    row.id = static_cast<int>(report.rows.size()) + 1;
    const auto start = std::chrono::steady_clock::now();
    row.heuristic = SolveHeuristic(instance).value;
    row.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    if (instance.n() <= cap) {
      row.oracle = SolveExact(instance, cap).value;
      row.violation = !WithinBound(row.bound, row.heuristic, *row.oracle);
    }
    report.rows.push_back(std::move(row));
  };

  std::vector<std::pair<std::string, std::vector<int>>> groups;
  for (std::size_t c = 0; c < spec.categories.size(); ++c) {
    const BenchCategory& cat = spec.categories[c];
    const WeightSet weights = ParseWeightSet(cat.weights);
    std::vector<int> members;
    std::vector<int> sizes = spec.sizes;
    sizes.insert(sizes.end(), spec.large_sizes.begin(), spec.large_sizes.end());
    for (int n : sizes) {
      const bool large = std::find(spec.sizes.begin(), spec.sizes.end(), n) ==
                         spec.sizes.end();
      const int count = large ? 1 : spec.count;
      for (int i = 0; i < count; ++i) {
        BenchRow row;
        row.kind = "random";
        row.n = n;
        row.goal = cat.goal;
        row.weights = cat.weights;
        row.seed = InstanceSeed(spec.seed, static_cast<int>(c), n, i);
        row.bound = BoundFor(cat.goal, weights.values);
        members.push_back(static_cast<int>(report.rows.size()));
        run(row, GenRandom(n, weights, row.seed, cat.goal), spec.oracle_cap);
      }
    }
    groups.emplace_back(std::string(GoalName(cat.goal)) + " " + cat.weights,
                        std::move(members));
  }

  if (spec.tight) {
    struct Family {
      Weight a, b;
      Goal goal;
    };
    const Family families[] = {
        {1, 0, Goal::kMax}, {2, 1, Goal::kMax}, {1, 2, Goal::kMin}};
    for (const Family& f : families) {
      std::vector<int> members;
      for (int n : {7, 8}) {
        BenchRow row;
        row.kind = "tight";
        row.n = n;
        row.goal = f.goal;
        row.weights = WeightsOf(f.a, f.b);
        row.bound = BoundFor(f.goal, {f.a, f.b});
        members.push_back(static_cast<int>(report.rows.size()));
        run(row, GenTight(n, f.a, f.b, f.goal), spec.tight_oracle_cap);
      }
      groups.emplace_back("tight " + std::string(GoalName(f.goal)) + " a=" +
                              std::to_string(f.a) + " b=" + std::to_string(f.b),
                          std::move(members));
    }
  }

  for (auto& [label, members] : groups) {
    BenchSummary s;
    s.label = label;
    double sum = 0;
    for (int idx : members) {
      const BenchRow& row = report.rows[idx];
      ++s.rows;
      if (!row.oracle) continue;
      const double r = Ratio(row.heuristic, *row.oracle);
      const bool worse = row.goal == Goal::kMax ? r < s.worst_ratio
                                                : r > s.worst_ratio;
      if (s.with_oracle == 0 || worse) s.worst_ratio = r;
      ++s.with_oracle;
      sum += r;
      s.violations += row.violation;
    }
    if (s.with_oracle > 0) s.mean_ratio = sum / s.with_oracle;
    report.violations += s.violations;
    report.summaries.push_back(std::move(s));
  }
  return report;
}

std::string FormatBench(const BenchReport& report, const BenchSpec& spec,
                        bool tsv) {
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"id",        "kind",   "n",     "goal",
                                  "weights",   "seed",   "heuristic",
                                  "oracle",    "ratio",  "bound", "status"};
  if (spec.timing) header.push_back("ms");
  table.push_back(header);
  for (const BenchRow& row : report.rows) {
    std::vector<std::string> cells{
        std::to_string(row.id),
        row.kind,
        std::to_string(row.n),
        std::string(GoalName(row.goal)),
        row.weights,
        row.kind == "random" ? std::to_string(row.seed) : "-",
        std::to_string(row.heuristic),
        row.oracle ? std::to_string(*row.oracle) : "-",
        row.oracle ? FormatRatio(Ratio(row.heuristic, *row.oracle)) : "-",
        BoundName(row.bound),
        !row.oracle ? "unchecked" : row.violation ? "VIOLATION" : "ok"};
    if (spec.timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", row.millis);
      cells.push_back(buf);
    }
    table.push_back(std::move(cells));
  }

  std::ostringstream out;
  if (tsv) {
    for (const auto& cells : table) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i ? "\t" : "") << cells[i];
      }
      out << '\n';
    }
    for (const BenchSummary& s : report.summaries) {
      out << "summary\t" << s.label << '\t' << s.rows << '\t' << s.with_oracle
          << '\t' << (s.with_oracle ? FormatRatio(s.worst_ratio) : "-") << '\t'
          << (s.with_oracle ? FormatRatio(s.mean_ratio) : "-") << '\t'
          << s.violations << '\n';
    }
    out << "violations\t" << report.violations << '\n';
    return out.str();
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& cells : table) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      width[i] = std::max(width[i], cells[i].size());
    }
  }
  out << "# stsp bench: seed " << spec.seed << ", " << spec.count
      << " instances per category and size, oracle cap " << spec.oracle_cap
      << " (tight rows " << spec.tight_oracle_cap << ")\n";
  for (const auto& cells : table) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string cell = cells[i];
      if (i + 1 < cells.size()) cell.resize(width[i], ' ');
      line += (i ? "  " : "") + cell;
    }
    out << line << '\n';
  }
  out << '\n';
  for (const BenchSummary& s : report.summaries) {
    out << s.label << ": " << s.rows << " rows, " << s.with_oracle
        << " with oracle";
    if (s.with_oracle) {
      out << ", worst ratio " << FormatRatio(s.worst_ratio) << ", mean ratio "
          << FormatRatio(s.mean_ratio);
    }
    out << ", violations " << s.violations << '\n';
  }
  out << "total violations: " << report.violations << '\n';
  return out.str();
}

}  // namespace stsp::cli
