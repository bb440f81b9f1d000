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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "bench.h"
#include "stsp/errors.h"
#include "stsp/exact.h"
#include "stsp/feasibility.h"
#include "stsp/generators.h"
#include "stsp/heuristic.h"
#include "stsp/io.h"
#include "stsp/reductions.h"

namespace stsp::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write " + path);
}

int OracleCap() {
  const char* env = std::getenv("STSP_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOracleCap;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 1 || cap > 12) {
    throw UsageError("STSP_ORACLE_CAP must be an integer in 1..12");
  }
  return static_cast<int>(cap);
}

std::vector<int> ParseSizes(const std::string& text) {
  std::vector<int> sizes;
  for (Weight w : ParseWeightSet(text).values) {
    if (w < 1 || w > 1000) throw UsageError("sizes must lie in 1..1000");
    sizes.push_back(static_cast<int>(w));
  }
  return sizes;
}

// Re-checks a solution record against the instance. Returns one line per
// failed check, each starting with its code.
std::vector<std::string> Verify(const Instance& instance,
                                const SolutionRecord& record) {
  std::vector<std::string> failures;
  const int n = instance.n();
  auto is_permutation = [n](const std::vector<int>& items) {
    if (static_cast<int>(items.size()) != n) return false;
    std::vector<bool> seen(n + 1, false);
    for (int i : items) {
      if (i < 1 || i > n || seen[i]) return false;
      seen[i] = true;
    }
    return true;
  };
  const bool tours_ok = is_permutation(record.tour_a) && is_permutation(record.tour_b);
  if (!tours_ok) {
    failures.push_back("TOUR: tours must visit each of 1.." + std::to_string(n) +
                       " exactly once");
  }
  std::vector<int> all;
  for (const auto& s : record.stacks) all.insert(all.end(), s.begin(), s.end());
  const bool partition_ok = is_permutation(all) &&
                            static_cast<int>(record.stacks.size()) <= instance.k();
  if (!partition_ok) {
    failures.push_back("PARTITION: stacks must partition 1.." +
                       std::to_string(n) + " into at most " +
                       std::to_string(instance.k()) + " stacks");
  }
  if (tours_ok && partition_ok) {
    const Tour a(record.tour_a);
    const Tour b(record.tour_b);
    if (!IsConsistent(Packing(record.stacks), a, b)) {
      failures.push_back("LIFO: a stack order contradicts the tours");
    }
    const Weight value = SolutionValue(instance, a, b);
    if (value != record.value) {
      failures.push_back("VALUE: declared " + std::to_string(record.value) +
                         ", tours give " + std::to_string(value));
    }
  }
  return failures;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Two-stack pickup and delivery TSP toolkit", "stsp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "stsp 0.1.0");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  std::string out_path;
  std::string goal_text;
  int n = 0;

  auto* tight = gen->add_subcommand("tight", "Tight family instance");
  Weight a = 0;
  Weight b = 0;
  tight->add_option("--n", n, "Item count")->required()->check(CLI::Range(1, 100000));
  tight->add_option("--a", a, "Weight on the selected edges")->required()->check(CLI::NonNegativeNumber);
  tight->add_option("--b", b, "Weight elsewhere")->required()->check(CLI::NonNegativeNumber);
  tight->add_option("--goal", goal_text, "min or max")->required();
  tight->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* random = gen->add_subcommand("random", "Random symmetric instance");
  std::string weights_text = "0..9";
  std::uint64_t seed = 1;
  int k = 2;
  random->add_option("--n", n, "Item count")->required()->check(CLI::Range(1, 100000));
  random->add_option("--weights", weights_text, "Weight set: lo..hi or a,b,...")
      ->capture_default_str();
  random->add_option("--seed", seed, "Random seed")->capture_default_str();
  random->add_option("--goal", goal_text, "min or max")->required();
  random->add_option("--k", k, "Stack count")->capture_default_str()->check(CLI::Range(1, 100000));
  random->add_option("-o,--out", out_path, "Output file (default stdout)");

  // solve / exact
  std::string instance_path;
  std::string method = "heuristic";
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_option("--method", method, "heuristic or exact")
      ->check(CLI::IsMember({"heuristic", "exact"}))
      ->capture_default_str();
  solve->add_option("-o,--out", out_path, "Output file (default stdout)");
  auto* exact = app.add_subcommand("exact", "Solve an instance exactly");
  exact->add_option("instance", instance_path, "Instance file")->required();
  exact->add_option("-o,--out", out_path, "Output file (default stdout)");

  // verify
  std::string solution_path;
  auto* verify = app.add_subcommand("verify", "Check a solution file");
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("solution", solution_path, "Solution file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Heuristic vs exact report");
  std::string sizes_text;
  std::optional<std::string> bench_weights;
  std::optional<std::string> bench_goal;
  std::optional<std::string> large_text;
  std::optional<bool> with_tight;
  int count = 10;
  bool tsv = false;
  bool timing = false;
  bench->add_option("--sizes", sizes_text, "Sizes: lo..hi or a,b,... (default 3..7)");
  bench->add_option("--weights", bench_weights, "Single weight set");
  bench->add_option("--goal", bench_goal, "Single goal: min or max");
  bench->add_option("--count", count, "Instances per category and size")
      ->capture_default_str()->check(CLI::Range(1, 1000000));
  bench->add_option("--seed", seed, "Base seed")->capture_default_str();
  bench->add_option("--large", large_text,
                    "Heuristic-only sizes, or 'none' (default 16,32,48 for the full suite)");
  bench->add_flag("--tight,!--no-tight", with_tight,
                  "Include tight-family rows (default on for the full suite)");
  bench->add_flag("--tsv", tsv, "Tab-separated rows");
  bench->add_flag("--timing", timing, "Add a wall-time column");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
  std::string direction;
  reduce->add_option("direction", direction, "tsp2stsp or collapse1")
      ->required()
      ->check(CLI::IsMember({"tsp2stsp", "collapse1"}));
  reduce->add_option("input", instance_path, "Input file")->required();
  reduce->add_option("-o,--out", out_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "stsp: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) {
      const Goal goal = ParseGoal(goal_text);
      Instance instance = *tight ? GenTight(n, a, b, goal)
                                 : GenRandom(n, ParseWeightSet(weights_text),
                                             seed, goal, k);
      Emit(WriteInstance(instance), out_path, out);
    } else if (*solve || *exact) {
      const Instance instance = ReadInstance(ReadFile(instance_path));
      const Solution solution = (*exact || method == "exact")
                                    ? SolveExact(instance, OracleCap())
                                    : SolveHeuristic(instance);
      Emit(WriteSolution(solution), out_path, out);
    } else if (*verify) {
      const Instance instance = ReadInstance(ReadFile(instance_path));
      const SolutionRecord record = ReadSolution(ReadFile(solution_path));
      const auto failures = Verify(instance, record);
      if (failures.empty()) {
        out << "OK\n";
        return kOk;
      }
      for (const auto& f : failures) out << "FAIL " << f << '\n';
      return kVerifyFailed;
    } else if (*bench) {
      const bool custom = bench_weights || bench_goal;
      BenchSpec spec = DefaultBenchSpec();
      if (custom) {
        spec.categories.clear();
        const std::string w = bench_weights.value_or("0..9");
        ParseWeightSet(w);
        if (bench_goal) {
          spec.categories.push_back({ParseGoal(*bench_goal), w});
        } else {
          spec.categories.push_back({Goal::kMax, w});
          spec.categories.push_back({Goal::kMin, w});
        }
        spec.large_sizes.clear();
      }
      if (!sizes_text.empty()) spec.sizes = ParseSizes(sizes_text);
      if (large_text) {
        spec.large_sizes = *large_text == "none" ? std::vector<int>{}
                                                 : ParseSizes(*large_text);
      }
      spec.tight = with_tight.value_or(!custom);
      spec.count = count;
      spec.seed = seed;
      spec.timing = timing;
      spec.oracle_cap = OracleCap();
      spec.tight_oracle_cap = std::max(spec.oracle_cap, 8);
      const BenchReport report = RunBench(spec);
      out << FormatBench(report, spec, tsv);
      return report.violations == 0 ? kOk : kVerifyFailed;
    } else if (*reduce) {
      const std::string text = ReadFile(instance_path);
      if (direction == "tsp2stsp") {
        const TspMatrix tsp = ReadTspMatrix(text);
        Emit(WriteInstance(TspToStsp(tsp.d, tsp.goal)), out_path, out);
      } else {
        const Instance instance = ReadInstance(text);
        Emit(WriteTspMatrix(CollapseOneStack(instance), instance.goal()),
             out_path, out);
      }
    }
  } catch (const ParseError& e) {
    err << "stsp: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const SizeLimitError& e) {
    err << "stsp: " << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    err << "stsp: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace stsp::cli
