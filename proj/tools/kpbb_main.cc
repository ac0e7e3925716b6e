// Copyright 2026 The cascade-knapsack Authors
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

// kpbb: generate, solve, benchmark and cross-check 0-1 knapsack instances.
//
// Exit codes: 0 success / agreement, 2 time or node limit hit (best known
// solution printed), 3 parse or configuration error, 4 oracle disagreement.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cascade_knapsack/bench.h"
#include "cascade_knapsack/bnb.h"
#include "cascade_knapsack/error.h"
#include "cascade_knapsack/generator.h"
#include "cascade_knapsack/io.h"
#include "cascade_knapsack/oracle.h"

namespace ck = cascade_knapsack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLimit = 2;
constexpr int kExitConfig = 3;
constexpr int kExitDisagree = 4;

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::vector<int> ParseSizes(const std::string& text) {
  std::vector<int> sizes;
  for (const std::string& s : SplitList(text)) {
    try {
      size_t used = 0;
      const int n = std::stoi(s, &used);
      if (used != s.size() || n < 1) throw std::invalid_argument(s);
      sizes.push_back(n);
    } catch (const std::exception&) {
      throw ck::KnapsackError(ck::ErrorCode::kInvalidConfig,
                              "bad size '" + s + "'");
    }
  }
  if (sizes.empty()) {
    throw ck::KnapsackError(ck::ErrorCode::kInvalidConfig, "no sizes given");
  }
  return sizes;
}

std::vector<ck::InstanceClass> ParseClasses(const std::string& text) {
  std::vector<ck::InstanceClass> classes;
  for (const std::string& s : SplitList(text)) {
    const auto cls = ck::ParseClass(s);
    if (!cls) {
      throw ck::KnapsackError(ck::ErrorCode::kInvalidConfig,
                              "unknown class '" + s +
                                  "' (uncorrelated, weak, strong)");
    }
    classes.push_back(*cls);
  }
  if (classes.empty()) {
    throw ck::KnapsackError(ck::ErrorCode::kInvalidConfig, "no classes given");
  }
  return classes;
}

std::string SelectionText(const std::vector<uint8_t>& selection) {
  std::string out;
  for (size_t j = 0; j < selection.size(); ++j) {
    if (j) out += ' ';
    out += selection[j] ? '1' : '0';
  }
  return out;
}

struct GenerateArgs {
  std::string instance_class = "uncorrelated";
  int n = 10;
  int64_t range = 100;
  uint64_t seed = 0;
  std::string out;
};

int RunGenerate(const GenerateArgs& args) {
  const auto cls = ck::ParseClass(args.instance_class);
  if (!cls) {
    throw ck::KnapsackError(ck::ErrorCode::kInvalidConfig,
                            "unknown class '" + args.instance_class + "'");
  }
  const ck::Instance instance =
      ck::Generate(ck::GeneratorConfig{*cls, args.n, args.range, args.seed});
  const std::string text = ck::WriteInstance(instance);
  if (args.out.empty() || args.out == "-") {
    std::cout << text;
  } else {
    ck::WriteTextFile(args.out, text);
  }
  std::cerr << "generated " << instance.name << ": n=" << instance.size()
            << " C=" << instance.capacity << " class=" << args.instance_class
            << " seed=" << args.seed << "\n";
  return kExitOk;
}

struct SolveArgs {
  std::string path;
  std::string strategy = "cascade";
  double time_limit = 3600.0;
  std::optional<int64_t> node_limit;
  std::string trace_out;
};

int RunSolve(const SolveArgs& args) {
  const auto strategy = ck::ParseStrategy(args.strategy);
  if (!strategy) {
    throw ck::KnapsackError(ck::ErrorCode::kInvalidConfig,
                            "unknown strategy '" + args.strategy + "'");
  }
  const ck::Instance instance = ck::ReadInstanceFile(args.path);
  const ck::SolveReport report =
      ck::Solve(instance, *strategy, ck::Limits{args.time_limit, args.node_limit},
                !args.trace_out.empty());
  std::cout << "instance: " << instance.name << " (n=" << instance.size()
            << ", C=" << instance.capacity << ")\n"
            << "strategy: " << ck::StrategyName(*strategy) << "\n"
            << "value: " << report.best.value << " ("
            << report.best.value.ToDecimal(6) << ")\n"
            << "selection: "
            << SelectionText(ck::ToInputOrder(instance, report.best.selection))
            << "\n"
            << "weight: " << report.best.weight << "\n"
            << "nodes_evaluated: " << report.nodes_evaluated << "\n"
            << "nodes_pruned: " << report.nodes_pruned << "\n"
            << "wall_time_s: " << report.wall_time_seconds << "\n"
            << "optimal: " << (report.optimal ? "true" : "false") << "\n";
  if (!args.trace_out.empty()) {
    ck::WriteTextFile(args.trace_out, ck::ExportTrace(report));
  }
  return report.optimal ? kExitOk : kExitLimit;
}

struct BenchArgs {
  std::string sizes = "10,20,30,40,50";
  std::string classes = "uncorrelated,weak,strong";
  int per_cell = 5;
  int64_t range = 100;
  uint64_t seed = 1;
  double time_limit = 3600.0;
  std::string format = "md";
  std::string out;
  std::string records;
  int jobs = 1;
};

int RunBench(const BenchArgs& args) {
  ck::BenchConfig config;
  config.sizes = ParseSizes(args.sizes);
  config.classes = ParseClasses(args.classes);
  config.instances_per_cell = args.per_cell;
  config.range = args.range;
  config.base_seed = args.seed;
  config.time_limit_seconds = args.time_limit;
  config.jobs = args.jobs;
  if (args.format != "md" && args.format != "csv") {
    throw ck::KnapsackError(ck::ErrorCode::kInvalidConfig,
                            "format must be md or csv");
  }
  const auto format = args.format == "md" ? ck::TableFormat::kMarkdown
                                          : ck::TableFormat::kCsv;
  const ck::BenchReport report = ck::RunSuite(config);

  std::ostringstream out;
  const bool md = format == ck::TableFormat::kMarkdown;
  auto section = [&](const char* title, ck::TableLayout layout) {
    if (md) out << "### " << title << "\n\n";
    out << ck::EmitTable(report, layout, format) << "\n";
  };
  section("Overall averages", ck::TableLayout::kOverall);
  section("Average computation time (s)",
          ck::TableLayout::kBySizeAndClassTime);
  section("Average node number", ck::TableLayout::kBySizeAndClassNodes);
  if (!report.excluded.empty()) {
    out << (md ? "Excluded (limit hit): " : "# excluded: ");
    for (size_t i = 0; i < report.excluded.size(); ++i) {
      out << (i ? ", " : "") << report.excluded[i];
    }
    out << "\n";
  }
  if (args.out.empty() || args.out == "-") {
    std::cout << out.str();
  } else {
    ck::WriteTextFile(args.out, out.str());
  }
  if (!args.records.empty()) {
    ck::WriteTextFile(args.records, ck::EmitRecordsCsv(report));
  }
  return kExitOk;
}

struct CheckArgs {
  std::vector<std::string> paths;
  std::string sizes = "10,15,20";
  std::string classes = "uncorrelated,weak,strong";
  int per_cell = 10;
  int64_t range = 100;
  uint64_t seed = 1;
  double time_limit = 3600.0;
};

// Solves with the three strategies and both oracles; true iff all agree.
bool CrossCheck(const ck::Instance& instance, double time_limit) {
  std::vector<std::pair<std::string, ck::Rational>> values;
  bool limited = false;
  for (const ck::Strategy s : ck::kAllStrategies) {
    const ck::SolveReport report =
        ck::Solve(instance, s, ck::Limits{time_limit, std::nullopt});
    limited = limited || !report.optimal;
    values.emplace_back(std::string(ck::StrategyName(s)), report.best.value);
  }
  values.emplace_back("dp", ck::DpSolve(instance).value);
  values.emplace_back("brute_force", ck::BruteForce(instance).value);
  bool agree = !limited;
  for (const auto& [name, value] : values) {
    agree = agree && value == values.front().second;
  }
  if (agree) {
    std::cout << "ok " << instance.name << " value "
              << values.front().second << "\n";
    return true;
  }
  std::cout << "DISAGREEMENT on " << instance.name
            << (limited ? " (a solver hit its time limit)" : "") << "\n";
  for (const auto& [name, value] : values) {
    std::cout << "  " << name << ": " << value << "\n";
  }
  std::cout << ck::WriteInstance(instance);
  return false;
}

int RunCheck(const CheckArgs& args) {
  std::vector<ck::Instance> instances;
  if (!args.paths.empty()) {
    for (const std::string& path : args.paths) {
      instances.push_back(ck::ReadInstanceFile(path));
    }
  } else {
    if (args.per_cell < 1) {
      throw ck::KnapsackError(ck::ErrorCode::kInvalidConfig,
                              "per-cell must be >= 1");
    }
    for (const ck::InstanceClass cls : ParseClasses(args.classes)) {
      for (const int n : ParseSizes(args.sizes)) {
        for (int k = 0; k < args.per_cell; ++k) {
          instances.push_back(ck::Generate(ck::GeneratorConfig{
              cls, n, args.range, ck::CellSeed(args.seed, cls, n, k)}));
        }
      }
    }
  }
  for (const ck::Instance& instance : instances) {
    if (instance.size() > ck::kMaxBruteForceItems) {
      throw ck::KnapsackError(ck::ErrorCode::kTooLarge,
                              instance.name + " exceeds the brute-force guard");
    }
  }
  int failures = 0;
  for (const ck::Instance& instance : instances) {
    if (!CrossCheck(instance, args.time_limit)) ++failures;
  }
  std::cout << (instances.size() - failures) << "/" << instances.size()
            << " instances agree\n";
  return failures == 0 ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branch-and-bound 0-1 knapsack solvers: Kolesar, "
               "Greenberg & Hegerich and the cascading tree"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--class", gen.instance_class,
                       "uncorrelated, weak or strong")
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Number of items")->capture_default_str();
  generate->add_option("--R,--range", gen.range, "Value/weight range R")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Generator seed")
      ->capture_default_str();
  generate->add_option("--out,-o", gen.out, "Output path (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("path", solve.path, "Instance file (.kp)")
      ->required();
  solve_cmd->add_option("--strategy", solve.strategy, "kolesar, gh or cascade")
      ->capture_default_str();
  solve_cmd->add_option("--time-limit", solve.time_limit, "Seconds")
      ->capture_default_str();
  solve_cmd->add_option("--node-limit", solve.node_limit, "Maximum nodes");
  solve_cmd->add_option("--trace", solve.trace_out,
                        "Write the search tree as Graphviz DOT");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark suite");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma separated sizes")
      ->capture_default_str();
  bench_cmd->add_option("--classes", bench.classes, "Comma separated classes")
      ->capture_default_str();
  bench_cmd->add_option("--per-cell", bench.per_cell,
                        "Instances per (class, size)")
      ->capture_default_str();
  bench_cmd->add_option("--R,--range", bench.range, "Generator range R")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Base seed")
      ->capture_default_str();
  bench_cmd->add_option("--time-limit", bench.time_limit,
                        "Seconds per solver run")
      ->capture_default_str();
  bench_cmd->add_option("--format", bench.format, "md or csv")
      ->capture_default_str();
  bench_cmd->add_option("--out,-o", bench.out, "Output path (default stdout)");
  bench_cmd->add_option("--records", bench.records,
                        "Also write per-run records as CSV");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")
      ->capture_default_str();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand(
      "check", "Cross-check all solvers against the exact oracles");
  check_cmd->add_option("paths", check.paths,
                        "Instance files (default: seeded suite)");
  check_cmd->add_option("--sizes", check.sizes, "Suite sizes")
      ->capture_default_str();
  check_cmd->add_option("--classes", check.classes, "Suite classes")
      ->capture_default_str();
  check_cmd->add_option("--per-cell", check.per_cell, "Seeds per cell")
      ->capture_default_str();
  check_cmd->add_option("--R,--range", check.range, "Generator range R")
      ->capture_default_str();
  check_cmd->add_option("--seed", check.seed, "Base seed")
      ->capture_default_str();
  check_cmd->add_option("--time-limit", check.time_limit,
                        "Seconds per solver run")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*generate) return RunGenerate(gen);
    if (*solve_cmd) return RunSolve(solve);
    if (*bench_cmd) return RunBench(bench);
    if (*check_cmd) return RunCheck(check);
  } catch (const ck::KnapsackError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
