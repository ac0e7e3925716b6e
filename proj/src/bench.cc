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

#include "cascade_knapsack/bench.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {
namespace {

struct Job {
  InstanceClass cls;
  int n;
  int k;
};

int ClassIndex(InstanceClass cls) { return static_cast<int>(cls); }
int StrategyIndex(Strategy s) { return static_cast<int>(s); }

std::string ClassRowTitle(InstanceClass cls) {
  switch (cls) {
    case InstanceClass::kUncorrelated:
      return "Uncorrelated instances";
    case InstanceClass::kWeaklyCorrelated:
      return "Weakly correlated instances";
    case InstanceClass::kStronglyCorrelated:
      return "Strongly correlated instances";
  }
  return "";
}

std::string FormatTime(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", seconds);
  return buf;
}

std::string FormatRecordTime(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", seconds);
  return buf;
}

struct Row {
  std::string title;
  std::vector<std::string> cells;
};

std::string Render(const std::string& corner, const std::vector<Row>& rows,
                   TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::kMarkdown) {
    out << "| " << corner;
    for (const Strategy s : kAllStrategies) out << " | " << StrategyTitle(s);
    out << " |\n|---|---:|---:|---:|\n";
    for (const Row& row : rows) {
      out << "| " << row.title;
      for (const std::string& cell : row.cells) out << " | " << cell;
      out << " |\n";
    }
  } else {
    out << "row";
    for (const Strategy s : kAllStrategies) out << "," << StrategyName(s);
    out << "\n";
    for (const Row& row : rows) {
      out << row.title;
      for (const std::string& cell : row.cells) out << "," << cell;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace

bool BenchReport::IsExcluded(const std::string& instance_id) const {
  return std::find(excluded.begin(), excluded.end(), instance_id) !=
         excluded.end();
}

uint64_t CellSeed(uint64_t base_seed, InstanceClass cls, int n, int k) {
  const uint64_t mixed = base_seed ^
                         (static_cast<uint64_t>(ClassIndex(cls) + 1) << 56) ^
                         (static_cast<uint64_t>(n) << 32) ^
                         static_cast<uint64_t>(k);
  return SplitMix64(mixed).Next();
}

std::string InstanceId(InstanceClass cls, int n, int k) {
  return std::string(ClassName(cls)) + "-n" + std::to_string(n) + "-k" +
         std::to_string(k);
}

BenchReport RunSuite(const BenchConfig& config) {
  if (config.sizes.empty() || config.classes.empty()) {
    throw KnapsackError(ErrorCode::kInvalidConfig,
                        "sizes and classes must be non-empty");
  }
  if (config.instances_per_cell < 1) {
    throw KnapsackError(ErrorCode::kInvalidConfig,
                        "instances_per_cell must be >= 1");
  }
  if (config.time_limit_seconds <= 0) {
    throw KnapsackError(ErrorCode::kInvalidConfig, "time limit must be > 0");
  }
  std::vector<Job> jobs;
  for (const InstanceClass cls : config.classes) {
    for (const int n : config.sizes) {
      for (int k = 0; k < config.instances_per_cell; ++k) {
        jobs.push_back(Job{cls, n, k});
      }
    }
  }
  // Validate every generator config up front so workers never throw.
  for (const Job& job : jobs) {
    Validate(GeneratorConfig{job.cls, job.n, config.range, 0});
  }

  BenchReport report;
  report.sizes = config.sizes;
  report.classes = config.classes;
  std::mutex mu;
  std::atomic<size_t> next{0};
  const Limits limits{config.time_limit_seconds, config.node_limit};

  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      const Instance instance = Generate(GeneratorConfig{
          job.cls, job.n, config.range,
          CellSeed(config.base_seed, job.cls, job.n, job.k)});
      std::vector<RunRecord> local;
      for (const Strategy strategy : kAllStrategies) {
        const SolveReport solved = Solve(instance, strategy, limits);
        local.push_back(RunRecord{InstanceId(job.cls, job.n, job.k), job.cls,
                                  job.n, strategy, solved.nodes_evaluated,
                                  solved.wall_time_seconds, solved.optimal,
                                  solved.best.value});
      }
      std::lock_guard<std::mutex> lock(mu);
      for (RunRecord& r : local) report.records.push_back(std::move(r));
    }
  };
  const int threads = std::max(1, config.jobs);
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  // Restore the deterministic job order.
  auto key = [&](const RunRecord& r) {
    const auto cls_pos = std::find(config.classes.begin(),
                                   config.classes.end(), r.instance_class) -
                         config.classes.begin();
    const auto n_pos =
        std::find(config.sizes.begin(), config.sizes.end(), r.n) -
        config.sizes.begin();
    return std::make_tuple(cls_pos, n_pos, r.instance_id,
                           StrategyIndex(r.strategy));
  };
  std::sort(report.records.begin(), report.records.end(),
            [&](const RunRecord& a, const RunRecord& b) {
              return key(a) < key(b);
            });
  for (const RunRecord& r : report.records) {
    if (!r.optimal && !report.IsExcluded(r.instance_id)) {
      report.excluded.push_back(r.instance_id);
    }
  }
  return report;
}

Aggregate Summarize(const BenchReport& report, Strategy strategy,
                    std::optional<int> n, std::optional<InstanceClass> cls) {
  Aggregate agg;
  int64_t total_nodes = 0;
  double total_time = 0.0;
  for (const RunRecord& r : report.records) {
    if (r.strategy != strategy) continue;
    if (n && r.n != *n) continue;
    if (cls && r.instance_class != *cls) continue;
    if (report.IsExcluded(r.instance_id)) continue;
    ++agg.runs;
    total_nodes += r.nodes;
    total_time += r.time_seconds;
  }
  if (agg.runs > 0) {
    agg.mean_nodes = Rational(total_nodes, agg.runs);
    agg.mean_time_seconds = total_time / static_cast<double>(agg.runs);
  }
  return agg;
}

std::string EmitTable(const BenchReport& report, TableLayout layout,
                      TableFormat format) {
  if (report.records.empty()) {
    throw KnapsackError(ErrorCode::kEmptyReport, "no benchmark records");
  }
  auto nodes_row = [&](std::string title, std::optional<int> n,
                       std::optional<InstanceClass> cls) {
    Row row{std::move(title), {}};
    for (const Strategy s : kAllStrategies) {
      const Aggregate agg = Summarize(report, s, n, cls);
      row.cells.push_back(agg.runs ? agg.mean_nodes.ToDecimal(0) : "-");
    }
    return row;
  };
  auto time_row = [&](std::string title, std::optional<int> n,
                      std::optional<InstanceClass> cls) {
    Row row{std::move(title), {}};
    for (const Strategy s : kAllStrategies) {
      const Aggregate agg = Summarize(report, s, n, cls);
      row.cells.push_back(agg.runs ? FormatTime(agg.mean_time_seconds) : "-");
    }
    return row;
  };

  std::vector<Row> rows;
  if (layout == TableLayout::kOverall) {
    rows.push_back(nodes_row("Average node number", std::nullopt,
                             std::nullopt));
    rows.push_back(time_row("Average run time (s.)", std::nullopt,
                            std::nullopt));
    return Render("Algorithm:", rows, format);
  }
  const bool nodes = layout == TableLayout::kBySizeAndClassNodes;
  auto make = [&](std::string title, std::optional<int> n,
                  std::optional<InstanceClass> cls) {
    return nodes ? nodes_row(std::move(title), n, cls)
                 : time_row(std::move(title), n, cls);
  };
  for (const int n : report.sizes) {
    rows.push_back(make("Instances size " + std::to_string(n), n,
                        std::nullopt));
  }
  for (const InstanceClass cls : report.classes) {
    rows.push_back(make(ClassRowTitle(cls), std::nullopt, cls));
  }
  rows.push_back(make("Average all instances", std::nullopt, std::nullopt));
  return Render("Instances", rows, format);
}

std::string EmitRecordsCsv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance_id,class,n,strategy,nodes,time_s,optimal,value_num,"
         "value_den\n";
  for (const RunRecord& r : report.records) {
    out << r.instance_id << "," << ClassName(r.instance_class) << "," << r.n
        << "," << StrategyName(r.strategy) << "," << r.nodes << ","
        << FormatRecordTime(r.time_seconds) << "," << (r.optimal ? 1 : 0) << ","
        << r.value.num() << "," << r.value.den() << "\n";
  }
  return out.str();
}

}  // namespace cascade_knapsack
