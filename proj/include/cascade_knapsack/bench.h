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

// Benchmark harness: generates the instance suite (sizes x classes x
// instances_per_cell), runs every strategy on every instance and aggregates
// node counts and wall times. An instance on which any strategy hit a limit
// is excluded from every average but kept in the record list.

#ifndef CASCADE_KNAPSACK_BENCH_H_
#define CASCADE_KNAPSACK_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cascade_knapsack/bnb.h"
#include "cascade_knapsack/generator.h"

namespace cascade_knapsack {

struct BenchConfig {
  std::vector<int> sizes = {10, 20, 30, 40, 50};
  std::vector<InstanceClass> classes = {std::begin(kAllClasses),
                                        std::end(kAllClasses)};
  int instances_per_cell = 5;
  int64_t range = 100;
  uint64_t base_seed = 1;
  double time_limit_seconds = 3600.0;
  std::optional<int64_t> node_limit;
  int jobs = 1;
};

struct RunRecord {
  std::string instance_id;
  InstanceClass instance_class = InstanceClass::kUncorrelated;
  int n = 0;
  Strategy strategy = Strategy::kCascadingTree;
  int64_t nodes = 0;
  double time_seconds = 0.0;
  bool optimal = false;
  Rational value;
};

struct BenchReport {
  std::vector<int> sizes;
  std::vector<InstanceClass> classes;
  // Ordered by (class, n, instance index, strategy) regardless of jobs.
  std::vector<RunRecord> records;
  // Instances with at least one non-optimal run.
  std::vector<std::string> excluded;

  bool IsExcluded(const std::string& instance_id) const;
};

// Seed of the k-th instance of a (class, n) cell: one SplitMix64 step from
// base_seed ^ ((class + 1) << 56) ^ (n << 32) ^ k.
uint64_t CellSeed(uint64_t base_seed, InstanceClass cls, int n, int k);

std::string InstanceId(InstanceClass cls, int n, int k);

// Throws kInvalidConfig on an empty size/class list or instances_per_cell < 1.
BenchReport RunSuite(const BenchConfig& config);

struct Aggregate {
  int64_t runs = 0;
  Rational mean_nodes;
  double mean_time_seconds = 0.0;
};

// Averages over the non-excluded records of one strategy that pass the
// optional size and class filters.
Aggregate Summarize(const BenchReport& report, Strategy strategy,
                    std::optional<int> n = std::nullopt,
                    std::optional<InstanceClass> cls = std::nullopt);

enum class TableLayout { kOverall, kBySizeAndClassTime, kBySizeAndClassNodes };
enum class TableFormat { kMarkdown, kCsv };

// Columns ordered Kolesar, Greenberg & Hegerich, Cascading Tree. Node
// averages are rounded to integers, times printed with three decimals.
// Throws kEmptyReport when there are no records.
std::string EmitTable(const BenchReport& report, TableLayout layout,
                      TableFormat format);

// One line per run:
// instance_id,class,n,strategy,nodes,time_s,optimal,value_num,value_den
std::string EmitRecordsCsv(const BenchReport& report);

}  // namespace cascade_knapsack

#endif  // CASCADE_KNAPSACK_BENCH_H_
