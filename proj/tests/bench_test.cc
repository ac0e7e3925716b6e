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

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cascade_knapsack/error.h"
#include "gtest/gtest.h"

namespace cascade_knapsack {
namespace {

RunRecord Record(std::string id, InstanceClass cls, int n, Strategy s,
                 int64_t nodes, double time, bool optimal = true) {
  return RunRecord{std::move(id), cls, n, s, nodes, time, optimal, Rational(1)};
}

// One run per strategy carrying the published overall averages.
BenchReport PublishedAverages() {
  BenchReport report;
  report.sizes = {10};
  report.classes = {InstanceClass::kUncorrelated};
  report.records = {
      Record("i", InstanceClass::kUncorrelated, 10, Strategy::kKolesar, 478,
             4.078),
      Record("i", InstanceClass::kUncorrelated, 10,
             Strategy::kGreenbergHegerich, 512, 22.344),
      Record("i", InstanceClass::kUncorrelated, 10, Strategy::kCascadingTree,
             69, 0.026)};
  return report;
}

std::vector<std::vector<std::string>> ParseMarkdown(const std::string& md) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(md);
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    if (index++ < 2) continue;  // header and separator
    std::vector<std::string> cells;
    std::istringstream cols(line);
    std::string cell;
    std::getline(cols, cell, '|');
    while (std::getline(cols, cell, '|')) {
      const auto a = cell.find_first_not_of(' ');
      const auto b = cell.find_last_not_of(' ');
      if (a != std::string::npos) cells.push_back(cell.substr(a, b - a + 1));
    }
    rows.push_back(cells);
  }
  return rows;
}

std::vector<std::vector<std::string>> ParseCsv(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cols(line);
    std::string cell;
    while (std::getline(cols, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(EmitTableTest, PublishedOverallTable) {
  const std::string md = EmitTable(PublishedAverages(), TableLayout::kOverall,
                                   TableFormat::kMarkdown);
  EXPECT_EQ(md,
            "| Algorithm: | Kolesar | Greenberg & Hegerich | Cascading Tree |\n"
            "|---|---:|---:|---:|\n"
            "| Average node number | 478 | 512 | 69 |\n"
            "| Average run time (s.) | 4.078 | 22.344 | 0.026 |\n");
}

TEST(EmitTableTest, SingleRunAveragesEqualTheRun) {
  const BenchReport report = PublishedAverages();
  const auto rows = ParseMarkdown(EmitTable(
      report, TableLayout::kBySizeAndClassNodes, TableFormat::kMarkdown));
  // size 10, uncorrelated, overall.
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_EQ(row, (std::vector<std::string>{row[0], "478", "512", "69"}));
  }
  EXPECT_EQ(rows[0][0], "Instances size 10");
  EXPECT_EQ(rows[1][0], "Uncorrelated instances");
  EXPECT_EQ(rows[2][0], "Average all instances");
}

TEST(EmitTableTest, CsvMatchesMarkdown) {
  BenchConfig config;
  config.sizes = {10, 12};
  config.instances_per_cell = 2;
  const BenchReport report = RunSuite(config);
  for (const TableLayout layout :
       {TableLayout::kOverall, TableLayout::kBySizeAndClassTime,
        TableLayout::kBySizeAndClassNodes}) {
    EXPECT_EQ(
        ParseMarkdown(EmitTable(report, layout, TableFormat::kMarkdown)),
        ParseCsv(EmitTable(report, layout, TableFormat::kCsv)));
  }
}

TEST(EmitTableTest, EmptyReport) {
  try {
    EmitTable(BenchReport{}, TableLayout::kOverall, TableFormat::kCsv);
    FAIL();
  } catch (const KnapsackError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyReport);
  }
}

TEST(EmitTableTest, ExcludedInstancesStayOutOfAverages) {
  BenchReport report = PublishedAverages();
  report.records.push_back(Record("slow", InstanceClass::kUncorrelated, 10,
                                  Strategy::kKolesar, 1'000'000, 3600.0,
                                  false));
  report.records.push_back(Record("slow", InstanceClass::kUncorrelated, 10,
                                  Strategy::kGreenbergHegerich, 5, 0.1));
  report.records.push_back(Record("slow", InstanceClass::kUncorrelated, 10,
                                  Strategy::kCascadingTree, 5, 0.1));
  report.excluded = {"slow"};
  EXPECT_EQ(Summarize(report, Strategy::kKolesar).mean_nodes, Rational(478));
  EXPECT_EQ(Summarize(report, Strategy::kCascadingTree).runs, 1);
}

TEST(RunSuiteTest, MinimalSuite) {
  BenchConfig config;
  config.sizes = {10};
  config.classes = {InstanceClass::kWeaklyCorrelated};
  config.instances_per_cell = 1;
  const BenchReport report = RunSuite(config);
  ASSERT_EQ(report.records.size(), 3u);
  EXPECT_TRUE(report.excluded.empty());
  for (const RunRecord& r : report.records) {
    EXPECT_TRUE(r.optimal);
    EXPECT_EQ(r.value, report.records[0].value);
  }
}

TEST(RunSuiteTest, CountsAndDeterminism) {
  BenchConfig config;
  config.sizes = {10, 15};
  config.instances_per_cell = 3;
  config.base_seed = 77;
  const BenchReport a = RunSuite(config);
  config.jobs = 4;
  const BenchReport b = RunSuite(config);
  ASSERT_EQ(a.records.size(), 2u * 3u * 3u * 3u);
  std::set<std::string> ids;
  for (size_t i = 0; i < a.records.size(); ++i) {
    ids.insert(a.records[i].instance_id);
    EXPECT_EQ(a.records[i].instance_id, b.records[i].instance_id);
    EXPECT_EQ(a.records[i].strategy, b.records[i].strategy);
    EXPECT_EQ(a.records[i].nodes, b.records[i].nodes);
    EXPECT_EQ(a.records[i].value, b.records[i].value);
  }
  EXPECT_EQ(ids.size(), 18u);
}

TEST(RunSuiteTest, AveragesMatchRecords) {
  BenchConfig config;
  config.sizes = {10, 20};
  config.instances_per_cell = 2;
  const BenchReport report = RunSuite(config);
  for (const Strategy s : kAllStrategies) {
    int64_t total = 0;
    int64_t count = 0;
    for (const RunRecord& r : report.records) {
      if (r.strategy == s && r.n == 20) {
        total += r.nodes;
        ++count;
      }
    }
    EXPECT_EQ(Summarize(report, s, 20).mean_nodes, Rational(total, count));
  }
}

TEST(RunSuiteTest, InvalidConfig) {
  BenchConfig config;
  config.instances_per_cell = 0;
  EXPECT_THROW(RunSuite(config), KnapsackError);
  config = BenchConfig{};
  config.sizes.clear();
  EXPECT_THROW(RunSuite(config), KnapsackError);
}

TEST(CellSeedTest, DistinctPerCell) {
  std::set<uint64_t> seeds;
  for (const InstanceClass cls : kAllClasses) {
    for (const int n : {10, 20, 30, 40, 50}) {
      for (int k = 0; k < 5; ++k) seeds.insert(CellSeed(1, cls, n, k));
    }
  }
  EXPECT_EQ(seeds.size(), 75u);
}

TEST(EmitRecordsCsvTest, Columns) {
  const std::string csv = EmitRecordsCsv(PublishedAverages());
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "instance_id,class,n,strategy,nodes,time_s,optimal,value_num,"
            "value_den");
  EXPECT_NE(csv.find("i,uncorrelated,10,cascade,69,"), std::string::npos);
}

}  // namespace
}  // namespace cascade_knapsack
