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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cascade_knapsack/bench.h"
#include "cascade_knapsack/bnb.h"
#include "cascade_knapsack/generator.h"
#include "cascade_knapsack/io.h"
#include "cascade_knapsack/oracle.h"
#include "cascade_knapsack/relax.h"
#include "test_util.h"

namespace ck = cascade_knapsack;
namespace ckt = cascade_knapsack::testing;

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string out;
    for (const std::string& f : failures_) out += "\n      - " + f;
    if (count_ > static_cast<int>(failures_.size())) {
      out += "\n      ... " + std::to_string(count_) + " failures in total";
    }
    return out;
  }

 private:
  std::vector<std::string> failures_;
  int count_ = 0;
};

int failed = 0;

void Report(const char* id, const std::string& title, const Check& check,
            double seconds, const std::string& detail) {
  std::printf("[%s] %s %s (%.2fs) %s%s\n", check.ok() ? "PASS" : "FAIL", id,
              title.c_str(), seconds, detail.c_str(),
              check.ok() ? "" : check.Summary().c_str());
  std::fflush(stdout);
  if (!check.ok()) ++failed;
}

std::string Str(const ck::Rational& r) { return r.ToString(); }

// Figure-1 reproduction with exact rational equality; under 1 s.
void Criterion1() {
  const auto start = Clock::now();
  Check c;
  const ck::Instance inst = ckt::Table1();
  const ck::SolveReport r =
      ck::Solve(inst, ck::Strategy::kCascadingTree, ck::Limits{}, true);
  const auto& nodes = r.trace->nodes;
  c.Expect(nodes.size() == 3, "three nodes in trace");
  if (nodes.size() == 3) {
    c.Expect(nodes[0].upper_bound() == ck::Rational(78, 25),
             "root UB 78/25");
    c.Expect(nodes[0].heuristic &&
                 nodes[0].heuristic->value == ck::Rational(27, 10),
             "root heuristic 27/10");
    c.Expect(nodes[1].upper_bound() == ck::Rational(99, 35),
             "child 2 UB 99/35");
    c.Expect(ck::FormatBound(*nodes[1].upper_bound()) == "2.83",
             "child 2 printed 2.83");
    c.Expect(nodes[1].branch_label == "x1=0", "child 2 label x1=0");
    c.Expect(nodes[2].upper_bound() == ck::Rational(3), "child 3 UB 3");
    c.Expect(nodes[2].branch_label == "x1=1,x2=0",
             "child 3 label x1=1,x2=0");
  }
  c.Expect(r.best.value == ck::Rational(3), "optimum 3");
  c.Expect(r.best.selection == std::vector<uint8_t>{1, 0, 1, 1, 0},
           "selection (1,0,1,1,0)");
  c.Expect(r.nodes_evaluated == 3, "nodes_evaluated 3");
  c.Expect(r.optimal, "optimal");
  const double t = Seconds(start);
  c.Expect(t < 1.0, "runtime < 1 s");
  Report("AC1", "Figure-1 golden reproduction", c, t,
         "value=" + Str(r.best.value) +
             " nodes=" + std::to_string(r.nodes_evaluated));
}

// Kolesar 11 and Greenberg & Hegerich 13 nodes on the same instance.
void Criterion2() {
  const auto start = Clock::now();
  Check c;
  const ck::Instance inst = ckt::Table1();
  const ck::SolveReport k = ck::Solve(inst, ck::Strategy::kKolesar);
  const ck::SolveReport g = ck::Solve(inst, ck::Strategy::kGreenbergHegerich);
  c.Expect(k.best.value == ck::Rational(3) && k.optimal, "Kolesar value 3");
  c.Expect(g.best.value == ck::Rational(3) && g.optimal, "G&H value 3");
  c.Expect(k.nodes_evaluated == 11,
           "Kolesar nodes " + std::to_string(k.nodes_evaluated) + " != 11");
  c.Expect(g.nodes_evaluated == 13,
           "G&H nodes " + std::to_string(g.nodes_evaluated) + " != 13");
  Report("AC2", "Classic-algorithm example counts", c, Seconds(start),
         "kolesar=" + std::to_string(k.nodes_evaluated) +
             " gh=" + std::to_string(g.nodes_evaluated));
}

// 90 seeded instances: three solvers, DP and brute force agree; < 5 min.
void Criterion3() {
  const auto start = Clock::now();
  Check c;
  int instances = 0;
  for (const ck::InstanceClass cls : ck::kAllClasses) {
    for (const int n : {10, 15, 20}) {
      for (int k = 0; k < 10; ++k) {
        const ck::Instance inst = ck::Generate(ck::GeneratorConfig{
            cls, n, 100, ck::CellSeed(1, cls, n, k)});
        ++instances;
        const ck::Rational dp = ck::DpSolve(inst).value;
        const ck::Rational bf = ck::BruteForce(inst).value;
        c.Expect(dp == bf, inst.name + ": dp " + Str(dp) + " bf " + Str(bf));
        for (const ck::Strategy s : ck::kAllStrategies) {
          const ck::SolveReport r = ck::Solve(inst, s);
          c.Expect(r.optimal && r.best.value == dp,
                   inst.name + " " + std::string(ck::StrategyName(s)) + ": " +
                       Str(r.best.value) + " vs " + Str(dp));
        }
      }
    }
  }
  const double t = Seconds(start);
  c.Expect(instances == 90, "90 instances");
  c.Expect(t < 300.0, "runtime < 5 min");
  Report("AC3", "Oracle equivalence on 90 seeded instances", c, t,
         std::to_string(instances) + " instances");
}

// Default 75-instance suite: cascade mean nodes <= 0.5 x each classic
// (AC4); strong > uncorrelated for every algorithm (AC5).
void Criteria4And5() {
  const auto start = Clock::now();
  const ck::BenchConfig config;  // sizes 10..50, 5 per cell, R = 100
  const ck::BenchReport report = ck::RunSuite(config);
  const double t = Seconds(start);

  std::printf("%s\n", ck::EmitTable(report, ck::TableLayout::kOverall,
                                    ck::TableFormat::kMarkdown)
                          .c_str());
  std::printf("%s\n",
              ck::EmitTable(report, ck::TableLayout::kBySizeAndClassNodes,
                            ck::TableFormat::kMarkdown)
                  .c_str());

  Check c4;
  c4.Expect(report.records.size() == 225, "225 runs");
  std::map<ck::Strategy, ck::Rational> mean;
  for (const ck::Strategy s : ck::kAllStrategies) {
    mean[s] = ck::Summarize(report, s).mean_nodes;
  }
  const ck::Rational cascade = mean[ck::Strategy::kCascadingTree];
  for (const ck::Strategy s :
       {ck::Strategy::kKolesar, ck::Strategy::kGreenbergHegerich}) {
    c4.Expect(cascade <= ck::Rational(1, 2) * mean[s],
              "cascade mean " + cascade.ToDecimal(1) + " > 0.5 x " +
                  std::string(ck::StrategyName(s)) + " " +
                  mean[s].ToDecimal(1));
  }
  Report("AC4", "Table-2 trend (cascade <= 0.5 x classic mean nodes)", c4, t,
         "means kolesar=" + mean[ck::Strategy::kKolesar].ToDecimal(1) +
             " gh=" + mean[ck::Strategy::kGreenbergHegerich].ToDecimal(1) +
             " cascade=" + cascade.ToDecimal(1) +
             " excluded=" + std::to_string(report.excluded.size()));

  Check c5;
  std::string detail;
  for (const ck::Strategy s : ck::kAllStrategies) {
    const ck::Rational strong =
        ck::Summarize(report, s, std::nullopt,
                      ck::InstanceClass::kStronglyCorrelated)
            .mean_nodes;
    const ck::Rational unc =
        ck::Summarize(report, s, std::nullopt, ck::InstanceClass::kUncorrelated)
            .mean_nodes;
    c5.Expect(strong > unc, std::string(ck::StrategyName(s)) +
                                ": strong " + strong.ToDecimal(1) +
                                " <= uncorrelated " + unc.ToDecimal(1));
    detail += std::string(ck::StrategyName(s)) + " " + strong.ToDecimal(0) +
              "/" + unc.ToDecimal(0) + " ";
  }
  Report("AC5", "Correlation hardness ordering (strong > uncorrelated)", c5, t,
         detail);
}

// (a) child UB <= parent UB and (b) monotone incumbent across the seeded
// suite, recorded through full traces.
void Criterion6ab() {
  const auto start = Clock::now();
  Check a;
  Check b;
  int64_t branch_events = 0;
  const ck::BenchConfig config;
  for (const ck::InstanceClass cls : config.classes) {
    for (const int n : config.sizes) {
      for (int k = 0; k < config.instances_per_cell; ++k) {
        const ck::Instance inst = ck::Generate(ck::GeneratorConfig{
            cls, n, config.range, ck::CellSeed(config.base_seed, cls, n, k)});
        for (const ck::Strategy s : ck::kAllStrategies) {
          const ck::SolveReport r = ck::Solve(inst, s, ck::Limits{}, true);
          const auto& nodes = r.trace->nodes;
          for (const ck::Node& node : nodes) {
            if (!node.parent_id || !node.relaxed) continue;
            ++branch_events;
            const ck::Node& parent = nodes[*node.parent_id - 1];
            a.Expect(*node.upper_bound() <= *parent.upper_bound(),
                     inst.name + " node " + std::to_string(node.id));
          }
          ck::Rational last;
          for (const ck::TraceEvent& e : r.trace->events) {
            if (e.kind != ck::TraceEvent::Kind::kIncumbent) continue;
            b.Expect(e.value >= last, inst.name + " incumbent decreased");
            last = e.value;
          }
        }
      }
    }
  }
  const double t = Seconds(start);
  a.Expect(t < 60.0, "runtime < 1 min");
  b.Expect(t < 60.0, "runtime < 1 min");
  Report("AC6a", "Child UB <= parent UB", a, t,
         std::to_string(branch_events) + " child nodes");
  Report("AC6b", "Incumbent non-decreasing", b, t, "");
}

// (c) cascade children plus the all-ones completion partition the parent
// solution set; 50 random instances with n <= 12.
void Criterion6c() {
  const auto start = Clock::now();
  Check c;
  int64_t nodes_checked = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);  // 4..12
    const ck::Instance inst = ckt::SmallInstance(seed + 1000, n);
    const ckt::SubsetTable table(inst);
    const ck::SolveReport r =
        ck::Solve(inst, ck::Strategy::kCascadingTree, ck::Limits{}, true);
    // Every fractional node the search created, selected or not.
    for (const ck::Node& node : r.trace->nodes) {
      if (!node.relaxed || node.relaxed->is_integer()) continue;
      const ck::Solution h =
          ck::GreedyComplete(inst, node.fixings, *node.relaxed);
      const auto children = ck::BranchCascade(inst, node.fixings, h);
      std::map<uint32_t, int> hits;
      for (const ck::BranchChild& child : children) {
        c.Expect(child.feasible, "cascade child infeasible");
        for (const uint32_t m : ckt::FeasibleMasks(inst, table, child.fixings)) {
          ++hits[m];
        }
      }
      ck::Fixings dominated = node.fixings;
      for (int j = 0; j < n; ++j) {
        if (node.fixings.is_free(j) && h.selection[j]) {
          dominated.Set(j, ck::VarState::kOne);
        }
      }
      for (const uint32_t m : ckt::FeasibleMasks(inst, table, dominated)) {
        ++hits[m];
      }
      const auto parent = ckt::FeasibleMasks(inst, table, node.fixings);
      c.Expect(hits.size() == parent.size(),
               inst.name + ": union differs from parent set");
      for (const uint32_t m : parent) {
        c.Expect(hits[m] == 1, inst.name + ": overlap or gap");
      }
      ++nodes_checked;
    }
  }
  const double t = Seconds(start);
  c.Expect(t < 60.0, "runtime < 1 min");
  Report("AC6c", "Cascade branching partitions the solution set", c, t,
         std::to_string(nodes_checked) + " fractional nodes");
}

// (d) Dantzig bound >= brute-force optimum for all fixings, n <= 10.
void Criterion6d() {
  const auto start = Clock::now();
  Check c;
  int64_t subproblems = 0;
  for (uint64_t seed = 0; seed < 9; ++seed) {
    const int n = 2 + static_cast<int>(seed);  // 2..10
    const ck::Instance inst = ckt::SmallInstance(seed + 2000, n);
    const ckt::SubsetTable table(inst);
    ckt::ForEachFixings(n, [&](const ck::Fixings& f) {
      if (f.FixedWeight(inst) > inst.capacity) return;
      ++subproblems;
      const auto opt = ckt::EnumeratedOptimum(inst, table, f);
      c.Expect(opt && ck::DantzigBound(inst, f).upper_bound >= *opt,
               inst.name + ": bound below optimum");
    });
  }
  const double t = Seconds(start);
  c.Expect(t < 60.0, "runtime < 1 min");
  Report("AC6d", "Dantzig bound >= enumerated optimum", c, t,
         std::to_string(subproblems) + " feasible subproblems");
}

// (e) instance-file round trip on 100 generated instances.
void Criterion6e() {
  const auto start = Clock::now();
  Check c;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const ck::Instance inst = ck::Generate(ck::GeneratorConfig{
        ck::kAllClasses[seed % 3], 1 + static_cast<int>(seed % 50), 100,
        seed * 31 + 5});
    c.Expect(ck::ParseInstance(ck::WriteInstance(inst)) == inst, inst.name);
  }
  const double t = Seconds(start);
  c.Expect(t < 60.0, "runtime < 1 min");
  Report("AC6e", "Instance-file round trip", c, t, "100 instances");
}

// (f) bit-exact determinism of generator and solvers.
void Criterion6f() {
  const auto start = Clock::now();
  Check c;
  ck::SplitMix64 rng(0);
  c.Expect(rng.Next() == 0xE220A8397B1DCDAFULL, "SplitMix64 seed-0 vector");
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const ck::GeneratorConfig config{ck::kAllClasses[seed % 3],
                                     10 + static_cast<int>(seed), 100, seed};
    const ck::Instance a = ck::Generate(config);
    const ck::Instance b = ck::Generate(config);
    c.Expect(ck::WriteInstance(a) == ck::WriteInstance(b),
             a.name + " generator");
    for (const ck::Strategy s : ck::kAllStrategies) {
      const ck::SolveReport ra = ck::Solve(a, s, ck::Limits{}, true);
      const ck::SolveReport rb = ck::Solve(b, s, ck::Limits{}, true);
      c.Expect(ra.nodes_evaluated == rb.nodes_evaluated &&
                   ra.best == rb.best &&
                   ra.trace->events == rb.trace->events &&
                   ck::ExportTrace(ra) == ck::ExportTrace(rb),
               a.name + " " + std::string(ck::StrategyName(s)));
    }
  }
  const double t = Seconds(start);
  c.Expect(t < 60.0, "runtime < 1 min");
  Report("AC6f", "Determinism of generator and solvers", c, t, "");
}

}  // namespace

int main() {
  Criterion1();
  Criterion2();
  Criterion3();
  Criteria4And5();
  Criterion6ab();
  Criterion6c();
  Criterion6d();
  Criterion6e();
  Criterion6f();
  std::printf("%s: %d criterion line(s) failed\n",
              failed == 0 ? "ACCEPTED" : "REJECTED", failed);
  return failed == 0 ? 0 : 1;
}
