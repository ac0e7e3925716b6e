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

#include "cascade_knapsack/bnb.h"

#include <chrono>
#include <queue>
#include <string>
#include <utility>

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {
namespace {

std::string FixLabel(int j, VarState state) {
  return "x" + std::to_string(j + 1) +
         (state == VarState::kOne ? "=1" : "=0");
}

BranchChild MakeChild(const Instance& instance, const Fixings& parent,
                      std::span<const std::pair<int, VarState>> changes) {
  BranchChild child;
  child.fixings = parent;
  for (const auto& [j, state] : changes) {
    child.fixings.Set(j, state);
    if (!child.label.empty()) child.label += ",";
    child.label += FixLabel(j, state);
  }
  child.feasible = child.fixings.FixedWeight(instance) <= instance.capacity;
  return child;
}

std::vector<BranchChild> BranchOn(const Instance& instance,
                                  const Fixings& fixings, int j) {
  std::vector<BranchChild> children;
  const std::pair<int, VarState> zero[] = {{j, VarState::kZero}};
  const std::pair<int, VarState> one[] = {{j, VarState::kOne}};
  children.push_back(MakeChild(instance, fixings, zero));
  children.push_back(MakeChild(instance, fixings, one));
  return children;
}

// Frontier entry; the relaxation is recomputed on selection so that the
// queue only holds the fixings.
struct OpenNode {
  int64_t id;
  Rational upper_bound;
  Fixings fixings;
};

// Highest upper bound first, then lowest id.
struct FrontierOrder {
  bool operator()(const OpenNode& a, const OpenNode& b) const {
    if (a.upper_bound != b.upper_bound) return a.upper_bound < b.upper_bound;
    return a.id > b.id;
  }
};

using Frontier =
    std::priority_queue<OpenNode, std::vector<OpenNode>, FrontierOrder>;

}  // namespace

std::string_view StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kKolesar:
      return "kolesar";
    case Strategy::kGreenbergHegerich:
      return "gh";
    case Strategy::kCascadingTree:
      return "cascade";
  }
  return "unknown";
}

std::string_view StrategyTitle(Strategy strategy) {
  switch (strategy) {
    case Strategy::kKolesar:
      return "Kolesar";
    case Strategy::kGreenbergHegerich:
      return "Greenberg & Hegerich";
    case Strategy::kCascadingTree:
      return "Cascading Tree";
  }
  return "unknown";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (const Strategy s : kAllStrategies) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view NodeFateName(NodeFate fate) {
  switch (fate) {
    case NodeFate::kOpen:
      return "open";
    case NodeFate::kBoundClosed:
      return "bound-closed";
    case NodeFate::kIntegral:
      return "integral";
    case NodeFate::kBranched:
      return "branched";
    case NodeFate::kNoChildren:
      return "no-children";
    case NodeFate::kPrunedAtCreation:
      return "pruned";
    case NodeFate::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

std::vector<BranchChild> BranchKolesar(const Instance& instance,
                                       const Fixings& fixings) {
  for (int j = 0; j < fixings.size(); ++j) {
    if (fixings.is_free(j)) return BranchOn(instance, fixings, j);
  }
  throw KnapsackError(ErrorCode::kNoFreeVariable,
                      "Kolesar branching needs a free variable");
}

std::vector<BranchChild> BranchGreenbergHegerich(
    const Instance& instance, const Fixings& fixings,
    const RelaxedSolution& relaxed) {
  if (!relaxed.fractional_index) {
    throw KnapsackError(ErrorCode::kNoFreeVariable,
                        "integral relaxation has no branching variable");
  }
  return BranchOn(instance, fixings, *relaxed.fractional_index);
}

std::vector<BranchChild> BranchCascade(const Instance& instance,
                                       const Fixings& fixings,
                                       const Solution& heuristic) {
  std::vector<int> ones;
  for (int j = 0; j < fixings.size(); ++j) {
    if (fixings.is_free(j) && heuristic.selection[j]) ones.push_back(j);
  }
  std::vector<BranchChild> children;
  std::vector<std::pair<int, VarState>> changes;
  for (const int j : ones) {
    changes.emplace_back(j, VarState::kZero);
    BranchChild child = MakeChild(instance, fixings, changes);
    if (child.feasible) child.fixings = CapacityFix(instance, child.fixings);
    children.push_back(std::move(child));
    changes.back().second = VarState::kOne;
  }
  return children;
}

bool Incumbent::Offer(const Solution& candidate) {
  if (candidate.value > best_.value) {
    best_ = candidate;
    return true;
  }
  return false;
}

SolveReport Solve(const Instance& instance, Strategy strategy,
                  const Limits& limits, bool trace_enabled) {
  if (!(limits.time_limit_seconds > 0)) {
    throw KnapsackError(ErrorCode::kInvalidConfig, "time limit must be > 0");
  }
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  SolveReport report;
  report.strategy = strategy;
  Incumbent incumbent(instance);
  SearchTrace trace;
  trace.strategy = strategy;
  trace.num_items = instance.size();

  auto record = [&](TraceEvent::Kind kind, int64_t id, const Rational& v) {
    if (trace_enabled) trace.events.push_back({kind, id, v});
  };
  auto set_fate = [&](int64_t id, NodeFate fate) {
    if (trace_enabled) trace.nodes[id - 1].fate = fate;
  };
  auto offer = [&](const Solution& candidate, int64_t id) {
    if (incumbent.Offer(candidate)) {
      record(TraceEvent::Kind::kIncumbent, id, candidate.value);
    }
  };

  const bool cascade = strategy == Strategy::kCascadingTree;
  Frontier frontier;
  int64_t next_id = 1;

  // Creates a node; returns it to the frontier unless infeasible or pruned.
  auto create = [&](Fixings fixings, std::optional<int64_t> parent,
                    std::string label, bool feasible) {
    const int64_t id = next_id++;
    ++report.nodes_evaluated;
    std::optional<RelaxedSolution> relaxed;
    NodeFate fate = NodeFate::kOpen;
    if (!feasible) {
      fate = NodeFate::kInfeasible;
    } else {
      relaxed = DantzigBound(instance, fixings);
      if (parent && relaxed->upper_bound <= incumbent.value()) {
        fate = NodeFate::kPrunedAtCreation;
      }
    }
    if (fate != NodeFate::kOpen) {
      ++report.nodes_pruned;
      record(TraceEvent::Kind::kPrune, id,
             relaxed ? relaxed->upper_bound : Rational(0));
    } else {
      frontier.push(OpenNode{id, relaxed->upper_bound, fixings});
    }
    if (trace_enabled) {
      trace.nodes.push_back(Node{id, parent, std::move(label),
                                 std::move(fixings), std::move(relaxed),
                                 std::nullopt, fate});
    }
  };

  Fixings root(instance.size());
  if (cascade) root = CapacityFix(instance, root);
  create(std::move(root), std::nullopt, "", true);

  report.optimal = true;
  while (!frontier.empty()) {
    if (frontier.top().upper_bound <= incumbent.value()) break;
    if (elapsed() >= limits.time_limit_seconds ||
        (limits.node_limit && report.nodes_evaluated >= *limits.node_limit)) {
      report.optimal = false;
      break;
    }
    OpenNode node = frontier.top();
    frontier.pop();
    record(TraceEvent::Kind::kSelect, node.id, node.upper_bound);

    const RelaxedSolution relaxed = DantzigBound(instance, node.fixings);
    if (relaxed.is_integer()) {
      const Solution solution =
          MakeSolution(instance, relaxed.IntegerSelection());
      offer(solution, node.id);
      if (trace_enabled) trace.nodes[node.id - 1].heuristic = solution;
      set_fate(node.id, NodeFate::kIntegral);
      continue;
    }

    std::vector<BranchChild> children;
    switch (strategy) {
      case Strategy::kKolesar:
        children = BranchKolesar(instance, node.fixings);
        break;
      case Strategy::kGreenbergHegerich:
        children = BranchGreenbergHegerich(instance, node.fixings, relaxed);
        break;
      case Strategy::kCascadingTree: {
        const Solution heuristic =
            GreedyComplete(instance, node.fixings, relaxed);
        offer(heuristic, node.id);
        if (trace_enabled) trace.nodes[node.id - 1].heuristic = heuristic;
        children = BranchCascade(instance, node.fixings, heuristic);
        break;
      }
    }
    set_fate(node.id, children.empty() ? NodeFate::kNoChildren
                                       : NodeFate::kBranched);
    for (BranchChild& child : children) {
      create(std::move(child.fixings), node.id, std::move(child.label),
             child.feasible);
    }
  }

  if (trace_enabled) {
    const NodeFate left = report.optimal ? NodeFate::kBoundClosed
                                         : NodeFate::kOpen;
    while (!frontier.empty()) {
      set_fate(frontier.top().id, left);
      frontier.pop();
    }
    report.trace = std::move(trace);
  }
  report.best = incumbent.best();
  report.wall_time_seconds = elapsed();
  return report;
}

}  // namespace cascade_knapsack
