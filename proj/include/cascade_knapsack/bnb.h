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

// Best-first branch-and-bound for the 0-1 knapsack problem with three
// branching rules:
//
//  * Kolesar: two children on the lowest-index free variable.
//  * Greenberg & Hegerich: two children on the critical (fractional) item.
//  * Cascading tree (Mueller-Merbach): round the relaxation with
//    GreedyComplete, then one child per item i_k chosen by the heuristic,
//    fixing x_{i_1} = ... = x_{i_{k-1}} = 1 and x_{i_k} = 0. The region
//    where every heuristic item is 1 is dominated by the heuristic itself
//    and is not branched into. Children are tightened with CapacityFix.
//
// All three share the Dantzig bound, the node selection rule (highest upper
// bound, then lowest id) and the pruning rule (upper bound <= incumbent).
// Only the cascading tree uses the rounding heuristic for lower bounds; the
// classic rules update the incumbent from integral relaxations only.
//
// nodes_evaluated counts every child the search creates, root included:
// children that are infeasible (One-fixings over capacity) or pruned on
// creation are counted too, they are just never inserted in the frontier.

#ifndef CASCADE_KNAPSACK_BNB_H_
#define CASCADE_KNAPSACK_BNB_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cascade_knapsack/model.h"
#include "cascade_knapsack/rational.h"
#include "cascade_knapsack/relax.h"

namespace cascade_knapsack {

enum class Strategy { kKolesar, kGreenbergHegerich, kCascadingTree };

inline constexpr Strategy kAllStrategies[] = {Strategy::kKolesar,
                                              Strategy::kGreenbergHegerich,
                                              Strategy::kCascadingTree};

// Short CLI name: "kolesar", "gh", "cascade".
std::string_view StrategyName(Strategy strategy);
// Table heading: "Kolesar", "Greenberg & Hegerich", "Cascading Tree".
std::string_view StrategyTitle(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view name);

struct Limits {
  double time_limit_seconds = 3600.0;
  std::optional<int64_t> node_limit;
};

struct BranchChild {
  Fixings fixings;
  // Newly fixed variables, 1-based, e.g. "x1=1,x2=0".
  std::string label;
  // False when the One-fixed weight exceeds the capacity.
  bool feasible = true;
};

std::vector<BranchChild> BranchKolesar(const Instance& instance,
                                       const Fixings& fixings);

std::vector<BranchChild> BranchGreenbergHegerich(
    const Instance& instance, const Fixings& fixings,
    const RelaxedSolution& relaxed);

// `heuristic` must be the GreedyComplete solution of the node. Returns no
// children when the heuristic selects no free item.
std::vector<BranchChild> BranchCascade(const Instance& instance,
                                       const Fixings& fixings,
                                       const Solution& heuristic);

// Best known feasible solution. Starts at the all-zeros solution.
class Incumbent {
 public:
  explicit Incumbent(const Instance& instance)
      : best_(EmptySolution(instance)) {}

  // Replaces the incumbent iff candidate is strictly better.
  bool Offer(const Solution& candidate);

  const Solution& best() const { return best_; }
  const Rational& value() const { return best_.value; }

 private:
  Solution best_;
};

enum class NodeFate {
  kOpen,              // still in the frontier when a limit stopped the run
  kBoundClosed,       // left in the frontier at optimal termination
  kIntegral,          // selected; relaxation integral
  kBranched,          // selected and branched
  kNoChildren,        // selected, cascade rule produced no child
  kPrunedAtCreation,  // upper bound <= incumbent when created
  kInfeasible,        // One-fixed weight over capacity
};

std::string_view NodeFateName(NodeFate fate);

struct Node {
  int64_t id = 0;
  std::optional<int64_t> parent_id;
  std::string branch_label;
  Fixings fixings;
  // Absent for infeasible nodes.
  std::optional<RelaxedSolution> relaxed;
  std::optional<Solution> heuristic;
  NodeFate fate = NodeFate::kOpen;

  std::optional<Rational> upper_bound() const {
    if (!relaxed) return std::nullopt;
    return relaxed->upper_bound;
  }
};

struct TraceEvent {
  enum class Kind { kSelect, kIncumbent, kPrune };
  Kind kind;
  int64_t node_id;
  Rational value;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

// Full record of a run: every created node, ordered by id, plus the
// sequence of selections, incumbent updates and prunes.
struct SearchTrace {
  Strategy strategy = Strategy::kCascadingTree;
  int num_items = 0;
  std::vector<Node> nodes;
  std::vector<TraceEvent> events;
};

struct SolveReport {
  Solution best;
  bool optimal = false;
  int64_t nodes_evaluated = 0;
  int64_t nodes_pruned = 0;
  double wall_time_seconds = 0.0;
  Strategy strategy = Strategy::kCascadingTree;
  std::optional<SearchTrace> trace;
};

// `instance` must be canonical (see Canonicalize). Hitting a limit is not an
// error: the report then carries optimal == false and the best incumbent.
SolveReport Solve(const Instance& instance, Strategy strategy,
                  const Limits& limits = {}, bool trace_enabled = false);

}  // namespace cascade_knapsack

#endif  // CASCADE_KNAPSACK_BNB_H_
