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

#ifndef CASCADE_KNAPSACK_RELAX_H_
#define CASCADE_KNAPSACK_RELAX_H_

#include <optional>
#include <vector>

#include "cascade_knapsack/model.h"
#include "cascade_knapsack/rational.h"

namespace cascade_knapsack {

// Optimal solution of the LP relaxation of a subproblem.
struct RelaxedSolution {
  Rational upper_bound;
  // The critical item: first free item (in ratio order) that does not fully
  // fit into the residual capacity. Absent iff the relaxation is integral.
  std::optional<int> fractional_index;
  // Share of the critical item taken, in (0, 1); zero when integral.
  Rational fractional_amount;
  // x_j of the relaxation: 0, 1 or fractional_amount at the critical item.
  std::vector<Rational> implied_selection;

  bool is_integer() const { return !fractional_index.has_value(); }

  // 0/1 view of implied_selection; only meaningful when is_integer().
  std::vector<uint8_t> IntegerSelection() const;

  friend bool operator==(const RelaxedSolution&,
                         const RelaxedSolution&) = default;
};

// Dantzig bound: One-fixed items plus a greedy fractional fill of the free
// items in ratio order. Filling stops at the critical item, or as soon as
// the residual capacity is exactly zero (the relaxation is then integral).
// Throws kInfeasibleFixings if the One-fixed weight exceeds the capacity.
RelaxedSolution DantzigBound(const Instance& instance, const Fixings& fixings);

// Sets every free variable whose weight exceeds the residual capacity to
// Zero. The residual does not change, so one pass is enough.
Fixings CapacityFix(const Instance& instance, const Fixings& fixings);

// Rounds a relaxed solution to a feasible integer one: keep the relaxation's
// 0/1 prefix before the critical item, drop the critical item, then add each
// later free item that still fits. One-fixed items stay selected; Zero-fixed
// items are skipped. Integral relaxations are returned unchanged.
Solution GreedyComplete(const Instance& instance, const Fixings& fixings,
                        const RelaxedSolution& relaxed);

}  // namespace cascade_knapsack

#endif  // CASCADE_KNAPSACK_RELAX_H_
