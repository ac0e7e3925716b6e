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

#include "cascade_knapsack/relax.h"

#include <string>

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {

std::vector<uint8_t> RelaxedSolution::IntegerSelection() const {
  std::vector<uint8_t> out(implied_selection.size(), 0);
  for (size_t j = 0; j < implied_selection.size(); ++j) {
    out[j] = implied_selection[j] == Rational(1) ? 1 : 0;
  }
  return out;
}

RelaxedSolution DantzigBound(const Instance& instance, const Fixings& fixings) {
  const int n = instance.size();
  if (fixings.size() != n) {
    throw KnapsackError(ErrorCode::kLengthMismatch,
                        "fixings length does not match instance");
  }
  const int64_t fixed_weight = fixings.FixedWeight(instance);
  if (fixed_weight > instance.capacity) {
    throw KnapsackError(ErrorCode::kInfeasibleFixings,
                        "one-fixed weight " + std::to_string(fixed_weight) +
                            " exceeds capacity " +
                            std::to_string(instance.capacity));
  }

  RelaxedSolution relaxed;
  relaxed.implied_selection.assign(n, Rational(0));
  relaxed.upper_bound = fixings.FixedValue(instance);
  for (int j = 0; j < n; ++j) {
    if (fixings[j] == VarState::kOne) relaxed.implied_selection[j] = 1;
  }

  int64_t residual = instance.capacity - fixed_weight;
  for (int j = 0; j < n && residual > 0; ++j) {
    if (!fixings.is_free(j)) continue;
    const Item& item = instance.items[j];
    if (item.weight <= residual) {
      residual -= item.weight;
      relaxed.upper_bound += item.value;
      relaxed.implied_selection[j] = 1;
      continue;
    }
    const Rational share(residual, item.weight);
    relaxed.fractional_index = j;
    relaxed.fractional_amount = share;
    relaxed.implied_selection[j] = share;
    relaxed.upper_bound += share * item.value;
    break;
  }
  return relaxed;
}

Fixings CapacityFix(const Instance& instance, const Fixings& fixings) {
  const int64_t residual = instance.capacity - fixings.FixedWeight(instance);
  Fixings out = fixings;
  for (int j = 0; j < instance.size(); ++j) {
    if (out.is_free(j) && instance.items[j].weight > residual) {
      out.Set(j, VarState::kZero);
    }
  }
  return out;
}

Solution GreedyComplete(const Instance& instance, const Fixings& fixings,
                        const RelaxedSolution& relaxed) {
  if (relaxed.is_integer()) {
    return MakeSolution(instance, relaxed.IntegerSelection());
  }
  const int n = instance.size();
  const int critical = *relaxed.fractional_index;

  std::vector<uint8_t> selection(n, 0);
  int64_t used = 0;
  for (int j = 0; j < n; ++j) {
    const bool take = j < critical ? relaxed.implied_selection[j] == Rational(1)
                                   : fixings[j] == VarState::kOne;
    if (take) {
      selection[j] = 1;
      used += instance.items[j].weight;
    }
  }
  int64_t residual = instance.capacity - used;
  for (int j = critical + 1; j < n; ++j) {
    if (fixings.is_free(j) && instance.items[j].weight <= residual) {
      selection[j] = 1;
      residual -= instance.items[j].weight;
    }
  }
  return MakeSolution(instance, std::move(selection));
}

}  // namespace cascade_knapsack
