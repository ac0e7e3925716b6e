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

// Domain types for the 0-1 knapsack problem
//
//   max  sum_j v_j x_j   s.t.  sum_j w_j x_j <= C,  x_j in {0, 1},
//
// with integer weights and exact rational values. Items inside an Instance
// are always kept in canonical order: non-increasing value/weight ratio.

#ifndef CASCADE_KNAPSACK_MODEL_H_
#define CASCADE_KNAPSACK_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cascade_knapsack/rational.h"

namespace cascade_knapsack {

struct Item {
  int64_t weight = 1;
  Rational value;

  friend bool operator==(const Item&, const Item&) = default;
};

struct Instance {
  std::string name;
  // Sorted by non-increasing value/weight; ties keep input order.
  std::vector<Item> items;
  int64_t capacity = 0;
  // original_order[sorted index] = input index (both 0-based).
  std::vector<int> original_order;

  int size() const { return static_cast<int>(items.size()); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class VarState : uint8_t { kFree, kZero, kOne };

// Tri-state assignment of every variable; defines a subproblem.
class Fixings {
 public:
  Fixings() = default;
  explicit Fixings(int n) : states_(n, VarState::kFree) {}

  int size() const { return static_cast<int>(states_.size()); }
  VarState operator[](int j) const { return states_[j]; }
  void Set(int j, VarState state) { states_[j] = state; }

  bool is_free(int j) const { return states_[j] == VarState::kFree; }
  int FreeCount() const;
  // Total weight of the One-fixed items.
  int64_t FixedWeight(const Instance& instance) const;
  Rational FixedValue(const Instance& instance) const;

  std::span<const VarState> states() const { return states_; }

  friend bool operator==(const Fixings&, const Fixings&) = default;

 private:
  std::vector<VarState> states_;
};

struct Solution {
  std::vector<uint8_t> selection;
  Rational value;
  int64_t weight = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct Evaluation {
  Rational value;
  int64_t weight = 0;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

// Validates the raw data and sorts items by exact ratio comparison.
// Throws kNonPositiveInput for weight < 1, value <= 0 or capacity < 0, and
// kOverflow when the total weight does not fit in 64 bits.
Instance Canonicalize(std::vector<Item> raw_items, int64_t capacity,
                      std::string name);

// Sums over the selected items; no feasibility check.
Evaluation Evaluate(const Instance& instance,
                    std::span<const uint8_t> selection);

// Builds a Solution (with recomputed value and weight) from a selection.
Solution MakeSolution(const Instance& instance,
                      std::vector<uint8_t> selection);

// The all-zeros solution, feasible for every instance.
Solution EmptySolution(const Instance& instance);

// Maps a canonical-order selection back to the caller's input order.
std::vector<uint8_t> ToInputOrder(const Instance& instance,
                                  std::span<const uint8_t> selection);

// The items in the caller's input order.
std::vector<Item> InputOrderItems(const Instance& instance);

// True iff a's ratio is strictly greater than b's.
bool HigherRatio(const Item& a, const Item& b);

}  // namespace cascade_knapsack

#endif  // CASCADE_KNAPSACK_MODEL_H_
