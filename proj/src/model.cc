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

#include "cascade_knapsack/model.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {

int Fixings::FreeCount() const {
  return static_cast<int>(
      std::count(states_.begin(), states_.end(), VarState::kFree));
}

int64_t Fixings::FixedWeight(const Instance& instance) const {
  int64_t weight = 0;
  for (int j = 0; j < size(); ++j) {
    if (states_[j] == VarState::kOne) weight += instance.items[j].weight;
  }
  return weight;
}

Rational Fixings::FixedValue(const Instance& instance) const {
  Rational value;
  for (int j = 0; j < size(); ++j) {
    if (states_[j] == VarState::kOne) value += instance.items[j].value;
  }
  return value;
}

bool HigherRatio(const Item& a, const Item& b) {
  return a.value / Rational(a.weight) > b.value / Rational(b.weight);
}

Instance Canonicalize(std::vector<Item> raw_items, int64_t capacity,
                      std::string name) {
  if (capacity < 0) {
    throw KnapsackError(ErrorCode::kNonPositiveInput, "negative capacity");
  }
  int64_t total_weight = 0;
  for (size_t j = 0; j < raw_items.size(); ++j) {
    const Item& item = raw_items[j];
    if (item.weight < 1 || !item.value.is_positive()) {
      throw KnapsackError(ErrorCode::kNonPositiveInput,
                          "item " + std::to_string(j + 1) +
                              " needs weight >= 1 and value > 0");
    }
    if (__builtin_add_overflow(total_weight, item.weight, &total_weight)) {
      throw KnapsackError(ErrorCode::kOverflow, "total weight overflow");
    }
  }

  std::vector<int> order(raw_items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return HigherRatio(raw_items[a], raw_items[b]);
  });

  Instance instance;
  instance.name = std::move(name);
  instance.capacity = capacity;
  instance.items.reserve(raw_items.size());
  for (const int j : order) instance.items.push_back(raw_items[j]);
  instance.original_order = std::move(order);
  return instance;
}

Evaluation Evaluate(const Instance& instance,
                    std::span<const uint8_t> selection) {
  if (static_cast<int>(selection.size()) != instance.size()) {
    throw KnapsackError(ErrorCode::kLengthMismatch,
                        "selection has " + std::to_string(selection.size()) +
                            " entries, instance has " +
                            std::to_string(instance.size()));
  }
  Evaluation result;
  for (int j = 0; j < instance.size(); ++j) {
    if (!selection[j]) continue;
    result.value += instance.items[j].value;
    if (__builtin_add_overflow(result.weight, instance.items[j].weight,
                               &result.weight)) {
      throw KnapsackError(ErrorCode::kOverflow, "selection weight overflow");
    }
  }
  return result;
}

Solution MakeSolution(const Instance& instance,
                      std::vector<uint8_t> selection) {
  const Evaluation eval = Evaluate(instance, selection);
  return Solution{std::move(selection), eval.value, eval.weight};
}

Solution EmptySolution(const Instance& instance) {
  return Solution{std::vector<uint8_t>(instance.size(), 0), Rational(0), 0};
}

std::vector<uint8_t> ToInputOrder(const Instance& instance,
                                  std::span<const uint8_t> selection) {
  if (static_cast<int>(selection.size()) != instance.size()) {
    throw KnapsackError(ErrorCode::kLengthMismatch,
                        "selection length does not match instance");
  }
  std::vector<uint8_t> out(selection.size(), 0);
  for (int j = 0; j < instance.size(); ++j) {
    out[instance.original_order[j]] = selection[j];
  }
  return out;
}

std::vector<Item> InputOrderItems(const Instance& instance) {
  std::vector<Item> out(instance.items.size());
  for (int j = 0; j < instance.size(); ++j) {
    out[instance.original_order[j]] = instance.items[j];
  }
  return out;
}

}  // namespace cascade_knapsack
