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

#include "cascade_knapsack/oracle.h"

#include <string>
#include <vector>

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {

Solution DpSolve(const Instance& instance) {
  const int n = instance.size();
  const int64_t capacity = instance.capacity;
  if (n > 0 && (capacity + 1) > kMaxDpCells / n) {
    throw KnapsackError(ErrorCode::kTableTooLarge,
                        "n * C exceeds " + std::to_string(kMaxDpCells));
  }
  const size_t width = static_cast<size_t>(capacity) + 1;
  // best[c]: optimum using the items seen so far with capacity c.
  std::vector<Rational> best(width, Rational(0));
  // take[j * width + c]: item j improves the optimum at capacity c.
  std::vector<bool> take(static_cast<size_t>(n) * width, false);
  for (int j = 0; j < n; ++j) {
    const Item& item = instance.items[j];
    for (int64_t c = capacity; c >= item.weight; --c) {
      const Rational with = best[c - item.weight] + item.value;
      if (with > best[c]) {
        best[c] = with;
        take[static_cast<size_t>(j) * width + c] = true;
      }
    }
  }
  std::vector<uint8_t> selection(n, 0);
  int64_t c = capacity;
  for (int j = n - 1; j >= 0; --j) {
    if (take[static_cast<size_t>(j) * width + c]) {
      selection[j] = 1;
      c -= instance.items[j].weight;
    }
  }
  return MakeSolution(instance, std::move(selection));
}

Solution BruteForce(const Instance& instance) {
  const int n = instance.size();
  if (n > kMaxBruteForceItems) {
    throw KnapsackError(ErrorCode::kTooLarge,
                        "brute force limited to " +
                            std::to_string(kMaxBruteForceItems) + " items");
  }
  // Bit (n - 1 - j) of mask selects item j, so increasing masks visit
  // selections in lexicographic order and the first optimum found wins.
  uint32_t best_mask = 0;
  Rational best_value;
  const uint32_t end = uint32_t{1} << n;
  for (uint32_t mask = 1; mask < end; ++mask) {
    int64_t weight = 0;
    Rational value;
    for (int j = 0; j < n && weight <= instance.capacity; ++j) {
      if (mask & (uint32_t{1} << (n - 1 - j))) {
        weight += instance.items[j].weight;
        value += instance.items[j].value;
      }
    }
    if (weight <= instance.capacity && value > best_value) {
      best_value = value;
      best_mask = mask;
    }
  }
  std::vector<uint8_t> selection(n, 0);
  for (int j = 0; j < n; ++j) {
    selection[j] = (best_mask >> (n - 1 - j)) & 1;
  }
  return MakeSolution(instance, std::move(selection));
}

}  // namespace cascade_knapsack
