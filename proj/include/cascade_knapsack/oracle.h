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

// Exact reference solvers, independent of the branch-and-bound code path.

#ifndef CASCADE_KNAPSACK_ORACLE_H_
#define CASCADE_KNAPSACK_ORACLE_H_

#include <cstdint>

#include "cascade_knapsack/model.h"

namespace cascade_knapsack {

inline constexpr int64_t kMaxDpCells = 100'000'000;
inline constexpr int kMaxBruteForceItems = 25;

// Capacity-indexed dynamic program with backtracking. Throws kTableTooLarge
// when n * C exceeds kMaxDpCells.
Solution DpSolve(const Instance& instance);

// Enumerates all 2^n selections; among optimal ones returns the
// lexicographically smallest selection. Throws kTooLarge for n > 25.
Solution BruteForce(const Instance& instance);

}  // namespace cascade_knapsack

#endif  // CASCADE_KNAPSACK_ORACLE_H_
