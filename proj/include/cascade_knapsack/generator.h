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

// Seeded random instances in the three classic correlation classes. The
// stream is SplitMix64, so instances are bit-identical across platforms.

#ifndef CASCADE_KNAPSACK_GENERATOR_H_
#define CASCADE_KNAPSACK_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "cascade_knapsack/model.h"

namespace cascade_knapsack {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // lo + (Next() mod (hi - lo + 1)); the modulo bias is accepted.
  int64_t Uniform(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(Next() % span);
  }

 private:
  uint64_t state_;
};

enum class InstanceClass { kUncorrelated, kWeaklyCorrelated, kStronglyCorrelated };

inline constexpr InstanceClass kAllClasses[] = {
    InstanceClass::kUncorrelated, InstanceClass::kWeaklyCorrelated,
    InstanceClass::kStronglyCorrelated};

// "uncorrelated", "weak", "strong".
std::string_view ClassName(InstanceClass cls);
std::optional<InstanceClass> ParseClass(std::string_view name);

struct GeneratorConfig {
  InstanceClass instance_class = InstanceClass::kUncorrelated;
  int n = 10;
  int64_t range = 100;  // R
  uint64_t seed = 0;
};

// Throws kInvalidConfig unless n >= 1 and R >= 10.
void Validate(const GeneratorConfig& config);

// For j = 1..n draws w_j ~ U[1, R] and then, by class,
//   uncorrelated: v_j ~ U[1, R]
//   weak:         v_j ~ U[max(1, w_j - R/10), w_j + R/10]
//   strong:       v_j = w_j + R/10 (no draw)
// and sets C = floor(sum w_j / 2). The result is canonicalized and named
// "<class>-n<n>-R<R>-s<seed>".
Instance Generate(const GeneratorConfig& config);

}  // namespace cascade_knapsack

#endif  // CASCADE_KNAPSACK_GENERATOR_H_
