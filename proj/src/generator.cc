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

#include "cascade_knapsack/generator.h"

#include <algorithm>
#include <string>
#include <vector>

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {

std::string_view ClassName(InstanceClass cls) {
  switch (cls) {
    case InstanceClass::kUncorrelated:
      return "uncorrelated";
    case InstanceClass::kWeaklyCorrelated:
      return "weak";
    case InstanceClass::kStronglyCorrelated:
      return "strong";
  }
  return "unknown";
}

std::optional<InstanceClass> ParseClass(std::string_view name) {
  for (const InstanceClass cls : kAllClasses) {
    if (ClassName(cls) == name) return cls;
  }
  return std::nullopt;
}

void Validate(const GeneratorConfig& config) {
  if (config.n < 1) {
    throw KnapsackError(ErrorCode::kInvalidConfig, "n must be >= 1");
  }
  if (config.range < 10) {
    throw KnapsackError(ErrorCode::kInvalidConfig, "R must be >= 10");
  }
  if (config.range > (int64_t{1} << 40)) {
    throw KnapsackError(ErrorCode::kInvalidConfig, "R too large");
  }
}

Instance Generate(const GeneratorConfig& config) {
  Validate(config);
  const int64_t r = config.range;
  const int64_t spread = r / 10;
  SplitMix64 rng(config.seed);
  std::vector<Item> items;
  items.reserve(config.n);
  int64_t total_weight = 0;
  for (int j = 0; j < config.n; ++j) {
    const int64_t w = rng.Uniform(1, r);
    int64_t v = 0;
    switch (config.instance_class) {
      case InstanceClass::kUncorrelated:
        v = rng.Uniform(1, r);
        break;
      case InstanceClass::kWeaklyCorrelated:
        v = rng.Uniform(std::max<int64_t>(1, w - spread), w + spread);
        break;
      case InstanceClass::kStronglyCorrelated:
        v = w + spread;
        break;
    }
    items.push_back(Item{w, Rational(v)});
    total_weight += w;
  }
  std::string name = std::string(ClassName(config.instance_class)) + "-n" +
                     std::to_string(config.n) + "-R" + std::to_string(r) +
                     "-s" + std::to_string(config.seed);
  return Canonicalize(std::move(items), total_weight / 2, std::move(name));
}

}  // namespace cascade_knapsack
