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

// Text formats.
//
// Instance files (.kp), version 1. Line oriented; blank lines and lines
// starting with '#' are ignored:
//
//   format_version 1
//   name table1
//   capacity 20
//   items 5
//   9 3/2
//   8 6/5
//   ...
//
// `format_version` comes first. `name` (rest of the line, may be empty),
// `capacity` and `items <count>` follow in any order, `items` last; it is
// followed by exactly <count> lines "<weight> <value>" in the caller's
// order. Values are integers, fractions "num/den" or decimals "1.5".
// WriteInstance always emits integers bare and other values as "num/den".
//
// Search traces are exported as Graphviz DOT.

#ifndef CASCADE_KNAPSACK_IO_H_
#define CASCADE_KNAPSACK_IO_H_

#include <string>
#include <string_view>

#include "cascade_knapsack/bnb.h"
#include "cascade_knapsack/model.h"

namespace cascade_knapsack {

inline constexpr int kInstanceFormatVersion = 1;

// Throws kParseError (with the line number) or kVersionUnsupported. The
// result is canonicalized.
Instance ParseInstance(std::string_view text);

// Items are written in input order so that parsing restores the same
// permutation.
std::string WriteInstance(const Instance& instance);

Instance ReadInstanceFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

// Bound as shown in node labels: exact decimal when it needs at most two
// digits ("3.12", "3.0"), otherwise rounded to two digits ("2.83").
std::string FormatBound(const Rational& value);

// Directed tree, one record node per created node in id order, annotated
// like a four-quadrant diagram: id | upper bound / cardinality | heuristic.
// Pruned-at-creation and infeasible nodes are drawn dashed and dotted.
std::string ExportTrace(const SearchTrace& trace);

// Overload taking a report; throws kNoTrace when it carries none.
std::string ExportTrace(const SolveReport& report);

}  // namespace cascade_knapsack

#endif  // CASCADE_KNAPSACK_IO_H_
