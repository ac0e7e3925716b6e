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

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOverflow:
      return "Overflow";
    case ErrorCode::kDivisionByZero:
      return "DivisionByZero";
    case ErrorCode::kNonPositiveInput:
      return "NonPositiveInput";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kInfeasibleFixings:
      return "InfeasibleFixings";
    case ErrorCode::kNoFreeVariable:
      return "NoFreeVariable";
    case ErrorCode::kTableTooLarge:
      return "TableTooLarge";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kVersionUnsupported:
      return "VersionUnsupported";
    case ErrorCode::kNoTrace:
      return "NoTrace";
    case ErrorCode::kEmptyReport:
      return "EmptyReport";
  }
  return "Unknown";
}

}  // namespace cascade_knapsack
