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

#ifndef CASCADE_KNAPSACK_RATIONAL_H_
#define CASCADE_KNAPSACK_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cascade_knapsack {

// Exact fraction num/den with den > 0 and gcd(|num|, den) == 1. All
// arithmetic is checked: a result that does not fit in 64 bits throws
// KnapsackError(kOverflow) instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  // Implicit so that integer literals mix naturally with rationals.
  Rational(int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(int64_t numerator, int64_t denominator);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }

  double ToDouble() const;

  // "7" for integers, "3/2" otherwise.
  std::string ToString() const;

  // Fixed-point rendering rounded half away from zero, e.g. 99/35 -> "2.83"
  // with two digits.
  std::string ToDecimal(int digits) const;

  // Shortest exact decimal ("3.12") if the denominator has only factors 2
  // and 5; empty string otherwise.
  std::string ToExactDecimal() const;

  // Accepts "7", "-7", "3/2" and plain decimals such as "1.5".
  static Rational Parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    // 128-bit cross products never overflow for 64-bit operands.
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace cascade_knapsack

#endif  // CASCADE_KNAPSACK_RATIONAL_H_
