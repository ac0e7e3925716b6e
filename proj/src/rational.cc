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

#include "cascade_knapsack/rational.h"

#include <cstdlib>
#include <limits>
#include <string>

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {
namespace {

using int128 = __int128;

int128 Abs128(int128 x) { return x < 0 ? -x : x; }

int128 Gcd128(int128 a, int128 b) {
  a = Abs128(a);
  b = Abs128(b);
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(int128 x) {
  return x >= std::numeric_limits<int64_t>::min() &&
         x <= std::numeric_limits<int64_t>::max();
}

// Reduces num/den to lowest terms with a positive denominator and narrows it
// back to 64 bits.
void Normalize(int128 num, int128 den, int64_t* out_num, int64_t* out_den) {
  if (den == 0) {
    throw KnapsackError(ErrorCode::kDivisionByZero, "zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int128 g = Gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!FitsInt64(num) || !FitsInt64(den)) {
    throw KnapsackError(ErrorCode::kOverflow,
                        "rational result exceeds 64-bit range");
  }
  *out_num = static_cast<int64_t>(num);
  *out_den = static_cast<int64_t>(den);
}

std::string Int128ToString(int128 x) {
  if (x == 0) return "0";
  const bool negative = x < 0;
  if (negative) x = -x;
  std::string digits;
  while (x > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + (x % 10)));
    x /= 10;
  }
  return negative ? "-" + digits : digits;
}

}  // namespace

Rational::Rational(int64_t numerator, int64_t denominator) {
  Normalize(numerator, denominator, &num_, &den_);
}

double Rational::ToDouble() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::ToDecimal(int digits) const {
  int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const int128 magnitude = Abs128(num_);
  // round(|num| * scale / den), half away from zero.
  const int128 scaled = (magnitude * scale * 2 + den_) / (2 * int128{den_});
  std::string text = Int128ToString(scaled / scale);
  if (digits > 0) {
    std::string frac = Int128ToString(scaled % scale);
    frac.insert(frac.begin(), digits - frac.size(), '0');
    text += "." + frac;
  }
  if (num_ < 0 && scaled != 0) text.insert(text.begin(), '-');
  return text;
}

std::string Rational::ToExactDecimal() const {
  int64_t rest = den_;
  int digits = 0;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return "";
  digits = twos > fives ? twos : fives;
  if (digits == 0) return std::to_string(num_);
  return ToDecimal(digits);
}

Rational Rational::Parse(std::string_view text) {
  auto fail = [&]() -> KnapsackError {
    return KnapsackError(ErrorCode::kParseError,
                         "malformed rational '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view digits, bool allow_sign) -> int128 {
    bool negative = false;
    if (allow_sign && !digits.empty() &&
        (digits.front() == '-' || digits.front() == '+')) {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty() || digits.size() > 19) throw fail();
    int128 value = 0;
    for (const char c : digits) {
      if (c < '0' || c > '9') throw fail();
      value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
  };

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const int128 num = parse_int(text.substr(0, slash), true);
    const int128 den = parse_int(text.substr(slash + 1), false);
    int64_t n = 0;
    int64_t d = 1;
    Normalize(num, den, &n, &d);
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) throw fail();
    const bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      whole.remove_prefix(1);
    }
    const int128 int_part = whole.empty() ? 0 : parse_int(whole, false);
    const int128 frac_part = parse_int(frac, false);
    int128 scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    int128 num = int_part * scale + frac_part;
    if (negative) num = -num;
    int64_t n = 0;
    int64_t d = 1;
    Normalize(num, scale, &n, &d);
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  const int128 value = parse_int(text, true);
  if (!FitsInt64(value)) throw fail();
  return Rational(static_cast<int64_t>(value));
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<int64_t>::min()) {
    throw KnapsackError(ErrorCode::kOverflow, "negation overflow");
  }
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == 1 && other.den_ == 1) {
    int64_t sum = 0;
    if (__builtin_add_overflow(num_, other.num_, &sum)) {
      throw KnapsackError(ErrorCode::kOverflow, "addition overflow");
    }
    num_ = sum;
    return *this;
  }
  const int128 num =
      static_cast<int128>(num_) * other.den_ + static_cast<int128>(other.num_) * den_;
  const int128 den = static_cast<int128>(den_) * other.den_;
  Normalize(num, den, &num_, &den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  const int128 num = static_cast<int128>(num_) * other.num_;
  const int128 den = static_cast<int128>(den_) * other.den_;
  Normalize(num, den, &num_, &den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) {
    throw KnapsackError(ErrorCode::kDivisionByZero, "division by zero");
  }
  const int128 num = static_cast<int128>(num_) * other.den_;
  const int128 den = static_cast<int128>(den_) * other.num_;
  Normalize(num, den, &num_, &den_);
  return *this;
}

}  // namespace cascade_knapsack
