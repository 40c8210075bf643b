// Copyright 2026 The qsc developers
//
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

#pragma once

#include <cstdint>
#include <string>

namespace qsc {

// Exact nonnegative rational, used for the time axis of step functions.
// Times enter the system as decimal strings ("0", "0.25", "2.0") and are
// compared exactly, so "0.50" and "0.5" are one breakpoint and no float
// rounding can merge or split segments. Arithmetic stays exact: segment
// splitting introduces denominators that are not powers of ten.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}

  // n/d reduced; d > 0, n >= 0 required.
  static Rat make(std::int64_t n, std::int64_t d);

  // Plain decimal literal: digits with an optional fractional part. No sign,
  // no exponent; at most 18 significant digits.
  static Rat parse_decimal(const std::string& text);

  // Decimal literal or exact fraction "p/q" with integer parts, as produced
  // by str(). Round-trips every representable value.
  static Rat parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;  // requires *this >= o
  Rat div_int(std::int64_t k) const;  // k > 0
  Rat mul_int(std::int64_t k) const;  // k >= 0

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this < o || *this == o; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }

  std::string str() const;  // "num/den" or integer form, for messages

 private:
  std::int64_t num_, den_;
};

Rat min(const Rat& a, const Rat& b);

}  // namespace qsc
