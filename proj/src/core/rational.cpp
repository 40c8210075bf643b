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

#include "rational.hpp"

#include <cctype>
#include <numeric>

#include "error.hpp"

namespace qsc {

namespace {

using i128 = __int128;

std::int64_t checked64(i128 v, const char* who) {
  require(v >= 0 && v <= i128(INT64_MAX), ErrorCode::domain,
          std::string(who) + ": rational overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rat Rat::make(std::int64_t n, std::int64_t d) {
  require(d > 0, ErrorCode::domain, "Rat: denominator must be positive");
  require(n >= 0, ErrorCode::domain, "Rat: value must be nonnegative");
  const std::int64_t g = std::gcd(n, d);
  Rat r;
  r.num_ = (g != 0) ? n / g : 0;
  r.den_ = (g != 0) ? d / g : 1;
  return r;
}

Rat Rat::parse_decimal(const std::string& text) {
  require(!text.empty(), ErrorCode::parse, "time literal is empty");
  std::size_t i = 0;
  int digits = 0;
  i128 mant = 0;
  bool seen_dot = false;
  int frac = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '.') {
      require(!seen_dot, ErrorCode::parse,
              "time literal '" + text + "': second decimal point");
      seen_dot = true;
      continue;
    }
    require(std::isdigit(static_cast<unsigned char>(ch)) != 0, ErrorCode::parse,
            "time literal '" + text + "': expected plain decimal digits");
    mant = mant * 10 + (ch - '0');
    ++digits;
    if (seen_dot) ++frac;
  }
  require(digits > 0, ErrorCode::parse,
          "time literal '" + text + "': no digits");
  require(digits <= 18, ErrorCode::parse,
          "time literal '" + text + "': more than 18 digits");
  i128 den = 1;
  for (int k = 0; k < frac; ++k) den *= 10;
  return make(checked64(mant, "parse_decimal"), checked64(den, "parse_decimal"));
}

Rat Rat::parse(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const Rat num = parse_decimal(text.substr(0, slash));
  const Rat den = parse_decimal(text.substr(slash + 1));
  require(num.den() == 1 && den.den() == 1, ErrorCode::parse,
          "time literal '" + text + "': fraction parts must be integers");
  require(den.num() > 0, ErrorCode::parse,
          "time literal '" + text + "': zero denominator");
  return make(num.num(), den.num());
}

Rat Rat::operator+(const Rat& o) const {
  const i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  const i128 d = i128(den_) * o.den_;
  const std::int64_t n64 = checked64(n, "Rat::+");
  const std::int64_t d64 = checked64(d, "Rat::+");
  return make(n64, d64);
}

Rat Rat::operator-(const Rat& o) const {
  const i128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
  require(n >= 0, ErrorCode::domain, "Rat::-: negative result");
  const i128 d = i128(den_) * o.den_;
  return make(checked64(n, "Rat::-"), checked64(d, "Rat::-"));
}

Rat Rat::div_int(std::int64_t k) const {
  require(k > 0, ErrorCode::domain, "Rat::div_int: divisor must be positive");
  return make(num_, checked64(i128(den_) * k, "Rat::div_int"));
}

Rat Rat::mul_int(std::int64_t k) const {
  require(k >= 0, ErrorCode::domain, "Rat::mul_int: factor must be nonnegative");
  return make(checked64(i128(num_) * k, "Rat::mul_int"), den_);
}

bool Rat::operator==(const Rat& o) const {
  return i128(num_) * o.den_ == i128(o.num_) * den_;
}

bool Rat::operator<(const Rat& o) const {
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat min(const Rat& a, const Rat& b) { return (a < b) ? a : b; }

}  // namespace qsc
