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

#include <cmath>
#include <cstdint>
#include <random>

#include "types.hpp"

namespace qsc {

// Seeded random source. Only the raw mt19937_64 word stream is consumed (the
// standard pins its output exactly), and the uniform/Gaussian mappings are
// spelled out here, so a given seed produces the same values on every
// platform and standard library. Never use std:: distributions for anything
// that ends up in an output file: their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1), 53 bits
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n); the modulo bias at n << 2^64 is irrelevant here
  std::uint64_t integer(std::uint64_t n) { return eng_() % n; }

  // standard normal via Box-Muller (one deviate per call; simple over fast)
  double gauss() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.28318530717958647692528676655900577 * u2);
  }

  cxd cgauss() {
    const double re = gauss();
    const double im = gauss();
    return cxd(re, im);
  }

  Cvec cgauss_vector(int n) {
    Cvec v(n);
    for (int i = 0; i < n; ++i) v(i) = cgauss();
    return v;
  }

  Cvec unit_vector(int n) {
    Cvec v = cgauss_vector(n);
    double nrm = v.norm();
    while (nrm == 0.0) {
      v = cgauss_vector(n);
      nrm = v.norm();
    }
    return v / nrm;
  }

  Cmat cgauss_matrix(int rows, int cols) {
    Cmat m(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cgauss();
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qsc
