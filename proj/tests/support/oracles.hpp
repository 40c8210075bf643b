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

// Independent reference implementations used only by the tests. Each one
// re-derives a quantity computed by the library through a different
// algorithm (explicit ODE stepping, power iteration, brute-force quadratic
// forms) so the tests do not merely compare the code against itself.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "core/generator.hpp"
#include "core/numerics.hpp"
#include "core/qds.hpp"
#include "core/rng.hpp"
#include "core/types.hpp"

namespace oracle {

// Fixed-step Cash-Karp integration of X' = G X, X(0) = I over [0, t].
// Fifth-order accurate per step; with a few hundred steps this resolves
// exp(tG) of a modest matrix to ~1e-10, which is enough to cross-check the
// Pade scaling-and-squaring path without sharing any code with it.
inline qsc::Cmat expm_ode(const qsc::Cmat& g, double t, int steps = 400) {
  const auto n = g.rows();
  qsc::Cmat x = qsc::Cmat::Identity(n, n);
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const qsc::Cmat k1 = g * x;
    const qsc::Cmat k2 = g * (x + (h / 5.0) * k1);
    const qsc::Cmat k3 = g * (x + h * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2));
    const qsc::Cmat k4 =
        g * (x + h * ((3.0 / 10.0) * k1 - (9.0 / 10.0) * k2 + (6.0 / 5.0) * k3));
    const qsc::Cmat k5 =
        g * (x + h * ((-11.0 / 54.0) * k1 + (5.0 / 2.0) * k2 -
                      (70.0 / 27.0) * k3 + (35.0 / 27.0) * k4));
    const qsc::Cmat k6 =
        g * (x + h * ((1631.0 / 55296.0) * k1 + (175.0 / 512.0) * k2 +
                      (575.0 / 13824.0) * k3 + (44275.0 / 110592.0) * k4 +
                      (253.0 / 4096.0) * k5));
    x += h * ((37.0 / 378.0) * k1 + (250.0 / 621.0) * k3 +
              (125.0 / 594.0) * k4 + (512.0 / 1771.0) * k6);
  }
  return x;
}

// Largest eigenvalue of a Hermitian matrix by shifted power iteration.
// Shifting by the Frobenius norm makes the spectrum nonnegative with the
// sought eigenvalue dominant, so plain power iteration converges to it.
inline double power_max_eig(const qsc::Cmat& h, int iters = 4000) {
  const auto n = h.rows();
  if (n == 0) return 0.0;
  const double shift = h.norm() + 1.0;
  const qsc::Cmat m = h + shift * qsc::Cmat::Identity(n, n);
  qsc::Cvec v = qsc::Cvec::Ones(n) / std::sqrt(static_cast<double>(n));
  // Deterministic perturbation so v is not orthogonal to the top eigenvector.
  for (Eigen::Index i = 0; i < n; ++i) v(i) += qsc::cxd(0.01 * (i + 1), 0.003 * i);
  v.normalize();
  double lambda = 0.0;
  for (int k = 0; k < iters; ++k) {
    const qsc::Cvec w = m * v;
    lambda = std::real(v.dot(w));
    const double norm = w.norm();
    if (norm == 0.0) return -shift;
    v = w / norm;
  }
  return lambda - shift;
}

// Lower bound on the largest eigenvalue from random unit-vector Rayleigh
// quotients; any admissible implementation must report at least this much.
inline double rayleigh_max(const qsc::Cmat& h, qsc::Rng& rng, int trials = 200) {
  double best = -1e300;
  for (int k = 0; k < trials; ++k) {
    const qsc::Cvec v = rng.unit_vector(static_cast<int>(h.rows()));
    best = std::max(best, std::real(v.dot(h * v)));
  }
  return best;
}

// The deficit quadratic form evaluated from its definition,
// 2 Re<xi, F xi> + ||Delta F xi||^2, without forming the deficit operator.
// Delta keeps the noise rows (blocks 1..d) and zeroes the time row.
inline double deficit_form(const qsc::GeneratorMatrix& f, const qsc::Cvec& xi) {
  const qsc::Cmat full = f.full();
  const qsc::Cvec fxi = full * xi;
  const auto m = f.h_dim();
  double tail = 0.0;
  for (Eigen::Index i = m; i < fxi.size(); ++i) tail += std::norm(fxi(i));
  return 2.0 * std::real(xi.dot(fxi)) + tail;
}

// Heisenberg-picture master equation integrated with classical fourth-order
// Runge-Kutta steps on the matrix itself, bypassing the vectorized
// superoperator entirely.
inline qsc::Cmat qds_ode(const qsc::GeneratorMatrix& f, const qsc::Cmat& x0,
                         double t, int steps = 2000) {
  qsc::Cmat x = x0;
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const qsc::Cmat k1 = qsc::lindblad_apply(f, x);
    const qsc::Cmat k2 = qsc::lindblad_apply(f, x + 0.5 * h * k1);
    const qsc::Cmat k3 = qsc::lindblad_apply(f, x + 0.5 * h * k2);
    const qsc::Cmat k4 = qsc::lindblad_apply(f, x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

// Random generator matrix whose entries are dyadic rationals k / 2^10 with
// |k| <= 2^20 in both real and imaginary parts. All of the block algebra on
// such matrices (sums, differences, adjoints, identity shifts) is exact in
// double precision, which lets structural round-trip tests demand bitwise
// equality instead of a tolerance.
inline qsc::GeneratorMatrix dyadic_generator(int m, int d, qsc::Rng& rng) {
  qsc::GeneratorMatrix f(m, d);
  const double scale = 1.0 / 1024.0;
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; b <= d; ++b) {
      qsc::Cmat blk(m, m);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          const auto re = static_cast<double>(
              static_cast<std::int64_t>(rng.integer(2 * 1048576 + 1)) - 1048576);
          const auto im = static_cast<double>(
              static_cast<std::int64_t>(rng.integer(2 * 1048576 + 1)) - 1048576);
          blk(i, j) = qsc::cxd(re * scale, im * scale);
        }
      }
      f.set_block(a, b, blk);
    }
  }
  return f;
}

}  // namespace oracle
