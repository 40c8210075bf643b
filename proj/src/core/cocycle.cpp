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

#include "cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "numerics.hpp"
#include "semigroup.hpp"

namespace qsc {

namespace {

void check_query(const GeneratorMatrix& f, const MatrixElementQuery& q,
                 const char* who) {
  const std::string name(who);
  require(q.u.size() == f.h_dim() && q.v.size() == f.h_dim(),
          ErrorCode::dimension,
          name + ": u and v must have length " + std::to_string(f.h_dim()));
  require(q.f.noise_dim() == f.noise_dim() && q.g.noise_dim() == f.noise_dim(),
          ErrorCode::dimension,
          name + ": step functions must have noise dimension " +
              std::to_string(f.noise_dim()));
}

}  // namespace

cxd exp_overlap(const StepFunction& f, const StepFunction& g, const Rat& t) {
  return std::exp(cross_integral(f, g, Rat(), t));
}

cxd reconstruct(const GeneratorMatrix& f, const MatrixElementQuery& q) {
  check_query(f, q, "reconstruct");
  const std::vector<Rat> times = merged_breakpoints(q.f, q.g, q.t);
  Cvec w = q.v;
  // Later intervals act first so the product ends up time-ordered,
  // earliest factor on the left.
  for (std::size_t k = times.size(); k-- > 1;) {
    const double len = (times[k] - times[k - 1]).value();
    const Cmat g_k = generator_cd(f, q.f.value_at(times[k - 1]),
                                  q.g.value_at(times[k - 1]));
    w = expm(len * g_k) * w;
  }
  cxd out = q.u.dot(w);
  if (!q.normalized)
    out *= std::exp(0.5 * norm_sq_integral(q.f, q.t) +
                    0.5 * norm_sq_integral(q.g, q.t));
  return out;
}

RefineCheck refine_check(const GeneratorMatrix& f, const MatrixElementQuery& q,
                         int splits) {
  require(splits >= 1, ErrorCode::domain, "refine_check: splits must be >= 1");
  RefineCheck out{};
  out.base = reconstruct(f, q);
  MatrixElementQuery fine{q.u, q.v, q.f.refined(splits), q.g.refined(splits),
                          q.t, q.normalized};
  out.refined = reconstruct(f, fine);
  out.abs_diff = std::abs(out.base - out.refined);
  return out;
}

double qsde_residual(const GeneratorMatrix& f, const MatrixElementQuery& q,
                     int nt) {
  check_query(f, q, "qsde_residual");
  require(!q.normalized, ErrorCode::precondition,
          "qsde_residual: query must use unnormalized exponential vectors");
  require(nt >= 16, ErrorCode::domain, "qsde_residual: nt must be >= 16");
  if (q.t.is_zero()) return 0.0;

  const int m = f.h_dim();
  const int dn = f.noise_dim();
  const double t_total = q.t.value();
  const Rat tail_end = min(q.f.support_end(), q.g.support_end());

  // F^a_b v for every block, so the integrand sum is a single inner product.
  std::vector<std::vector<Cvec>> fv(static_cast<std::size_t>(dn) + 1);
  for (int a = 0; a <= dn; ++a) {
    fv[static_cast<std::size_t>(a)].reserve(static_cast<std::size_t>(dn) + 1);
    for (int b = 0; b <= dn; ++b)
      fv[static_cast<std::size_t>(a)].push_back(f.block(a, b) * q.v);
  }

  // Scalar weight A(s) = |f|^2/2 + |g|^2/2 over [0,s) plus the overlap tail
  // int_s^{end} <f,g>; then <u e(f), V_s X v e(g)> = <y(s), X v> e^{A(s)}
  // with y(s) the adjoint of the product formula prefix applied to u. A is
  // linear on each merged segment, so it is interpolated from exact values at
  // the segment ends.
  const auto weight_at = [&](const Rat& s) {
    return cxd(0.5 * norm_sq_integral(q.f, s) + 0.5 * norm_sq_integral(q.g, s),
               0.0) +
           cross_integral(q.f, q.g, s, tail_end);
  };

  const cxd lhs_base = q.u.dot(q.v) * std::exp(weight_at(Rat()));
  const std::vector<Rat> times = merged_breakpoints(q.f, q.g, q.t);

  Cvec y = q.u;
  cxd rhs(0.0, 0.0);
  double residual = 0.0;
  for (std::size_t j = 0; j + 1 < times.size(); ++j) {
    const double ell = (times[j + 1] - times[j]).value();
    const long long k_j =
        std::max(1LL, std::llround(static_cast<double>(nt) * ell / t_total));
    const double h = ell / static_cast<double>(k_j);
    const Cvec& fj = q.f.value_at(times[j]);
    const Cvec& gj = q.g.value_at(times[j]);
    const cxd scalar =
        fj.dot(gj) - 0.5 * fj.squaredNorm() - 0.5 * gj.squaredNorm();
    const Cmat step = expm(h * generator_cd(f, fj, gj)).adjoint();
    Cvec zv = Cvec::Zero(m);
    for (int a = 0; a <= dn; ++a) {
      const cxd ca = (a == 0) ? cxd(1.0, 0.0) : std::conj(fj(a - 1));
      if (ca == cxd(0.0, 0.0)) continue;
      for (int b = 0; b <= dn; ++b) {
        const cxd db = (b == 0) ? cxd(1.0, 0.0) : gj(b - 1);
        const cxd coeff = ca * db;
        if (coeff == cxd(0.0, 0.0)) continue;
        zv += coeff * fv[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
    }
    const cxd a_left = weight_at(times[j]);
    for (long long step_idx = 0; step_idx < k_j; ++step_idx) {
      const cxd a_lo = a_left - static_cast<double>(step_idx) * h * scalar;
      const cxd a_hi = a_left - static_cast<double>(step_idx + 1) * h * scalar;
      const cxd val_lo = y.dot(zv) * std::exp(a_lo);
      y = step * y;
      const cxd val_hi = y.dot(zv) * std::exp(a_hi);
      rhs += 0.5 * h * (val_lo + val_hi);
      const cxd lhs = y.dot(q.v) * std::exp(a_hi) - lhs_base;
      residual = std::max(residual, std::abs(lhs - rhs));
    }
  }
  return residual;
}

}  // namespace qsc
