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

#include "semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <mutex>
#include <string>
#include <utility>

#include "error.hpp"
#include "io.hpp"
#include "numerics.hpp"
#include "rng.hpp"

namespace qsc {

Cmat generator_cd(const GeneratorMatrix& f, const Cvec& c, const Cvec& d) {
  const int m = f.h_dim();
  const int dn = f.noise_dim();
  require(c.size() == dn && d.size() == dn, ErrorCode::dimension,
          "generator_cd: noise vectors must have length " + std::to_string(dn));
  Cmat out = Cmat::Zero(m, m);
  // Row-major accumulation over block indices, exact zeros skipped, scalar
  // term last: g_from_f relies on this order for its basis-point identity.
  for (int a = 0; a <= dn; ++a) {
    const cxd ca = (a == 0) ? cxd(1.0, 0.0) : std::conj(c(a - 1));
    if (ca == cxd(0.0, 0.0)) continue;
    for (int b = 0; b <= dn; ++b) {
      const cxd db = (b == 0) ? cxd(1.0, 0.0) : d(b - 1);
      const cxd coeff = ca * db;
      if (coeff == cxd(0.0, 0.0)) continue;
      if (coeff == cxd(1.0, 0.0))
        out += f.block(a, b);
      else
        out += coeff * f.block(a, b);
    }
  }
  const cxd scalar = c.dot(d) - 0.5 * c.squaredNorm() - 0.5 * d.squaredNorm();
  if (scalar != cxd(0.0, 0.0)) out += scalar * Cmat::Identity(m, m);
  return out;
}

Cmat evolve(const Cmat& g, double t) {
  require(std::isfinite(t) && t >= 0.0, ErrorCode::domain,
          "evolve: time must be finite and >= 0");
  return expm(t * g);
}

namespace {

// Exact bit patterns of (c, d); the Cvec lengths are fixed by the family, so
// plain concatenation is unambiguous.
std::vector<std::uint64_t> pair_key(const Cvec& c, const Cvec& d) {
  std::vector<std::uint64_t> key;
  key.reserve(2 * static_cast<std::size_t>(c.size() + d.size()));
  const auto push = [&key](const Cvec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double re = v(i).real();
      const double im = v(i).imag();
      std::uint64_t bits = 0;
      std::memcpy(&bits, &re, sizeof bits);
      key.push_back(bits);
      std::memcpy(&bits, &im, sizeof bits);
      key.push_back(bits);
    }
  };
  push(c);
  push(d);
  return key;
}

}  // namespace

SemigroupFamily::SemigroupFamily(GeneratorMatrix source)
    : source_(std::move(source)) {}

Cmat SemigroupFamily::generator(const Cvec& c, const Cvec& d) const {
  require(c.size() == noise_dim() && d.size() == noise_dim(),
          ErrorCode::dimension,
          "SemigroupFamily: noise vectors must have length " +
              std::to_string(noise_dim()));
  const std::vector<std::uint64_t> key = pair_key(c, d);
  {
    std::shared_lock<std::shared_mutex> lock(mutex_);
    const auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Cmat g = generator_cd(source_, c, d);
  std::unique_lock<std::shared_mutex> lock(mutex_);
  return cache_.emplace(key, std::move(g)).first->second;
}

Cmat SemigroupFamily::evolve(const Cvec& c, const Cvec& d, double t) const {
  return qsc::evolve(generator(c, d), t);
}

namespace {

Cmat inv_sqrt_posdef(const Cmat& a, const std::string& label) {
  const Cmat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Cmat> es(h);
  require(es.info() == Eigen::Success, ErrorCode::domain,
          label + ": eigensolver failed");
  require(es.eigenvalues().minCoeff() > 0.0, ErrorCode::domain,
          label + ": matrix is not positive definite");
  const Rvec inv = es.eigenvalues().array().rsqrt();
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

SchurResult schur_criterion(const SemigroupFamily& fam, const Cmat& a,
                            const Cmat& b, const Cmat& y,
                            const std::vector<Cvec>& c, double t, double tol) {
  const int n = static_cast<int>(c.size());
  require(n >= 1, ErrorCode::domain,
          "schur_criterion: need at least one noise vector");
  const int m = fam.h_dim();
  require(a.rows() == n && a.cols() == n, ErrorCode::dimension,
          "schur_criterion: A must be " + std::to_string(n) + " x " +
              std::to_string(n));
  require(b.rows() == n && b.cols() == n, ErrorCode::dimension,
          "schur_criterion: B must be " + std::to_string(n) + " x " +
              std::to_string(n));
  require(y.rows() == static_cast<Eigen::Index>(n) * m && y.cols() == n,
          ErrorCode::dimension,
          "schur_criterion: Y must be " + std::to_string(n * m) + " x " +
              std::to_string(n));
  for (const Cvec& ci : c)
    require(ci.size() == fam.noise_dim(), ErrorCode::dimension,
            "schur_criterion: noise vectors must have length " +
                std::to_string(fam.noise_dim()));
  require(std::isfinite(t) && t >= 0.0, ErrorCode::domain,
          "schur_criterion: time must be finite and >= 0");
  require(tol >= 0.0, ErrorCode::domain,
          "schur_criterion: tolerance must be >= 0");

  const Cmat id_m = Cmat::Identity(m, m);
  const Cmat a_rt = inv_sqrt_posdef(a, "schur_criterion: A");
  const Cmat b_rt = inv_sqrt_posdef(b, "schur_criterion: B");
  Cmat yy = y;
  const double hypothesis = op_norm(kron(a_rt, id_m) * yy * b_rt);
  if (hypothesis > 1.0) yy /= hypothesis;

  Cmat w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w(i, j) = std::exp(t * (c[i].dot(c[j]) - 0.5 * c[i].squaredNorm() -
                              0.5 * c[j].squaredNorm()));

  Cmat qy(static_cast<Eigen::Index>(n) * m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      qy.block(static_cast<Eigen::Index>(i) * m, j, m, 1) =
          fam.evolve(c[i], c[j], t) * yy.block(static_cast<Eigen::Index>(i) * m, j, m, 1);

  const Cmat aw_rt = inv_sqrt_posdef(schur_product(a, w), "schur_criterion: A.w");
  const Cmat bw_rt = inv_sqrt_posdef(schur_product(b, w), "schur_criterion: B.w");
  const double norm = op_norm(kron(aw_rt, id_m) * qy * bw_rt);

  SchurResult out;
  out.norm = norm;
  out.margin = 1.0 - norm;
  out.ok = norm <= 1.0 + tol;
  return out;
}

SchurSweepResult schur_sweep(const SemigroupFamily& fam, int trials, int n_max,
                             double t_max, double tol, std::uint64_t seed) {
  require(trials >= 0, ErrorCode::domain, "schur_sweep: trials must be >= 0");
  require(n_max >= 1, ErrorCode::domain, "schur_sweep: n_max must be >= 1");
  require(std::isfinite(t_max) && t_max >= 0.0, ErrorCode::domain,
          "schur_sweep: t_max must be finite and >= 0");
  require(tol >= 0.0, ErrorCode::domain, "schur_sweep: tolerance must be >= 0");
  const int m = fam.h_dim();
  Rng rng(seed);
  SchurSweepResult out;
  double min_margin = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 1 + static_cast<int>(rng.integer(
                          static_cast<std::uint64_t>(n_max)));
    const Cmat ma = rng.cgauss_matrix(n, n);
    const Cmat a = ma * ma.adjoint() + 0.5 * Cmat::Identity(n, n);
    const Cmat mb = rng.cgauss_matrix(n, n);
    const Cmat b = mb * mb.adjoint() + 0.5 * Cmat::Identity(n, n);
    const Cmat y = rng.cgauss_matrix(n * m, n);
    std::vector<Cvec> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c.push_back(rng.cgauss_vector(fam.noise_dim()));
    const double t = rng.uniform(0.0, t_max);
    const SchurResult r = schur_criterion(fam, a, b, y, c, t, tol);
    ++out.trials;
    const double excess = std::max(0.0, r.norm - 1.0);
    if (excess > tol) ++out.violations;
    out.max_excess = std::max(out.max_excess, excess);
    min_margin = std::min(min_margin, r.margin);
  }
  out.min_margin = (out.trials > 0) ? min_margin : 0.0;
  return out;
}

void TrotterStudy::to_csv(std::ostream& os) const {
  os << "n,t,error\n";
  for (std::size_t i = 0; i < schedule.size(); ++i)
    for (std::size_t j = 0; j < tgrid.size(); ++j)
      os << schedule[i] << ',' << fmt17(tgrid[j]) << ','
         << fmt17(errors(static_cast<Eigen::Index>(i),
                         static_cast<Eigen::Index>(j)))
         << '\n';
}

TrotterStudy trotter_study(const GeneratorMatrix& f,
                           const std::vector<std::int64_t>& schedule,
                           const Cvec& c, const Cvec& d,
                           const std::vector<double>& tgrid,
                           const std::vector<Cvec>& probes) {
  require(!schedule.empty(), ErrorCode::domain,
          "trotter_study: schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    require(schedule[i] >= 1, ErrorCode::domain,
            "trotter_study: schedule entries must be >= 1");
    if (i > 0)
      require(schedule[i] > schedule[i - 1], ErrorCode::domain,
              "trotter_study: schedule must be strictly increasing");
  }
  require(!tgrid.empty(), ErrorCode::domain, "trotter_study: time grid is empty");
  for (double t : tgrid)
    require(std::isfinite(t) && t >= 0.0, ErrorCode::domain,
            "trotter_study: times must be finite and >= 0");
  require(!probes.empty(), ErrorCode::domain,
          "trotter_study: need at least one probe vector");
  const int m = f.h_dim();
  for (const Cvec& u : probes)
    require(u.size() == m, ErrorCode::dimension,
            "trotter_study: probe vectors must have length " +
                std::to_string(m));

  const Cmat g = generator_cd(f, c, d);
  std::vector<Cmat> base;
  base.reserve(tgrid.size());
  for (double t : tgrid) base.push_back(evolve(g, t));

  TrotterStudy out;
  out.schedule = schedule;
  out.tgrid = tgrid;
  out.errors.resize(static_cast<Eigen::Index>(schedule.size()),
                    static_cast<Eigen::Index>(tgrid.size()));
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const GeneratorMatrix fn = regularize(f, schedule[i]);
    const Cmat gn = generator_cd(fn, c, d);
    for (std::size_t j = 0; j < tgrid.size(); ++j) {
      const Cmat diff = evolve(gn, tgrid[j]) - base[j];
      double err = 0.0;
      for (const Cvec& u : probes) err = std::max(err, (diff * u).norm());
      out.errors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          err;
    }
  }
  return out;
}

}  // namespace qsc
