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
#include <map>
#include <ostream>
#include <shared_mutex>
#include <vector>

#include "generator.hpp"
#include "types.hpp"

namespace qsc {

/**
 * Semigroup generator for a pair of noise vectors:
 *
 *   G^{c,d} = sum_{a,b} conj(chat_a) dhat_b F^a_b
 *             + (<c,d> - |c|^2/2 - |d|^2/2) I,   chat = (1, c), dhat = (1, d).
 *
 * At basis pairs (0 or e_i, 0 or e_j) this reproduces g_from_f bit for bit:
 * both accumulate terms in row-major block order and skip exact-zero
 * coefficients. If one changes, change the other.
 *
 * When max_form_deficit(F) <= 0 every G^{c,d} has negative-semidefinite
 * Hermitian part, so each evolve() below is a contraction.
 */
Cmat generator_cd(const GeneratorMatrix& f, const Cvec& c, const Cvec& d);

// expm(t g); t >= 0 required.
Cmat evolve(const Cmat& g, double t);

/**
 * The family (c, d) -> G^{c,d} for a fixed source generator, with a cache
 * keyed on the exact bit patterns of c and d (no tolerance collapsing, so
 * distinct floats never alias). Concurrent readers share the lock; insertion
 * is exclusive. Returned matrices are copies and safe to keep.
 */
class SemigroupFamily {
 public:
  explicit SemigroupFamily(GeneratorMatrix source);

  const GeneratorMatrix& source() const { return source_; }
  int h_dim() const { return source_.h_dim(); }
  int noise_dim() const { return source_.noise_dim(); }

  Cmat generator(const Cvec& c, const Cvec& d) const;
  Cmat evolve(const Cvec& c, const Cvec& d, double t) const;

 private:
  GeneratorMatrix source_;
  mutable std::map<std::vector<std::uint64_t>, Cmat> cache_;
  mutable std::shared_mutex mutex_;
};

/**
 * Admissibility transfer check. Inputs: positive definite A, B (n x n),
 * Y an (n*m) x n matrix read as n x n blocks of m-columns, n noise vectors
 * c_i, and a time t. The hypothesis |kron(A^{-1/2}, I_m) Y B^{-1/2}| <= 1 is
 * enforced by rescaling Y when needed. With the overlap matrix
 * w_ij = exp(t(<c_i,c_j> - |c_i|^2/2 - |c_j|^2/2)) the check evaluates
 *
 *   | kron((A.w)^{-1/2}, I_m) (Q.Y) (B.w)^{-1/2} | <= 1 + tol,
 *
 * where "." is the entrywise product and (Q.Y) applies Q^{c_i,c_j}_t to the
 * (i,j) column block of the rescaled Y. margin = 1 - norm (negative on
 * violation).
 */
struct SchurResult {
  bool ok;
  double margin;
  double norm;
};
SchurResult schur_criterion(const SemigroupFamily& fam, const Cmat& a,
                            const Cmat& b, const Cmat& y,
                            const std::vector<Cvec>& c, double t, double tol);

// Seeded random (A, B, Y, c, t) trials of schur_criterion with n <= n_max and
// t uniform in [0, t_max]. excess = max(0, norm - 1); a trial with
// excess > tol counts as a violation.
struct SchurSweepResult {
  int trials = 0;
  int violations = 0;
  double max_excess = 0.0;
  double min_margin = 0.0;
};
SchurSweepResult schur_sweep(const SemigroupFamily& fam, int trials, int n_max,
                             double t_max, double tol, std::uint64_t seed);

/**
 * Convergence table for the regularized generators: for every n in the
 * schedule and t in the grid,
 *
 *   error(n, t) = max over probes u of |(evolve(G_n, t) - evolve(G, t)) u|,
 *
 * where G = generator_cd(F, c, d) and G_n the same for regularize(F, n).
 */
struct TrotterStudy {
  std::vector<std::int64_t> schedule;
  std::vector<double> tgrid;
  Eigen::MatrixXd errors;  // schedule.size() x tgrid.size()

  // CSV "n,t,error", one row per (n, t) cell, 17 significant digits.
  void to_csv(std::ostream& os) const;
};
TrotterStudy trotter_study(const GeneratorMatrix& f,
                           const std::vector<std::int64_t>& schedule,
                           const Cvec& c, const Cvec& d,
                           const std::vector<double>& tgrid,
                           const std::vector<Cvec>& probes);

}  // namespace qsc
