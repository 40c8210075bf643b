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

#include <ostream>
#include <vector>

#include "generator.hpp"
#include "types.hpp"

namespace qsc {

/**
 * L(X) = X F00 + F00* X + sum_i (F^i_0)* X F^i_0 applied directly. At X = I
 * this is exactly the (0, 0) block of the deficit operator — the two share
 * their accumulation order so the floating-point sums agree.
 */
Cmat lindblad_apply(const GeneratorMatrix& f, const Cmat& x);

/**
 * The same map as an m^2 x m^2 matrix in the column-stacking convention
 * vec(A X B) = (B^T kron A) vec(X):
 *
 *   L = kron(F00^T, I) + kron(I, F00*) + sum_i kron((F^i_0)^T, (F^i_0)*).
 */
class QdsSuperoperator {
 public:
  explicit QdsSuperoperator(const GeneratorMatrix& f);

  int h_dim() const { return m_; }
  const Cmat& matrix() const { return l_; }

  Cmat apply(const Cmat& x) const;
  // e^{tL}(x); t >= 0.
  Cmat evolve(const Cmat& x, double t) const;

 private:
  int m_;
  Cmat l_;
};

// e^{tL}(x) through a freshly built superoperator.
Cmat qds_evolve(const GeneratorMatrix& f, const Cmat& x, double t);

/**
 * How far e^{tL} is from unital: defect = |e^{tL}(I) - I| in operator norm,
 * plus the most negative diagonal entry of e^{tL}(I) - I and its index (on
 * truncated models the loss concentrates there).
 */
struct ConservativityResult {
  double defect;
  int min_diag_index;
  double min_diag;
};
ConservativityResult conservativity_defect(const GeneratorMatrix& f, double t);

/**
 * Choi matrix of the map with superoperator s (column stacking): for an
 * m^2 x m^2 input, C[(i m + k), (j m + l)] = s[k + m l, i + m j]; the map is
 * completely positive iff C >= 0.
 */
Cmat choi_matrix(const Cmat& s);

// Smallest eigenvalue of the Choi matrix of e^{tL}; >= -eps certifies
// complete positivity to rounding. Guarded to h_dim <= 64.
double choi_min_eig(const GeneratorMatrix& f, double t);

// e^{tL}(I) defect for the generator and for its time-reversal dual; the
// cocycle is unitary (not just isometric) when both stay at zero.
struct UnitarityReport {
  double primal_defect;
  double dual_defect;
  double max_defect;
};
UnitarityReport unitarity_report(const GeneratorMatrix& f, double t);

// CSV rows "t,defect,min_diag_defect_index,min_choi_eig" over the time grid;
// the header is always written. Guarded to h_dim <= 64 (Choi size).
void qds_csv(const GeneratorMatrix& f, const std::vector<double>& tgrid,
             std::ostream& os);

}  // namespace qsc
