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

#include "generator.hpp"
#include "rational.hpp"
#include "stepfn.hpp"
#include "types.hpp"

namespace qsc {

/**
 * One matrix-element request <u e(f), V_t v e(g)> against the process built
 * from a generator matrix. With normalized = true the exponential vectors are
 * replaced by their unit-norm versions psi(h) = exp(-|h|^2/2) e(h) (norms
 * taken over [0, t)).
 */
struct MatrixElementQuery {
  Cvec u;
  Cvec v;
  StepFunction f;
  StepFunction g;
  Rat t;
  bool normalized = true;
};

// <e(f 1_[0,t)), e(g 1_[0,t))> = exp(int_0^t <f(s), g(s)> ds).
cxd exp_overlap(const StepFunction& f, const StepFunction& g, const Rat& t);

/**
 * Matrix element by the semigroup product formula: with merged constancy
 * intervals [t_k, t_{k+1}) of f and g on [0, t),
 *
 *   <u psi(f), V_t v psi(g)> = <u, e^{l_0 G_0} e^{l_1 G_1} ... v>,
 *
 * G_k = generator_cd(F, f(t_k), g(t_k)), l_k = t_{k+1} - t_k, factors ordered
 * by increasing time. The interval endpoints are exact rationals, so refining
 * a segment list changes nothing but the factorization of each exponential.
 * For normalized = false the result is scaled by
 * exp(+|f|^2/2 + |g|^2/2) (integrals over [0, t)) to undo the normalization
 * built into the G^{c,d} scalar term.
 */
cxd reconstruct(const GeneratorMatrix& f, const MatrixElementQuery& q);

// reconstruct() on the query as given and on the query with both step
// functions refined (each segment split into `splits` equal parts). The two
// values agree to rounding; splits = 1 must reproduce base exactly.
struct RefineCheck {
  cxd base;
  cxd refined;
  double abs_diff;
};
RefineCheck refine_check(const GeneratorMatrix& f, const MatrixElementQuery& q,
                         int splits);

/**
 * Weak-form integral-equation defect for an unnormalized query: the process
 * reconstructed above should satisfy, for s in [0, t],
 *
 *   <u e(f), (V_s - 1) v e(g)>
 *     = int_0^s sum_{a,b} conj(fhat^a(r)) ghat^b(r) <u e(f), V_r F^a_b v e(g)> dr,
 *
 * fhat = (1, f). Both sides are evaluated on a grid with about nt steps
 * spread over the constancy segments proportionally to length (at least one
 * per segment); the integral uses the composite trapezoid rule per segment.
 * Returns the max over grid points of |LHS - RHS|, which decays like
 * 1/nt^2. Requires normalized = false and nt >= 16; t = 0 gives 0.
 */
double qsde_residual(const GeneratorMatrix& f, const MatrixElementQuery& q,
                     int nt);

}  // namespace qsc
