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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "generator.hpp"
#include "types.hpp"

namespace qsc {

/**
 * Scalar coefficient sequence n -> complex value, used by the ladder-type
 * model factories below.
 *
 * Specs accepted by parse():
 *   "zero"        0 everywhere
 *   "sqrt"        sqrt(max(n, 0))
 *   "odd-sqrt"    sqrt(n) for odd n >= 1, otherwise 0
 *   "abs-sqrt"    sqrt(|n|)
 *   "const:x"     the real constant x
 *   "linear:a,b"  a*n + b (a, b real)
 *   "table:path"  explicit per-index values from a JSON file
 *                 {"offset": first index, "values": [[re,im], ...]}
 *
 * Tables raise a precondition error when evaluated outside their index
 * range; a factory that needs index m therefore needs a table covering it.
 */
class CoefficientFn {
 public:
  static CoefficientFn parse(const std::string& spec);
  static CoefficientFn table(std::vector<cxd> values, std::int64_t offset);

  cxd operator()(std::int64_t n) const { return eval_(n); }
  const std::string& label() const { return label_; }

 private:
  CoefficientFn(std::function<cxd(std::int64_t)> eval, std::string label)
      : eval_(std::move(eval)), label_(std::move(label)) {}
  std::function<cxd(std::int64_t)> eval_;
  std::string label_;
};

// Shift-and-Cayley generator on a truncated half-line space, noise dim 1.
// W is the truncated right shift, L = i(I+W)(I-W)^{-1} its Cayley transform,
// and the blocks are F00 = -L*L/2, F01 = -L*, F10 = L, F11 = 0, which satisfy
// the isometry identity F + F* + F*DeltaF = 0 exactly at every truncation.
GeneratorMatrix cayley_shift(int m);

// Half-line ladder generator with diagonal coefficients, noise dim 1:
// F00 = -|lambda|^2(N+1)/2 + i mu(N), F01 = W* conj(lambda)(N),
// F10 = -lambda(N) W, F11 = 0. mu must be real-valued on 0..m-1.
// The deficit operator is supported on the top truncation index only, so a
// half-line interior mask with margin >= 1 removes it.
GeneratorMatrix iho(int m, const CoefficientFn& lambda, const CoefficientFn& mu);

// True iff c*|lambda(n)| <= |lambda(n+1)| for every n in [n_min, n_max]
// (exact comparisons, no tolerance). A sequence with interior zeros fails for
// every c > 0; such coefficients escape every relative bound on the ladder
// annihilation row, which is what the profile diagnostics surface.
bool growth_check(const CoefficientFn& lambda, double c, std::int64_t n_min,
                  std::int64_t n_max);

// Two-noise generator on a symmetric integer window of odd size 2M+1
// (basis index i represents site i-M). W is the truncated two-sided right
// shift. Blocks: F00 = -(|lambda|^2 + |mu|^2)(N)/2, F01 = conj(lambda)(N) W*,
// F02 = conj(mu)(N) W, F10 = -lambda(N), F20 = -mu(N), F11 = W*-I,
// F22 = W-I, F12 = F21 = 0. The deficit operator consists of the two window
// corner projections only, so a window mask with margin >= 1 removes it.
GeneratorMatrix birth_death(int m_window, const CoefficientFn& lambda,
                            const CoefficientFn& mu);

// Drift sign for shg(): `minus` uses -(a1*a1 + a2*a2)/2 in the drift, the
// unique sign for which the isometry identity F + F* + F*DeltaF = 0 holds
// (the whole matrix is then a two-noise Lindblad triple). `plus` flips that
// term's sign for comparison; it makes the deficit operator equal to
// 2(a1*a1 + a2*a2), which is positive, so the form inequality fails and
// validation reports the violation rather than silently correcting it.
enum class KSign { minus, plus };

// Two-mode generator on a truncated product space of dimension m1*m2, with
// a1, a2 the per-mode truncated annihilators and noise dim 2:
//   K   = s*(a1*a1 + a2*a2)/2 + omega*(a1* - a1)
//         + coupling*(a1*^2 a2 - a1^2 a2*)        (s = -1 for KSign::minus)
//   F00 = K, F10 = a1, F20 = a2, F01 = -a1*, F02 = -a2*.
// When permutations are supplied the exchange variant is built instead:
// F01 = -a1* V1, F02 = -a2* V2, F11 = V1 - I, F22 = V2 - I with V the
// permutation matrices; the column blocks F00, F10, F20 are unchanged, so
// the vacuum dynamical semigroup is identical to the plain variant.
// Product basis index is p*m2 + q for mode occupation (p, q).
GeneratorMatrix shg(int m1, int m2, double omega, double coupling,
                    const std::vector<std::int64_t>* perm1 = nullptr,
                    const std::vector<std::int64_t>* perm2 = nullptr,
                    KSign k_sign = KSign::minus);

}  // namespace qsc
