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
#include <utility>
#include <vector>

#include "io.hpp"
#include "types.hpp"

namespace qsc {

// Block operator matrix F = [F^a_b] acting on h (x) (C + C^d), stored as one
// dense (d+1)m x (d+1)m matrix. Row/column index a runs over 0..d; slot 0 is
// the time direction, slots 1..d the noise directions. Block (a, b) occupies
// rows [a*m, (a+1)*m) and columns [b*m, (b+1)*m).
//
// Everything here is finite-dimensional: a block matrix of this kind always
// defines a bounded operator on the whole space, so no domain or
// summability side conditions arise anywhere in the module.
class GeneratorMatrix {
 public:
  GeneratorMatrix(int h_dim, int noise_dim);  // zero-initialized blocks

  int h_dim() const { return m_; }
  int noise_dim() const { return d_; }
  int full_dim() const { return (d_ + 1) * m_; }

  const Cmat& full() const { return full_; }
  Cmat& full() { return full_; }

  Cmat block(int a, int b) const;
  void set_block(int a, int b, const Cmat& value);

 private:
  void check_index(int a, int b) const;
  int m_, d_;
  Cmat full_;
};

// D(F) = F + F* + F* Delta F, where Delta zeroes the time block row. The form
// 2 Re<xi, F xi> + ||Delta F xi||^2 equals <xi, D(F) xi>; D is Hermitian up
// to rounding. The Gram part is accumulated noise-row by noise-row so its
// (0,0) block is the same floating-point sum lindblad_apply produces.
Cmat deficit_operator(const GeneratorMatrix& f);

// Largest eigenvalue of the (symmetrized) deficit operator: <= 0 means the
// contraction form inequality holds; ~0 the isometric case.
double max_form_deficit(const GeneratorMatrix& f);

// Operator norm of the deficit: distance from the isometric case.
double isometry_defect(const GeneratorMatrix& f);

// Associated semigroup generators at basis points:
//   G^{00} = F00,  G^{i0} = F00 + Fi0 - I/2,  G^{0j} = F00 + F0j - I/2,
//   G^{ij} = F00 + Fi0 + F0j + Fij + (delta_ij - 1) I.
Cmat g_from_f(const GeneratorMatrix& f, int a, int b);

// Inverse of g_from_f given the complete (d+1)^2 table of G blocks.
GeneratorMatrix f_from_g(const std::map<std::pair<int, int>, Cmat>& g, int h_dim,
                         int noise_dim);

// Dual generator: block (a, b) = (F^b_a)*. Involution; swapping the roles of
// the two exponential-vector arguments.
GeneratorMatrix journe_dual(const GeneratorMatrix& f);

// Bounded regularization F^(n) = (Cn (x) I)* F (Cn (x) I) with
// Cn = n (nI - S)^{-1}, S the Hermitian part of F00. Requires the form
// inequality (max_form_deficit <= tol); preserves it for every n >= 1 and
// converges to F in norm as n grows.
GeneratorMatrix regularize(const GeneratorMatrix& f, std::int64_t n,
                           double tol = 1e-10);

// One relative-boundedness family entry: ||X u|| vs ||F00 u|| over the probe
// set, plus the least b with ||X u|| <= a||u|| + b||F00 u|| for each grid a
// (infinity when some probe has F00 u = 0 but ||X u|| > a||u||).
struct RelativeBoundEntry {
  int i = 0;
  // one (||X u||, ||F00 u||) pair per probe vector; the first h_dim probes
  // are the standard basis e_0, e_1, ... in order
  std::vector<std::pair<double, double>> pairs;
  std::vector<std::pair<double, double>> least_b;  // (a, b); b may be +inf
  bool finite = true;                              // every least_b finite
};

struct DiagnosticsVerdicts {
  bool form_inequality = false;
  bool f00_dissipative = false;
  bool g_all_dissipative = false;
  bool exchange_contraction = false;
  bool rel_bound_finite_annihilation = false;
  bool rel_bound_finite_creation = false;
  bool g0i_dissipative = false;
};

struct DiagnosticsReport {
  double tol = 0.0;
  int margin = 0;                 // 0 = full matrix
  std::string geometry = "full";  // mask used for the two deficit scalars
  double max_form_deficit = 0.0;
  double isometry_defect = 0.0;
  std::map<std::pair<int, int>, double> g_dissipativity;  // herm_max_eig per G
  double exchange_norm = 0.0;  // ||[F^i_j + delta_ij I]|| on the noise block
  // Relative-boundedness profiles for both off-diagonal families relative to
  // F00: "annihilation" is the F^0_i row family, "creation" the F^i_0 column
  // family; they can behave very differently, so both are reported.
  std::vector<RelativeBoundEntry> rel_bound_annihilation;
  std::vector<RelativeBoundEntry> rel_bound_creation;
  DiagnosticsVerdicts verdicts;

  json to_json() const;
};

struct InteriorMask;  // interior.hpp

// Numeric health report for a candidate generator. The deficit scalars are
// computed on the interior compression when mask != nullptr (geometry label
// recorded in the report); all block-level diagnostics stay full-matrix.
// seed feeds the random probes of the relative-bound profile.
DiagnosticsReport diagnostics(const GeneratorMatrix& f, double tol,
                              std::uint64_t seed,
                              const InteriorMask* mask = nullptr,
                              const std::string& geometry = "full");

// {"h_dim": m, "noise_dim": d, "blocks": [[matrix]]} with row-major [re, im]
// entries. Round trips exactly.
GeneratorMatrix generator_from_json(const json& j, const std::string& where);
json generator_to_json(const GeneratorMatrix& f);
GeneratorMatrix load_generator_file(const std::string& path);
void save_generator_file(const GeneratorMatrix& f, const std::string& path);

}  // namespace qsc
