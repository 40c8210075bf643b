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

#include <vector>

#include "generator.hpp"
#include "types.hpp"

namespace qsc {

// Selection of basis indices of the truncated space that sit at distance
// >= margin from every index the truncation cut off. Identities that hold for
// the untruncated operators hold exactly on the interior whenever each block
// moves basis vectors by less than margin steps.
struct InteriorMask {
  int dim = 0;
  int margin = 0;
  std::vector<int> kept;  // strictly increasing subset of 0..dim-1

  // Half-line truncation 0..dim-1: index 0 is a genuine edge of the space
  // (nothing was cut there), only the top is a truncation boundary.
  static InteriorMask halfline(int dim, int margin);

  // Two-sided window (both ends are truncation cuts).
  static InteriorMask window(int dim, int margin);

  // Product truncation dim1 x dim2 with flattened index p*dim2 + q; both
  // axes are half-lines, so only the two top edges are cut.
  static InteriorMask grid(int dim1, int dim2, int margin);

  static InteriorMask full(int dim);

  // Named constructor used by the CLI/C API: kind in {full, halfline, window,
  // grid}; dim1/dim2 only for grid (dim1 * dim2 must equal dim).
  static InteriorMask named(const std::string& kind, int dim, int margin,
                            int dim1 = 0, int dim2 = 0);
};

// Principal submatrix on the kept indices. When a is k*dim square for k > 1
// (a block matrix over the same space) the mask applies blockwise.
Cmat interior_compress(const Cmat& a, const InteriorMask& mask);

double interior_max_form_deficit(const GeneratorMatrix& f, const InteriorMask& mask);
double interior_isometry_defect(const GeneratorMatrix& f, const InteriorMask& mask);

}  // namespace qsc
