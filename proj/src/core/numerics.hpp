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

#include "types.hpp"

namespace qsc {

// e^A for square A, scaling-and-squaring with a Pade rational approximant.
Cmat expm(const Cmat& a);

// Largest eigenvalue of the Hermitian part (a + a*)/2. A is symmetrized
// internally, so mildly non-Hermitian input is fine.
double herm_max_eig(const Cmat& a);

// Operator norm = largest singular value. Rectangular input allowed; an empty
// matrix has norm 0.
double op_norm(const Cmat& a);

// Entrywise (Schur) product. Shapes must match, except that a 1x1 operand
// broadcasts as a scalar against the other.
Cmat schur_product(const Cmat& a, const Cmat& b);

// Kronecker product: block (i,j) of the result is a(i,j) * b.
Cmat kron(const Cmat& a, const Cmat& b);

}  // namespace qsc
