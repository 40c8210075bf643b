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

#include "numerics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "error.hpp"

namespace qsc {

namespace {

void check_finite(const Cmat& a, const char* who) {
  require(a.allFinite(), ErrorCode::domain,
          std::string(who) + ": input has a non-finite entry");
}

}  // namespace

Cmat expm(const Cmat& a) {
  require(a.rows() == a.cols(), ErrorCode::dimension,
          "expm: matrix must be square");
  check_finite(a, "expm");
  if (a.rows() == 0) return a;
  return a.exp();
}

double herm_max_eig(const Cmat& a) {
  require(a.rows() == a.cols(), ErrorCode::dimension,
          "herm_max_eig: matrix must be square");
  require(a.rows() > 0, ErrorCode::dimension, "herm_max_eig: empty matrix");
  check_finite(a, "herm_max_eig");
  const Cmat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Cmat> es(h, Eigen::EigenvaluesOnly);
  require(es.info() == Eigen::Success, ErrorCode::domain,
          "herm_max_eig: eigensolver failed to converge");
  return es.eigenvalues().maxCoeff();
}

double op_norm(const Cmat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  check_finite(a, "op_norm");
  Eigen::BDCSVD<Cmat> svd(a);
  return svd.singularValues()(0);
}

Cmat schur_product(const Cmat& a, const Cmat& b) {
  if (a.rows() == b.rows() && a.cols() == b.cols()) return a.cwiseProduct(b);
  if (a.rows() == 1 && a.cols() == 1) return a(0, 0) * b;
  if (b.rows() == 1 && b.cols() == 1) return b(0, 0) * a;
  fail(ErrorCode::dimension,
       "schur_product: shapes must match (or one operand must be 1x1)");
}

Cmat kron(const Cmat& a, const Cmat& b) {
  Cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qsc
