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

#include "qds.hpp"

#include <cmath>
#include <string>

#include "error.hpp"
#include "io.hpp"
#include "numerics.hpp"

namespace qsc {

namespace {

void check_state(const GeneratorMatrix& f, const Cmat& x, const char* who) {
  require(x.rows() == f.h_dim() && x.cols() == f.h_dim(), ErrorCode::dimension,
          std::string(who) + ": operator must be " + std::to_string(f.h_dim()) +
              " x " + std::to_string(f.h_dim()));
}

void check_choi_dim(const GeneratorMatrix& f, const char* who) {
  require(f.h_dim() <= 64, ErrorCode::domain,
          std::string(who) + ": Choi matrices are limited to h_dim <= 64");
}

}  // namespace

Cmat lindblad_apply(const GeneratorMatrix& f, const Cmat& x) {
  check_state(f, x, "lindblad_apply");
  const Cmat f00 = f.block(0, 0);
  const Cmat f00_adj = f00.adjoint();
  Cmat out = x * f00 + f00_adj * x;
  // Noise rows in ascending order, operands materialized first: the same sums
  // deficit_operator accumulates in its (0, 0) block. Keep the two in sync.
  for (int i = 1; i <= f.noise_dim(); ++i) {
    const Cmat li = f.block(i, 0);
    const Cmat li_adj = li.adjoint();
    const Cmat xli = x * li;
    out += li_adj * xli;
  }
  return out;
}

QdsSuperoperator::QdsSuperoperator(const GeneratorMatrix& f) : m_(f.h_dim()) {
  const Cmat id = Cmat::Identity(m_, m_);
  const Cmat f00 = f.block(0, 0);
  l_ = kron(f00.transpose(), id) + kron(id, f00.adjoint());
  for (int i = 1; i <= f.noise_dim(); ++i) {
    const Cmat li = f.block(i, 0);
    l_ += kron(li.transpose(), li.adjoint());
  }
}

Cmat QdsSuperoperator::apply(const Cmat& x) const {
  require(x.rows() == m_ && x.cols() == m_, ErrorCode::dimension,
          "QdsSuperoperator: operator must be " + std::to_string(m_) + " x " +
              std::to_string(m_));
  const Cvec vec = Eigen::Map<const Cvec>(x.data(), m_ * m_);
  const Cvec out = l_ * vec;
  return Eigen::Map<const Cmat>(out.data(), m_, m_);
}

Cmat QdsSuperoperator::evolve(const Cmat& x, double t) const {
  require(x.rows() == m_ && x.cols() == m_, ErrorCode::dimension,
          "QdsSuperoperator: operator must be " + std::to_string(m_) + " x " +
              std::to_string(m_));
  require(std::isfinite(t) && t >= 0.0, ErrorCode::domain,
          "QdsSuperoperator: time must be finite and >= 0");
  const Cmat st = expm(t * l_);
  const Cvec vec = Eigen::Map<const Cvec>(x.data(), m_ * m_);
  const Cvec out = st * vec;
  return Eigen::Map<const Cmat>(out.data(), m_, m_);
}

Cmat qds_evolve(const GeneratorMatrix& f, const Cmat& x, double t) {
  check_state(f, x, "qds_evolve");
  return QdsSuperoperator(f).evolve(x, t);
}

ConservativityResult conservativity_defect(const GeneratorMatrix& f, double t) {
  const int m = f.h_dim();
  const Cmat id = Cmat::Identity(m, m);
  const Cmat drift = qds_evolve(f, id, t) - id;
  ConservativityResult out;
  out.defect = op_norm(drift);
  out.min_diag_index = 0;
  out.min_diag = drift(0, 0).real();
  for (int i = 1; i < m; ++i) {
    const double v = drift(i, i).real();
    if (v < out.min_diag) {
      out.min_diag = v;
      out.min_diag_index = i;
    }
  }
  return out;
}

Cmat choi_matrix(const Cmat& s) {
  require(s.rows() == s.cols(), ErrorCode::dimension,
          "choi_matrix: superoperator must be square");
  const auto mm = s.rows();
  const auto m = static_cast<Eigen::Index>(std::llround(std::sqrt(
      static_cast<double>(mm))));
  require(m * m == mm, ErrorCode::dimension,
          "choi_matrix: side length must be a perfect square");
  Cmat c(mm, mm);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index k = 0; k < m; ++k)
      for (Eigen::Index j = 0; j < m; ++j)
        for (Eigen::Index l = 0; l < m; ++l)
          c(i * m + k, j * m + l) = s(k + m * l, i + m * j);
  return c;
}

double choi_min_eig(const GeneratorMatrix& f, double t) {
  check_choi_dim(f, "choi_min_eig");
  require(std::isfinite(t) && t >= 0.0, ErrorCode::domain,
          "choi_min_eig: time must be finite and >= 0");
  const QdsSuperoperator super(f);
  const Cmat st = expm(t * super.matrix());
  return -herm_max_eig(-choi_matrix(st));
}

UnitarityReport unitarity_report(const GeneratorMatrix& f, double t) {
  UnitarityReport out;
  out.primal_defect = conservativity_defect(f, t).defect;
  out.dual_defect = conservativity_defect(journe_dual(f), t).defect;
  out.max_defect = std::max(out.primal_defect, out.dual_defect);
  return out;
}

void qds_csv(const GeneratorMatrix& f, const std::vector<double>& tgrid,
             std::ostream& os) {
  check_choi_dim(f, "qds_csv");
  const int m = f.h_dim();
  const QdsSuperoperator super(f);
  const Cmat id = Cmat::Identity(m, m);
  const Cvec vec_id = Eigen::Map<const Cvec>(id.data(), m * m);
  os << "t,defect,min_diag_defect_index,min_choi_eig\n";
  for (double t : tgrid) {
    require(std::isfinite(t) && t >= 0.0, ErrorCode::domain,
            "qds_csv: times must be finite and >= 0");
    const Cmat st = expm(t * super.matrix());
    const Cvec out_vec = st * vec_id;
    const Cmat drift = Eigen::Map<const Cmat>(out_vec.data(), m, m) - id;
    int min_index = 0;
    double min_diag = drift(0, 0).real();
    for (int i = 1; i < m; ++i)
      if (drift(i, i).real() < min_diag) {
        min_diag = drift(i, i).real();
        min_index = i;
      }
    const double min_choi = -herm_max_eig(-choi_matrix(st));
    os << fmt17(t) << ',' << fmt17(op_norm(drift)) << ',' << min_index << ','
       << fmt17(min_choi) << '\n';
  }
}

}  // namespace qsc
