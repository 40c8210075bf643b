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

#include <cmath>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "core/error.hpp"
#include "core/generator.hpp"
#include "core/models.hpp"
#include "core/numerics.hpp"
#include "core/qds.hpp"
#include "core/rng.hpp"
#include "support/oracles.hpp"

using qsc::Cmat;
using qsc::cxd;
using qsc::GeneratorMatrix;

namespace {

// Exact Lindblad triple [[-L*L/2, -L*], [L, 0]] built from one jump operator.
GeneratorMatrix triple_of(const Cmat& l) {
  const int m = static_cast<int>(l.rows());
  GeneratorMatrix f(m, 1);
  f.set_block(0, 0, (-0.5) * (l.adjoint() * l));
  f.set_block(0, 1, -l.adjoint());
  f.set_block(1, 0, l);
  return f;
}

}  // namespace

TEST_CASE("the drift map at the identity is the deficit corner, bit for bit") {
  const std::vector<GeneratorMatrix> models = {
      qsc::cayley_shift(6),
      qsc::iho(6, qsc::CoefficientFn::parse("sqrt"),
               qsc::CoefficientFn::parse("zero")),
      qsc::birth_death(7, qsc::CoefficientFn::parse("const:1"),
                       qsc::CoefficientFn::parse("zero")),
      qsc::shg(3, 3, 1.0, 0.5)};
  for (const auto& f : models) {
    const int m = f.h_dim();
    const Cmat at_identity = qsc::lindblad_apply(f, Cmat::Identity(m, m));
    const Cmat corner = qsc::deficit_operator(f).block(0, 0, m, m);
    CHECK((at_identity - corner).norm() == 0.0);
  }
}

TEST_CASE("the drift map is linear and adjoint-covariant") {
  qsc::Rng rng(401);
  const GeneratorMatrix f = qsc::iho(5, qsc::CoefficientFn::parse("sqrt"),
                                     qsc::CoefficientFn::parse("zero"));
  const Cmat x = rng.cgauss_matrix(5, 5);
  const Cmat y = rng.cgauss_matrix(5, 5);
  const Cmat lin = qsc::lindblad_apply(f, x + 2.0 * y);
  const Cmat split =
      qsc::lindblad_apply(f, x) + 2.0 * qsc::lindblad_apply(f, y);
  CHECK((lin - split).norm() < 1e-13 * (1.0 + split.norm()));
  // L(X*) = L(X)* for maps of this form.
  const Cmat adj = qsc::lindblad_apply(f, Cmat(x.adjoint()));
  CHECK((adj - qsc::lindblad_apply(f, x).adjoint()).norm() <
        1e-13 * (1.0 + adj.norm()));
}

TEST_CASE("the superoperator matrix reproduces the direct map") {
  qsc::Rng rng(402);
  const GeneratorMatrix f = qsc::shg(3, 3, 1.0, 0.5);
  const qsc::QdsSuperoperator s(f);
  CHECK(s.h_dim() == 9);
  CHECK(s.matrix().rows() == 81);
  for (int trial = 0; trial < 5; ++trial) {
    const Cmat x = rng.cgauss_matrix(9, 9);
    const Cmat direct = qsc::lindblad_apply(f, x);
    const Cmat via_matrix = s.apply(x);
    CHECK((direct - via_matrix).norm() < 1e-12 * (1.0 + direct.norm()));
  }
}

TEST_CASE("semigroup evolution matches explicit master-equation stepping") {
  const GeneratorMatrix f = qsc::iho(4, qsc::CoefficientFn::parse("sqrt"),
                                     qsc::CoefficientFn::parse("zero"));
  qsc::Rng rng(403);
  Cmat x = rng.cgauss_matrix(4, 4);
  x = 0.5 * (x + x.adjoint().eval());  // observable
  const double t = 0.8;
  const Cmat via_expm = qsc::qds_evolve(f, x, t);
  const Cmat via_ode = oracle::qds_ode(f, x, t, 3000);
  CHECK((via_expm - via_ode).norm() < 1e-8 * (1.0 + via_expm.norm()));
  // t = 0 is the identity map.
  CHECK((qsc::qds_evolve(f, x, 0.0) - x).norm() == 0.0);
  CHECK_THROWS_AS(qsc::qds_evolve(f, x, -1.0), qsc::Error);
  CHECK_THROWS_AS(qsc::qds_evolve(f, Cmat::Zero(3, 3), 1.0), qsc::Error);
}

TEST_CASE("exactly isometric models generate unital semigroups") {
  const GeneratorMatrix f = qsc::cayley_shift(8);
  for (double t : {0.1, 1.0, 5.0}) {
    CAPTURE(t);
    const auto res = qsc::conservativity_defect(f, t);
    CHECK(res.defect <= 1e-12);
    CHECK(std::abs(res.min_diag) <= 1e-12);
  }
}

TEST_CASE("truncated ladder models leak at the top index") {
  const GeneratorMatrix f = qsc::iho(12, qsc::CoefficientFn::parse("sqrt"),
                                     qsc::CoefficientFn::parse("zero"));
  const auto res = qsc::conservativity_defect(f, 1.0);
  // The deficit sits at the top truncation index, so the unitality loss is
  // large and the most negative diagonal entry sits near the boundary.
  CHECK(res.defect > 0.5);
  CHECK(res.min_diag < -0.5);
  CHECK(res.min_diag_index >= 8);
  CHECK(res.min_diag >= -res.defect - 1e-12);
  // Short times leak less but still leak.
  const auto early = qsc::conservativity_defect(f, 0.1);
  CHECK(early.defect > 1e-6);
  CHECK(early.defect < res.defect);
}

TEST_CASE("an exact jump triple is conservative regardless of the operator") {
  qsc::Rng rng(404);
  const Cmat l = rng.cgauss_matrix(4, 4);
  const GeneratorMatrix f = triple_of(l);
  REQUIRE(qsc::isometry_defect(f) < 1e-12);
  for (double t : {0.1, 1.0, 5.0}) {
    CHECK(qsc::conservativity_defect(f, t).defect <= 1e-9);
  }
}

TEST_CASE("the Choi matrix of the identity map is the rank-one pairing") {
  const int m = 3;
  const Cmat identity_superop = Cmat::Identity(m * m, m * m);
  const Cmat c = qsc::choi_matrix(identity_superop);
  REQUIRE(c.rows() == m * m);
  // C = sum_{ik,jl} delta_ij delta_kl |ik><jl| has entries 1 exactly when
  // i = k and j = l: the unnormalized maximally entangled projector.
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) {
          const cxd want = (i == k && j == l) ? cxd(1, 0) : cxd(0, 0);
          CHECK(c(i * m + k, j * m + l) == want);
        }
  CHECK(qsc::herm_max_eig(c) == doctest::Approx(m).epsilon(1e-12));
}

TEST_CASE("evolved maps of every model stay completely positive") {
  const std::vector<GeneratorMatrix> models = {
      qsc::cayley_shift(6),
      qsc::iho(6, qsc::CoefficientFn::parse("sqrt"),
               qsc::CoefficientFn::parse("zero")),
      qsc::birth_death(7, qsc::CoefficientFn::parse("const:1"),
                       qsc::CoefficientFn::parse("zero")),
      qsc::shg(3, 3, 1.0, 0.5)};
  for (const auto& f : models) {
    for (double t : {0.1, 1.0}) {
      CHECK(qsc::choi_min_eig(f, t) >= -1e-10);
    }
  }
}

TEST_CASE("the Choi path refuses oversized spaces") {
  const GeneratorMatrix f(65, 1);
  CHECK_THROWS_AS(qsc::choi_min_eig(f, 0.5), qsc::Error);
  try {
    qsc::choi_min_eig(f, 0.5);
  } catch (const qsc::Error& e) {
    CHECK(e.code() == qsc::ErrorCode::domain);
  }
}

TEST_CASE("unitarity pairs the generator with its time-reversal dual") {
  const auto cayley = qsc::unitarity_report(qsc::cayley_shift(8), 1.0);
  CHECK(cayley.primal_defect <= 1e-12);
  CHECK(cayley.dual_defect <= 1e-12);
  CHECK(cayley.max_defect ==
        std::max(cayley.primal_defect, cayley.dual_defect));

  const auto ladder = qsc::unitarity_report(
      qsc::iho(8, qsc::CoefficientFn::parse("sqrt"),
               qsc::CoefficientFn::parse("zero")),
      1.0);
  CHECK(ladder.max_defect > 0.5);
}

TEST_CASE("the CSV summary has one row per time and a fixed header") {
  const GeneratorMatrix f = qsc::cayley_shift(4);
  std::ostringstream os;
  qsc::qds_csv(f, {0.0, 0.5, 1.0}, os);
  const std::string text = os.str();
  CHECK(text.rfind("t,defect,min_diag_defect_index,min_choi_eig\n", 0) == 0);
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 4);
  CHECK(text.find("\n0,") != std::string::npos);
  CHECK(text.find("\n0.5,") != std::string::npos);

  std::ostringstream empty;
  qsc::qds_csv(f, {}, empty);
  CHECK(empty.str() == "t,defect,min_diag_defect_index,min_choi_eig\n");

  // Two identical runs must serialize identically, byte for byte.
  std::ostringstream again;
  qsc::qds_csv(f, {0.0, 0.5, 1.0}, again);
  CHECK(again.str() == text);
}
