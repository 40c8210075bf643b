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
#include <cstdio>
#include <map>
#include <utility>

#include <doctest.h>

#include "core/error.hpp"
#include "core/generator.hpp"
#include "core/interior.hpp"
#include "core/models.hpp"
#include "core/numerics.hpp"
#include "core/rng.hpp"
#include "support/oracles.hpp"

using qsc::Cmat;
using qsc::Cvec;
using qsc::cxd;
using qsc::GeneratorMatrix;

TEST_CASE("block storage places block (a,b) at offset (a*m, b*m)") {
  GeneratorMatrix f(2, 2);
  Cmat blk(2, 2);
  blk << cxd(1, 2), cxd(3, 4), cxd(5, 6), cxd(7, 8);
  f.set_block(1, 2, blk);
  CHECK((f.block(1, 2) - blk).norm() == 0.0);
  CHECK((f.full().block(2, 4, 2, 2) - blk).norm() == 0.0);
  CHECK(f.full().block(0, 0, 2, 2).norm() == 0.0);
  CHECK(f.h_dim() == 2);
  CHECK(f.noise_dim() == 2);
  CHECK(f.full_dim() == 6);
}

TEST_CASE("block access rejects out-of-range indices and wrong shapes") {
  GeneratorMatrix f(2, 1);
  CHECK_THROWS_AS(f.block(2, 0), qsc::Error);
  CHECK_THROWS_AS(f.block(0, -1), qsc::Error);
  CHECK_THROWS_AS(f.set_block(0, 0, Cmat::Zero(2, 3)), qsc::Error);
  try {
    f.block(2, 0);
  } catch (const qsc::Error& e) {
    CHECK(e.code() == qsc::ErrorCode::domain);
  }
}

TEST_CASE("deficit operator realizes the contraction quadratic form") {
  qsc::Rng rng(101);
  const GeneratorMatrix f = oracle::dyadic_generator(3, 2, rng);
  const Cmat d = qsc::deficit_operator(f);
  REQUIRE(d.rows() == f.full_dim());
  CHECK((d - d.adjoint().eval()).norm() < 1e-13 * (1.0 + d.norm()));
  for (int trial = 0; trial < 40; ++trial) {
    const Cvec xi = rng.cgauss_vector(f.full_dim());
    const double via_operator = std::real(xi.dot(d * xi));
    const double via_form = oracle::deficit_form(f, xi);
    CHECK(via_operator ==
          doctest::Approx(via_form).epsilon(1e-11).scale(1.0 + std::abs(via_form)));
  }
}

TEST_CASE("deficit of the zero generator is exactly zero") {
  const GeneratorMatrix f(4, 2);
  CHECK(qsc::deficit_operator(f).norm() == 0.0);
  CHECK(qsc::max_form_deficit(f) == 0.0);
  CHECK(qsc::isometry_defect(f) == 0.0);
}

TEST_CASE("max_form_deficit agrees with power iteration on the deficit") {
  qsc::Rng rng(103);
  const GeneratorMatrix f = oracle::dyadic_generator(3, 1, rng);
  const Cmat d = qsc::deficit_operator(f);
  CHECK(qsc::max_form_deficit(f) ==
        doctest::Approx(oracle::power_max_eig(d)).epsilon(1e-9));
  CHECK(qsc::isometry_defect(f) ==
        doctest::Approx(qsc::op_norm(d)).epsilon(1e-12));
}

TEST_CASE("semigroup generator table round trips exactly on dyadic data") {
  // Dyadic entries make every sum in g_from_f / f_from_g exact, so the
  // round trip must reproduce the generator bit for bit.
  qsc::Rng rng(105);
  for (int d : {1, 3}) {
    const GeneratorMatrix f = oracle::dyadic_generator(4, d, rng);
    std::map<std::pair<int, int>, Cmat> table;
    for (int a = 0; a <= d; ++a)
      for (int b = 0; b <= d; ++b) table[{a, b}] = qsc::g_from_f(f, a, b);
    const GeneratorMatrix back = qsc::f_from_g(table, 4, d);
    CHECK((back.full() - f.full()).norm() == 0.0);
  }
}

TEST_CASE("g_from_f matches its closed form blockwise") {
  qsc::Rng rng(106);
  const GeneratorMatrix f = oracle::dyadic_generator(3, 2, rng);
  const Cmat id = Cmat::Identity(3, 3);
  CHECK((qsc::g_from_f(f, 0, 0) - f.block(0, 0)).norm() == 0.0);
  CHECK((qsc::g_from_f(f, 2, 0) -
         (f.block(0, 0) + f.block(2, 0) - 0.5 * id)).norm() == 0.0);
  CHECK((qsc::g_from_f(f, 0, 1) -
         (f.block(0, 0) + f.block(0, 1) - 0.5 * id)).norm() == 0.0);
  CHECK((qsc::g_from_f(f, 1, 2) -
         (f.block(0, 0) + f.block(1, 0) + f.block(0, 2) + f.block(1, 2) - id))
            .norm() == 0.0);
  CHECK((qsc::g_from_f(f, 1, 1) -
         (f.block(0, 0) + f.block(1, 0) + f.block(0, 1) + f.block(1, 1)))
            .norm() == 0.0);
}

TEST_CASE("f_from_g validates its table") {
  std::map<std::pair<int, int>, Cmat> table;
  table[{0, 0}] = Cmat::Zero(2, 2);
  CHECK_THROWS_AS(qsc::f_from_g(table, 2, 1), qsc::Error);  // missing entries
}

TEST_CASE("dual generator transposes the block grid with adjoints") {
  qsc::Rng rng(107);
  const GeneratorMatrix f = oracle::dyadic_generator(3, 2, rng);
  const GeneratorMatrix dual = qsc::journe_dual(f);
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      CHECK((dual.block(a, b) - f.block(b, a).adjoint()).norm() == 0.0);
    }
  }
  // Conjugating twice is the identity on every IEEE value, so the involution
  // must hold bitwise.
  const GeneratorMatrix twice = qsc::journe_dual(dual);
  CHECK((twice.full() - f.full()).norm() == 0.0);
}

TEST_CASE("regularization preserves the form inequality and converges") {
  const GeneratorMatrix f = qsc::iho(6, qsc::CoefficientFn::parse("sqrt"),
                                     qsc::CoefficientFn::parse("zero"));
  const double base = qsc::max_form_deficit(f);
  REQUIRE(base <= 1e-10);
  double prev = 1e300;
  for (std::int64_t n : {1, 10, 100, 1000, 10000}) {
    const GeneratorMatrix fn = qsc::regularize(f, n);
    CHECK(qsc::max_form_deficit(fn) <= 1e-10);
    const double dist = (fn.full() - f.full()).norm();
    CHECK(dist < prev + 1e-15);
    prev = dist;
  }
  // At n = 10^4 the bounded approximation is already close in norm.
  CHECK(prev < 1e-2);
}

TEST_CASE("regularization requires the form inequality") {
  const GeneratorMatrix bad =
      qsc::shg(3, 3, 1.0, 0.5, nullptr, nullptr, qsc::KSign::plus);
  REQUIRE(qsc::max_form_deficit(bad) > 1.0);
  CHECK_THROWS_AS(qsc::regularize(bad, 10), qsc::Error);
  try {
    qsc::regularize(bad, 10);
  } catch (const qsc::Error& e) {
    CHECK(e.code() == qsc::ErrorCode::precondition);
  }
  CHECK_THROWS_AS(qsc::regularize(qsc::cayley_shift(4), 0), qsc::Error);
}

TEST_CASE("diagnostics verdicts are all green for the shift-Cayley model") {
  const GeneratorMatrix f = qsc::cayley_shift(12);
  const auto report = qsc::diagnostics(f, 1e-10, 2024);
  CHECK(report.verdicts.form_inequality);
  CHECK(report.verdicts.f00_dissipative);
  CHECK(report.verdicts.g_all_dissipative);
  CHECK(report.verdicts.exchange_contraction);
  CHECK(report.verdicts.rel_bound_finite_annihilation);
  CHECK(report.verdicts.rel_bound_finite_creation);
  CHECK(report.verdicts.g0i_dissipative);
  CHECK(report.max_form_deficit <= 1e-10);
  CHECK(report.geometry == "full");
  // F11 = 0 so the exchange block [F11 + I] is exactly the identity.
  CHECK(report.exchange_norm == doctest::Approx(1.0).epsilon(1e-13));
  // 1 + d semigroup generator entries per axis.
  CHECK(report.g_dissipativity.size() == 4);
  for (const auto& [key, val] : report.g_dissipativity) {
    CHECK(val <= 1e-10);
  }
}

TEST_CASE("diagnostics records the interior geometry it was given") {
  const GeneratorMatrix f = qsc::iho(10, qsc::CoefficientFn::parse("sqrt"),
                                     qsc::CoefficientFn::parse("zero"));
  const auto mask = qsc::InteriorMask::halfline(10, 2);
  const auto report = qsc::diagnostics(f, 1e-10, 7, &mask, "halfline");
  CHECK(report.geometry == "halfline");
  CHECK(report.margin == 2);
  CHECK(report.max_form_deficit <= 1e-12);
  CHECK(report.verdicts.form_inequality);
  const qsc::json j = report.to_json();
  CHECK(j.contains("verdicts"));
  CHECK(j.contains("max_form_deficit"));
  CHECK(j.contains("isometry_defect"));
  CHECK(j.contains("relative_bound_profile"));
  CHECK(j["relative_bound_profile"].contains("annihilation"));
  CHECK(j["relative_bound_profile"].contains("creation"));
  CHECK(j["geometry"] == "halfline");
}

TEST_CASE("diagnostics flags a form-inequality violation") {
  const GeneratorMatrix bad =
      qsc::shg(3, 3, 1.0, 0.5, nullptr, nullptr, qsc::KSign::plus);
  const auto report = qsc::diagnostics(bad, 1e-10, 1);
  CHECK_FALSE(report.verdicts.form_inequality);
  CHECK(report.max_form_deficit > 1.0);
}

TEST_CASE("relative-bound profiles probe the standard basis first") {
  const int m = 8;
  const GeneratorMatrix f = qsc::iho(m, qsc::CoefficientFn::parse("sqrt"),
                                     qsc::CoefficientFn::parse("zero"));
  const auto report = qsc::diagnostics(f, 1e-10, 99);
  REQUIRE(report.rel_bound_annihilation.size() == 1);
  const auto& entry = report.rel_bound_annihilation[0];
  CHECK(entry.i == 1);
  REQUIRE(entry.pairs.size() >= static_cast<std::size_t>(m));
  // On basis vectors the pair is (||F01 e_n||, ||F00 e_n||), both known in
  // closed form for the ladder model with sqrt coefficients.
  for (int n = 0; n < m; ++n) {
    const double expect_x = (n >= 1) ? std::sqrt(static_cast<double>(n)) : 0.0;
    const double expect_f00 = 0.5 * static_cast<double>(n + 1);
    CHECK(entry.pairs[n].first == doctest::Approx(expect_x).epsilon(1e-12));
    CHECK(entry.pairs[n].second == doctest::Approx(expect_f00).epsilon(1e-12));
  }
  REQUIRE(!entry.least_b.empty());
  for (const auto& [a, b] : entry.least_b) {
    CHECK(a >= 0.0);
    CHECK(b >= 0.0);
  }
}

TEST_CASE("generator JSON round trips bit for bit") {
  qsc::Rng rng(109);
  const GeneratorMatrix f = oracle::dyadic_generator(3, 2, rng);
  const qsc::json j = qsc::generator_to_json(f);
  const GeneratorMatrix back = qsc::generator_from_json(j, "test");
  CHECK(back.h_dim() == 3);
  CHECK(back.noise_dim() == 2);
  CHECK((back.full() - f.full()).norm() == 0.0);

  const std::string path = "/tmp/qsc_test_generator_roundtrip.json";
  qsc::save_generator_file(f, path);
  const GeneratorMatrix from_disk = qsc::load_generator_file(path);
  CHECK((from_disk.full() - f.full()).norm() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("generator JSON rejects malformed input") {
  using qsc::json;
  CHECK_THROWS_AS(qsc::generator_from_json(json{{"h_dim", 2}}, "t"), qsc::Error);
  json bad = qsc::generator_to_json(GeneratorMatrix(2, 1));
  bad["blocks"][0].erase(1);  // ragged row
  CHECK_THROWS_AS(qsc::generator_from_json(bad, "t"), qsc::Error);
  try {
    qsc::generator_from_json(json{{"h_dim", 2}}, "t");
  } catch (const qsc::Error& e) {
    CHECK(e.code() == qsc::ErrorCode::parse);
  }
  CHECK_THROWS_AS(qsc::load_generator_file("/nonexistent/qsc.json"), qsc::Error);
}

TEST_CASE("interior masks keep the expected index sets") {
  const auto half = qsc::InteriorMask::halfline(6, 2);
  CHECK(half.kept == std::vector<int>{0, 1, 2, 3});
  const auto win = qsc::InteriorMask::window(7, 2);
  CHECK(win.kept == std::vector<int>{2, 3, 4});
  const auto grid = qsc::InteriorMask::grid(3, 2, 1);
  CHECK(grid.kept == std::vector<int>{0, 2});  // (p,q) with p<=1, q<=0
  CHECK(grid.dim == 6);
  const auto full = qsc::InteriorMask::full(4);
  CHECK(full.kept.size() == 4);

  const auto named = qsc::InteriorMask::named("window", 7, 2);
  CHECK(named.kept == win.kept);
  CHECK_THROWS_AS(qsc::InteriorMask::named("spiral", 4, 1), qsc::Error);
  CHECK_THROWS_AS(qsc::InteriorMask::named("grid", 6, 1, 4, 2), qsc::Error);
}

TEST_CASE("interior compression takes principal submatrices blockwise") {
  qsc::Rng rng(111);
  const Cmat a = rng.cgauss_matrix(5, 5);
  const auto mask = qsc::InteriorMask::window(5, 1);
  const Cmat c = qsc::interior_compress(a, mask);
  REQUIRE(c.rows() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(c(i, j) == a(mask.kept[i], mask.kept[j]));

  // A 2-block matrix over the same space compresses per block.
  Cmat big(10, 10);
  big = rng.cgauss_matrix(10, 10);
  const Cmat cb = qsc::interior_compress(big, mask);
  REQUIRE(cb.rows() == 6);
  CHECK(cb(0, 3) == big(mask.kept[0], 5 + mask.kept[0]));
}

TEST_CASE("interior deficit of the ladder model vanishes off the boundary") {
  const GeneratorMatrix f = qsc::iho(9, qsc::CoefficientFn::parse("sqrt"),
                                     qsc::CoefficientFn::parse("zero"));
  const auto mask = qsc::InteriorMask::halfline(9, 2);
  CHECK(qsc::interior_isometry_defect(f, mask) <= 1e-12);
  CHECK(qsc::interior_max_form_deficit(f, mask) <= 1e-12);
  // The full-truncation defect is the dropped ladder weight |lambda(m)|^2.
  CHECK(qsc::isometry_defect(f) == doctest::Approx(9.0).epsilon(1e-12));
}
