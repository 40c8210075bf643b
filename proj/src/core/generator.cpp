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

#include "generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"
#include "interior.hpp"
#include "numerics.hpp"
#include "rng.hpp"

namespace qsc {

GeneratorMatrix::GeneratorMatrix(int h_dim, int noise_dim) : m_(h_dim), d_(noise_dim) {
  require(h_dim >= 1, ErrorCode::dimension, "GeneratorMatrix: h_dim must be >= 1");
  require(noise_dim >= 0, ErrorCode::dimension,
          "GeneratorMatrix: noise_dim must be >= 0");
  full_ = Cmat::Zero(full_dim(), full_dim());
}

void GeneratorMatrix::check_index(int a, int b) const {
  require(a >= 0 && a <= d_ && b >= 0 && b <= d_, ErrorCode::domain,
          "block index (" + std::to_string(a) + "," + std::to_string(b) +
              ") outside 0.." + std::to_string(d_));
}

Cmat GeneratorMatrix::block(int a, int b) const {
  check_index(a, b);
  return full_.block(a * m_, b * m_, m_, m_);
}

void GeneratorMatrix::set_block(int a, int b, const Cmat& value) {
  check_index(a, b);
  require(value.rows() == m_ && value.cols() == m_, ErrorCode::dimension,
          "set_block: block must be " + std::to_string(m_) + "x" +
              std::to_string(m_));
  full_.block(a * m_, b * m_, m_, m_) = value;
}

Cmat deficit_operator(const GeneratorMatrix& f) {
  const int m = f.h_dim();
  const int d = f.noise_dim();
  const Cmat& F = f.full();
  Cmat out = F + F.adjoint();
  // Gram part (F* Delta F)(a,b) = sum_{g>=1} (F^g_a)* F^g_b, accumulated one
  // noise row at a time. Operands are materialized before the product so the
  // (0,0) block is the same floating-point sum lindblad_apply produces; keep
  // the two in sync.
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      for (int g = 1; g <= d; ++g) {
        const Cmat left_adj = Cmat(F.block(g * m, a * m, m, m)).adjoint();
        const Cmat right = F.block(g * m, b * m, m, m);
        out.block(a * m, b * m, m, m) += left_adj * right;
      }
  return out;
}

double max_form_deficit(const GeneratorMatrix& f) {
  return herm_max_eig(deficit_operator(f));
}

double isometry_defect(const GeneratorMatrix& f) {
  return op_norm(deficit_operator(f));
}

Cmat g_from_f(const GeneratorMatrix& f, int a, int b) {
  const int m = f.h_dim();
  const int d = f.noise_dim();
  require(a >= 0 && a <= d && b >= 0 && b <= d, ErrorCode::domain,
          "g_from_f: index outside 0.." + std::to_string(d));
  const Cmat id = Cmat::Identity(m, m);
  // Term order is row-major in the block index, mirroring the accumulation
  // loop of generator_cd so that basis evaluations agree bit for bit.
  if (a == 0 && b == 0) return f.block(0, 0);
  if (b == 0) return f.block(0, 0) + f.block(a, 0) - 0.5 * id;
  if (a == 0) return f.block(0, 0) + f.block(0, b) - 0.5 * id;
  const double shift = (a == b) ? 0.0 : -1.0;
  return f.block(0, 0) + f.block(0, b) + f.block(a, 0) + f.block(a, b) + shift * id;
}

GeneratorMatrix f_from_g(const std::map<std::pair<int, int>, Cmat>& g, int h_dim,
                         int noise_dim) {
  GeneratorMatrix f(h_dim, noise_dim);
  const auto at = [&](int a, int b) -> const Cmat& {
    const auto it = g.find({a, b});
    require(it != g.end(), ErrorCode::precondition,
            "f_from_g: missing block (" + std::to_string(a) + "," +
                std::to_string(b) + ")");
    require(it->second.rows() == h_dim && it->second.cols() == h_dim,
            ErrorCode::dimension, "f_from_g: block shape mismatch");
    return it->second;
  };
  const Cmat id = Cmat::Identity(h_dim, h_dim);
  const Cmat& g00 = at(0, 0);
  f.set_block(0, 0, g00);
  for (int i = 1; i <= noise_dim; ++i) {
    f.set_block(i, 0, at(i, 0) - g00 + 0.5 * id);
    f.set_block(0, i, at(0, i) - g00 + 0.5 * id);
  }
  for (int i = 1; i <= noise_dim; ++i)
    for (int j = 1; j <= noise_dim; ++j) {
      const double delta = (i == j) ? 1.0 : 0.0;
      f.set_block(i, j, at(i, j) - at(i, 0) - at(0, j) + g00 - delta * id);
    }
  return f;
}

GeneratorMatrix journe_dual(const GeneratorMatrix& f) {
  GeneratorMatrix out(f.h_dim(), f.noise_dim());
  for (int a = 0; a <= f.noise_dim(); ++a)
    for (int b = 0; b <= f.noise_dim(); ++b)
      out.set_block(a, b, f.block(b, a).adjoint());
  return out;
}

GeneratorMatrix regularize(const GeneratorMatrix& f, std::int64_t n, double tol) {
  require(n >= 1, ErrorCode::domain, "regularize: n must be >= 1");
  const double deficit = max_form_deficit(f);
  require(deficit <= tol, ErrorCode::precondition,
          "regularize: form inequality violated (max_form_deficit = " +
              fmt17(deficit) + " > tol = " + fmt17(tol) + ")");
  const int m = f.h_dim();
  const Cmat f00 = f.block(0, 0);
  const Cmat s = 0.5 * (f00 + f00.adjoint());
  Eigen::SelfAdjointEigenSolver<Cmat> es(s);
  require(es.info() == Eigen::Success, ErrorCode::domain,
          "regularize: eigensolver failed");
  // Cn = n (nI - S)^{-1}: positive contraction when S <= 0, built spectrally
  // so it is Hermitian to rounding.
  Rvec scale(m);
  const double nn = static_cast<double>(n);
  for (int i = 0; i < m; ++i) {
    const double denom = nn - es.eigenvalues()(i);
    require(denom > 0.0, ErrorCode::precondition,
            "regularize: nI - S is not positive definite");
    scale(i) = nn / denom;
  }
  const Cmat cn = es.eigenvectors() * scale.asDiagonal() *
                  es.eigenvectors().adjoint();
  GeneratorMatrix out(f.h_dim(), f.noise_dim());
  for (int a = 0; a <= f.noise_dim(); ++a)
    for (int b = 0; b <= f.noise_dim(); ++b)
      out.set_block(a, b, cn * f.block(a, b) * cn);
  return out;
}

namespace {

// least b with ||xu|| <= a ||u|| + b ||yu|| over the recorded pairs (units:
// probes are unit vectors, so ||u|| = 1); +inf when some pair has yu = 0 but
// the a-term does not already cover xu.
double least_b(const std::vector<std::pair<double, double>>& pairs, double a) {
  double b = 0.0;
  for (const auto& [nx, ny] : pairs) {
    const double excess = nx - a;
    if (excess <= 0.0) continue;
    if (ny == 0.0) return std::numeric_limits<double>::infinity();
    b = std::max(b, excess / ny);
  }
  return b;
}

RelativeBoundEntry profile_entry(int i, const Cmat& x, const Cmat& f00,
                                 const std::vector<Cvec>& probes,
                                 const std::vector<double>& a_grid) {
  RelativeBoundEntry e;
  e.i = i;
  e.pairs.reserve(probes.size());
  for (const Cvec& u : probes)
    e.pairs.emplace_back((x * u).norm(), (f00 * u).norm());
  for (double a : a_grid) {
    const double b = least_b(e.pairs, a);
    e.least_b.emplace_back(a, b);
    if (std::isinf(b)) e.finite = false;
  }
  return e;
}

}  // namespace

DiagnosticsReport diagnostics(const GeneratorMatrix& f, double tol,
                              std::uint64_t seed, const InteriorMask* mask,
                              const std::string& geometry) {
  require(tol >= 0.0, ErrorCode::domain, "diagnostics: tol must be >= 0");
  const int m = f.h_dim();
  const int d = f.noise_dim();
  DiagnosticsReport r;
  r.tol = tol;

  const Cmat deficit = deficit_operator(f);
  if (mask != nullptr) {
    require(mask->dim == m, ErrorCode::dimension,
            "diagnostics: mask dimension does not match the generator");
    const Cmat compressed = interior_compress(deficit, *mask);
    r.max_form_deficit = herm_max_eig(compressed);
    r.isometry_defect = op_norm(compressed);
    r.margin = mask->margin;
    r.geometry = geometry;
  } else {
    r.max_form_deficit = herm_max_eig(deficit);
    r.isometry_defect = op_norm(deficit);
  }

  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      r.g_dissipativity[{a, b}] = herm_max_eig(g_from_f(f, a, b));

  if (d > 0) {
    Cmat exchange(d * m, d * m);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        Cmat blk = f.block(i, j);
        if (i == j) blk += Cmat::Identity(m, m);
        exchange.block((i - 1) * m, (j - 1) * m, m, m) = blk;
      }
    r.exchange_norm = op_norm(exchange);
  }

  // Probe set: the standard basis in index order, then 1000 seeded random
  // unit vectors. Basis probes hit exact zeros of ||F00 u||, which is what
  // detects an unbounded-relative-to-F00 direction at truncation.
  std::vector<Cvec> probes;
  probes.reserve(static_cast<std::size_t>(m) + 1000);
  for (int i = 0; i < m; ++i) probes.push_back(Cvec::Unit(m, i));
  Rng rng(seed);
  for (int k = 0; k < 1000; ++k) probes.push_back(rng.unit_vector(m));
  const std::vector<double> a_grid = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
  const Cmat f00 = f.block(0, 0);
  for (int i = 1; i <= d; ++i) {
    r.rel_bound_annihilation.push_back(
        profile_entry(i, f.block(0, i), f00, probes, a_grid));
    r.rel_bound_creation.push_back(
        profile_entry(i, f.block(i, 0), f00, probes, a_grid));
  }

  auto& v = r.verdicts;
  v.form_inequality = r.max_form_deficit <= tol;
  v.f00_dissipative = herm_max_eig(f00) <= tol;
  v.g_all_dissipative = true;
  for (const auto& [key, val] : r.g_dissipativity)
    if (val > tol) v.g_all_dissipative = false;
  v.exchange_contraction = r.exchange_norm <= 1.0 + tol;
  v.rel_bound_finite_annihilation = true;
  for (const auto& e : r.rel_bound_annihilation)
    if (!e.finite) v.rel_bound_finite_annihilation = false;
  v.rel_bound_finite_creation = true;
  for (const auto& e : r.rel_bound_creation)
    if (!e.finite) v.rel_bound_finite_creation = false;
  v.g0i_dissipative = true;
  for (int i = 1; i <= d; ++i)
    if (r.g_dissipativity[{0, i}] > tol) v.g0i_dissipative = false;
  return r;
}

namespace {

json rel_bound_json(const std::vector<RelativeBoundEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) {
    json pairs = json::array();
    for (const auto& [nx, ny] : e.pairs) pairs.push_back(json::array({nx, ny}));
    json lb = json::array();
    for (const auto& [a, b] : e.least_b)
      lb.push_back(json{{"a", a}, {"b", std::isinf(b) ? json(nullptr) : json(b)}});
    arr.push_back(json{{"i", e.i},
                       {"pairs", std::move(pairs)},
                       {"least_b", std::move(lb)},
                       {"finite", e.finite}});
  }
  return arr;
}

}  // namespace

json DiagnosticsReport::to_json() const {
  json gd = json::array();
  for (const auto& [key, val] : g_dissipativity)
    gd.push_back(json{{"alpha", key.first}, {"beta", key.second}, {"value", val}});
  return json{
      {"tol", tol},
      {"margin", margin},
      {"geometry", geometry},
      {"max_form_deficit", max_form_deficit},
      {"isometry_defect", isometry_defect},
      {"g_dissipativity", std::move(gd)},
      {"exchange_norm", exchange_norm},
      {"relative_bound_profile",
       json{{"annihilation", rel_bound_json(rel_bound_annihilation)},
            {"creation", rel_bound_json(rel_bound_creation)}}},
      {"verdicts",
       json{{"form_inequality", verdicts.form_inequality},
            {"f00_dissipative", verdicts.f00_dissipative},
            {"g_all_dissipative", verdicts.g_all_dissipative},
            {"exchange_contraction", verdicts.exchange_contraction},
            {"rel_bound_finite_annihilation", verdicts.rel_bound_finite_annihilation},
            {"rel_bound_finite_creation", verdicts.rel_bound_finite_creation},
            {"g0i_dissipative", verdicts.g0i_dissipative}}},
  };
}

GeneratorMatrix generator_from_json(const json& j, const std::string& where) {
  require(j.is_object(), ErrorCode::parse, where + ": expected a JSON object");
  for (const char* field : {"h_dim", "noise_dim", "blocks"})
    require(j.contains(field), ErrorCode::parse,
            where + ": missing field \"" + field + "\"");
  require(j["h_dim"].is_number_integer(), ErrorCode::parse,
          where + ":h_dim: expected an integer");
  require(j["noise_dim"].is_number_integer(), ErrorCode::parse,
          where + ":noise_dim: expected an integer");
  const int m = j["h_dim"].get<int>();
  const int d = j["noise_dim"].get<int>();
  require(m >= 1, ErrorCode::parse, where + ":h_dim: must be >= 1");
  require(d >= 0, ErrorCode::parse, where + ":noise_dim: must be >= 0");
  const json& blocks = j["blocks"];
  require(blocks.is_array() && blocks.size() == static_cast<std::size_t>(d + 1),
          ErrorCode::parse,
          where + ":blocks: expected " + std::to_string(d + 1) + " block rows");
  GeneratorMatrix f(m, d);
  for (int a = 0; a <= d; ++a) {
    const json& row = blocks[a];
    const std::string rw = where + ":blocks[" + std::to_string(a) + "]";
    require(row.is_array() && row.size() == static_cast<std::size_t>(d + 1),
            ErrorCode::parse,
            rw + ": expected " + std::to_string(d + 1) + " blocks");
    for (int b = 0; b <= d; ++b) {
      const Cmat blk =
          matrix_from_json(row[b], rw + "[" + std::to_string(b) + "]");
      require(blk.rows() == m && blk.cols() == m, ErrorCode::parse,
              rw + "[" + std::to_string(b) + "]: expected a " +
                  std::to_string(m) + "x" + std::to_string(m) + " matrix");
      f.set_block(a, b, blk);
    }
  }
  return f;
}

json generator_to_json(const GeneratorMatrix& f) {
  json blocks = json::array();
  for (int a = 0; a <= f.noise_dim(); ++a) {
    json row = json::array();
    for (int b = 0; b <= f.noise_dim(); ++b)
      row.push_back(matrix_to_json(f.block(a, b)));
    blocks.push_back(std::move(row));
  }
  return json{{"h_dim", f.h_dim()},
              {"noise_dim", f.noise_dim()},
              {"blocks", std::move(blocks)}};
}

GeneratorMatrix load_generator_file(const std::string& path) {
  return generator_from_json(load_json_file(path), path);
}

void save_generator_file(const GeneratorMatrix& f, const std::string& path) {
  save_json_file(generator_to_json(f), path);
}

}  // namespace qsc
