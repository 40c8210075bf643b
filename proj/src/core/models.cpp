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

#include "models.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>

#include "error.hpp"
#include "io.hpp"
#include "numerics.hpp"

namespace qsc {

namespace {

double parse_real(const std::string& text, const std::string& what) {
  require(!text.empty(), ErrorCode::parse, what + ": empty number");
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  require(end == text.c_str() + text.size() && std::isfinite(value),
          ErrorCode::parse, what + ": not a finite number: \"" + text + "\"");
  return value;
}

}  // namespace

CoefficientFn CoefficientFn::parse(const std::string& spec) {
  if (spec == "zero")
    return CoefficientFn([](std::int64_t) { return cxd(0.0, 0.0); }, spec);
  if (spec == "sqrt")
    return CoefficientFn(
        [](std::int64_t n) {
          return cxd(n > 0 ? std::sqrt(static_cast<double>(n)) : 0.0, 0.0);
        },
        spec);
  if (spec == "odd-sqrt")
    return CoefficientFn(
        [](std::int64_t n) {
          const bool odd = n >= 1 && (n % 2 != 0);
          return cxd(odd ? std::sqrt(static_cast<double>(n)) : 0.0, 0.0);
        },
        spec);
  if (spec == "abs-sqrt")
    return CoefficientFn(
        [](std::int64_t n) {
          return cxd(std::sqrt(static_cast<double>(n < 0 ? -n : n)), 0.0);
        },
        spec);
  if (spec.rfind("const:", 0) == 0) {
    const double x = parse_real(spec.substr(6), "coefficient const");
    return CoefficientFn([x](std::int64_t) { return cxd(x, 0.0); }, spec);
  }
  if (spec.rfind("linear:", 0) == 0) {
    const std::string body = spec.substr(7);
    const auto comma = body.find(',');
    require(comma != std::string::npos, ErrorCode::parse,
            "coefficient linear: expected \"linear:a,b\"");
    const double a = parse_real(body.substr(0, comma), "coefficient linear a");
    const double b = parse_real(body.substr(comma + 1), "coefficient linear b");
    return CoefficientFn(
        [a, b](std::int64_t n) {
          return cxd(a * static_cast<double>(n) + b, 0.0);
        },
        spec);
  }
  if (spec.rfind("table:", 0) == 0) {
    const std::string path = spec.substr(6);
    const json j = load_json_file(path);
    require(j.is_object() && j.contains("offset") && j.contains("values"),
            ErrorCode::parse,
            path + ": coefficient table needs \"offset\" and \"values\"");
    require(j["offset"].is_number_integer(), ErrorCode::parse,
            path + ":offset: expected an integer");
    const Cvec v = vector_from_json(j["values"], path + ":values");
    std::vector<cxd> values(v.data(), v.data() + v.size());
    return table(std::move(values), j["offset"].get<std::int64_t>());
  }
  fail(ErrorCode::parse, "unknown coefficient spec \"" + spec +
                             "\" (expected zero, sqrt, odd-sqrt, abs-sqrt, "
                             "const:x, linear:a,b or table:path)");
}

CoefficientFn CoefficientFn::table(std::vector<cxd> values, std::int64_t offset) {
  require(!values.empty(), ErrorCode::precondition,
          "coefficient table must not be empty");
  auto shared = std::make_shared<std::vector<cxd>>(std::move(values));
  auto eval = [shared, offset](std::int64_t n) {
    const std::int64_t i = n - offset;
    require(i >= 0 && i < static_cast<std::int64_t>(shared->size()),
            ErrorCode::precondition,
            "coefficient table has no entry for index " + std::to_string(n));
    return (*shared)[static_cast<std::size_t>(i)];
  };
  return CoefficientFn(std::move(eval),
                       "table[" + std::to_string(offset) + ".." +
                           std::to_string(offset + static_cast<std::int64_t>(
                                                       shared->size()) -
                                          1) +
                           "]");
}

namespace {

// Truncated right shift on indices 0..m-1: W e_n = e_{n+1}, top dropped.
Cmat right_shift(int m) {
  Cmat w = Cmat::Zero(m, m);
  for (int n = 0; n + 1 < m; ++n) w(n + 1, n) = 1.0;
  return w;
}

Cmat diagonal_of(const CoefficientFn& fn, int m, std::int64_t base,
                 bool conjugate) {
  Cmat d = Cmat::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const cxd v = fn(base + i);
    d(i, i) = conjugate ? std::conj(v) : v;
  }
  return d;
}

}  // namespace

GeneratorMatrix cayley_shift(int m) {
  require(m >= 3, ErrorCode::dimension, "cayley_shift: need m >= 3");
  const Cmat w = right_shift(m);
  const Cmat id = Cmat::Identity(m, m);
  // I - W is unit lower bidiagonal, hence invertible at every truncation.
  const Cmat l = cxd(0.0, 1.0) * ((id + w) * (id - w).inverse());
  const Cmat l_adj = l.adjoint();
  GeneratorMatrix f(m, 1);
  f.set_block(0, 0, -0.5 * (l_adj * l));
  f.set_block(0, 1, -l_adj);
  f.set_block(1, 0, l);
  return f;
}

GeneratorMatrix iho(int m, const CoefficientFn& lambda,
                    const CoefficientFn& mu) {
  require(m >= 1, ErrorCode::dimension, "iho: need m >= 1");
  GeneratorMatrix f(m, 1);
  Cmat f00 = Cmat::Zero(m, m);
  for (int n = 0; n < m; ++n) {
    const cxd ln1 = lambda(n + 1);
    const cxd mn = mu(n);
    require(mn.imag() == 0.0, ErrorCode::domain,
            "iho: mu(" + std::to_string(n) + ") must be real");
    f00(n, n) = cxd(-0.5 * std::norm(ln1), mn.real());
  }
  Cmat f01 = Cmat::Zero(m, m);  // W* conj(lambda)(N): entry (n-1, n)
  for (int n = 1; n < m; ++n) f01(n - 1, n) = std::conj(lambda(n));
  Cmat f10 = Cmat::Zero(m, m);  // -lambda(N) W: entry (n+1, n)
  for (int n = 0; n + 1 < m; ++n) f10(n + 1, n) = -lambda(n + 1);
  f.set_block(0, 0, f00);
  f.set_block(0, 1, f01);
  f.set_block(1, 0, f10);
  return f;
}

bool growth_check(const CoefficientFn& lambda, double c, std::int64_t n_min,
                  std::int64_t n_max) {
  require(c > 0.0, ErrorCode::domain, "growth_check: c must be positive");
  require(n_min <= n_max, ErrorCode::domain,
          "growth_check: empty index range");
  for (std::int64_t n = n_min; n <= n_max; ++n)
    if (c * std::abs(lambda(n)) > std::abs(lambda(n + 1))) return false;
  return true;
}

GeneratorMatrix birth_death(int m_window, const CoefficientFn& lambda,
                            const CoefficientFn& mu) {
  require(m_window >= 3 && m_window % 2 == 1, ErrorCode::dimension,
          "birth_death: window size must be odd and >= 3");
  const int m = m_window;
  const std::int64_t base = -(m / 2);  // basis index i is site base + i
  const Cmat w = right_shift(m);
  const Cmat w_adj = w.adjoint();
  const Cmat id = Cmat::Identity(m, m);

  Cmat f00 = Cmat::Zero(m, m);
  for (int i = 0; i < m; ++i)
    f00(i, i) = -0.5 * (std::norm(lambda(base + i)) + std::norm(mu(base + i)));

  GeneratorMatrix f(m, 2);
  f.set_block(0, 0, f00);
  f.set_block(0, 1, diagonal_of(lambda, m, base, true) * w_adj);
  f.set_block(0, 2, diagonal_of(mu, m, base, true) * w);
  f.set_block(1, 0, -diagonal_of(lambda, m, base, false));
  f.set_block(2, 0, -diagonal_of(mu, m, base, false));
  f.set_block(1, 1, w_adj - id);
  f.set_block(2, 2, w - id);
  return f;
}

namespace {

Cmat permutation_matrix(const std::vector<std::int64_t>& perm, int dim,
                        const char* what) {
  require(static_cast<int>(perm.size()) == dim, ErrorCode::dimension,
          std::string(what) + ": permutation must have " + std::to_string(dim) +
              " entries");
  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  Cmat v = Cmat::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const std::int64_t target = perm[static_cast<std::size_t>(k)];
    require(target >= 0 && target < dim, ErrorCode::domain,
            std::string(what) + ": entry " + std::to_string(k) +
                " maps outside 0.." + std::to_string(dim - 1));
    require(!seen[static_cast<std::size_t>(target)], ErrorCode::domain,
            std::string(what) + ": not a permutation (duplicate target " +
                std::to_string(target) + ")");
    seen[static_cast<std::size_t>(target)] = true;
    v(static_cast<int>(target), k) = 1.0;
  }
  return v;
}

}  // namespace

GeneratorMatrix shg(int m1, int m2, double omega, double coupling,
                    const std::vector<std::int64_t>* perm1,
                    const std::vector<std::int64_t>* perm2, KSign k_sign) {
  require(m1 >= 3 && m2 >= 3, ErrorCode::dimension,
          "shg: need m1 >= 3 and m2 >= 3");
  const int dim = m1 * m2;

  Cmat ann1 = Cmat::Zero(m1, m1);
  for (int n = 1; n < m1; ++n) ann1(n - 1, n) = std::sqrt(static_cast<double>(n));
  Cmat ann2 = Cmat::Zero(m2, m2);
  for (int n = 1; n < m2; ++n) ann2(n - 1, n) = std::sqrt(static_cast<double>(n));

  const Cmat a1 = kron(ann1, Cmat::Identity(m2, m2));
  const Cmat a2 = kron(Cmat::Identity(m1, m1), ann2);
  const Cmat a1_adj = a1.adjoint();
  const Cmat a2_adj = a2.adjoint();

  const double s = (k_sign == KSign::minus) ? -0.5 : 0.5;
  const Cmat number = a1_adj * a1 + a2_adj * a2;
  const Cmat a1_adj_sq = a1_adj * a1_adj;
  const Cmat a1_sq = a1 * a1;
  const Cmat k = s * number + omega * (a1_adj - a1) +
                 coupling * (a1_adj_sq * a2 - a1_sq * a2_adj);

  GeneratorMatrix f(dim, 2);
  f.set_block(0, 0, k);
  f.set_block(1, 0, a1);
  f.set_block(2, 0, a2);
  if (perm1 == nullptr && perm2 == nullptr) {
    f.set_block(0, 1, -a1_adj);
    f.set_block(0, 2, -a2_adj);
    return f;
  }
  const Cmat id = Cmat::Identity(dim, dim);
  const Cmat v1 =
      perm1 ? permutation_matrix(*perm1, dim, "shg perm1") : Cmat(id);
  const Cmat v2 =
      perm2 ? permutation_matrix(*perm2, dim, "shg perm2") : Cmat(id);
  f.set_block(0, 1, -(a1_adj * v1));
  f.set_block(0, 2, -(a2_adj * v2));
  f.set_block(1, 1, v1 - id);
  f.set_block(2, 2, v2 - id);
  return f;
}

}  // namespace qsc
