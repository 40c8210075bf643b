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

#include "qsc/qsc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/cocycle.hpp"
#include "core/error.hpp"
#include "core/generator.hpp"
#include "core/interior.hpp"
#include "core/io.hpp"
#include "core/models.hpp"
#include "core/qds.hpp"
#include "core/semigroup.hpp"
#include "core/stepfn.hpp"
#include "core/types.hpp"

struct qsc_matrix {
  qsc::Cmat impl;
};

struct qsc_generator {
  qsc::GeneratorMatrix impl;
};

struct qsc_step_function {
  qsc::StepFunction impl;
};

namespace {

thread_local std::string g_last_error;

struct NullArg {
  std::string message;
};

void need(const void* p, const char* name) {
  if (p == nullptr) throw NullArg{std::string(name) + " must not be null"};
}

qsc_status status_of(qsc::ErrorCode code) {
  switch (code) {
    case qsc::ErrorCode::dimension:
      return QSC_ERR_DIMENSION;
    case qsc::ErrorCode::domain:
      return QSC_ERR_DOMAIN;
    case qsc::ErrorCode::precondition:
      return QSC_ERR_PRECONDITION;
    case qsc::ErrorCode::parse:
      return QSC_ERR_PARSE;
    case qsc::ErrorCode::io:
      return QSC_ERR_IO;
  }
  return QSC_ERR_INTERNAL;
}

qsc::Cvec vec_in(const double* data, int n) {
  qsc::Cvec v(n);
  for (int i = 0; i < n; ++i) v(i) = qsc::cxd(data[2 * i], data[2 * i + 1]);
  return v;
}

qsc::InteriorMask mask_of(const qsc_generator* g, const char* geometry,
                          int32_t margin) {
  const std::string kind = (geometry == nullptr) ? "full" : geometry;
  const int dim = g->impl.h_dim();
  if (kind.rfind("grid:", 0) == 0) {
    const std::string dims = kind.substr(5);
    const std::size_t x = dims.find('x');
    qsc::require(x != std::string::npos && x > 0 && x + 1 < dims.size(),
                 qsc::ErrorCode::parse,
                 "geometry: expected \"grid:<m1>x<m2>\", got \"" + kind + "\"");
    int d1 = 0;
    int d2 = 0;
    try {
      d1 = std::stoi(dims.substr(0, x));
      d2 = std::stoi(dims.substr(x + 1));
    } catch (const std::exception&) {
      qsc::fail(qsc::ErrorCode::parse,
                "geometry: expected \"grid:<m1>x<m2>\", got \"" + kind + "\"");
    }
    return qsc::InteriorMask::named("grid", dim, margin, d1, d2);
  }
  return qsc::InteriorMask::named(kind, dim, margin);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

#define QSC_TRY try {
#define QSC_CATCH                              \
  }                                            \
  catch (const NullArg& e) {                   \
    g_last_error = e.message;                  \
    return QSC_ERR_NULL;                       \
  }                                            \
  catch (const qsc::Error& e) {                \
    g_last_error = e.what();                   \
    return status_of(e.code());                \
  }                                            \
  catch (const std::exception& e) {            \
    g_last_error = e.what();                   \
    return QSC_ERR_INTERNAL;                   \
  }                                            \
  catch (...) {                                \
    g_last_error = "unexpected failure";       \
    return QSC_ERR_INTERNAL;                   \
  }                                            \
  return QSC_OK;

extern "C" {

const char* qsc_version(void) { return "0.1.0"; }

const char* qsc_last_error(void) { return g_last_error.c_str(); }

void qsc_string_free(char* s) { std::free(s); }

/* ---------------------------------------------------------------- matrices */

qsc_status qsc_matrix_create(int64_t rows, int64_t cols, const double* data,
                             qsc_matrix** out) {
  QSC_TRY
  need(out, "out");
  qsc::require(rows >= 0 && cols >= 0, qsc::ErrorCode::dimension,
               "qsc_matrix_create: negative shape");
  if (rows * cols > 0) need(data, "data");
  qsc::Cmat m(rows, cols);
  for (int64_t j = 0; j < cols; ++j)
    for (int64_t i = 0; i < rows; ++i) {
      const int64_t k = 2 * (j * rows + i);
      m(i, j) = qsc::cxd(data[k], data[k + 1]);
    }
  *out = new qsc_matrix{std::move(m)};
  QSC_CATCH
}

qsc_status qsc_matrix_load(const char* path, qsc_matrix** out) {
  QSC_TRY
  need(path, "path");
  need(out, "out");
  *out = new qsc_matrix{
      qsc::matrix_from_json(qsc::load_json_file(path), path)};
  QSC_CATCH
}

qsc_status qsc_matrix_save(const qsc_matrix* m, const char* path) {
  QSC_TRY
  need(m, "m");
  need(path, "path");
  qsc::save_json_file(qsc::matrix_to_json(m->impl), path);
  QSC_CATCH
}

qsc_status qsc_matrix_shape(const qsc_matrix* m, int64_t* rows, int64_t* cols) {
  QSC_TRY
  need(m, "m");
  need(rows, "rows");
  need(cols, "cols");
  *rows = m->impl.rows();
  *cols = m->impl.cols();
  QSC_CATCH
}

qsc_status qsc_matrix_copy_out(const qsc_matrix* m, double* data) {
  QSC_TRY
  need(m, "m");
  if (m->impl.size() > 0) need(data, "data");
  const auto rows = m->impl.rows();
  for (Eigen::Index j = 0; j < m->impl.cols(); ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const Eigen::Index k = 2 * (j * rows + i);
      data[k] = m->impl(i, j).real();
      data[k + 1] = m->impl(i, j).imag();
    }
  QSC_CATCH
}

void qsc_matrix_free(qsc_matrix* m) { delete m; }

/* -------------------------------------------------------------- generators */

qsc_status qsc_generator_create(int32_t h_dim, int32_t noise_dim,
                                qsc_generator** out) {
  QSC_TRY
  need(out, "out");
  *out = new qsc_generator{qsc::GeneratorMatrix(h_dim, noise_dim)};
  QSC_CATCH
}

qsc_status qsc_generator_load(const char* path, qsc_generator** out) {
  QSC_TRY
  need(path, "path");
  need(out, "out");
  *out = new qsc_generator{qsc::load_generator_file(path)};
  QSC_CATCH
}

qsc_status qsc_generator_save(const qsc_generator* g, const char* path) {
  QSC_TRY
  need(g, "g");
  need(path, "path");
  qsc::save_generator_file(g->impl, path);
  QSC_CATCH
}

qsc_status qsc_generator_dims(const qsc_generator* g, int32_t* h_dim,
                              int32_t* noise_dim) {
  QSC_TRY
  need(g, "g");
  need(h_dim, "h_dim");
  need(noise_dim, "noise_dim");
  *h_dim = g->impl.h_dim();
  *noise_dim = g->impl.noise_dim();
  QSC_CATCH
}

qsc_status qsc_generator_get_block(const qsc_generator* g, int32_t a, int32_t b,
                                   qsc_matrix** out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  *out = new qsc_matrix{g->impl.block(a, b)};
  QSC_CATCH
}

qsc_status qsc_generator_set_block(qsc_generator* g, int32_t a, int32_t b,
                                   const qsc_matrix* value) {
  QSC_TRY
  need(g, "g");
  need(value, "value");
  g->impl.set_block(a, b, value->impl);
  QSC_CATCH
}

void qsc_generator_free(qsc_generator* g) { delete g; }

/* ---------------------------------------------- form inequality diagnostics */

qsc_status qsc_deficit_operator(const qsc_generator* g, qsc_matrix** out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  *out = new qsc_matrix{qsc::deficit_operator(g->impl)};
  QSC_CATCH
}

qsc_status qsc_max_form_deficit(const qsc_generator* g, const char* geometry,
                                int32_t margin, double* out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  *out = qsc::interior_max_form_deficit(g->impl, mask_of(g, geometry, margin));
  QSC_CATCH
}

qsc_status qsc_isometry_defect(const qsc_generator* g, const char* geometry,
                               int32_t margin, double* out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  *out = qsc::interior_isometry_defect(g->impl, mask_of(g, geometry, margin));
  QSC_CATCH
}

qsc_status qsc_semigroup_block(const qsc_generator* g, int32_t a, int32_t b,
                               qsc_matrix** out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  *out = new qsc_matrix{qsc::g_from_f(g->impl, a, b)};
  QSC_CATCH
}

qsc_status qsc_journe_dual(const qsc_generator* g, qsc_generator** out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  *out = new qsc_generator{qsc::journe_dual(g->impl)};
  QSC_CATCH
}

qsc_status qsc_regularize(const qsc_generator* g, int64_t n, double tol,
                          qsc_generator** out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  *out = new qsc_generator{qsc::regularize(g->impl, n, tol)};
  QSC_CATCH
}

qsc_status qsc_diagnostics_json(const qsc_generator* g, double tol,
                                uint64_t seed, const char* geometry,
                                int32_t margin, char** out_json) {
  QSC_TRY
  need(g, "g");
  need(out_json, "out_json");
  const qsc::InteriorMask mask = mask_of(g, geometry, margin);
  const std::string kind = (geometry == nullptr) ? "full" : geometry;
  const qsc::DiagnosticsReport report =
      qsc::diagnostics(g->impl, tol, seed, &mask, kind);
  *out_json = dup_string(report.to_json().dump(2));
  QSC_CATCH
}

/* ------------------------------------------------------------------ models */

qsc_status qsc_model_cayley_shift(int32_t dim, qsc_generator** out) {
  QSC_TRY
  need(out, "out");
  *out = new qsc_generator{qsc::cayley_shift(dim)};
  QSC_CATCH
}

qsc_status qsc_model_iho(int32_t dim, const char* lambda_spec,
                         const char* mu_spec, qsc_generator** out) {
  QSC_TRY
  need(lambda_spec, "lambda_spec");
  need(mu_spec, "mu_spec");
  need(out, "out");
  *out = new qsc_generator{qsc::iho(dim, qsc::CoefficientFn::parse(lambda_spec),
                                    qsc::CoefficientFn::parse(mu_spec))};
  QSC_CATCH
}

qsc_status qsc_model_birth_death(int32_t dim, const char* lambda_spec,
                                 const char* mu_spec, qsc_generator** out) {
  QSC_TRY
  need(lambda_spec, "lambda_spec");
  need(mu_spec, "mu_spec");
  need(out, "out");
  *out = new qsc_generator{
      qsc::birth_death(dim, qsc::CoefficientFn::parse(lambda_spec),
                       qsc::CoefficientFn::parse(mu_spec))};
  QSC_CATCH
}

qsc_status qsc_model_shg(int32_t dim1, int32_t dim2, double omega,
                         double coupling, const int64_t* perm1,
                         const int64_t* perm2, const char* k_sign,
                         qsc_generator** out) {
  QSC_TRY
  need(out, "out");
  const std::string sign = (k_sign == nullptr) ? "minus" : k_sign;
  qsc::KSign ks = qsc::KSign::minus;
  if (sign == "plus") {
    ks = qsc::KSign::plus;
  } else {
    qsc::require(sign == "minus", qsc::ErrorCode::domain,
                 "qsc_model_shg: k_sign must be \"minus\" or \"plus\"");
  }
  const std::int64_t dim = static_cast<std::int64_t>(dim1) * dim2;
  std::vector<std::int64_t> p1, p2;
  const std::vector<std::int64_t>* p1_ptr = nullptr;
  const std::vector<std::int64_t>* p2_ptr = nullptr;
  if (perm1 != nullptr && dim > 0) {
    p1.assign(perm1, perm1 + dim);
    p1_ptr = &p1;
  }
  if (perm2 != nullptr && dim > 0) {
    p2.assign(perm2, perm2 + dim);
    p2_ptr = &p2;
  }
  *out = new qsc_generator{
      qsc::shg(dim1, dim2, omega, coupling, p1_ptr, p2_ptr, ks)};
  QSC_CATCH
}

qsc_status qsc_growth_check(const char* lambda_spec, double c, int64_t n_min,
                            int64_t n_max, int32_t* out_bounded) {
  QSC_TRY
  need(lambda_spec, "lambda_spec");
  need(out_bounded, "out_bounded");
  *out_bounded = qsc::growth_check(qsc::CoefficientFn::parse(lambda_spec), c,
                                   n_min, n_max)
                     ? 1
                     : 0;
  QSC_CATCH
}

qsc_status qsc_permutation_load(const char* path, int64_t** out,
                                int64_t* out_len) {
  QSC_TRY
  need(path, "path");
  need(out, "out");
  need(out_len, "out_len");
  const std::vector<std::int64_t> perm = qsc::load_permutation_file(path);
  auto* data = static_cast<int64_t*>(
      std::malloc(sizeof(int64_t) * (perm.empty() ? 1 : perm.size())));
  if (data == nullptr) throw std::bad_alloc();
  std::memcpy(data, perm.data(), sizeof(int64_t) * perm.size());
  *out = data;
  *out_len = static_cast<int64_t>(perm.size());
  QSC_CATCH
}

void qsc_index_array_free(int64_t* a) { std::free(a); }

/* ----------------------------------------------------------------- vectors */

qsc_status qsc_vector_load(const char* path, double** out, int64_t* out_len) {
  QSC_TRY
  need(path, "path");
  need(out, "out");
  need(out_len, "out_len");
  const qsc::Cvec v = qsc::load_vector_file(path);
  const std::size_t n = static_cast<std::size_t>(v.size());
  auto* data = static_cast<double*>(
      std::malloc(sizeof(double) * (n == 0 ? 1 : 2 * n)));
  if (data == nullptr) throw std::bad_alloc();
  for (std::size_t i = 0; i < n; ++i) {
    data[2 * i] = v(static_cast<Eigen::Index>(i)).real();
    data[2 * i + 1] = v(static_cast<Eigen::Index>(i)).imag();
  }
  *out = data;
  *out_len = static_cast<int64_t>(n);
  QSC_CATCH
}

void qsc_vector_free(double* v) { std::free(v); }

/* ---------------------------------------------------------- step functions */

qsc_status qsc_step_function_load(const char* path, qsc_step_function** out) {
  QSC_TRY
  need(path, "path");
  need(out, "out");
  *out = new qsc_step_function{qsc::StepFunction::load(path)};
  QSC_CATCH
}

qsc_status qsc_step_function_save(const qsc_step_function* f,
                                  const char* path) {
  QSC_TRY
  need(f, "f");
  need(path, "path");
  f->impl.save(path);
  QSC_CATCH
}

qsc_status qsc_step_function_info(const qsc_step_function* f,
                                  int32_t* noise_dim, int64_t* segment_count,
                                  char** support_end) {
  QSC_TRY
  need(f, "f");
  if (noise_dim != nullptr) *noise_dim = f->impl.noise_dim();
  if (segment_count != nullptr)
    *segment_count = static_cast<int64_t>(f->impl.segments().size());
  if (support_end != nullptr)
    *support_end = dup_string(f->impl.support_end().str());
  QSC_CATCH
}

qsc_status qsc_step_function_refined(const qsc_step_function* f, int64_t splits,
                                     qsc_step_function** out) {
  QSC_TRY
  need(f, "f");
  need(out, "out");
  *out = new qsc_step_function{f->impl.refined(splits)};
  QSC_CATCH
}

void qsc_step_function_free(qsc_step_function* f) { delete f; }

/* -------------------------------------------------------------- semigroups */

qsc_status qsc_generator_cd(const qsc_generator* g, const double* c,
                            const double* d, qsc_matrix** out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  const int dn = g->impl.noise_dim();
  if (dn > 0) {
    need(c, "c");
    need(d, "d");
  }
  *out = new qsc_matrix{
      qsc::generator_cd(g->impl, vec_in(c, dn), vec_in(d, dn))};
  QSC_CATCH
}

qsc_status qsc_evolve_cd(const qsc_generator* g, const double* c,
                         const double* d, double t, qsc_matrix** out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  const int dn = g->impl.noise_dim();
  if (dn > 0) {
    need(c, "c");
    need(d, "d");
  }
  *out = new qsc_matrix{qsc::evolve(
      qsc::generator_cd(g->impl, vec_in(c, dn), vec_in(d, dn)), t)};
  QSC_CATCH
}

qsc_status qsc_schur_sweep(const qsc_generator* g, int32_t trials,
                           int32_t n_max, double t_max, double tol,
                           uint64_t seed, int32_t* out_trials,
                           int32_t* out_violations, double* out_max_excess,
                           double* out_min_margin) {
  QSC_TRY
  need(g, "g");
  const qsc::SemigroupFamily fam(g->impl);
  const qsc::SchurSweepResult r =
      qsc::schur_sweep(fam, trials, n_max, t_max, tol, seed);
  if (out_trials != nullptr) *out_trials = r.trials;
  if (out_violations != nullptr) *out_violations = r.violations;
  if (out_max_excess != nullptr) *out_max_excess = r.max_excess;
  if (out_min_margin != nullptr) *out_min_margin = r.min_margin;
  QSC_CATCH
}

qsc_status qsc_trotter_csv(const qsc_generator* g, const int64_t* schedule,
                           int64_t n_schedule, const double* c, const double* d,
                           const double* tgrid, int64_t n_t, const char* path) {
  QSC_TRY
  need(g, "g");
  need(schedule, "schedule");
  need(tgrid, "tgrid");
  need(path, "path");
  const int dn = g->impl.noise_dim();
  if (dn > 0) {
    need(c, "c");
    need(d, "d");
  }
  const int m = g->impl.h_dim();
  std::vector<qsc::Cvec> probes;
  probes.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    qsc::Cvec e = qsc::Cvec::Zero(m);
    e(k) = 1.0;
    probes.push_back(std::move(e));
  }
  const qsc::TrotterStudy study = qsc::trotter_study(
      g->impl, std::vector<std::int64_t>(schedule, schedule + n_schedule),
      vec_in(c, dn), vec_in(d, dn), std::vector<double>(tgrid, tgrid + n_t),
      probes);
  std::ofstream storage;
  study.to_csv(qsc::open_output(path, storage));
  QSC_CATCH
}

/* ---------------------------------------------------------------- cocycles */

qsc_status qsc_exp_overlap(const qsc_step_function* f,
                           const qsc_step_function* g, const char* t,
                           double* out_re, double* out_im) {
  QSC_TRY
  need(f, "f");
  need(g, "g");
  need(t, "t");
  need(out_re, "out_re");
  need(out_im, "out_im");
  const qsc::cxd z =
      qsc::exp_overlap(f->impl, g->impl, qsc::Rat::parse(t));
  *out_re = z.real();
  *out_im = z.imag();
  QSC_CATCH
}

qsc_status qsc_reconstruct(const qsc_generator* g, const double* u,
                           const double* v, const qsc_step_function* f,
                           const qsc_step_function* sg, const char* t,
                           int32_t normalized, double* out_re, double* out_im) {
  QSC_TRY
  need(g, "g");
  need(u, "u");
  need(v, "v");
  need(f, "f");
  need(sg, "sg");
  need(t, "t");
  need(out_re, "out_re");
  need(out_im, "out_im");
  const int m = g->impl.h_dim();
  const qsc::MatrixElementQuery q{vec_in(u, m),       vec_in(v, m),
                                  f->impl,            sg->impl,
                                  qsc::Rat::parse(t), normalized != 0};
  const qsc::cxd z = qsc::reconstruct(g->impl, q);
  *out_re = z.real();
  *out_im = z.imag();
  QSC_CATCH
}

qsc_status qsc_refine_check(const qsc_generator* g, const double* u,
                            const double* v, const qsc_step_function* f,
                            const qsc_step_function* sg, const char* t,
                            int32_t normalized, int64_t splits,
                            double* out_base_re, double* out_base_im,
                            double* out_refined_re, double* out_refined_im,
                            double* out_abs_diff) {
  QSC_TRY
  need(g, "g");
  need(u, "u");
  need(v, "v");
  need(f, "f");
  need(sg, "sg");
  need(t, "t");
  const int m = g->impl.h_dim();
  const qsc::MatrixElementQuery q{vec_in(u, m),       vec_in(v, m),
                                  f->impl,            sg->impl,
                                  qsc::Rat::parse(t), normalized != 0};
  qsc::require(splits >= 1 && splits <= INT32_MAX, qsc::ErrorCode::domain,
               "qsc_refine_check: splits out of range");
  const qsc::RefineCheck r =
      qsc::refine_check(g->impl, q, static_cast<int>(splits));
  if (out_base_re != nullptr) *out_base_re = r.base.real();
  if (out_base_im != nullptr) *out_base_im = r.base.imag();
  if (out_refined_re != nullptr) *out_refined_re = r.refined.real();
  if (out_refined_im != nullptr) *out_refined_im = r.refined.imag();
  if (out_abs_diff != nullptr) *out_abs_diff = r.abs_diff;
  QSC_CATCH
}

qsc_status qsc_qsde_residual(const qsc_generator* g, const double* u,
                             const double* v, const qsc_step_function* f,
                             const qsc_step_function* sg, const char* t,
                             int32_t nt, double* out) {
  QSC_TRY
  need(g, "g");
  need(u, "u");
  need(v, "v");
  need(f, "f");
  need(sg, "sg");
  need(t, "t");
  need(out, "out");
  const int m = g->impl.h_dim();
  const qsc::MatrixElementQuery q{vec_in(u, m),       vec_in(v, m),
                                  f->impl,            sg->impl,
                                  qsc::Rat::parse(t), false};
  *out = qsc::qsde_residual(g->impl, q, nt);
  QSC_CATCH
}

/* --------------------------------------------- quantum dynamical semigroups */

qsc_status qsc_lindblad_apply(const qsc_generator* g, const qsc_matrix* x,
                              qsc_matrix** out) {
  QSC_TRY
  need(g, "g");
  need(x, "x");
  need(out, "out");
  *out = new qsc_matrix{qsc::lindblad_apply(g->impl, x->impl)};
  QSC_CATCH
}

qsc_status qsc_qds_evolve(const qsc_generator* g, const qsc_matrix* x, double t,
                          qsc_matrix** out) {
  QSC_TRY
  need(g, "g");
  need(x, "x");
  need(out, "out");
  *out = new qsc_matrix{qsc::qds_evolve(g->impl, x->impl, t)};
  QSC_CATCH
}

qsc_status qsc_conservativity_defect(const qsc_generator* g, double t,
                                     double* out_defect,
                                     int32_t* out_min_diag_index,
                                     double* out_min_diag) {
  QSC_TRY
  need(g, "g");
  need(out_defect, "out_defect");
  const qsc::ConservativityResult r = qsc::conservativity_defect(g->impl, t);
  *out_defect = r.defect;
  if (out_min_diag_index != nullptr) *out_min_diag_index = r.min_diag_index;
  if (out_min_diag != nullptr) *out_min_diag = r.min_diag;
  QSC_CATCH
}

qsc_status qsc_choi_min_eig(const qsc_generator* g, double t, double* out) {
  QSC_TRY
  need(g, "g");
  need(out, "out");
  *out = qsc::choi_min_eig(g->impl, t);
  QSC_CATCH
}

qsc_status qsc_qds_csv(const qsc_generator* g, const double* tgrid, int64_t n_t,
                       const char* path) {
  QSC_TRY
  need(g, "g");
  need(path, "path");
  if (n_t > 0) need(tgrid, "tgrid");
  std::vector<double> times;
  if (n_t > 0) times.assign(tgrid, tgrid + n_t);
  std::ofstream storage;
  qsc::qds_csv(g->impl, times, qsc::open_output(path, storage));
  QSC_CATCH
}

} /* extern "C" */
