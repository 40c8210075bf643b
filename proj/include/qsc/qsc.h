/* Copyright 2026 The qsc developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * C interface to the qsc core: quantum stochastic cocycle generators, their
 * associated semigroups, matrix-element reconstruction, and quantum dynamical
 * semigroup diagnostics on finite truncations.
 *
 * Conventions shared by every function here:
 *   - Every fallible call returns a qsc_status; QSC_OK is 0. On failure a
 *     human-readable message is available from qsc_last_error() until the
 *     next failing call on the same thread.
 *   - Complex data crosses the boundary as interleaved doubles
 *     (re0, im0, re1, im1, ...), column-major for matrices.
 *   - Vector arguments named u/v have h_dim entries; c/d have noise_dim
 *     entries. Lengths are fixed by the generator handle, so only the
 *     pointers are passed.
 *   - Times and tolerances that must be exact (step-function endpoints,
 *     reconstruction horizons) are decimal strings such as "0.25", or
 *     exact fractions such as "1/3" as written by the refinement helpers;
 *     plain doubles are used where rounding is harmless.
 *   - Output handles (qsc_generator**, qsc_matrix**, ...) are written only
 *     on QSC_OK and must be released with the matching _free function.
 *     Strings returned through char** are released with qsc_string_free.
 *   - Geometry strings select the interior mask of a truncated model:
 *     "full", "halfline", "window", or "grid:<m1>x<m2>"; margin is the
 *     distance kept from each truncation edge (ignored for "full").
 */

#ifndef QSC_QSC_H_
#define QSC_QSC_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsc_status {
  QSC_OK = 0,
  QSC_ERR_DIMENSION = 1,    /* shapes or index ranges disagree */
  QSC_ERR_DOMAIN = 2,       /* argument outside its mathematical domain */
  QSC_ERR_PRECONDITION = 3, /* operation premise violated (e.g. deficit > 0) */
  QSC_ERR_PARSE = 4,        /* malformed JSON or decimal string */
  QSC_ERR_IO = 5,           /* file could not be read or written */
  QSC_ERR_NULL = 6,         /* required pointer was NULL */
  QSC_ERR_INTERNAL = 7      /* unexpected failure; see qsc_last_error() */
} qsc_status;

/** Library version as "major.minor.patch". Static storage; do not free. */
const char* qsc_version(void);

/** Message of the most recent failure on this thread. Static storage. */
const char* qsc_last_error(void);

/** Release a string returned through a char** output parameter. */
void qsc_string_free(char* s);

/** Dense complex matrix. */
typedef struct qsc_matrix qsc_matrix;
/** Block matrix F = [F^a_b], a,b in 0..noise_dim, of h_dim square blocks. */
typedef struct qsc_generator qsc_generator;
/** Right-continuous step function with exact rational breakpoints. */
typedef struct qsc_step_function qsc_step_function;

/* ---------------------------------------------------------------- matrices */

/** data holds rows*cols interleaved complex entries, column-major. */
qsc_status qsc_matrix_create(int64_t rows, int64_t cols, const double* data,
                             qsc_matrix** out);
qsc_status qsc_matrix_load(const char* path, qsc_matrix** out);
qsc_status qsc_matrix_save(const qsc_matrix* m, const char* path);
qsc_status qsc_matrix_shape(const qsc_matrix* m, int64_t* rows, int64_t* cols);
/** data must hold rows*cols*2 doubles; filled column-major interleaved. */
qsc_status qsc_matrix_copy_out(const qsc_matrix* m, double* data);
void qsc_matrix_free(qsc_matrix* m);

/* -------------------------------------------------------------- generators */

qsc_status qsc_generator_create(int32_t h_dim, int32_t noise_dim,
                                qsc_generator** out);
qsc_status qsc_generator_load(const char* path, qsc_generator** out);
qsc_status qsc_generator_save(const qsc_generator* g, const char* path);
qsc_status qsc_generator_dims(const qsc_generator* g, int32_t* h_dim,
                              int32_t* noise_dim);
qsc_status qsc_generator_get_block(const qsc_generator* g, int32_t a, int32_t b,
                                   qsc_matrix** out);
qsc_status qsc_generator_set_block(qsc_generator* g, int32_t a, int32_t b,
                                   const qsc_matrix* value);
void qsc_generator_free(qsc_generator* g);

/* ---------------------------------------------- form inequality diagnostics */

/** D(F) = F + F* + F* Delta F as a full (noise_dim+1)*h_dim square matrix. */
qsc_status qsc_deficit_operator(const qsc_generator* g, qsc_matrix** out);

/** Largest eigenvalue of D(F) compressed to the named interior; <= 0 means
 * the contraction form inequality holds there. */
qsc_status qsc_max_form_deficit(const qsc_generator* g, const char* geometry,
                                int32_t margin, double* out);

/** Operator norm of the compressed D(F): distance from the isometric case. */
qsc_status qsc_isometry_defect(const qsc_generator* g, const char* geometry,
                               int32_t margin, double* out);

/** Associated-semigroup generator at a basis point: G^{a b} per the affine
 * dictionary between F blocks and semigroup generators. */
qsc_status qsc_semigroup_block(const qsc_generator* g, int32_t a, int32_t b,
                               qsc_matrix** out);

/** Time-reversal dual: block (a, b) of the result is F^b_a adjoint. */
qsc_status qsc_journe_dual(const qsc_generator* g, qsc_generator** out);

/** Bounded regularization F_n = C_n F C_n blockwise, C_n = n(n - S)^{-1}
 * with S the Hermitian part of F^0_0. Requires max_form_deficit <= tol. */
qsc_status qsc_regularize(const qsc_generator* g, int64_t n, double tol,
                          qsc_generator** out);

/** Full diagnostics report as a JSON object (release with qsc_string_free):
 * deficits, blockwise dissipativity, exchange-block contraction, and
 * relative-boundedness scans seeded by `seed`. */
qsc_status qsc_diagnostics_json(const qsc_generator* g, double tol,
                                uint64_t seed, const char* geometry,
                                int32_t margin, char** out_json);

/* ------------------------------------------------------------------ models */

qsc_status qsc_model_cayley_shift(int32_t dim, qsc_generator** out);

/** Coefficient specs: "zero", "sqrt", "odd-sqrt", "abs-sqrt", "const:<x>",
 * "linear:<a>,<b>", "table:<path>". */
qsc_status qsc_model_iho(int32_t dim, const char* lambda_spec,
                         const char* mu_spec, qsc_generator** out);
qsc_status qsc_model_birth_death(int32_t dim, const char* lambda_spec,
                                 const char* mu_spec, qsc_generator** out);

/** perm1/perm2 are permutations of the product basis 0..dim1*dim2-1 (NULL
 * for none); k_sign is "minus" (default when NULL) or "plus". */
qsc_status qsc_model_shg(int32_t dim1, int32_t dim2, double omega,
                         double coupling, const int64_t* perm1,
                         const int64_t* perm2, const char* k_sign,
                         qsc_generator** out);

/** out_bounded = 1 when c * |lambda(n)| <= |lambda(n+1)| holds for every n
 * in [n_min, n_max] (exact comparisons). Coefficient sequences with interior
 * zeros fail for every c > 0. */
qsc_status qsc_growth_check(const char* lambda_spec, double c, int64_t n_min,
                            int64_t n_max, int32_t* out_bounded);

/** Load a JSON array of target indices; release with qsc_index_array_free. */
qsc_status qsc_permutation_load(const char* path, int64_t** out,
                                int64_t* out_len);
void qsc_index_array_free(int64_t* a);

/* ----------------------------------------------------------------- vectors */

/** Load a {"entries": [[re, im], ...]} vector file into a freshly allocated
 * interleaved buffer of out_len complex entries; release with
 * qsc_vector_free. */
qsc_status qsc_vector_load(const char* path, double** out, int64_t* out_len);
void qsc_vector_free(double* v);

/* -------------------------------------------------------- step functions */

qsc_status qsc_step_function_load(const char* path, qsc_step_function** out);
qsc_status qsc_step_function_save(const qsc_step_function* f, const char* path);
/** support_end (if non-NULL) receives the decimal endpoint string. */
qsc_status qsc_step_function_info(const qsc_step_function* f,
                                  int32_t* noise_dim, int64_t* segment_count,
                                  char** support_end);
/** Split every segment into `splits` equal parts (exact arithmetic). */
qsc_status qsc_step_function_refined(const qsc_step_function* f, int64_t splits,
                                     qsc_step_function** out);
void qsc_step_function_free(qsc_step_function* f);

/* -------------------------------------------------------------- semigroups */

/** G^{c,d} = sum conj(chat_a) dhat_b F^a_b + (<c,d> - |c|^2/2 - |d|^2/2) I. */
qsc_status qsc_generator_cd(const qsc_generator* g, const double* c,
                            const double* d, qsc_matrix** out);

/** exp(t G^{c,d}); t >= 0. */
qsc_status qsc_evolve_cd(const qsc_generator* g, const double* c,
                         const double* d, double t, qsc_matrix** out);

/** Seeded random trials of the Schur-product admissibility transfer check.
 * A trial violating the bound by more than tol counts in out_violations;
 * out_max_excess is the worst overshoot of 1, out_min_margin the smallest
 * 1 - norm seen. */
qsc_status qsc_schur_sweep(const qsc_generator* g, int32_t trials,
                           int32_t n_max, double t_max, double tol,
                           uint64_t seed, int32_t* out_trials,
                           int32_t* out_violations, double* out_max_excess,
                           double* out_min_margin);

/** Regularization convergence table as CSV "n,t,error" (path "-" for
 * stdout): error(n, t) = max over the standard basis probes of
 * |(exp(t G_n) - exp(t G)) e_k| with G_n built from the n-regularized
 * generator. schedule must be strictly increasing. */
qsc_status qsc_trotter_csv(const qsc_generator* g, const int64_t* schedule,
                           int64_t n_schedule, const double* c, const double* d,
                           const double* tgrid, int64_t n_t, const char* path);

/* ---------------------------------------------------------------- cocycles */

/** <e(f 1_[0,t)), e(g 1_[0,t))> = exp of the cross integral over [0, t). */
qsc_status qsc_exp_overlap(const qsc_step_function* f,
                           const qsc_step_function* g, const char* t,
                           double* out_re, double* out_im);

/** Matrix element <u e(f), V_t v e(g)> by the semigroup product formula;
 * normalized != 0 uses unit-norm exponential vectors. t is a decimal
 * string. */
qsc_status qsc_reconstruct(const qsc_generator* g, const double* u,
                           const double* v, const qsc_step_function* f,
                           const qsc_step_function* sg, const char* t,
                           int32_t normalized, double* out_re, double* out_im);

/** Reconstruct on the query as given and with both step functions refined;
 * the results agree to rounding, exactly so for splits = 1. */
qsc_status qsc_refine_check(const qsc_generator* g, const double* u,
                            const double* v, const qsc_step_function* f,
                            const qsc_step_function* sg, const char* t,
                            int32_t normalized, int64_t splits,
                            double* out_base_re, double* out_base_im,
                            double* out_refined_re, double* out_refined_im,
                            double* out_abs_diff);

/** Max defect of the weak-form integral equation on a grid of about nt
 * steps (>= 16); decays like 1/nt^2 for the reconstructed process. */
qsc_status qsc_qsde_residual(const qsc_generator* g, const double* u,
                             const double* v, const qsc_step_function* f,
                             const qsc_step_function* sg, const char* t,
                             int32_t nt, double* out);

/* --------------------------------------------- quantum dynamical semigroups */

/** L(X) = X F00 + F00* X + sum_i (F^i_0)* X F^i_0. */
qsc_status qsc_lindblad_apply(const qsc_generator* g, const qsc_matrix* x,
                              qsc_matrix** out);

/** e^{tL}(X) through the column-stacking superoperator; t >= 0. */
qsc_status qsc_qds_evolve(const qsc_generator* g, const qsc_matrix* x, double t,
                          qsc_matrix** out);

/** |e^{tL}(I) - I| plus the most negative diagonal entry and its index. */
qsc_status qsc_conservativity_defect(const qsc_generator* g, double t,
                                     double* out_defect,
                                     int32_t* out_min_diag_index,
                                     double* out_min_diag);

/** Smallest Choi eigenvalue of e^{tL}; >= -eps certifies complete
 * positivity to rounding. h_dim <= 64. */
qsc_status qsc_choi_min_eig(const qsc_generator* g, double t, double* out);

/** CSV "t,defect,min_diag_defect_index,min_choi_eig" over tgrid (path "-"
 * for stdout); the header row is always written. h_dim <= 64. */
qsc_status qsc_qds_csv(const qsc_generator* g, const double* tgrid, int64_t n_t,
                       const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSC_QSC_H_ */
