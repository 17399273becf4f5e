/* Copyright 2026 The gframe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef GFRAME_C_H
#define GFRAME_C_H

/* C interface to the gframe library.
 *
 * Objects are opaque handles released with the matching *_release function.
 * Every function returns a gf_status; on failure a description is available
 * from gf_last_error_message() on the calling thread.
 *
 * Complex numbers are passed as interleaved (re, im) doubles. Matrices are
 * row-major: entry (r, c) of a rows x cols matrix lives at 2 * (r * cols + c).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GF_BUILDING_LIBRARY)
#    define GF_API __declspec(dllexport)
#  else
#    define GF_API __declspec(dllimport)
#  endif
#else
#  define GF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf_status {
  GF_OK = 0,
  GF_ERR_INVALID_ARGUMENT = 1,
  GF_ERR_SHAPE_MISMATCH = 2,
  GF_ERR_NON_FINITE = 3,
  GF_ERR_NOT_HERMITIAN = 4,
  GF_ERR_NOT_POSITIVE_DEFINITE = 5,
  GF_ERR_NOT_A_FRAME = 6,
  GF_ERR_DIMENSION_MISMATCH = 7,
  GF_ERR_NOT_UNITARY = 8,
  GF_ERR_SINGULAR = 9,
  GF_ERR_NOT_ON_BASIS = 10,
  GF_ERR_NOT_RIESZ_BASIS = 11,
  GF_ERR_IS_RIESZ_BASIS = 12,
  GF_ERR_ZERO_PROBE = 13,
  GF_ERR_NOT_A_DUAL = 14,
  GF_ERR_DEGENERATE_THETA = 15,
  GF_ERR_PREMISE_NOT_VERIFIABLE = 16,
  GF_ERR_TRUNCATION_TOO_SEVERE = 17,
  GF_ERR_INSUFFICIENT_NODES = 18,
  GF_ERR_NON_UNIFORM_BLOCKS = 19,
  GF_ERR_PARSE = 20,
  GF_ERR_SCHEMA = 21,
  GF_ERR_INTERNAL = 99
} gf_status;

typedef struct gf_frame gf_frame;
typedef struct gf_fock gf_fock;

/* Tolerance set; pass NULL anywhere to use the defaults below. */
typedef struct gf_tolerances {
  double eq;   /* 1e-10 */
  double pd;   /* 1e-12 */
  double herm; /* 1e-12 */
  double rank; /* 1e-10 */
  double eig;  /* 1e-10 */
} gf_tolerances;

typedef struct gf_bounds {
  double lower;
  double upper;
  int is_frame;
  int is_tight;
  int is_parseval;
} gf_bounds;

typedef struct gf_classification {
  int is_bessel;
  int is_frame;
  int is_complete;
  int is_orthonormal_set;
  int is_on_basis;
  int is_riesz_basis;
} gf_classification;

typedef struct gf_perturbation_report {
  double m_lambda;
  double m_theta;
  double m_opt;
  double lower_lambda;
  double upper_lambda;
  double guaranteed_lower;
  double guaranteed_upper;
  double actual_lower;
  double actual_upper;
} gf_perturbation_report;

typedef struct gf_one_sided_report {
  double m3;
  double lower_bound;
  double actual_lower;
  int theta_is_frame;
} gf_one_sided_report;

typedef struct gf_gavruta_report {
  double b1;
  double b2;
  double v_norm;
  int v_norm_ok;
  double premise_sup;
  double spectral_defect;
  int vacuous_m;
  double guaranteed_lower_theta;
  double actual_lower_theta;
  int theta_bound_ok;
  int has_lambda_bound;
  double guaranteed_lower_lambda;
  double actual_lower_lambda;
  int lambda_bound_ok;
} gf_gavruta_report;

typedef struct gf_bicoherent_report {
  double condition;
  double truncation_defect;
  double overlap_error;
  double collapse_error;
  double dual_basis_error;
  double polar_identity_error;
  double a_lambda_vs_up;
  double a_dual_vs_up;
  double b_lambda_vs_up;
  double b_dual_vs_up;
  double lowering_error;
  double eigen_residual_lambda;
  double eigen_residual_dual;
  double eigen_residual_up;
  double eigen_residual_bound;
  double biquad_lambda_dual;
  double biquad_dual_lambda;
  double biquad_lambda_up;
  double biquad_up_lambda;
} gf_bicoherent_report;

/* ---- library ---------------------------------------------------------- */

GF_API const char* gf_version(void);
GF_API const char* gf_status_name(gf_status status);
GF_API const char* gf_last_error_message(void);
GF_API gf_tolerances gf_default_tolerances(void);
GF_API void gf_string_free(char* s);

/* ---- frames ------------------------------------------------------------ */

/* `data` holds the blocks one after another, each rows[j] x hilbert_dim. */
GF_API gf_status gf_frame_create(int64_t hilbert_dim, size_t num_blocks, const int64_t* rows,
                                 const double* data, gf_frame** out);
GF_API gf_status gf_frame_from_json(const char* text, gf_frame** out);
GF_API gf_status gf_frame_to_json(const gf_frame* frame, char** out);
GF_API gf_status gf_frame_clone(const gf_frame* frame, gf_frame** out);
GF_API void gf_frame_release(gf_frame* frame);

/* Metadata name; empty string when absent. The pointer lives as long as the frame. */
GF_API const char* gf_frame_name(const gf_frame* frame);
GF_API gf_status gf_frame_set_name(gf_frame* frame, const char* name);

GF_API int64_t gf_frame_hilbert_dim(const gf_frame* frame);
GF_API size_t gf_frame_num_blocks(const gf_frame* frame);
GF_API int64_t gf_frame_block_rows(const gf_frame* frame, size_t j);
GF_API int64_t gf_frame_total_rows(const gf_frame* frame);
/* Copies block j into `out` (2 * rows * hilbert_dim doubles). */
GF_API gf_status gf_frame_block(const gf_frame* frame, size_t j, double* out);

/* ---- frame properties --------------------------------------------------- */

GF_API gf_status gf_frame_bounds(const gf_frame* frame, const gf_tolerances* tol, gf_bounds* out);
GF_API gf_status gf_frame_classify(const gf_frame* frame, const gf_tolerances* tol,
                                   gf_classification* out);
/* n x n frame operator, row-major interleaved. */
GF_API gf_status gf_frame_operator(const gf_frame* frame, double* out);
GF_API gf_status gf_canonical_dual(const gf_frame* frame, const gf_tolerances* tol, gf_frame** out);
GF_API gf_status gf_parseval_transform(const gf_frame* frame, const gf_tolerances* tol,
                                       gf_frame** out);
GF_API gf_status gf_check_dual_pair(const gf_frame* f, const gf_frame* g, const gf_tolerances* tol,
                                    int* out);
GF_API gf_status gf_check_biorthogonal(const gf_frame* f, const gf_frame* g,
                                       const gf_tolerances* tol, int* out);
/* Largest violation of the frame inequality over `samples` random unit vectors,
 * relative to the upper bound; <= 0 when it holds. */
GF_API gf_status gf_frame_inequality_violation(const gf_frame* frame, size_t samples,
                                               uint64_t seed, const gf_tolerances* tol,
                                               double* out);
/* ||sum_j F_j^H G_j - I||_F relative, the resolution-of-identity defect. */
GF_API gf_status gf_resolution_defect(const gf_frame* f, const gf_frame* g, double* out);
GF_API gf_status gf_max_block_distance(const gf_frame* f, const gf_frame* g, double* out);

GF_API gf_status gf_make_gon_basis(int64_t n, size_t num_blocks, const int64_t* dims,
                                   const double* rotation, const gf_tolerances* tol,
                                   gf_frame** out);
GF_API gf_status gf_make_griesz(const gf_frame* gon, const double* x, const gf_tolerances* tol,
                                gf_frame** out);

/* ---- duality ------------------------------------------------------------ */

GF_API gf_status gf_alternate_dual(const gf_frame* frame, const double* probe, uint64_t seed,
                                   const gf_tolerances* tol, gf_frame** out);
/* *similar = 1 and `x_out` (optional, n x n) filled when F_j = G_j X. */
GF_API gf_status gf_check_similar(const gf_frame* f, const gf_frame* g, const gf_tolerances* tol,
                                  int* similar, double* x_out);
/* out[0] = ||T_canon f||^2, out[1] = ||T_G f - T_canon f||^2, out[2] = ||T_G f||^2. */
GF_API gf_status gf_dual_norm_decomposition(const gf_frame* f, const gf_frame* g,
                                            const double* vec, const gf_tolerances* tol,
                                            double* out);
GF_API gf_status gf_gram_characterization(const gf_frame* f, const gf_frame* th,
                                          const gf_frame* g, const gf_tolerances* tol, int* out);

/* ---- perturbation ------------------------------------------------------- */

GF_API gf_status gf_optimal_m(const gf_frame* lambda, const gf_frame* theta,
                              const gf_tolerances* tol, gf_perturbation_report* out);
GF_API gf_status gf_sampled_m(const gf_frame* lambda, const gf_frame* theta, size_t samples,
                              uint64_t seed, double* out);
GF_API gf_status gf_one_sided_m(const gf_frame* lambda, const gf_frame* theta,
                                const gf_tolerances* tol, gf_one_sided_report* out);
/* On GF_ERR_PREMISE_NOT_VERIFIABLE, out->premise_sup holds the refuting value
 * and `witness` (optional, n complex entries) receives the refuting vector. */
GF_API gf_status gf_gavruta_check(const gf_frame* lambda, const gf_frame* theta, double m,
                                  double n, size_t samples, uint64_t seed,
                                  const gf_tolerances* tol, gf_gavruta_report* out,
                                  double* witness);

/* ---- coherent states ---------------------------------------------------- */

GF_API gf_status gf_fock_build(const gf_frame* gon, const gf_tolerances* tol, gf_fock** out);
GF_API void gf_fock_release(gf_fock* fock);
GF_API int gf_fock_levels(const gf_fock* fock);
GF_API int gf_fock_blocks(const gf_fock* fock);

/* `vec` (optional) receives n complex entries. */
GF_API gf_status gf_coherent_state(const gf_fock* fock, double z_re, double z_im, double w_re,
                                   double w_im, double defect_max, double* vec, double* defect);
/* Returns ||a Phi - z Phi||, ||b Phi - w Phi|| and their analytic truncation values. */
GF_API gf_status gf_eigen_residuals(const gf_fock* fock, double z_re, double z_im, double w_re,
                                    double w_im, double defect_max, double out[4]);
/* Smallest radial and angular node counts accepted for K levels and L blocks. */
GF_API void gf_required_nodes(int levels, int blocks, int* radial_nodes, int* angular_nodes);
/* ||Q - I||_F of the quadrature resolution of identity. */
GF_API gf_status gf_quadrature_identity_error(const gf_fock* fock, int radial_nodes,
                                              int angular_nodes, double* out);
GF_API gf_status gf_uncertainty_products(const gf_fock* fock, double z_re, double z_im,
                                         double w_re, double w_im, double out[2]);
GF_API gf_status gf_bicoherent_check(const gf_frame* riesz, double z_re, double z_im,
                                     double w_re, double w_im, double defect_max,
                                     int radial_nodes, int angular_nodes,
                                     const gf_tolerances* tol, gf_bicoherent_report* out);

#ifdef __cplusplus
}
#endif

#endif /* GFRAME_C_H */
