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

#include "gframe/gframe_c.h"

#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "gframe/duality.hpp"
#include "gframe/gcoherent.hpp"
#include "gframe/perturbation.hpp"
#include "gframe/spec_io.hpp"

struct gf_frame {
  gframe::FrameSpec spec;
};

struct gf_fock {
  gframe::FockStructure fock;
};

namespace {

using gframe::CMatrix;
using gframe::Complex;
using gframe::CVector;
using gframe::ErrorCode;
using gframe::Index;

thread_local std::string last_error;

gf_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return GF_ERR_INVALID_ARGUMENT;
    case ErrorCode::ShapeMismatch: return GF_ERR_SHAPE_MISMATCH;
    case ErrorCode::NonFinite: return GF_ERR_NON_FINITE;
    case ErrorCode::NotHermitian: return GF_ERR_NOT_HERMITIAN;
    case ErrorCode::NotPositiveDefinite: return GF_ERR_NOT_POSITIVE_DEFINITE;
    case ErrorCode::NotAFrame: return GF_ERR_NOT_A_FRAME;
    case ErrorCode::DimensionMismatch: return GF_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotUnitary: return GF_ERR_NOT_UNITARY;
    case ErrorCode::Singular: return GF_ERR_SINGULAR;
    case ErrorCode::NotOnBasis: return GF_ERR_NOT_ON_BASIS;
    case ErrorCode::NotRieszBasis: return GF_ERR_NOT_RIESZ_BASIS;
    case ErrorCode::IsRieszBasis: return GF_ERR_IS_RIESZ_BASIS;
    case ErrorCode::ZeroProbe: return GF_ERR_ZERO_PROBE;
    case ErrorCode::NotADual: return GF_ERR_NOT_A_DUAL;
    case ErrorCode::DegenerateTheta: return GF_ERR_DEGENERATE_THETA;
    case ErrorCode::PremiseNotVerifiable: return GF_ERR_PREMISE_NOT_VERIFIABLE;
    case ErrorCode::TruncationTooSevere: return GF_ERR_TRUNCATION_TOO_SEVERE;
    case ErrorCode::InsufficientNodes: return GF_ERR_INSUFFICIENT_NODES;
    case ErrorCode::NonUniformBlocks: return GF_ERR_NON_UNIFORM_BLOCKS;
    case ErrorCode::ParseError: return GF_ERR_PARSE;
    case ErrorCode::SchemaError: return GF_ERR_SCHEMA;
  }
  return GF_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
gf_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return GF_OK;
  } catch (const gframe::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return GF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return GF_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw gframe::Error(ErrorCode::InvalidArgument, what);
}

gframe::Tolerances tolerances(const gf_tolerances* tol) {
  if (tol == nullptr) return {};
  return {tol->eq, tol->pd, tol->herm, tol->rank, tol->eig};
}

const gframe::GFrame& frame_of(const gf_frame* f) {
  require(f != nullptr, "null frame handle");
  return f->spec.frame;
}

CMatrix read_matrix(const double* data, Index rows, Index cols) {
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const std::size_t at = 2 * static_cast<std::size_t>(r * cols + c);
      m(r, c) = Complex(data[at], data[at + 1]);
    }
  }
  return m;
}

void write_matrix(const CMatrix& m, double* out) {
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      const std::size_t at = 2 * static_cast<std::size_t>(r * m.cols() + c);
      out[at] = m(r, c).real();
      out[at + 1] = m(r, c).imag();
    }
  }
}

CVector read_vector(const double* data, Index n) { return read_matrix(data, n, 1).col(0); }

void write_vector(const CVector& v, double* out) { write_matrix(CMatrix(v), out); }

gf_frame* wrap(gframe::GFrame frame) {
  return new gf_frame{gframe::FrameSpec{std::move(frame), std::nullopt, std::nullopt}};
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* gf_version(void) { return GFRAME_VERSION_STRING; }

const char* gf_status_name(gf_status status) {
  switch (status) {
    case GF_OK: return "OK";
    case GF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case GF_ERR_SHAPE_MISMATCH: return "ShapeMismatch";
    case GF_ERR_NON_FINITE: return "NonFinite";
    case GF_ERR_NOT_HERMITIAN: return "NotHermitian";
    case GF_ERR_NOT_POSITIVE_DEFINITE: return "NotPositiveDefinite";
    case GF_ERR_NOT_A_FRAME: return "NotAFrame";
    case GF_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case GF_ERR_NOT_UNITARY: return "NotUnitary";
    case GF_ERR_SINGULAR: return "Singular";
    case GF_ERR_NOT_ON_BASIS: return "NotOnBasis";
    case GF_ERR_NOT_RIESZ_BASIS: return "NotRieszBasis";
    case GF_ERR_IS_RIESZ_BASIS: return "IsRieszBasis";
    case GF_ERR_ZERO_PROBE: return "ZeroProbe";
    case GF_ERR_NOT_A_DUAL: return "NotADual";
    case GF_ERR_DEGENERATE_THETA: return "DegenerateTheta";
    case GF_ERR_PREMISE_NOT_VERIFIABLE: return "PremiseNotVerifiable";
    case GF_ERR_TRUNCATION_TOO_SEVERE: return "TruncationTooSevere";
    case GF_ERR_INSUFFICIENT_NODES: return "InsufficientNodes";
    case GF_ERR_NON_UNIFORM_BLOCKS: return "NonUniformBlocks";
    case GF_ERR_PARSE: return "ParseError";
    case GF_ERR_SCHEMA: return "SchemaError";
    case GF_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* gf_last_error_message(void) { return last_error.c_str(); }

gf_tolerances gf_default_tolerances(void) {
  const gframe::Tolerances t;
  return {t.eq, t.pd, t.herm, t.rank, t.eig};
}

void gf_string_free(char* s) { delete[] s; }

gf_status gf_frame_create(int64_t hilbert_dim, size_t num_blocks, const int64_t* rows,
                          const double* data, gf_frame** out) {
  return guarded([&] {
    require(out != nullptr && rows != nullptr && data != nullptr, "null argument");
    require(hilbert_dim >= 1 && num_blocks >= 1, "empty frame");
    std::vector<CMatrix> blocks;
    std::size_t offset = 0;
    for (std::size_t j = 0; j < num_blocks; ++j) {
      require(rows[j] >= 1, "block with no rows");
      blocks.push_back(read_matrix(data + offset, rows[j], hilbert_dim));
      offset += 2 * static_cast<std::size_t>(rows[j] * hilbert_dim);
    }
    *out = wrap(gframe::GFrame(hilbert_dim, std::move(blocks)));
  });
}

gf_status gf_frame_from_json(const char* text, gf_frame** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new gf_frame{gframe::parse_spec(text)};
  });
}

gf_status gf_frame_to_json(const gf_frame* frame, char** out) {
  return guarded([&] {
    require(frame != nullptr && out != nullptr, "null argument");
    *out = copy_string(gframe::serialize_spec(frame->spec));
  });
}

gf_status gf_frame_clone(const gf_frame* frame, gf_frame** out) {
  return guarded([&] {
    require(frame != nullptr && out != nullptr, "null argument");
    *out = new gf_frame{frame->spec};
  });
}

void gf_frame_release(gf_frame* frame) { delete frame; }

const char* gf_frame_name(const gf_frame* frame) {
  if (frame == nullptr || !frame->spec.name) return "";
  return frame->spec.name->c_str();
}

gf_status gf_frame_set_name(gf_frame* frame, const char* name) {
  return guarded([&] {
    require(frame != nullptr, "null frame handle");
    if (name == nullptr) {
      frame->spec.name.reset();
    } else {
      frame->spec.name = name;
    }
  });
}

int64_t gf_frame_hilbert_dim(const gf_frame* frame) {
  return frame == nullptr ? 0 : frame->spec.frame.hilbert_dim();
}

size_t gf_frame_num_blocks(const gf_frame* frame) {
  return frame == nullptr ? 0 : frame->spec.frame.size();
}

int64_t gf_frame_block_rows(const gf_frame* frame, size_t j) {
  if (frame == nullptr || j >= frame->spec.frame.size()) return 0;
  return frame->spec.frame.block_rows(j);
}

int64_t gf_frame_total_rows(const gf_frame* frame) {
  return frame == nullptr ? 0 : frame->spec.frame.total_rows();
}

gf_status gf_frame_block(const gf_frame* frame, size_t j, double* out) {
  return guarded([&] {
    const auto& f = frame_of(frame);
    require(out != nullptr, "null output");
    require(j < f.size(), "block index out of range");
    write_matrix(f.block(j), out);
  });
}

gf_status gf_frame_bounds(const gf_frame* frame, const gf_tolerances* tol, gf_bounds* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto b = gframe::frame_bounds(frame_of(frame), tolerances(tol));
    *out = {b.lower, b.upper, b.is_frame, b.is_tight, b.is_parseval};
  });
}

gf_status gf_frame_classify(const gf_frame* frame, const gf_tolerances* tol,
                            gf_classification* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto c = gframe::classify(frame_of(frame), tolerances(tol));
    *out = {c.is_bessel, c.is_frame, c.is_complete, c.is_orthonormal_set, c.is_on_basis,
            c.is_riesz_basis};
  });
}

gf_status gf_frame_operator(const gf_frame* frame, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    write_matrix(gframe::frame_operator(frame_of(frame)), out);
  });
}

gf_status gf_canonical_dual(const gf_frame* frame, const gf_tolerances* tol, gf_frame** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(gframe::canonical_dual(frame_of(frame), tolerances(tol)));
  });
}

gf_status gf_parseval_transform(const gf_frame* frame, const gf_tolerances* tol, gf_frame** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(gframe::parseval_transform(frame_of(frame), tolerances(tol)));
  });
}

gf_status gf_check_dual_pair(const gf_frame* f, const gf_frame* g, const gf_tolerances* tol,
                             int* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = gframe::check_dual_pair(frame_of(f), frame_of(g), tolerances(tol));
  });
}

gf_status gf_check_biorthogonal(const gf_frame* f, const gf_frame* g, const gf_tolerances* tol,
                                int* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = gframe::check_biorthogonal(frame_of(f), frame_of(g), tolerances(tol));
  });
}

gf_status gf_frame_inequality_violation(const gf_frame* frame, size_t samples, uint64_t seed,
                                        const gf_tolerances* tol, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto& f = frame_of(frame);
    *out = gframe::frame_inequality_violation(f, gframe::frame_bounds(f, tolerances(tol)), samples,
                                              seed);
  });
}

gf_status gf_resolution_defect(const gf_frame* f, const gf_frame* g, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto& ff = frame_of(f);
    const auto& gg = frame_of(g);
    if (!ff.same_shape(gg)) throw gframe::Error(ErrorCode::ShapeMismatch, "block shapes differ");
    const Index n = ff.hilbert_dim();
    const CMatrix sum = gframe::analysis(ff).matrix.adjoint() * gframe::analysis(gg).matrix;
    *out = gframe::relative_distance(sum, CMatrix::Identity(n, n));
  });
}

gf_status gf_max_block_distance(const gf_frame* f, const gf_frame* g, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = gframe::max_block_distance(frame_of(f), frame_of(g));
  });
}

gf_status gf_make_gon_basis(int64_t n, size_t num_blocks, const int64_t* dims,
                            const double* rotation, const gf_tolerances* tol, gf_frame** out) {
  return guarded([&] {
    require(out != nullptr && dims != nullptr, "null argument");
    require(n >= 1, "hilbert dimension must be >= 1");
    std::vector<Index> d(dims, dims + num_blocks);
    std::optional<CMatrix> rot;
    if (rotation != nullptr) rot = read_matrix(rotation, n, n);
    *out = wrap(gframe::make_gon_basis(n, d, rot, tolerances(tol)));
  });
}

gf_status gf_make_griesz(const gf_frame* gon, const double* x, const gf_tolerances* tol,
                         gf_frame** out) {
  return guarded([&] {
    require(out != nullptr && x != nullptr, "null argument");
    const auto& g = frame_of(gon);
    *out = wrap(gframe::make_griesz(g, read_matrix(x, g.hilbert_dim(), g.hilbert_dim()),
                                    tolerances(tol)));
  });
}

gf_status gf_alternate_dual(const gf_frame* frame, const double* probe, uint64_t seed,
                            const gf_tolerances* tol, gf_frame** out) {
  return guarded([&] {
    require(out != nullptr && probe != nullptr, "null argument");
    const auto& f = frame_of(frame);
    *out = wrap(gframe::construct_alternate_dual(f, read_vector(probe, f.hilbert_dim()), seed,
                                                 tolerances(tol)));
  });
}

gf_status gf_check_similar(const gf_frame* f, const gf_frame* g, const gf_tolerances* tol,
                           int* similar, double* x_out) {
  return guarded([&] {
    require(similar != nullptr, "null output");
    const auto x = gframe::check_similar(frame_of(f), frame_of(g), tolerances(tol));
    *similar = x.has_value();
    if (x && x_out != nullptr) write_matrix(*x, x_out);
  });
}

gf_status gf_dual_norm_decomposition(const gf_frame* f, const gf_frame* g, const double* vec,
                                     const gf_tolerances* tol, double* out) {
  return guarded([&] {
    require(out != nullptr && vec != nullptr, "null argument");
    const auto& ff = frame_of(f);
    const auto d = gframe::dual_norm_decomposition(ff, frame_of(g),
                                                   read_vector(vec, ff.hilbert_dim()),
                                                   tolerances(tol));
    out[0] = d.canonical;
    out[1] = d.difference;
    out[2] = d.total;
  });
}

gf_status gf_gram_characterization(const gf_frame* f, const gf_frame* th, const gf_frame* g,
                                   const gf_tolerances* tol, int* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = gframe::gram_characterization(frame_of(f), frame_of(th), frame_of(g), tolerances(tol));
  });
}

gf_status gf_optimal_m(const gf_frame* lambda, const gf_frame* theta, const gf_tolerances* tol,
                       gf_perturbation_report* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto r = gframe::optimal_m(frame_of(lambda), frame_of(theta), tolerances(tol));
    *out = {r.m_lambda,         r.m_theta,          r.m_opt,
            r.lower_lambda,     r.upper_lambda,     r.guaranteed_lower,
            r.guaranteed_upper, r.actual_lower,     r.actual_upper};
  });
}

gf_status gf_sampled_m(const gf_frame* lambda, const gf_frame* theta, size_t samples,
                       uint64_t seed, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = gframe::sampled_m(frame_of(lambda), frame_of(theta), samples, seed);
  });
}

gf_status gf_one_sided_m(const gf_frame* lambda, const gf_frame* theta, const gf_tolerances* tol,
                         gf_one_sided_report* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto r = gframe::one_sided_m(frame_of(lambda), frame_of(theta), tolerances(tol));
    *out = {r.m3, r.lower_bound, r.actual_lower, r.theta_is_frame};
  });
}

gf_status gf_gavruta_check(const gf_frame* lambda, const gf_frame* theta, double m, double n,
                           size_t samples, uint64_t seed, const gf_tolerances* tol,
                           gf_gavruta_report* out, double* witness) {
  return guarded([&] {
    require(out != nullptr, "null output");
    try {
      const auto r = gframe::gavruta_check(frame_of(lambda), frame_of(theta),
                                           {m, n, samples, seed}, tolerances(tol));
      *out = {r.b1,
              r.b2,
              r.v_norm,
              r.v_norm_ok,
              r.premise_sup,
              r.spectral_defect,
              r.vacuous_m,
              r.guaranteed_lower_theta,
              r.actual_lower_theta,
              r.theta_bound_ok,
              r.has_lambda_bound,
              r.guaranteed_lower_lambda,
              r.actual_lower_lambda,
              r.lambda_bound_ok};
    } catch (const gframe::PremiseRefuted& e) {
      *out = {};
      out->premise_sup = e.measured();
      if (witness != nullptr) write_vector(e.witness(), witness);
      throw;
    }
  });
}

gf_status gf_fock_build(const gf_frame* gon, const gf_tolerances* tol, gf_fock** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new gf_fock{gframe::build_fock(frame_of(gon), tolerances(tol))};
  });
}

void gf_fock_release(gf_fock* fock) { delete fock; }

int gf_fock_levels(const gf_fock* fock) { return fock == nullptr ? 0 : fock->fock.levels; }

int gf_fock_blocks(const gf_fock* fock) { return fock == nullptr ? 0 : fock->fock.blocks; }

gf_status gf_coherent_state(const gf_fock* fock, double z_re, double z_im, double w_re,
                            double w_im, double defect_max, double* vec, double* defect) {
  return guarded([&] {
    require(fock != nullptr, "null fock handle");
    const auto cs = gframe::coherent_state(fock->fock, {z_re, z_im}, {w_re, w_im}, defect_max);
    if (vec != nullptr) write_vector(cs.vector, vec);
    if (defect != nullptr) *defect = cs.truncation_defect;
  });
}

gf_status gf_eigen_residuals(const gf_fock* fock, double z_re, double z_im, double w_re,
                             double w_im, double defect_max, double out[4]) {
  return guarded([&] {
    require(fock != nullptr && out != nullptr, "null argument");
    const Complex z(z_re, z_im), w(w_re, w_im);
    const auto cs = gframe::coherent_state(fock->fock, z, w, defect_max);
    const auto ops = gframe::ladder_ops(fock->fock);
    out[0] = (ops.a * cs.vector - z * cs.vector).norm();
    out[1] = (ops.b * cs.vector - w * cs.vector).norm();
    out[2] = gframe::eigen_residual(z, fock->fock.levels);
    out[3] = gframe::eigen_residual(w, fock->fock.blocks);
  });
}

gf_status gf_quadrature_identity_error(const gf_fock* fock, int radial_nodes, int angular_nodes,
                                       double* out) {
  return guarded([&] {
    require(fock != nullptr && out != nullptr, "null argument");
    const CMatrix q = gframe::quadrature_identity(fock->fock, radial_nodes, angular_nodes);
    *out = (q - CMatrix::Identity(q.rows(), q.cols())).norm();
  });
}

void gf_required_nodes(int levels, int blocks, int* radial_nodes, int* angular_nodes) {
  const gframe::NodeCounts need = gframe::required_nodes(levels, blocks);
  if (radial_nodes != nullptr) *radial_nodes = need.radial;
  if (angular_nodes != nullptr) *angular_nodes = need.angular;
}

gf_status gf_uncertainty_products(const gf_fock* fock, double z_re, double z_im, double w_re,
                                  double w_im, double out[2]) {
  return guarded([&] {
    require(fock != nullptr && out != nullptr, "null argument");
    const auto u = gframe::uncertainty_product(fock->fock, {z_re, z_im}, {w_re, w_im});
    out[0] = u.a;
    out[1] = u.b;
  });
}

gf_status gf_bicoherent_check(const gf_frame* riesz, double z_re, double z_im, double w_re,
                              double w_im, double defect_max, int radial_nodes, int angular_nodes,
                              const gf_tolerances* tol, gf_bicoherent_report* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto fam = gframe::bicoherent_family(frame_of(riesz), {z_re, z_im}, {w_re, w_im},
                                               defect_max, tolerances(tol));
    const auto c = gframe::verify_bicoherent(fam, radial_nodes, angular_nodes);
    *out = {fam.condition,           fam.truncation_defect,   c.overlap_error,
            c.collapse_error,        c.dual_basis_error,      c.polar_identity_error,
            c.a_lambda_vs_up,        c.a_dual_vs_up,          c.b_lambda_vs_up,
            c.b_dual_vs_up,          c.lowering_error,        c.eigen_residual_lambda,
            c.eigen_residual_dual,   c.eigen_residual_up,     c.eigen_residual_bound,
            c.biquad_lambda_dual,    c.biquad_dual_lambda,    c.biquad_lambda_up,
            c.biquad_up_lambda};
  });
}

}  // extern "C"
