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

#include "gframe/gframe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gframe/random.hpp"

namespace gframe {

GFrame::GFrame(Index hilbert_dim, std::vector<CMatrix> blocks)
    : n_(hilbert_dim), blocks_(std::move(blocks)) {
  if (n_ < 1) throw Error(ErrorCode::ShapeMismatch, "g-frame: hilbert_dim must be >= 1");
  if (blocks_.empty()) throw Error(ErrorCode::ShapeMismatch, "g-frame: block list is empty");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const CMatrix& b = blocks_[j];
    if (b.rows() < 1) {
      throw Error(ErrorCode::ShapeMismatch, "g-frame: block " + std::to_string(j) + " has no rows");
    }
    if (b.cols() != n_) {
      throw Error(ErrorCode::ShapeMismatch,
                  "g-frame: block " + std::to_string(j) + " has " + std::to_string(b.cols()) +
                      " columns, expected " + std::to_string(n_));
    }
    require_finite(b, "g-frame block");
    total_rows_ += b.rows();
  }
}

GFrame GFrame::from_stacked(const CMatrix& stacked, std::span<const Index> rows) {
  const Index total = std::accumulate(rows.begin(), rows.end(), Index{0});
  if (total != stacked.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "from_stacked: row counts do not sum to the stack height");
  }
  std::vector<CMatrix> blocks;
  blocks.reserve(rows.size());
  Index offset = 0;
  for (Index d : rows) {
    if (d < 1) throw Error(ErrorCode::ShapeMismatch, "from_stacked: block with no rows");
    blocks.emplace_back(stacked.middleRows(offset, d));
    offset += d;
  }
  return GFrame(stacked.cols(), std::move(blocks));
}

std::vector<Index> GFrame::block_dims() const {
  std::vector<Index> dims;
  dims.reserve(blocks_.size());
  for (const auto& b : blocks_) dims.push_back(b.rows());
  return dims;
}

bool GFrame::same_shape(const GFrame& other) const noexcept {
  if (n_ != other.n_ || blocks_.size() != other.blocks_.size()) return false;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].rows() != other.blocks_[j].rows()) return false;
  }
  return true;
}

GFrame GFrame::compose(const CMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) {
    throw Error(ErrorCode::ShapeMismatch, "compose: operator must be n x n");
  }
  std::vector<CMatrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.emplace_back(b * x);
  return GFrame(n_, std::move(out));
}

GFrame GFrame::scaled(Complex factor) const {
  std::vector<CMatrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.emplace_back(b * factor);
  return GFrame(n_, std::move(out));
}

StackedOperator analysis(const GFrame& frame) {
  StackedOperator t;
  t.matrix.resize(frame.total_rows(), frame.hilbert_dim());
  t.offsets.reserve(frame.size());
  Index offset = 0;
  for (const auto& b : frame.blocks()) {
    t.offsets.push_back(offset);
    t.matrix.middleRows(offset, b.rows()) = b;
    offset += b.rows();
  }
  return t;
}

CMatrix frame_operator(const GFrame& frame) {
  const Index n = frame.hilbert_dim();
  CMatrix s = CMatrix::Zero(n, n);
  for (const auto& b : frame.blocks()) s.noalias() += b.adjoint() * b;
  return 0.5 * (s + s.adjoint());
}

namespace {

FrameBounds bounds_from_operator(const CMatrix& s, const Tolerances& tol) {
  const HermitianEig eig = herm_eig(s, tol);
  FrameBounds fb;
  fb.lower = std::max(0.0, eig.eigenvalues(0));
  fb.upper = std::max(0.0, eig.eigenvalues(eig.eigenvalues.size() - 1));
  fb.is_frame = fb.lower > tol.pd * fb.upper;
  fb.is_tight = fb.is_frame && std::abs(fb.upper - fb.lower) <= tol.eq * fb.upper;
  fb.is_parseval = fb.is_tight && std::abs(fb.lower - 1.0) <= tol.eq;
  return fb;
}

void require_frame(const GFrame& frame, const Tolerances& tol, const char* op) {
  if (!frame_bounds(frame, tol).is_frame) {
    throw Error(ErrorCode::NotAFrame, std::string(op) + ": input is not a g-frame");
  }
}

void require_same_shape(const GFrame& f, const GFrame& g, const char* op) {
  if (!f.same_shape(g)) {
    throw Error(ErrorCode::ShapeMismatch, std::string(op) + ": families have different block shapes");
  }
}

}  // namespace

FrameBounds frame_bounds(const GFrame& frame, const Tolerances& tol) {
  return bounds_from_operator(frame_operator(frame), tol);
}

GFrame canonical_dual(const GFrame& frame, const Tolerances& tol) {
  require_frame(frame, tol, "canonical_dual");
  return frame.compose(herm_func(frame_operator(frame), HermFunction::Inverse, tol));
}

GFrame parseval_transform(const GFrame& frame, const Tolerances& tol) {
  require_frame(frame, tol, "parseval_transform");
  return frame.compose(herm_func(frame_operator(frame), HermFunction::InvSqrt, tol));
}

Classification classify(const GFrame& frame, const Tolerances& tol) {
  const StackedOperator t = analysis(frame);
  const auto rank = static_cast<Index>(numerical_rank(t.matrix, tol.rank));
  const CMatrix s = frame_operator(frame);
  const FrameBounds fb = bounds_from_operator(s, tol);

  Classification c;
  c.is_bessel = true;  // every finite family has a finite upper bound
  c.is_complete = rank == frame.hilbert_dim();
  c.is_frame = fb.is_frame;
  c.is_riesz_basis = c.is_frame && rank == frame.total_rows();

  const Index m = frame.total_rows();
  const CMatrix gram = t.matrix * t.matrix.adjoint();
  c.is_orthonormal_set = approx_equal(gram, CMatrix::Identity(m, m), tol.eq);

  const Index n = frame.hilbert_dim();
  c.is_on_basis = c.is_orthonormal_set && c.is_riesz_basis &&
                  approx_equal(s, CMatrix::Identity(n, n), tol.eq);
  return c;
}

bool check_dual_pair(const GFrame& f, const GFrame& g, const Tolerances& tol) {
  require_same_shape(f, g, "check_dual_pair");
  const Index n = f.hilbert_dim();
  const CMatrix cross = analysis(g).matrix.adjoint() * analysis(f).matrix;
  return approx_equal(cross, CMatrix::Identity(n, n), tol.eq);
}

bool check_biorthogonal(const GFrame& f, const GFrame& g, const Tolerances& tol) {
  require_same_shape(f, g, "check_biorthogonal");
  const Index m = f.total_rows();
  const CMatrix cross = analysis(g).matrix * analysis(f).matrix.adjoint();
  return approx_equal(cross, CMatrix::Identity(m, m), tol.eq);
}

std::vector<CVector> induce_vector_frame(const GFrame& frame) {
  std::vector<CVector> out;
  out.reserve(static_cast<std::size_t>(frame.total_rows()));
  for (const auto& b : frame.blocks()) {
    const CMatrix adj = b.adjoint();
    for (Index k = 0; k < adj.cols(); ++k) out.emplace_back(adj.col(k));
  }
  return out;
}

FrameBounds vector_frame_bounds(std::span<const CVector> vectors, const Tolerances& tol) {
  if (vectors.empty()) throw Error(ErrorCode::ShapeMismatch, "vector_frame_bounds: no vectors");
  const Index n = vectors.front().size();
  CMatrix s = CMatrix::Zero(n, n);
  for (const auto& u : vectors) {
    if (u.size() != n) throw Error(ErrorCode::ShapeMismatch, "vector_frame_bounds: ragged vectors");
    s.noalias() += u * u.adjoint();
  }
  return bounds_from_operator(0.5 * (s + s.adjoint()), tol);
}

GFrame make_gon_basis(Index n, std::span<const Index> dims, const std::optional<CMatrix>& rotation,
                      const Tolerances& tol) {
  if (dims.empty()) throw Error(ErrorCode::ShapeMismatch, "make_gon_basis: no block dimensions");
  const Index total = std::accumulate(dims.begin(), dims.end(), Index{0});
  if (total != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "make_gon_basis: block dimensions sum to " + std::to_string(total) +
                    ", expected " + std::to_string(n));
  }
  CMatrix q = CMatrix::Identity(n, n);
  if (rotation) {
    if (rotation->rows() != n || rotation->cols() != n) {
      throw Error(ErrorCode::ShapeMismatch, "make_gon_basis: rotation must be n x n");
    }
    require_finite(*rotation, "rotation");
    if (!approx_equal(rotation->adjoint() * *rotation, CMatrix::Identity(n, n), tol.eq)) {
      throw Error(ErrorCode::NotUnitary, "make_gon_basis: rotation is not unitary");
    }
    q = *rotation;
  }
  return GFrame::from_stacked(q, dims);
}

GFrame make_griesz(const GFrame& gon, const CMatrix& x, const Tolerances& tol) {
  if (!classify(gon, tol).is_on_basis) {
    throw Error(ErrorCode::NotOnBasis, "make_griesz: base family is not a g-on basis");
  }
  const Index n = gon.hilbert_dim();
  if (x.rows() != n || x.cols() != n) {
    throw Error(ErrorCode::ShapeMismatch, "make_griesz: X must be n x n");
  }
  require_finite(x, "X");
  if (!(condition_number(x) < 1.0 / tol.pd)) {
    throw Error(ErrorCode::Singular, "make_griesz: X fails the invertibility threshold");
  }
  return gon.compose(x);
}

double max_block_distance(const GFrame& f, const GFrame& g) {
  require_same_shape(f, g, "max_block_distance");
  double worst = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    worst = std::max(worst, relative_distance(f.block(j), g.block(j)));
  }
  return worst;
}

double frame_inequality_violation(const GFrame& frame, const FrameBounds& bounds,
                                  std::size_t samples, std::uint64_t seed) {
  const CMatrix t = analysis(frame).matrix;
  const double scale = std::max(bounds.upper, std::numeric_limits<double>::min());
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = stream_rng(seed, i);
    const CVector f = random_unit_vector(frame.hilbert_dim(), rng);
    const double energy = (t * f).squaredNorm();
    worst = std::max({worst, (bounds.lower - energy) / scale, (energy - bounds.upper) / scale});
  }
  return worst;
}

}  // namespace gframe
