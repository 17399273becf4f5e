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

#pragma once

// Finite g-frames: an ordered family of block operators Lambda_j : C^n -> C^{d_j},
// stored as d_j x n complex matrices.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gframe/hilbert.hpp"

namespace gframe {

class GFrame {
 public:
  /// Throws ShapeMismatch if the list is empty, a block has zero rows, or a
  /// block does not have `hilbert_dim` columns; NonFinite on NaN/Inf.
  GFrame(Index hilbert_dim, std::vector<CMatrix> blocks);

  /// Splits a stacked (sum d_j) x n matrix into blocks of the given row counts.
  static GFrame from_stacked(const CMatrix& stacked, std::span<const Index> rows);

  Index hilbert_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const CMatrix& block(std::size_t j) const { return blocks_.at(j); }
  const std::vector<CMatrix>& blocks() const noexcept { return blocks_; }
  Index block_rows(std::size_t j) const { return blocks_.at(j).rows(); }
  std::vector<Index> block_dims() const;
  /// sum_j d_j, the dimension of the direct sum of the block spaces.
  Index total_rows() const noexcept { return total_rows_; }

  /// Same block shapes (and therefore the same Hilbert dimension).
  bool same_shape(const GFrame& other) const noexcept;

  /// Right-multiplies every block by `x` (n x n).
  GFrame compose(const CMatrix& x) const;
  GFrame scaled(Complex factor) const;

 private:
  Index n_;
  Index total_rows_ = 0;
  std::vector<CMatrix> blocks_;
};

/// Analysis operator T: f -> (Lambda_j f)_j, as one (sum d_j) x n matrix.
struct StackedOperator {
  CMatrix matrix;
  std::vector<Index> offsets;  // first row of each block

  auto block(std::size_t j) const {
    const Index end = j + 1 < offsets.size() ? offsets[j + 1] : matrix.rows();
    return matrix.middleRows(offsets[j], end - offsets[j]);
  }
  /// Synthesis operator T^H.
  CMatrix synthesis() const { return matrix.adjoint(); }
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool is_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
};

struct Classification {
  bool is_bessel = false;
  bool is_frame = false;
  bool is_complete = false;
  bool is_orthonormal_set = false;
  bool is_on_basis = false;
  bool is_riesz_basis = false;
};

StackedOperator analysis(const GFrame& frame);

/// S = sum_j Lambda_j^H Lambda_j, symmetrized.
CMatrix frame_operator(const GFrame& frame);

/// Optimal bounds: the extreme eigenvalues of S. Non-frames are reported, not thrown.
FrameBounds frame_bounds(const GFrame& frame, const Tolerances& tol = {});

/// {Lambda_j S^-1}. Throws NotAFrame.
GFrame canonical_dual(const GFrame& frame, const Tolerances& tol = {});

/// {Lambda_j S^-1/2}, a Parseval g-frame. Throws NotAFrame.
GFrame parseval_transform(const GFrame& frame, const Tolerances& tol = {});

Classification classify(const GFrame& frame, const Tolerances& tol = {});

/// True iff T_G^H T_F = I. Symmetric in its arguments. Throws ShapeMismatch.
bool check_dual_pair(const GFrame& f, const GFrame& g, const Tolerances& tol = {});

/// True iff G_k F_j^H = delta_jk I for all j, k. Throws ShapeMismatch.
bool check_biorthogonal(const GFrame& f, const GFrame& g, const Tolerances& tol = {});

/// The vectors u_k^(j) = Lambda_j^H e_k^(j), ordered by block then by k.
std::vector<CVector> induce_vector_frame(const GFrame& frame);

/// Optimal bounds of an ordinary frame {u_i}: spectral extremes of sum u_i u_i^H.
FrameBounds vector_frame_bounds(std::span<const CVector> vectors, const Tolerances& tol = {});

/// Coordinate-slicing g-on basis of C^n, optionally composed with a unitary.
/// Throws DimensionMismatch if sum(dims) != n, NotUnitary.
GFrame make_gon_basis(Index n, std::span<const Index> dims,
                      const std::optional<CMatrix>& rotation = std::nullopt,
                      const Tolerances& tol = {});

/// {theta_j X} for a g-on basis theta and invertible X. Throws NotOnBasis, Singular.
GFrame make_griesz(const GFrame& gon, const CMatrix& x, const Tolerances& tol = {});

/// max_j ||F_j - G_j||_F / max(||F_j||_F, ||G_j||_F).
double max_block_distance(const GFrame& f, const GFrame& g);

/// Largest violation of A||f||^2 <= sum ||Lambda_j f||^2 <= B||f||^2 over
/// `samples` random unit vectors; <= 0 when the inequality holds.
double frame_inequality_violation(const GFrame& frame, const FrameBounds& bounds,
                                  std::size_t samples, std::uint64_t seed);

}  // namespace gframe
