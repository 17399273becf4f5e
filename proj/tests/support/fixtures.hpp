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

// Shared families and independent oracles for the test suites.
// Products are explicit loops; spectra come from sampling or closed forms.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "gframe/gframe.hpp"
#include "gframe/random.hpp"

namespace gframe::testing {

inline GFrame mercedes() {
  const double h = std::sqrt(3.0) / 2.0;
  std::vector<CMatrix> blocks(3, CMatrix(1, 2));
  blocks[0] << 1.0, 0.0;
  blocks[1] << -0.5, h;
  blocks[2] << -0.5, -h;
  return GFrame(2, std::move(blocks));
}

/// {[I_2 | 0_2], [0_2 | I_2]} on C^4.
inline GFrame coordinate_slices4() {
  const std::vector<Index> dims{2, 2};
  return make_gon_basis(4, dims);
}

inline CMatrix diag_x4() {
  CMatrix x = CMatrix::Identity(4, 4);
  x(0, 0) = 2.0;
  return x;
}

/// Naive triple-loop product.
inline CMatrix loop_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j)
      for (Index k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

inline CMatrix loop_adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

/// sum_j Lambda_j^H Lambda_j by explicit loops.
inline CMatrix loop_frame_operator(const GFrame& f) {
  CMatrix s = CMatrix::Zero(f.hilbert_dim(), f.hilbert_dim());
  for (const auto& b : f.blocks()) s += loop_product(loop_adjoint(b), b);
  return s;
}

/// Random family with `count` blocks of random heights in [1, max_rows].
inline GFrame random_family(Index n, std::size_t count, Index max_rows, Rng& rng) {
  std::uniform_int_distribution<Index> rows(1, max_rows);
  std::vector<CMatrix> blocks;
  for (std::size_t j = 0; j < count; ++j) blocks.push_back(random_complex_matrix(rows(rng), n, rng));
  return GFrame(n, std::move(blocks));
}

/// Random overcomplete g-frame: total rows strictly exceed n.
inline GFrame random_overcomplete(Index n, Rng& rng) {
  std::uniform_int_distribution<int> extra(1, 3);
  const Index total = n + extra(rng);
  std::vector<Index> dims;
  Index left = total;
  std::uniform_int_distribution<Index> pick(1, 3);
  while (left > 0) {
    const Index d = std::min(left, pick(rng));
    dims.push_back(d);
    left -= d;
  }
  return GFrame::from_stacked(random_complex_matrix(total, n, rng), dims);
}

/// Random partition of n into blocks of size <= max_block.
inline std::vector<Index> random_partition(Index n, Index max_block, Rng& rng) {
  std::uniform_int_distribution<Index> pick(1, max_block);
  std::vector<Index> dims;
  Index left = n;
  while (left > 0) {
    const Index d = std::min(left, pick(rng));
    dims.push_back(d);
    left -= d;
  }
  return dims;
}

/// Invertible X = U diag(sigma) V^H with singular values in [1, cond].
inline CMatrix random_invertible(Index n, double cond, Rng& rng) {
  std::uniform_real_distribution<double> spread(1.0, cond);
  RVector sigma(n);
  for (Index i = 0; i < n; ++i) sigma(i) = spread(rng);
  sigma(0) = 1.0;
  if (n > 1) sigma(n - 1) = cond;
  const CMatrix u = random_unitary(n, rng);
  const CMatrix v = random_unitary(n, rng);
  return u * sigma.cast<Complex>().asDiagonal() * v.adjoint();
}

/// Extremes of the Rayleigh quotient <f, M f>/<f, f> over random vectors.
inline std::pair<double, double> sampled_rayleigh(const CMatrix& m, std::size_t samples, Rng& rng) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < samples; ++i) {
    const CVector f = random_unit_vector(m.rows(), rng);
    const double q = f.dot(m * f).real();
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  return {lo, hi};
}

inline double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace gframe::testing
