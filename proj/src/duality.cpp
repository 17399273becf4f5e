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

#include "gframe/duality.hpp"

#include <cmath>
#include <string>

namespace gframe {

CVector kernel_vector(const GFrame& frame, std::uint64_t seed, const Tolerances& tol) {
  const CMatrix t = analysis(frame).matrix;
  Eigen::BDCSVD<CMatrix> svd(t, Eigen::ComputeFullU);
  const RVector& sv = svd.singularValues();
  Index rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    for (Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > tol.rank * sv(0)) ++rank;
    }
  }
  const Index m = t.rows();
  const Index kernel_dim = m - rank;
  if (kernel_dim == 0) {
    throw Error(ErrorCode::IsRieszBasis,
                "analysis operator is onto; the dual is unique and no alternate exists");
  }
  CVector v = svd.matrixU().col(rank + static_cast<Index>(seed % static_cast<std::uint64_t>(kernel_dim)));
  const double mag_cut = tol.eq * v.cwiseAbs().maxCoeff();
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > mag_cut) {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(std::abs(v(i)), 0.0);
      break;
    }
  }
  return v / v.norm();
}

AlternateDualRecipe alternate_dual_recipe(const GFrame& frame, const CVector& probe,
                                          std::uint64_t seed, const Tolerances& tol) {
  if (probe.size() != frame.hilbert_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "alternate dual: probe vector has the wrong dimension");
  }
  require_finite(probe, "probe vector");
  if (probe.norm() == 0.0) {
    throw Error(ErrorCode::ZeroProbe, "alternate dual: probe vector g0 is zero");
  }
  const Classification c = classify(frame, tol);
  if (!c.is_frame) throw Error(ErrorCode::NotAFrame, "alternate dual: input is not a g-frame");
  if (c.is_riesz_basis) {
    throw Error(ErrorCode::IsRieszBasis, "alternate dual: input is a g-Riesz basis; its dual is unique");
  }
  AlternateDualRecipe recipe;
  recipe.kernel_vector = kernel_vector(frame, seed, tol);
  recipe.probe = probe;
  recipe.kernel_dim = static_cast<std::size_t>(frame.total_rows()) -
                      numerical_rank(analysis(frame).matrix, tol.rank);
  return recipe;
}

GFrame construct_alternate_dual(const GFrame& frame, const CVector& probe, std::uint64_t seed,
                                const Tolerances& tol) {
  const AlternateDualRecipe recipe = alternate_dual_recipe(frame, probe, seed, tol);
  const GFrame dual = canonical_dual(frame, tol);
  std::vector<CMatrix> blocks;
  blocks.reserve(frame.size());
  Index offset = 0;
  for (const auto& b : dual.blocks()) {
    const CVector slice = recipe.kernel_vector.segment(offset, b.rows());
    blocks.emplace_back(b + slice * recipe.probe.adjoint());
    offset += b.rows();
  }
  return GFrame(frame.hilbert_dim(), std::move(blocks));
}

std::optional<CMatrix> check_similar(const GFrame& f, const GFrame& g, const Tolerances& tol) {
  if (!f.same_shape(g)) {
    throw Error(ErrorCode::ShapeMismatch, "check_similar: families have different block shapes");
  }
  const CMatrix tf = analysis(f).matrix;
  const CMatrix tg = analysis(g).matrix;
  const CMatrix pf = range_projector(tf, tol.rank);
  const CMatrix pg = range_projector(tg, tol.rank);
  if ((pf - pg).norm() > kSimilarityProjectorTol) return std::nullopt;

  // Least-squares solve of T_G X = T_F.
  const CMatrix x = tg.completeOrthogonalDecomposition().solve(tf);
  if (!x.allFinite() || !(condition_number(x) < 1.0 / tol.pd)) return std::nullopt;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!approx_equal(g.block(j) * x, f.block(j), tol.eq)) return std::nullopt;
  }
  return x;
}

namespace {

void require_dual(const GFrame& f, const GFrame& g, const Tolerances& tol, const char* op) {
  if (!f.same_shape(g) || !check_dual_pair(f, g, tol)) {
    throw Error(ErrorCode::NotADual, std::string(op) + ": family is not a dual of the frame");
  }
}

}  // namespace

DualNormDecomposition dual_norm_decomposition(const GFrame& f, const GFrame& g,
                                              const CVector& vec, const Tolerances& tol) {
  require_dual(f, g, tol, "dual_norm_decomposition");
  if (vec.size() != f.hilbert_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "dual_norm_decomposition: vector has the wrong dimension");
  }
  const CVector canon = analysis(canonical_dual(f, tol)).matrix * vec;
  const CVector other = analysis(g).matrix * vec;
  return {canon.squaredNorm(), (other - canon).squaredNorm(), other.squaredNorm()};
}

bool gram_characterization(const GFrame& f, const GFrame& th, const GFrame& g,
                           const Tolerances& tol) {
  require_dual(f, th, tol, "gram_characterization");
  require_dual(f, g, tol, "gram_characterization");
  const CMatrix t_th = analysis(th).matrix;
  const CMatrix t_g = analysis(g).matrix;
  const CMatrix gram = t_th.adjoint() * t_th;
  const CMatrix cross = t_th.adjoint() * t_g;
  return approx_equal(gram, cross, tol.eq);
}

}  // namespace gframe
