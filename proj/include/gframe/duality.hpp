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

// Non-canonical duals, similarity and the minimality of the canonical dual.

#include <cstdint>
#include <optional>

#include "gframe/gframe.hpp"

namespace gframe {

/// Ingredients of an alternate dual: a unit vector in the orthogonal
/// complement of Range(T) and the probe g0 that fixes the rank-one map
/// f -> <g0, f> F_j added to each canonical-dual block.
struct AlternateDualRecipe {
  CVector kernel_vector;  // in the direct sum of the block spaces
  CVector probe;          // in H
  std::size_t kernel_dim = 0;
};

/// Unit vector of ker(T^H) chosen deterministically: the left singular vectors of
/// T beyond its numerical rank form the kernel basis, `seed` picks one, and the
/// phase is fixed so the first non-negligible entry is real positive.
/// Throws IsRieszBasis when the kernel is trivial.
CVector kernel_vector(const GFrame& frame, std::uint64_t seed, const Tolerances& tol = {});

AlternateDualRecipe alternate_dual_recipe(const GFrame& frame, const CVector& probe,
                                          std::uint64_t seed, const Tolerances& tol = {});

/// Gamma_j = Lambda_j S^-1 + F_j g0^H. Throws NotAFrame, IsRieszBasis, ZeroProbe,
/// ShapeMismatch.
GFrame construct_alternate_dual(const GFrame& frame, const CVector& probe, std::uint64_t seed,
                                const Tolerances& tol = {});

/// Invertible X with F_j = G_j X for all j, when the analysis ranges coincide.
std::optional<CMatrix> check_similar(const GFrame& f, const GFrame& g,
                                     const Tolerances& tol = {});

/// Projector comparison threshold for check_similar (two SVDs compound error).
inline constexpr double kSimilarityProjectorTol = 1e-8;

struct DualNormDecomposition {
  double canonical = 0.0;   // ||T_{canonical dual} f||^2
  double difference = 0.0;  // ||T_G f - T_{canonical dual} f||^2
  double total = 0.0;       // ||T_G f||^2
};

/// Pythagorean split of ||T_G f||^2 for a dual G of F. Throws NotADual.
DualNormDecomposition dual_norm_decomposition(const GFrame& f, const GFrame& g,
                                              const CVector& vec, const Tolerances& tol = {});

/// T_Th^H T_Th == T_Th^H T_G for two duals Th, G of F. Throws NotADual.
bool gram_characterization(const GFrame& f, const GFrame& th, const GFrame& g,
                           const Tolerances& tol = {});

}  // namespace gframe
