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

// Dense complex linear algebra shared by every other module.
//
// Matrices are Eigen dense types; all comparisons are relative to the scale
// of the operands (Frobenius norm or largest singular value), never absolute.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "gframe/error.hpp"

namespace gframe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Tolerance set threaded through every numerical check.
struct Tolerances {
  double eq = 1e-10;    // equality of operators, relative Frobenius
  double pd = 1e-12;    // spectral floor, relative to the largest eigenvalue
  double herm = 1e-12;  // Hermiticity check, relative Frobenius
  double rank = 1e-10;  // singular values below rank * sigma_max count as zero
  double eig = 1e-10;   // eigendecomposition reconstruction, relative
};

struct HermitianEig {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // unitary, columns match eigenvalues
};

enum class HermFunction { Inverse, Sqrt, InvSqrt };

/// Throws NonFinite if any entry is NaN or infinite.
void require_finite(const CMatrix& m, const char* what = "matrix");

/// Spectral decomposition of a Hermitian matrix. The input is symmetrized as
/// (M + M^H)/2 once the symmetry check passes.
HermitianEig herm_eig(const CMatrix& m, const Tolerances& tol = {});

/// Applies inverse, square root or inverse square root on the spectrum of a
/// Hermitian positive-definite matrix.
CMatrix herm_func(const CMatrix& m, HermFunction f, const Tolerances& tol = {});

/// Orthogonal projector onto the numerical range of `m`.
CMatrix range_projector(const CMatrix& m, double tol_rank = 1e-10);

/// Number of singular values above tol_rank * sigma_max.
std::size_t numerical_rank(const CMatrix& m, double tol_rank = 1e-10);

/// Singular values, descending.
RVector singular_values(const CMatrix& m);

/// Largest singular value (spectral norm).
double spectral_norm(const CMatrix& m);

/// sigma_max / sigma_min of a square matrix; +inf when singular.
double condition_number(const CMatrix& m);

/// ||a - b||_F / max(||a||_F, ||b||_F); zero when both vanish.
double relative_distance(const CMatrix& a, const CMatrix& b);

inline bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  return relative_distance(a, b) <= tol;
}

/// Largest eigenvalue of the pencil (numerator, denominator): the supremum of
/// <f, N f> / <f, D f> for N Hermitian and D positive definite. Solved by whitening with the
/// inverse square root of the denominator. `maximizer` (optional) receives a
/// unit vector attaining the maximum of the Rayleigh ratio.
double max_generalized_eigenvalue(const CMatrix& numerator,
                                  const CMatrix& denominator,
                                  const Tolerances& tol = {},
                                  CVector* maximizer = nullptr);

}  // namespace gframe
