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

#include "gframe/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gframe {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotOnBasis: return "NotOnBasis";
    case ErrorCode::NotRieszBasis: return "NotRieszBasis";
    case ErrorCode::IsRieszBasis: return "IsRieszBasis";
    case ErrorCode::ZeroProbe: return "ZeroProbe";
    case ErrorCode::NotADual: return "NotADual";
    case ErrorCode::DegenerateTheta: return "DegenerateTheta";
    case ErrorCode::PremiseNotVerifiable: return "PremiseNotVerifiable";
    case ErrorCode::TruncationTooSevere: return "TruncationTooSevere";
    case ErrorCode::InsufficientNodes: return "InsufficientNodes";
    case ErrorCode::NonUniformBlocks: return "NonUniformBlocks";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN or infinite entries");
  }
}

HermitianEig herm_eig(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "herm_eig: matrix is not square");
  }
  require_finite(m);
  const CMatrix adj = m.adjoint();
  const double scale = m.norm();
  if ((m - adj).norm() > tol.herm * scale) {
    throw Error(ErrorCode::NotHermitian, "herm_eig: matrix is not Hermitian");
  }
  const CMatrix sym = 0.5 * (m + adj);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonFinite, "herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix herm_func(const CMatrix& m, HermFunction f, const Tolerances& tol) {
  const HermitianEig eig = herm_eig(m, tol);
  const Index n = eig.eigenvalues.size();
  if (n == 0) return m;
  const double lo = eig.eigenvalues(0);
  const double hi = eig.eigenvalues(n - 1);
  if (!(hi > 0.0) || !(lo > tol.pd * hi)) {
    throw Error(ErrorCode::NotPositiveDefinite,
                "herm_func: smallest eigenvalue " + std::to_string(lo) +
                    " is below the positive-definite floor");
  }
  RVector mapped(n);
  for (Index i = 0; i < n; ++i) {
    const double lam = eig.eigenvalues(i);
    switch (f) {
      case HermFunction::Inverse: mapped(i) = 1.0 / lam; break;
      case HermFunction::Sqrt: mapped(i) = std::sqrt(lam); break;
      case HermFunction::InvSqrt: mapped(i) = 1.0 / std::sqrt(lam); break;
    }
  }
  const CMatrix& q = eig.eigenvectors;
  CMatrix out = q * mapped.cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (out + out.adjoint());
}

namespace {

Eigen::BDCSVD<CMatrix> thin_svd(const CMatrix& m) {
  return Eigen::BDCSVD<CMatrix>(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

std::size_t rank_from_values(const RVector& sv, double tol_rank) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = tol_rank * sv(0);
  std::size_t r = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  return r;
}

}  // namespace

RVector singular_values(const CMatrix& m) {
  require_finite(m);
  if (m.size() == 0) return RVector();
  return Eigen::BDCSVD<CMatrix>(m).singularValues();
}

double spectral_norm(const CMatrix& m) {
  const RVector sv = singular_values(m);
  return sv.size() == 0 ? 0.0 : sv(0);
}

double condition_number(const CMatrix& m) {
  const RVector sv = singular_values(m);
  if (sv.size() == 0) return 1.0;
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

std::size_t numerical_rank(const CMatrix& m, double tol_rank) {
  return rank_from_values(singular_values(m), tol_rank);
}

CMatrix range_projector(const CMatrix& m, double tol_rank) {
  require_finite(m);
  if (m.size() == 0) return CMatrix::Zero(m.rows(), m.rows());
  const auto svd = thin_svd(m);
  const auto r = static_cast<Index>(rank_from_values(svd.singularValues(), tol_rank));
  const CMatrix u = svd.matrixU().leftCols(r);
  CMatrix p = u * u.adjoint();
  return 0.5 * (p + p.adjoint());
}

double relative_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "relative_distance: shapes differ");
  }
  const double scale = std::max(a.norm(), b.norm());
  if (scale == 0.0) return 0.0;
  return (a - b).norm() / scale;
}

double max_generalized_eigenvalue(const CMatrix& numerator, const CMatrix& denominator,
                                  const Tolerances& tol, CVector* maximizer) {
  const CMatrix whiten = herm_func(denominator, HermFunction::InvSqrt, tol);
  const CMatrix reduced = whiten * numerator * whiten;
  // The reduced operator inherits round-off asymmetry from three products.
  const HermitianEig eig = herm_eig(0.5 * (reduced + reduced.adjoint()), tol);
  const Index top = eig.eigenvalues.size() - 1;
  if (maximizer != nullptr) {
    CVector f = whiten * eig.eigenvectors.col(top);
    *maximizer = f / f.norm();
  }
  return std::max(0.0, eig.eigenvalues(top));
}

}  // namespace gframe
