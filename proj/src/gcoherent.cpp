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

#include "gframe/gcoherent.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gframe/quadrature.hpp"

namespace gframe {

namespace {

std::string truncation_message(Complex z, Complex w, double defect, double defect_max) {
  const auto [k_req, l_req] = required_truncation(z, w, defect_max);
  return "truncation defect " + std::to_string(defect) + " exceeds " + std::to_string(defect_max) +
         "; need K >= " + std::to_string(k_req) + " and L >= " + std::to_string(l_req);
}

void require_truncation(const FockStructure& fs, Complex z, Complex w, double defect_max) {
  const double defect = truncation_defect(z, w, fs.levels, fs.blocks);
  if (!(defect <= defect_max)) {
    throw Error(ErrorCode::TruncationTooSevere, truncation_message(z, w, defect, defect_max));
  }
}

// Coefficients over the (k, l) grid in basis-column order.
CVector grid_coefficients(Complex z, Complex w, int levels, int blocks) {
  const CVector cz = coherent_coefficients(z, levels);
  const CVector cw = coherent_coefficients(w, blocks);
  CVector c(static_cast<Index>(levels) * blocks);
  for (int l = 0; l < blocks; ++l) {
    for (int k = 0; k < levels; ++k) c(static_cast<Index>(l) * levels + k) = cz(k) * cw(l);
  }
  return c;
}

LadderPair ladders_from_basis(const CMatrix& basis, int levels, int blocks) {
  CMatrix shifted_a = CMatrix::Zero(basis.rows(), basis.cols());
  CMatrix shifted_b = CMatrix::Zero(basis.rows(), basis.cols());
  for (int l = 0; l < blocks; ++l) {
    for (int k = 0; k < levels; ++k) {
      const Index col = static_cast<Index>(l) * levels + k;
      if (k > 0) shifted_a.col(col) = std::sqrt(static_cast<double>(k)) * basis.col(col - 1);
      if (l > 0) shifted_b.col(col) = std::sqrt(static_cast<double>(l)) * basis.col(col - levels);
    }
  }
  return {shifted_a * basis.adjoint(), shifted_b * basis.adjoint()};
}

}  // namespace

FockStructure build_fock(const GFrame& gon, const Tolerances& tol) {
  const std::vector<Index> dims = gon.block_dims();
  for (Index d : dims) {
    if (d != dims.front()) {
      throw Error(ErrorCode::NonUniformBlocks, "build_fock: blocks must share one dimension K");
    }
  }
  if (!classify(gon, tol).is_on_basis) {
    throw Error(ErrorCode::NotOnBasis, "build_fock: input is not a g-on basis");
  }
  FockStructure fs{static_cast<int>(dims.front()), static_cast<int>(gon.size()), CMatrix(), gon};
  const std::vector<CVector> columns = induce_vector_frame(gon);
  fs.basis.resize(gon.hilbert_dim(), static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) fs.basis.col(static_cast<Index>(c)) = columns[c];
  return fs;
}

double poisson_tail(int top, double x) {
  if (x <= 0.0) return 0.0;
  if (top < 0) return 1.0;
  int k = top + 1;
  double term = std::exp(-x + k * std::log(x) - std::lgamma(k + 1.0));
  double sum = 0.0;
  while (term > 0.0) {
    sum += term;
    ++k;
    term *= x / k;
    if (k > x && term < 1e-18 * sum) break;
  }
  return std::min(sum, 1.0);
}

double truncation_defect(Complex z, Complex w, int levels, int blocks) {
  const double qz = poisson_tail(levels - 1, std::norm(z));
  const double qw = poisson_tail(blocks - 1, std::norm(w));
  return qz + qw - qz * qw;
}

std::pair<int, int> required_truncation(Complex z, Complex w, double defect_max) {
  auto levels_for = [&](double x) {
    int k = 1;
    while (poisson_tail(k - 1, x) > 0.5 * defect_max) ++k;
    return k;
  };
  return {levels_for(std::norm(z)), levels_for(std::norm(w))};
}

CVector coherent_coefficients(Complex z, int levels) {
  CVector c(levels);
  if (levels == 0) return c;
  c(0) = 1.0;
  for (int k = 1; k < levels; ++k) c(k) = c(k - 1) * z / std::sqrt(static_cast<double>(k));
  return c;
}

CoherentState coherent_state(const FockStructure& fs, Complex z, Complex w, double defect_max) {
  require_truncation(fs, z, w, defect_max);
  const CVector c = grid_coefficients(z, w, fs.levels, fs.blocks);
  CVector v = fs.basis * c;
  const double gauss = std::exp(-(std::norm(z) + std::norm(w)));
  CoherentState cs{z, w, CVector(), truncation_defect(z, w, fs.levels, fs.blocks), 0.0};
  cs.raw_mass = gauss * v.squaredNorm();
  cs.vector = v / v.norm();
  return cs;
}

CVector coherent_state_factorized(const FockStructure& fs, Complex z, Complex w,
                                  double defect_max) {
  require_truncation(fs, z, w, defect_max);
  const CVector chi = coherent_coefficients(z, fs.levels);
  const CVector cw = coherent_coefficients(w, fs.blocks);
  CVector v = CVector::Zero(fs.source.hilbert_dim());
  for (int l = 0; l < fs.blocks; ++l) {
    v.noalias() += cw(l) * (fs.source.block(static_cast<std::size_t>(l)).adjoint() * chi);
  }
  return v / v.norm();
}

LadderPair ladder_ops(const FockStructure& fs) {
  return ladders_from_basis(fs.basis, fs.levels, fs.blocks);
}

double eigen_residual(Complex z, int levels) {
  if (levels < 1) return 0.0;
  const CVector c = coherent_coefficients(z, levels);
  const double top = std::abs(c(levels - 1));
  return std::abs(z) * top / c.norm();
}

NodeCounts required_nodes(int levels, int blocks) {
  const int top = std::max(levels, blocks);
  return {top, 2 * top - 1};
}

CMatrix bi_quadrature(int levels, int blocks, const CMatrix& left, const CMatrix& right,
                      int radial_nodes, int angular_nodes) {
  const NodeCounts need = required_nodes(levels, blocks);
  if (radial_nodes < need.radial || angular_nodes < need.angular) {
    throw Error(ErrorCode::InsufficientNodes,
                "quadrature needs radial >= " + std::to_string(need.radial) + " and angular >= " +
                    std::to_string(need.angular) + " for K = " + std::to_string(levels) +
                    ", L = " + std::to_string(blocks));
  }
  const Index dim = static_cast<Index>(levels) * blocks;
  if (left.cols() != dim || right.cols() != dim || left.rows() != right.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "bi_quadrature: basis matrices do not match K * L");
  }

  // (1/pi) int e^{-|z|^2} g(z) d^2z = sum_i w_i (1/N) sum_j g(sqrt(u_i) e^{2 pi i j / N}).
  const GaussLaguerre rule = gauss_laguerre(radial_nodes);
  std::vector<Complex> points;
  std::vector<double> weights;
  for (int i = 0; i < radial_nodes; ++i) {
    const double r = std::sqrt(rule.nodes[i]);
    for (int j = 0; j < angular_nodes; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / angular_nodes;
      points.push_back(std::polar(r, phi));
      weights.push_back(rule.weights[i] / angular_nodes);
    }
  }

  std::vector<CVector> cz, cw;
  cz.reserve(points.size());
  cw.reserve(points.size());
  for (const Complex& p : points) {
    cz.push_back(coherent_coefficients(p, levels));
    cw.push_back(coherent_coefficients(p, blocks));
  }

  CMatrix moments = CMatrix::Zero(dim, dim);
  CVector c(dim);
  for (std::size_t iz = 0; iz < points.size(); ++iz) {
    for (std::size_t iw = 0; iw < points.size(); ++iw) {
      for (int l = 0; l < blocks; ++l) {
        for (int k = 0; k < levels; ++k) c(static_cast<Index>(l) * levels + k) = cz[iz](k) * cw[iw](l);
      }
      moments.noalias() += (weights[iz] * weights[iw]) * (c * c.adjoint());
    }
  }
  return left * moments * right.adjoint();
}

CMatrix quadrature_identity(const FockStructure& fs, int radial_nodes, int angular_nodes) {
  return bi_quadrature(fs.levels, fs.blocks, fs.basis, fs.basis, radial_nodes, angular_nodes);
}

UncertaintyProducts uncertainty_product(const FockStructure& fs, Complex z, Complex w) {
  const CoherentState cs = coherent_state(fs, z, w, kUncertaintyDefectMax);
  const LadderPair ops = ladder_ops(fs);
  const Complex i(0.0, 1.0);
  const double root2 = std::sqrt(2.0);

  auto spread = [&](const CMatrix& x) {
    const CVector xphi = x * cs.vector;
    const double mean = cs.vector.dot(xphi).real();
    return std::sqrt((xphi - mean * cs.vector).squaredNorm());
  };
  auto product = [&](const CMatrix& lower) {
    const CMatrix raise = lower.adjoint();
    const CMatrix q = (lower + raise) / root2;
    const CMatrix p = (lower - raise) / (root2 * i);
    return spread(q) * spread(p);
  };
  return {product(ops.a), product(ops.b)};
}

BicoherentFamily bicoherent_family(const GFrame& riesz, Complex z, Complex w, double defect_max,
                                   const Tolerances& tol) {
  const std::vector<Index> dims = riesz.block_dims();
  for (Index d : dims) {
    if (d != dims.front()) {
      throw Error(ErrorCode::NonUniformBlocks, "bicoherent_family: blocks must share one dimension K");
    }
  }
  if (!classify(riesz, tol).is_riesz_basis) {
    throw Error(ErrorCode::NotRieszBasis, "bicoherent_family: input is not a g-Riesz basis");
  }

  const CMatrix s = frame_operator(riesz);
  const CMatrix x_inv = herm_func(s, HermFunction::InvSqrt, tol);
  BicoherentFamily fam{z, w, build_fock(riesz.compose(x_inv), tol)};
  fam.s = s;
  fam.s_inv = herm_func(s, HermFunction::Inverse, tol);
  fam.x = herm_func(s, HermFunction::Sqrt, tol);
  fam.x_inv = x_inv;
  fam.condition = condition_number(fam.x);
  require_truncation(fam.fock, z, w, defect_max);
  fam.truncation_defect = truncation_defect(z, w, fam.fock.levels, fam.fock.blocks);

  const Index n = riesz.hilbert_dim();
  auto columns_of = [n](const GFrame& g) {
    const std::vector<CVector> cols = induce_vector_frame(g);
    CMatrix m(n, static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Index>(c)) = cols[c];
    return m;
  };
  fam.u = columns_of(riesz);
  fam.v = columns_of(canonical_dual(riesz, tol));
  fam.p = fam.x_inv * fam.fock.basis;

  // All three families share the renormalization of Phi_Theta.
  const CVector c = grid_coefficients(z, w, fam.fock.levels, fam.fock.blocks);
  const double norm = c.norm();
  fam.phi_lambda = fam.u * c / norm;
  fam.phi_dual = fam.v * c / norm;
  fam.phi_up = fam.p * c / norm;

  const LadderPair base = ladder_ops(fam.fock);
  const CMatrix xh = fam.x.adjoint();
  const CMatrix xh_inv = fam.x_inv.adjoint();
  auto conj_lambda = [&](const CMatrix& op) { return CMatrix(xh * op * xh_inv); };
  auto conj_dual = [&](const CMatrix& op) { return CMatrix(fam.s_inv * xh * op * xh_inv * fam.s); };
  auto conj_up = [&](const CMatrix& op) { return CMatrix(fam.x_inv * op * fam.x); };
  fam.ops_lambda = {conj_lambda(base.a), conj_lambda(base.b)};
  fam.ops_dual = {conj_dual(base.a), conj_dual(base.b)};
  fam.ops_up = {conj_up(base.a), conj_up(base.b)};
  return fam;
}

BicoherentChecks verify_bicoherent(const BicoherentFamily& fam, int radial_nodes,
                                   int angular_nodes) {
  const Complex z = fam.z;
  const int levels = fam.fock.levels;
  const int blocks = fam.fock.blocks;
  const Index n = fam.x.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  BicoherentChecks chk;

  chk.overlap_error = std::abs(fam.phi_lambda.dot(fam.phi_up) - Complex(1.0, 0.0));
  chk.collapse_error = (fam.phi_up - fam.phi_dual).norm();
  chk.dual_basis_error = relative_distance(fam.v, fam.p);
  chk.polar_identity_error = relative_distance(fam.s * fam.x_inv, fam.x.adjoint());
  chk.a_lambda_vs_up = relative_distance(fam.ops_lambda.a, fam.ops_up.a);
  chk.a_dual_vs_up = relative_distance(fam.ops_dual.a, fam.ops_up.a);
  chk.b_lambda_vs_up = relative_distance(fam.ops_lambda.b, fam.ops_up.b);
  chk.b_dual_vs_up = relative_distance(fam.ops_dual.b, fam.ops_up.b);

  double lowering = 0.0;
  for (int l = 0; l < blocks; ++l) {
    for (int k = 0; k < levels; ++k) {
      const Index col = fam.fock.column(k, l);
      const double root = std::sqrt(static_cast<double>(k));
      CVector expect_u = CVector::Zero(n);
      CVector expect_v = CVector::Zero(n);
      if (k > 0) {
        expect_u = root * fam.u.col(col - 1);
        expect_v = root * fam.v.col(col - 1);
      }
      const double scale = std::max(1.0, root) * fam.condition;
      lowering = std::max(lowering, (fam.ops_lambda.a * fam.u.col(col) - expect_u).norm() / scale);
      lowering = std::max(lowering, (fam.ops_dual.a * fam.v.col(col) - expect_v).norm() / scale);
    }
  }
  chk.lowering_error = lowering;

  chk.eigen_residual_lambda = (fam.ops_lambda.a * fam.phi_lambda - z * fam.phi_lambda).norm();
  chk.eigen_residual_dual = (fam.ops_dual.a * fam.phi_dual - z * fam.phi_dual).norm();
  chk.eigen_residual_up = (fam.ops_up.a * fam.phi_up - z * fam.phi_up).norm();
  chk.eigen_residual_bound =
      std::max(spectral_norm(fam.x), spectral_norm(fam.x_inv)) * eigen_residual(z, levels);

  auto biquad = [&](const CMatrix& left, const CMatrix& right) {
    return (bi_quadrature(levels, blocks, left, right, radial_nodes, angular_nodes) - id).norm();
  };
  chk.biquad_lambda_dual = biquad(fam.u, fam.v);
  chk.biquad_dual_lambda = biquad(fam.v, fam.u);
  chk.biquad_lambda_up = biquad(fam.u, fam.p);
  chk.biquad_up_lambda = biquad(fam.p, fam.u);
  return chk;
}

}  // namespace gframe
