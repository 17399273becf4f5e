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

// Two-index coherent states over a g-on basis, truncated to K levels per block
// and L blocks, with their ladder operators and resolutions of the identity.
//
// Basis vector t_k^(l) = theta_l^H e_k^(l) is column l * K + k of
// FockStructure::basis. States are renormalized after truncation; the
// discarded probability mass is reported as the truncation defect.

#include <utility>

#include "gframe/gframe.hpp"

namespace gframe {

struct FockStructure {
  int levels = 0;  // K: Fock levels per block (index k)
  int blocks = 0;  // L: number of blocks (index l)
  CMatrix basis;   // n x (K L), orthonormal columns
  GFrame source;

  Index column(int k, int l) const noexcept { return static_cast<Index>(l) * levels + k; }
};

/// Throws NotOnBasis, NonUniformBlocks.
FockStructure build_fock(const GFrame& gon, const Tolerances& tol = {});

/// e^{-x} sum_{k > top} x^k / k!: the Poisson mass above level `top`.
double poisson_tail(int top, double x);

/// 1 - P(K-1; |z|^2) P(L-1; |w|^2), the mass discarded by truncating to K x L levels.
double truncation_defect(Complex z, Complex w, int levels, int blocks);

/// Smallest (K, L) whose truncation defect is at most `defect_max`.
std::pair<int, int> required_truncation(Complex z, Complex w, double defect_max);

inline constexpr double kDefaultDefectMax = 1e-8;

struct CoherentState {
  Complex z;
  Complex w;
  CVector vector;                 // unit norm
  double truncation_defect = 0.0;
  double raw_mass = 0.0;          // squared norm before renormalization, with N(z,w) = e^{-(|z|^2+|w|^2)/2}
};

/// Coefficients z^k / sqrt(k!) for k < levels.
CVector coherent_coefficients(Complex z, int levels);

/// Truncated double series over t_k^(l). Throws TruncationTooSevere (the message
/// names the K, L that would meet `defect_max`).
CoherentState coherent_state(const FockStructure& fs, Complex z, Complex w,
                             double defect_max = kDefaultDefectMax);

/// Same state assembled as sum_l w^l / sqrt(l!) theta_l^H chi_l(z), with chi_l a
/// standard coherent state in block l.
CVector coherent_state_factorized(const FockStructure& fs, Complex z, Complex w,
                                  double defect_max = kDefaultDefectMax);

struct LadderPair {
  CMatrix a;  // t_k^(l) -> sqrt(k) t_{k-1}^(l)
  CMatrix b;  // t_k^(l) -> sqrt(l) t_k^(l-1)
};

LadderPair ladder_ops(const FockStructure& fs);

/// ||a Phi - z Phi|| for the truncated, renormalized state: only the top level
/// k = K-1 loses its image, giving |z|^K / sqrt((K-1)!) / sqrt(sum_{k<K} |z|^{2k}/k!).
double eigen_residual(Complex z, int levels);

/// Node counts at which the angular and radial rules integrate the truncated
/// integrand exactly.
struct NodeCounts {
  int radial = 0;
  int angular = 0;
};
NodeCounts required_nodes(int levels, int blocks);

/// (1/pi^2) int int |Phi_left(z,w)><Phi_right(z,w)| dz dw with unnormalized
/// states sum c_k(z) c_l(w) column(k,l); the Gaussian weight is folded into the
/// Gauss-Laguerre measure in u = |z|^2 and the angles use a uniform grid.
/// Throws InsufficientNodes.
CMatrix bi_quadrature(int levels, int blocks, const CMatrix& left, const CMatrix& right,
                      int radial_nodes, int angular_nodes);

/// bi_quadrature of the Fock basis with itself; equals the identity.
CMatrix quadrature_identity(const FockStructure& fs, int radial_nodes, int angular_nodes);

struct UncertaintyProducts {
  double a = 0.0;  // Delta q_a * Delta p_a
  double b = 0.0;  // Delta q_b * Delta p_b
};

inline constexpr double kUncertaintyDefectMax = 1e-10;

/// Throws TruncationTooSevere when the defect exceeds 1e-10.
UncertaintyProducts uncertainty_product(const FockStructure& fs, Complex z, Complex w);

/// Coherent families attached to a g-Riesz basis Lambda_j = theta_j X, with X the
/// positive square root of S (polar factor fixed to the identity).
struct BicoherentFamily {
  Complex z;
  Complex w;
  FockStructure fock;  // built on theta = Lambda X^-1
  CMatrix x{};
  CMatrix x_inv{};
  CMatrix s{};
  CMatrix s_inv{};
  CMatrix u{};  // columns Lambda_l^H e_k^(l)
  CMatrix v{};  // columns (canonical dual)_l^H e_k^(l)
  CMatrix p{};  // columns X^-1 t_k^(l)
  CVector phi_lambda{};
  CVector phi_dual{};
  CVector phi_up{};
  LadderPair ops_lambda{};  // X^H a (X^H)^-1
  LadderPair ops_dual{};    // S^-1 X^H a (X^H)^-1 S
  LadderPair ops_up{};      // X^-1 a X
  double truncation_defect = 0.0;
  double condition = 1.0;  // cond(X)
};

/// Throws NotRieszBasis, NonUniformBlocks, TruncationTooSevere.
BicoherentFamily bicoherent_family(const GFrame& riesz, Complex z, Complex w,
                                   double defect_max = kDefaultDefectMax,
                                   const Tolerances& tol = {});

struct BicoherentChecks {
  double overlap_error = 0.0;         // |<Phi_lambda, Phi_up> - 1|
  double collapse_error = 0.0;        // ||Phi_up - Phi_dual||
  double dual_basis_error = 0.0;      // ||V - P||_F relative
  double polar_identity_error = 0.0;  // ||S X^-1 - X^H|| relative
  double a_lambda_vs_up = 0.0;        // ||a_lambda - a_up|| / ||a_lambda||
  double a_dual_vs_up = 0.0;          // ||a_dual - a_up|| / ||a_dual||
  double b_lambda_vs_up = 0.0;
  double b_dual_vs_up = 0.0;
  double lowering_error = 0.0;        // max over a_lambda u, a_dual v columns
  double eigen_residual_lambda = 0.0;
  double eigen_residual_dual = 0.0;
  double eigen_residual_up = 0.0;
  double eigen_residual_bound = 0.0;  // max(||X||, ||X^-1||) times the truncation residual
  double biquad_lambda_dual = 0.0;    // ||int |Phi_L><Phi_Ld| - I||
  double biquad_dual_lambda = 0.0;
  double biquad_lambda_up = 0.0;
  double biquad_up_lambda = 0.0;
};

BicoherentChecks verify_bicoherent(const BicoherentFamily& family, int radial_nodes,
                                   int angular_nodes);

}  // namespace gframe
