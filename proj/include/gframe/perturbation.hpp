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

// Stability of the g-frame property under perturbation of the blocks.

#include <cstdint>
#include <optional>

#include "gframe/gframe.hpp"

namespace gframe {

/// Smallest M with sum||(L_i - Th_i) f||^2 <= M min(sum||L_i f||^2, sum||Th_i f||^2),
/// and the two-sided bounds on Theta implied by it.
struct PerturbationReport {
  double m_lambda = 0.0;  // sup ratio with the Lambda energy in the denominator
  double m_theta = 0.0;   // sup ratio with the Theta energy in the denominator
  double m_opt = 0.0;     // max(m_lambda, m_theta)
  double lower_lambda = 0.0;
  double upper_lambda = 0.0;
  double guaranteed_lower = 0.0;  // A / (2M + 2)
  double guaranteed_upper = 0.0;  // 2B (M + 1)
  double actual_lower = 0.0;      // optimal lower bound of Theta
  double actual_upper = 0.0;
  CVector maximizer;  // unit f attaining m_opt
};

PerturbationReport optimal_m(const GFrame& lambda, const GFrame& theta,
                             const Tolerances& tol = {});

/// Brute-force sup over random unit vectors of the ratio in optimal_m.
double sampled_m(const GFrame& lambda, const GFrame& theta, std::size_t samples,
                 std::uint64_t seed);

struct OneSidedReport {
  double m3 = 0.0;               // sup ||D f||^2 / sum||Th f||^2
  double lower_bound = 0.0;      // A / (2 M3 + 2)
  double actual_lower = 0.0;
  bool theta_is_frame = false;
};

/// Throws NotAFrame (Lambda), DegenerateTheta when S_Theta is singular.
OneSidedReport one_sided_m(const GFrame& lambda, const GFrame& theta,
                           const Tolerances& tol = {});

struct GavrutaOptions {
  double m = 0.0;  // < 1
  double n = 0.0;  // > -1
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

struct GavrutaReport {
  CMatrix v;                    // T_Lambda^H T_Theta
  double b1 = 0.0;              // Bessel bound of Lambda
  double b2 = 0.0;              // Bessel bound of Theta
  double v_norm = 0.0;
  bool v_norm_ok = false;       // ||V|| <= sqrt(B1 B2)
  double premise_sup = 0.0;     // largest sampled (||(I-V)f|| - n||Vf||)/||f||
  double spectral_defect = 0.0; // sigma_max(I - V)
  bool vacuous_m = false;       // m < 0
  double guaranteed_lower_theta = 0.0;  // (1/B1) ((1-m)/(1+n))^2
  double actual_lower_theta = 0.0;
  bool theta_bound_ok = false;
  // Adjoint direction (only when n == 0).
  bool has_lambda_bound = false;
  double guaranteed_lower_lambda = 0.0;  // (1/B2) (1-m)^2
  double actual_lower_lambda = 0.0;
  bool lambda_bound_ok = false;
};

/// Raised when sampling (or the spectral test for n == 0) refutes the premise.
class PremiseRefuted : public Error {
 public:
  PremiseRefuted(const std::string& what, CVector witness, double measured)
      : Error(ErrorCode::PremiseNotVerifiable, what),
        witness_(std::move(witness)), measured_(measured) {}
  const CVector& witness() const noexcept { return witness_; }
  double measured() const noexcept { return measured_; }

 private:
  CVector witness_;
  double measured_;
};

/// Throws InvalidArgument (m >= 1 or n <= -1), ShapeMismatch, PremiseRefuted.
GavrutaReport gavruta_check(const GFrame& lambda, const GFrame& theta,
                            const GavrutaOptions& opts, const Tolerances& tol = {});

}  // namespace gframe
