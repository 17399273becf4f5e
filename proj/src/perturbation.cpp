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

#include "gframe/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gframe/random.hpp"

namespace gframe {

namespace {

void require_shapes(const GFrame& a, const GFrame& b, const char* op) {
  if (!a.same_shape(b)) {
    throw Error(ErrorCode::ShapeMismatch, std::string(op) + ": families have different block shapes");
  }
}

}  // namespace

PerturbationReport optimal_m(const GFrame& lambda, const GFrame& theta, const Tolerances& tol) {
  require_shapes(lambda, theta, "optimal_m");
  const FrameBounds bl = frame_bounds(lambda, tol);
  const FrameBounds bt = frame_bounds(theta, tol);
  if (!bl.is_frame || !bt.is_frame) {
    throw Error(ErrorCode::NotAFrame, "optimal_m: both families must be g-frames");
  }
  const CMatrix d = analysis(lambda).matrix - analysis(theta).matrix;
  const CMatrix dd = d.adjoint() * d;

  PerturbationReport r;
  CVector arg_lambda, arg_theta;
  r.m_lambda = max_generalized_eigenvalue(dd, frame_operator(lambda), tol, &arg_lambda);
  r.m_theta = max_generalized_eigenvalue(dd, frame_operator(theta), tol, &arg_theta);
  r.m_opt = std::max(r.m_lambda, r.m_theta);
  r.maximizer = r.m_lambda >= r.m_theta ? arg_lambda : arg_theta;
  r.lower_lambda = bl.lower;
  r.upper_lambda = bl.upper;
  r.guaranteed_lower = bl.lower / (2.0 * r.m_opt + 2.0);
  r.guaranteed_upper = 2.0 * bl.upper * (r.m_opt + 1.0);
  r.actual_lower = bt.lower;
  r.actual_upper = bt.upper;
  return r;
}

double sampled_m(const GFrame& lambda, const GFrame& theta, std::size_t samples,
                 std::uint64_t seed) {
  require_shapes(lambda, theta, "sampled_m");
  const CMatrix tl = analysis(lambda).matrix;
  const CMatrix tt = analysis(theta).matrix;
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = stream_rng(seed, i);
    const CVector f = random_unit_vector(lambda.hilbert_dim(), rng);
    const CVector a = tl * f;
    const CVector b = tt * f;
    const double denom = std::min(a.squaredNorm(), b.squaredNorm());
    if (denom > 0.0) best = std::max(best, (a - b).squaredNorm() / denom);
  }
  return best;
}

OneSidedReport one_sided_m(const GFrame& lambda, const GFrame& theta, const Tolerances& tol) {
  require_shapes(lambda, theta, "one_sided_m");
  const FrameBounds bl = frame_bounds(lambda, tol);
  if (!bl.is_frame) throw Error(ErrorCode::NotAFrame, "one_sided_m: Lambda must be a g-frame");
  const FrameBounds bt = frame_bounds(theta, tol);
  if (!bt.is_frame) {
    throw Error(ErrorCode::DegenerateTheta,
                "one_sided_m: Theta's frame operator is singular; no finite M exists");
  }
  const CMatrix d = analysis(lambda).matrix - analysis(theta).matrix;
  OneSidedReport r;
  r.m3 = max_generalized_eigenvalue(d.adjoint() * d, frame_operator(theta), tol);
  r.lower_bound = bl.lower / (2.0 * r.m3 + 2.0);
  r.actual_lower = bt.lower;
  r.theta_is_frame = classify(theta, tol).is_frame;
  return r;
}

GavrutaReport gavruta_check(const GFrame& lambda, const GFrame& theta, const GavrutaOptions& opts,
                            const Tolerances& tol) {
  require_shapes(lambda, theta, "gavruta_check");
  if (!(opts.m < 1.0)) throw Error(ErrorCode::InvalidArgument, "gavruta_check: m must be < 1");
  if (!(opts.n > -1.0)) throw Error(ErrorCode::InvalidArgument, "gavruta_check: n must be > -1");

  const FrameBounds bl = frame_bounds(lambda, tol);
  const FrameBounds bt = frame_bounds(theta, tol);
  const Index dim = lambda.hilbert_dim();

  GavrutaReport r;
  r.v = analysis(lambda).matrix.adjoint() * analysis(theta).matrix;
  r.b1 = bl.upper;
  r.b2 = bt.upper;
  r.v_norm = spectral_norm(r.v);
  const double v_cap = std::sqrt(r.b1 * r.b2);
  r.v_norm_ok = r.v_norm <= v_cap + tol.eq * std::max(1.0, v_cap);
  r.vacuous_m = opts.m < 0.0;

  const CMatrix defect = CMatrix::Identity(dim, dim) - r.v;
  Eigen::BDCSVD<CMatrix> svd(defect, Eigen::ComputeFullV);
  r.spectral_defect = svd.singularValues()(0);
  const double slack = tol.eq * std::max(1.0, r.v_norm);

  auto premise_ratio = [&](const CVector& f) {
    return ((defect * f).norm() - opts.n * (r.v * f).norm()) / f.norm();
  };

  if (opts.n == 0.0 && r.spectral_defect > opts.m + slack) {
    throw PremiseRefuted("gavruta_check: sigma_max(I - V) = " + std::to_string(r.spectral_defect) +
                             " exceeds m",
                         svd.matrixV().col(0), r.spectral_defect);
  }

  // Singular directions of I - V are deterministic candidates ahead of the random ones.
  r.premise_sup = -std::numeric_limits<double>::infinity();
  CVector witness;
  auto consider = [&](const CVector& f) {
    const double ratio = premise_ratio(f);
    if (ratio > r.premise_sup) {
      r.premise_sup = ratio;
      witness = f;
    }
  };
  for (Index k = 0; k < dim; ++k) consider(svd.matrixV().col(k));
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Rng rng = stream_rng(opts.seed, i);
    consider(random_unit_vector(dim, rng));
  }
  if (r.premise_sup > opts.m + slack) {
    throw PremiseRefuted("gavruta_check: premise fails for a sampled vector (ratio " +
                             std::to_string(r.premise_sup) + ")",
                         witness, r.premise_sup);
  }

  const double ratio = (1.0 - opts.m) / (1.0 + opts.n);
  r.guaranteed_lower_theta = ratio * ratio / r.b1;
  r.actual_lower_theta = bt.lower;
  r.theta_bound_ok =
      r.actual_lower_theta >= r.guaranteed_lower_theta - tol.eq * std::max(1.0, bt.upper);
  if (opts.n == 0.0) {
    r.has_lambda_bound = true;
    r.guaranteed_lower_lambda = (1.0 - opts.m) * (1.0 - opts.m) / r.b2;
    r.actual_lower_lambda = bl.lower;
    r.lambda_bound_ok =
        r.actual_lower_lambda >= r.guaranteed_lower_lambda - tol.eq * std::max(1.0, bl.upper);
  }
  return r;
}

}  // namespace gframe
