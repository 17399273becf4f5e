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

#include "gframe/quadrature.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "gframe/error.hpp"

namespace gframe {

namespace {

/// L_count(x) and L_{count-1}(x) by the three-term recurrence.
std::pair<double, double> laguerre_pair(int count, double x) {
  double prev = 1.0, cur = 1.0 - x;
  if (count == 0) return {1.0, 0.0};
  for (int k = 1; k < count; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

GaussLaguerre gauss_laguerre(int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "gauss_laguerre: need at least one node");
  // Golub-Welsch seeds: diagonal 2i + 1, off-diagonal i + 1.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(count, count);
  for (int i = 0; i < count; ++i) {
    jacobi(i, i) = 2.0 * i + 1.0;
    if (i + 1 < count) {
      jacobi(i, i + 1) = i + 1.0;
      jacobi(i + 1, i) = i + 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);

  GaussLaguerre rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int i = 0; i < count; ++i) {
    double x = solver.eigenvalues()(i);
    // Newton polish on L_n; L_n'(x) = n (L_n - L_{n-1}) / x.
    for (int it = 0; it < 8; ++it) {
      const auto [ln, lm] = laguerre_pair(count, x);
      const double deriv = count * (ln - lm) / x;
      const double step = ln / deriv;
      x -= step;
      if (std::abs(step) <= 1e-16 * x) break;
    }
    const double lnext = laguerre_pair(count + 1, x).first;
    rule.nodes[i] = x;
    rule.weights[i] = x / ((count + 1.0) * (count + 1.0) * lnext * lnext);
  }
  return rule;
}

}  // namespace gframe
