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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 when every selected criterion passes.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gframe/duality.hpp"
#include "gframe/gcoherent.hpp"
#include "gframe/gframe.hpp"
#include "gframe/hilbert.hpp"
#include "gframe/perturbation.hpp"
#include "gframe/random.hpp"
#include "gframe/spec_io.hpp"

using namespace gframe;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void expect(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---- independent oracles ---------------------------------------------------

double energy(const GFrame& f, const CVector& v) {
  double total = 0.0;
  for (const auto& b : f.blocks()) total += (b * v).squaredNorm();
  return total;
}

CMatrix stacked(const GFrame& f) {
  CMatrix t(f.total_rows(), f.hilbert_dim());
  Index row = 0;
  for (const auto& b : f.blocks()) {
    t.middleRows(row, b.rows()) = b;
    row += b.rows();
  }
  return t;
}

CMatrix block_sum(const GFrame& left, const GFrame& right) {
  CMatrix s = CMatrix::Zero(left.hilbert_dim(), left.hilbert_dim());
  for (std::size_t j = 0; j < left.size(); ++j) s += left.block(j).adjoint() * right.block(j);
  return s;
}

/// Ascending eigenvalues of a Hermitian matrix, straight from Eigen.
RVector spectrum(const CMatrix& h) {
  return Eigen::SelfAdjointEigenSolver<CMatrix>(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly).eigenvalues();
}

CMatrix hermitian_sqrt(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h + h.adjoint()));
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().cast<Complex>().asDiagonal() *
         es.eigenvectors().adjoint();
}

double opnorm(const CMatrix& m) { return Eigen::BDCSVD<CMatrix>(m).singularValues()(0); }

double rel(const CMatrix& a, const CMatrix& b) {
  const double scale = std::max(a.norm(), b.norm());
  return scale == 0.0 ? 0.0 : (a - b).norm() / scale;
}

// ---- generators ------------------------------------------------------------

/// Random g-frame with n <= 16 and J <= 8 blocks, enough rows to span.
GFrame random_frame(std::uint64_t index) {
  Rng rng = stream_rng(1001, index);
  std::uniform_int_distribution<Index> pick_n(1, 16);
  std::uniform_int_distribution<int> pick_j(1, 8);
  const Index n = pick_n(rng);
  const int count = pick_j(rng);
  const Index base = (n + count - 1) / count;
  std::uniform_int_distribution<Index> pick_rows(base, base + 2);
  std::vector<CMatrix> blocks;
  for (int j = 0; j < count; ++j) blocks.push_back(random_complex_matrix(pick_rows(rng), n, rng));
  return GFrame(n, std::move(blocks));
}

/// Redundant g-frame: total rows exceed n.
GFrame random_redundant(Index n, Rng& rng) {
  std::uniform_int_distribution<Index> extra(1, 4), height(1, 3);
  const Index total = n + extra(rng);
  std::vector<Index> dims;
  for (Index left = total; left > 0;) {
    const Index d = std::min(left, height(rng));
    dims.push_back(d);
    left -= d;
  }
  return GFrame::from_stacked(random_complex_matrix(total, n, rng), dims);
}

std::vector<Index> partition(Index n, Rng& rng) {
  std::uniform_int_distribution<Index> height(1, 3);
  std::vector<Index> dims;
  for (Index left = n; left > 0;) {
    const Index d = std::min(left, height(rng));
    dims.push_back(d);
    left -= d;
  }
  return dims;
}

CMatrix invertible_with_condition(Index n, double cond, Rng& rng) {
  RVector sigma = RVector::LinSpaced(n, 1.0, cond);
  return random_unitary(n, rng) * sigma.cast<Complex>().asDiagonal() * random_unitary(n, rng).adjoint();
}

GFrame uniform_gon(int levels, int blocks, Rng* rng) {
  const Index n = static_cast<Index>(levels) * blocks;
  const std::vector<Index> dims(static_cast<std::size_t>(blocks), levels);
  if (rng == nullptr) return make_gon_basis(n, dims);
  return make_gon_basis(n, dims, random_unitary(n, *rng));
}

// ---- criteria --------------------------------------------------------------

Outcome frame_inequality() {
  Outcome o;
  const Stopwatch clock;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < 20; ++i) {
    const GFrame f = random_frame(i);
    const FrameBounds b = frame_bounds(f);
    Rng rng = stream_rng(1002, i);
    for (int s = 0; s < 200; ++s) {
      const CVector v = random_unit_vector(f.hilbert_dim(), rng);
      const double e = energy(f, v);
      worst = std::max(worst, std::max(b.lower - e, e - b.upper) / b.upper);
    }
  }
  const double t = clock.seconds();
  o.expect(worst <= 1e-9, "A||f||^2 <= sum ||L_j f||^2 <= B||f||^2 over 20 x 200: worst relative excess " +
                              sci(worst) + " (tol 1e-9)");
  o.expect(t < 5.0, "runtime " + sci(t) + " s (limit 5 s)");
  return o;
}

Outcome resolution_of_identity() {
  Outcome o;
  double worst = 0.0, worst_adj = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const GFrame f = random_frame(i);
    const GFrame dual = canonical_dual(f);
    const CMatrix id = CMatrix::Identity(f.hilbert_dim(), f.hilbert_dim());
    worst = std::max(worst, opnorm(block_sum(f, dual) - id));
    worst_adj = std::max(worst_adj, opnorm(block_sum(dual, f) - id));
  }
  o.expect(worst <= 1e-9, "||sum L_j^H Ld_j - I|| worst " + sci(worst) + " (tol 1e-9)");
  o.expect(worst_adj <= 1e-9, "||sum Ld_j^H L_j - I|| worst " + sci(worst_adj) + " (tol 1e-9)");
  return o;
}

Outcome canonical_dual_bounds() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const GFrame f = random_frame(i);
    const RVector sf = spectrum(block_sum(f, f));
    const GFrame dual = canonical_dual(f);
    const RVector sd = spectrum(block_sum(dual, dual));
    const double a = sf(0), b = sf(sf.size() - 1);
    worst = std::max(worst, std::abs(sd(0) - 1.0 / b) * b);
    worst = std::max(worst, std::abs(sd(sd.size() - 1) - 1.0 / a) * a);
  }
  o.expect(worst <= 1e-8, "dual bounds vs (1/B, 1/A): worst relative error " + sci(worst) + " (tol 1e-8)");
  return o;
}

Outcome riesz_classification() {
  Outcome o;
  int errors = 0;
  double worst_parseval = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = stream_rng(1004, i);
    std::uniform_int_distribution<Index> pick_n(2, 12);
    const Index n = pick_n(rng);
    const bool riesz = i % 2 == 0;
    GFrame f = riesz ? make_griesz(make_gon_basis(n, partition(n, rng), random_unitary(n, rng)),
                                   invertible_with_condition(n, 1.0 + 9.0 * (i % 5) / 4.0, rng))
                     : random_redundant(n, rng);
    const Classification c = classify(f);
    if (c.is_riesz_basis != riesz || !c.is_frame) ++errors;
    if (riesz) {
      const GFrame p = parseval_transform(f);
      const CMatrix t = stacked(p);
      worst_parseval = std::max(worst_parseval, rel(t * t.adjoint(), CMatrix::Identity(t.rows(), t.rows())));
      worst_parseval = std::max(worst_parseval, rel(t.adjoint() * t, CMatrix::Identity(n, n)));
      if (!classify(p).is_on_basis) ++errors;
    }
  }
  o.expect(errors == 0, "classification errors over 50 cases: " + std::to_string(errors));
  o.expect(worst_parseval <= 1e-9,
           "Parseval transform of g-Riesz inputs is g-orthonormal: worst " + sci(worst_parseval) + " (tol 1e-9)");
  return o;
}

Outcome alternate_duals() {
  Outcome o;
  double worst_dual = 0.0, min_separation = std::numeric_limits<double>::infinity();
  double worst_minimality = -std::numeric_limits<double>::infinity();
  int gram_ok = 0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    Rng rng = stream_rng(1005, i);
    const Index n = 1 + static_cast<Index>(i % 8);
    const GFrame f = random_redundant(n, rng);
    const GFrame alt = construct_alternate_dual(f, random_unit_vector(n, rng), i);
    const GFrame canon = canonical_dual(f);
    worst_dual = std::max(worst_dual, opnorm(block_sum(alt, f) - CMatrix::Identity(n, n)));
    double separation = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
      separation = std::max(separation, opnorm(alt.block(j) - canon.block(j)));
    min_separation = std::min(min_separation, separation);
    for (int s = 0; s < 50; ++s) {
      const CVector v = random_unit_vector(n, rng);
      const double g = energy(alt, v);
      worst_minimality = std::max(worst_minimality, (energy(canon, v) - g) / g);
    }
    if (gram_characterization(f, canon, alt) && !gram_characterization(f, alt, canon)) ++gram_ok;
  }
  o.expect(worst_dual <= 1e-9, "alternate duals verified: worst ||T_G^H T_L - I|| " + sci(worst_dual));
  o.expect(min_separation > 1e-6, "smallest distance to canonical " + sci(min_separation) + " (> 1e-6)");
  o.expect(worst_minimality <= 1e-10,
           "||T_can f|| <= ||T_alt f|| on 10 x 50 vectors: worst relative excess " + sci(worst_minimality) +
               " (tol 1e-10)");
  o.expect(gram_ok == 10, "gram characterization separates canonical from alternate in " +
                              std::to_string(gram_ok) + "/10");
  return o;
}

/// ||(T_L - T_Th) f||^2 / ||T_den f||^2.
double quotient(const CMatrix& diff, const CMatrix& den, const CVector& f) {
  return (diff * f).squaredNorm() / (den * f).squaredNorm();
}

/// Best of 10^4 random unit vectors, then a random-perturbation hill climb.
std::pair<double, double> brute_force_sup(const CMatrix& diff, const CMatrix& den, Rng& rng) {
  const Index n = diff.cols();
  CVector best = random_unit_vector(n, rng);
  double best_value = quotient(diff, den, best);
  for (int s = 1; s < 10000; ++s) {
    const CVector v = random_unit_vector(n, rng);
    const double q = quotient(diff, den, v);
    if (q > best_value) {
      best_value = q;
      best = v;
    }
  }
  const double sampled = best_value;
  for (double step = 0.1; step > 1e-9; step *= 0.5) {
    for (int trial = 0; trial < 200; ++trial) {
      CVector v = best + step * random_unit_vector(n, rng);
      v.normalize();
      const double q = quotient(diff, den, v);
      if (q > best_value) {
        best_value = q;
        best = v;
      }
    }
  }
  return {sampled, best_value};
}

/// M = max of the two one-sided suprema, each maximized on its own.
std::pair<double, double> brute_force_m(const CMatrix& tl, const CMatrix& tt, Rng& rng) {
  const CMatrix diff = tl - tt;
  const auto [sl, pl] = brute_force_sup(diff, tl, rng);
  const auto [st, pt] = brute_force_sup(diff, tt, rng);
  return {std::max(sl, st), std::max(pl, pt)};
}

Outcome optimal_m_vs_brute_force() {
  Outcome o;
  double worst = 0.0, worst_sampled = 0.0;
  int bound_ok = 0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    Rng rng = stream_rng(1006, i);
    const Index n = 1 + static_cast<Index>(i % 4);
    const GFrame lambda = random_redundant(n, rng);
    std::vector<CMatrix> noisy;
    for (const auto& b : lambda.blocks()) noisy.push_back(b + 0.3 * random_complex_matrix(b.rows(), n, rng));
    const GFrame theta(n, std::move(noisy));
    const PerturbationReport r = optimal_m(lambda, theta);
    const auto [sampled, polished] = brute_force_m(stacked(lambda), stacked(theta), rng);
    worst = std::max(worst, std::abs(polished - r.m_opt) / r.m_opt);
    worst_sampled = std::max(worst_sampled, std::abs(sampled - r.m_opt) / r.m_opt);
    const double actual = spectrum(block_sum(theta, theta))(0);
    if (r.guaranteed_lower <= actual) ++bound_ok;
  }
  o.expect(worst <= 1e-5, "eigenvalue M vs brute-force maximum: worst relative gap " + sci(worst) +
                              " (tol 1e-5; raw 10^4-sample gap " + sci(worst_sampled) + ")");
  o.expect(bound_ok == 10, "A/(2M+2) <= lower bound of Theta in " + std::to_string(bound_ok) + "/10");
  return o;
}

Outcome gavruta_bounds() {
  Outcome o;
  int theta_ok = 0, lambda_ok = 0, norm_ok = 0, premise_ok = 0;
  double worst_premise = 0.0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    Rng rng = stream_rng(1007, i);
    const Index n = 2 + static_cast<Index>(i % 6);
    const GFrame lambda = random_redundant(n, rng);
    const double m = 0.05 + 0.09 * static_cast<double>(i);
    // Theta = canonical dual composed with (I - E), plus a component orthogonal to Range(T_Lambda).
    CMatrix e = random_complex_matrix(n, n, rng);
    e *= m / opnorm(e);
    const CMatrix tl = stacked(lambda);
    const CMatrix ortho = CMatrix::Identity(tl.rows(), tl.rows()) - tl * (tl.adjoint() * tl).inverse() * tl.adjoint();
    const CMatrix tt = tl * (tl.adjoint() * tl).inverse() * (CMatrix::Identity(n, n) - e) +
                       0.5 * ortho * random_complex_matrix(tl.rows(), n, rng);
    const GFrame theta = GFrame::from_stacked(tt, lambda.block_dims());

    const CMatrix v = tl.adjoint() * tt;
    const double sigma = opnorm(CMatrix::Identity(n, n) - v);
    worst_premise = std::max(worst_premise, std::abs(sigma - m));
    const RVector sl = spectrum(tl.adjoint() * tl), st = spectrum(tt.adjoint() * tt);
    const double b1 = sl(n - 1), b2 = st(n - 1);
    if ((1.0 / b1) * (1 - m) * (1 - m) <= st(0)) ++theta_ok;
    if ((1.0 / b2) * (1 - m) * (1 - m) <= sl(0)) ++lambda_ok;
    if (opnorm(v) <= std::sqrt(b1 * b2) + 1e-9) ++norm_ok;

    const GavrutaReport r = gavruta_check(lambda, theta, {.m = m, .n = 0.0, .samples = 1000, .seed = i});
    if (r.theta_bound_ok && r.lambda_bound_ok && r.v_norm_ok) ++premise_ok;
  }
  o.expect(worst_premise <= 1e-12, "constructed pairs have sigma_max(I - V) = m: worst deviation " + sci(worst_premise));
  o.expect(theta_ok == 10, "(1/B1)(1-m)^2 <= lower bound of Theta in " + std::to_string(theta_ok) + "/10");
  o.expect(lambda_ok == 10, "(1/B2)(1-m)^2 <= lower bound of Lambda in " + std::to_string(lambda_ok) + "/10");
  o.expect(norm_ok == 10, "||V|| <= sqrt(B1 B2) + 1e-9 in " + std::to_string(norm_ok) + "/10");
  o.expect(premise_ok == 10, "library gavruta_check agrees in " + std::to_string(premise_ok) + "/10");
  return o;
}

Outcome quadrature_identity_grid() {
  Outcome o;
  const Stopwatch clock;
  double worst = 0.0;
  for (int levels = 1; levels <= 5; ++levels) {
    for (int blocks = 1; blocks <= 5; ++blocks) {
      Rng rng = stream_rng(1008, static_cast<std::uint64_t>(levels * 8 + blocks));
      const FockStructure fs = build_fock(uniform_gon(levels, blocks, &rng));
      const NodeCounts need = required_nodes(levels, blocks);
      const Index dim = static_cast<Index>(levels) * blocks;
      worst = std::max(worst, (quadrature_identity(fs, need.radial, need.angular) - CMatrix::Identity(dim, dim)).norm());
    }
  }
  const double t = clock.seconds();
  o.expect(worst <= 1e-10, "||Q - I|| over (K, L) in {1..5}^2 at threshold nodes: worst " + sci(worst) +
                               " (tol 1e-10)");
  o.expect(t < 10.0, "runtime " + sci(t) + " s (limit 10 s)");
  return o;
}

std::vector<std::pair<Complex, Complex>> labels(std::uint64_t stream, int count, double radius) {
  Rng rng = stream_rng(stream, 0);
  std::uniform_real_distribution<double> r01(0.0, 1.0), angle(0.0, 2.0 * M_PI);
  std::vector<std::pair<Complex, Complex>> out{{std::polar(radius, 0.3), std::polar(radius, 2.0)}};
  while (static_cast<int>(out.size()) < count) {
    out.emplace_back(std::polar(radius * std::sqrt(r01(rng)), angle(rng)),
                     std::polar(radius * std::sqrt(r01(rng)), angle(rng)));
  }
  return out;
}

Outcome eigen_relations() {
  Outcome o;
  const FockStructure fs = build_fock(uniform_gon(30, 30, nullptr));
  const LadderPair ops = ladder_ops(fs);
  double worst_a = 0.0, worst_b = 0.0;
  for (const auto& [z, w] : labels(1009, 10, 1.0)) {
    const CVector phi = coherent_state(fs, z, w).vector;
    worst_a = std::max(worst_a, (ops.a * phi - z * phi).norm());
    worst_b = std::max(worst_b, (ops.b * phi - w * phi).norm());
  }
  o.expect(worst_a <= 1e-10, "||a Phi - z Phi|| at K = L = 30, |z|, |w| <= 1: worst " + sci(worst_a) + " (tol 1e-10)");
  o.expect(worst_b <= 1e-10, "||b Phi - w Phi||: worst " + sci(worst_b) + " (tol 1e-10)");
  return o;
}

Outcome uncertainty_saturation() {
  Outcome o;
  Rng rng = stream_rng(1010, 0);
  const FockStructure fs = build_fock(uniform_gon(20, 20, &rng));
  double worst = 0.0;
  for (const auto& [z, w] : labels(1010, 10, 1.5)) {
    if (truncation_defect(z, w, fs.levels, fs.blocks) > 1e-10) {
      o.expect(false, "label outside the 1e-10 defect region");
      continue;
    }
    const UncertaintyProducts u = uncertainty_product(fs, z, w);
    worst = std::max({worst, std::abs(u.a - 0.5), std::abs(u.b - 0.5)});
  }
  const UncertaintyProducts origin = uncertainty_product(fs, 0.0, 0.0);
  const double at_origin = std::max(std::abs(origin.a - 0.5), std::abs(origin.b - 0.5));
  o.expect(worst <= 1e-6, "|dq dp - 1/2| over 10 label pairs: worst " + sci(worst) + " (tol 1e-6)");
  o.expect(at_origin <= 1e-12, "|dq dp - 1/2| at z = w = 0: " + sci(at_origin) + " (tol 1e-12)");
  return o;
}

Outcome bicoherent_collapse() {
  Outcome o;
  double collapse = 0.0, overlap = 0.0, biquad = 0.0, a_lambda = 0.0, a_dual = 0.0;
  constexpr int kLevels = 3, kBlocks = 3;
  for (std::uint64_t i = 0; i < 10; ++i) {
    Rng rng = stream_rng(1011, i);
    const Index n = kLevels * kBlocks;
    const double cond = 1.0 + 9.0 * static_cast<double>(i + 1) / 10.0;
    const GFrame riesz = make_griesz(uniform_gon(kLevels, kBlocks, &rng), invertible_with_condition(n, cond, rng));
    std::uniform_real_distribution<double> coord(-0.03, 0.03);
    const Complex z(coord(rng), coord(rng)), w(coord(rng), coord(rng));
    const BicoherentFamily fam = bicoherent_family(riesz, z, w);
    const NodeCounts need = required_nodes(kLevels, kBlocks);
    const BicoherentChecks chk = verify_bicoherent(fam, need.radial, need.angular);
    collapse = std::max(collapse, chk.collapse_error);
    overlap = std::max(overlap, chk.overlap_error);
    biquad = std::max({biquad, chk.biquad_lambda_dual, chk.biquad_dual_lambda, chk.biquad_lambda_up,
                       chk.biquad_up_lambda});

    // Operators rebuilt from scratch: X = S^{1/2}, a on the basis theta_l^H e_k of theta = Lambda X^-1.
    const CMatrix x = hermitian_sqrt(block_sum(riesz, riesz));
    const CMatrix x_inv = x.inverse();
    CMatrix t(n, n), shifted = CMatrix::Zero(n, n);
    for (int l = 0; l < kBlocks; ++l) {
      const CMatrix theta_l = riesz.block(static_cast<std::size_t>(l)) * x_inv;
      for (int k = 0; k < kLevels; ++k) t.col(l * kLevels + k) = theta_l.row(k).adjoint();
    }
    for (int l = 0; l < kBlocks; ++l)
      for (int k = 1; k < kLevels; ++k) shifted.col(l * kLevels + k) = std::sqrt(double(k)) * t.col(l * kLevels + k - 1);
    const CMatrix a = shifted * t.adjoint();
    const CMatrix s = x * x;
    const CMatrix op_lambda = x.adjoint() * a * x.adjoint().inverse();
    const CMatrix op_dual = s.inverse() * x.adjoint() * a * x.adjoint().inverse() * s;
    const CMatrix op_up = x_inv * a * x;
    a_lambda = std::max(a_lambda, (op_lambda - op_up).norm() / op_lambda.norm());
    a_dual = std::max(a_dual, (op_dual - op_up).norm() / op_dual.norm());
  }
  o.expect(collapse <= 1e-9, "||Phi_up - Phi_dual|| worst " + sci(collapse) + " (tol 1e-9)");
  o.expect(overlap <= 1e-9, "|<Phi_L, Phi_up> - 1| worst " + sci(overlap) + " (tol 1e-9)");
  o.expect(biquad <= 1e-8, "bi-quadrature identity ||Q - I|| worst " + sci(biquad) + " (tol 1e-8)");
  o.expect(a_lambda <= 1e-9, "a_L = a_up: worst relative difference " + sci(a_lambda) + " (tol 1e-9)");
  o.lines.push_back("info a_dual = a_up: worst relative difference " + sci(a_dual));
  return o;
}

// ---- criterion 12 ----------------------------------------------------------

double adversarial_double(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::normal_distribution<double> normal;
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<std::uint64_t> bits;
      double v = 0.0;
      do {
        v = std::bit_cast<double>(bits(rng));
      } while (!std::isfinite(v));
      return v;
    }
    case 1:
      return normal(rng) * 1e-310;
    case 2:
      return -0.0;
    case 3:
      return std::nextafter(1.0, 2.0) * normal(rng);
    default:
      return normal(rng);
  }
}

GFrame adversarial_frame(std::uint64_t index) {
  Rng rng = stream_rng(1012, index);
  std::uniform_int_distribution<Index> pick_n(1, 6), pick_rows(1, 3);
  std::uniform_int_distribution<int> pick_j(1, 4);
  const Index n = pick_n(rng);
  std::vector<CMatrix> blocks;
  for (int j = pick_j(rng); j > 0; --j) {
    CMatrix b(pick_rows(rng), n);
    for (Index r = 0; r < b.rows(); ++r)
      for (Index c = 0; c < n; ++c) b(r, c) = Complex(adversarial_double(rng), adversarial_double(rng));
    blocks.push_back(std::move(b));
  }
  return GFrame(n, std::move(blocks));
}

bool bitwise_equal(const GFrame& a, const GFrame& b) {
  if (!a.same_shape(b)) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const CMatrix& x = a.block(j);
    const CMatrix& y = b.block(j);
    if (std::memcmp(x.data(), y.data(), sizeof(Complex) * static_cast<std::size_t>(x.size())) != 0) return false;
  }
  return true;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = "'" GFRAME_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome round_trip_and_determinism() {
  Outcome o;
  int lossless = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const FrameSpec spec{adversarial_frame(i), "frame " + std::to_string(i), std::nullopt};
    const std::string text = serialize_spec(spec);
    const FrameSpec back = parse_spec(text);
    if (bitwise_equal(spec.frame, back.frame) && back.name == spec.name && serialize_spec(back) == text) ++lossless;
  }
  o.expect(lossless == 100, "lossless serialize/parse round trips: " + std::to_string(lossless) + "/100");

  namespace fs = std::filesystem;
  const fs::path dir(GFRAME_WORK_DIR);
  fs::create_directories(dir);
  int identical = 0, runs = 0;
  std::vector<std::string> paths;
  for (std::uint64_t i = 0; i < 4; ++i) {
    Rng rng = stream_rng(1013, i);
    const GFrame f = i % 2 == 0 ? random_redundant(2 + static_cast<Index>(i), rng)
                                : make_griesz(uniform_gon(2, 2, &rng), invertible_with_condition(4, 3.0, rng));
    const fs::path p = dir / ("frame" + std::to_string(i) + ".frame");
    std::ofstream(p) << serialize_spec({f, "frame" + std::to_string(i), std::nullopt});
    paths.push_back("'" + p.string() + "'");
  }
  std::vector<std::string> commands;
  for (const auto& p : paths) commands.push_back("all " + p + " --seed 42 --samples 100");
  commands.push_back("alt-dual " + paths[0] + " --seed 9");
  commands.push_back("perturb " + paths[0] + " " + paths[0] + " --seed 3 --samples 500");
  for (const auto& cmd : commands) {
    const auto first = run_cli(cmd);
    const auto second = run_cli(cmd);
    ++runs;
    if (first.first >= 0 && first.first <= 1 && !first.second.empty() && first == second) ++identical;
  }
  o.expect(identical == runs, "repeated seeded CLI runs byte-identical: " + std::to_string(identical) + "/" +
                                  std::to_string(runs));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "frame-inequality sampling", frame_inequality},
      {2, "resolution of identity", resolution_of_identity},
      {3, "canonical dual bounds", canonical_dual_bounds},
      {4, "Riesz classification ground truth", riesz_classification},
      {5, "alternate dual", alternate_duals},
      {6, "optimal M", optimal_m_vs_brute_force},
      {7, "Gavruta bounds", gavruta_bounds},
      {8, "coherent-state identity", quadrature_identity_grid},
      {9, "eigen-relations", eigen_relations},
      {10, "uncertainty saturation", uncertainty_saturation},
      {11, "bi-coherent collapse", bicoherent_collapse},
      {12, "CLI round-trip and determinism", round_trip_and_determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria().size())) {
    std::cerr << "criterion must be in 1.." << criteria().size() << "\n";
    return 2;
  }

  bool all_pass = true;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Outcome out;
    const Stopwatch clock;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    all_pass = all_pass && out.pass;
    std::printf("%s criterion %2d: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.title, clock.seconds());
    for (const auto& line : out.lines) std::printf("       %s\n", line.c_str());
  }
  return all_pass ? 0 : 1;
}
