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

// gframe: command-line front end over the C API.
//
//   gframe <command> [flags] <files...>
//
// Reports go to stdout (or --out), diagnostics to stderr.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gframe/gframe_c.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using Complex = std::complex<double>;

enum ExitCode { kAllPass = 0, kCheckFailed = 1, kInputError = 2, kNumericalFailure = 3 };

constexpr double kInequalitySlack = 1e-9;
constexpr double kResolutionTol = 1e-9;
constexpr double kDualBoundsTol = 1e-8;
constexpr double kAltDualSeparation = 1e-6;
constexpr double kMinimalityTol = 1e-10;
constexpr double kSampledMTol = 1e-9;
constexpr double kVNormSlack = 1e-9;
constexpr double kIdentityTol = 1e-10;
constexpr double kEigenSlack = 1e-10;
constexpr double kUncertaintyTol = 1e-6;
constexpr double kCollapseTol = 1e-9;
constexpr double kOverlapTol = 1e-9;
constexpr double kBiquadTol = 1e-8;
constexpr double kOperatorTol = 1e-9;

class ApiFailure : public std::runtime_error {
 public:
  ApiFailure(gf_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  gf_status status() const noexcept { return status_; }

 private:
  gf_status status_;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void call(gf_status status) {
  if (status != GF_OK) throw ApiFailure(status, gf_last_error_message());
}

int exit_code_for(gf_status status) {
  switch (status) {
    case GF_ERR_NON_FINITE:
    case GF_ERR_NOT_HERMITIAN:
    case GF_ERR_NOT_POSITIVE_DEFINITE:
    case GF_ERR_SINGULAR:
    case GF_ERR_INTERNAL:
      return kNumericalFailure;
    default:
      return kInputError;
  }
}

struct FrameDeleter {
  void operator()(gf_frame* f) const { gf_frame_release(f); }
};
struct FockDeleter {
  void operator()(gf_fock* f) const { gf_fock_release(f); }
};
using Frame = std::unique_ptr<gf_frame, FrameDeleter>;
using Fock = std::unique_ptr<gf_fock, FockDeleter>;

struct Options {
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::string out;
  bool human = false;
  std::vector<std::string> files;
  std::string emit;
  std::string g0;
  std::optional<double> m;
  double n = 0.0;
  std::string z = "0";
  std::string w = "0";
  std::optional<int> levels;
  std::optional<int> blocks;
  std::string check = "all";
  std::optional<int> radial;
  std::optional<int> angular;
  double defect_max = 1e-8;
};

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i".
Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  auto fail = [&]() -> Complex { throw InputError("cannot parse complex number '" + raw + "'"); };
  if (s.empty()) return fail();
  if (s.back() != 'i' && s.back() != 'j') {
    std::size_t used = 0;
    double re = 0.0;
    try {
      re = std::stod(s, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != s.size()) return fail();
    return {re, 0.0};
  }
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto number = [&](const std::string& part) -> double {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != part.size()) fail();
    return v;
  };
  if (split == std::string::npos) return {0.0, number(s)};
  return {number(s.substr(0, split)), number(s.substr(split))};
}

std::vector<Complex> parse_complex_list(const std::string& raw) {
  std::vector<Complex> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  return out;
}

gf_tolerances make_tolerances(const Options& opts) {
  gf_tolerances tol = gf_default_tolerances();
  if (const char* env = std::getenv("GFRAME_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      throw InputError(std::string("GFRAME_TOL must be a positive number, got '") + env + "'");
    }
    tol.eq = v;
  }
  if (opts.tol) {
    if (!(*opts.tol > 0.0) || !std::isfinite(*opts.tol)) throw InputError("--tol must be positive");
    tol.eq = *opts.tol;
  }
  return tol;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Frame load_frame(const std::string& path) {
  const std::string text = read_file(path);
  gf_frame* raw = nullptr;
  const gf_status status = gf_frame_from_json(text.c_str(), &raw);
  if (status != GF_OK) throw ApiFailure(status, path + ": " + gf_last_error_message());
  Frame f(raw);
  if (std::string(gf_frame_name(f.get())).empty()) {
    call(gf_frame_set_name(f.get(), std::filesystem::path(path).stem().string().c_str()));
  }
  return f;
}

void write_frame(const gf_frame* frame, const std::string& path) {
  char* text = nullptr;
  call(gf_frame_to_json(frame, &text));
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    gf_string_free(text);
    throw InputError("cannot write '" + path + "'");
  }
  out << text << '\n';
  gf_string_free(text);
}

json tolerances_json(const gf_tolerances& t) {
  return json{{"eq", t.eq}, {"pd", t.pd}, {"herm", t.herm}, {"rank", t.rank}, {"eig", t.eig}};
}

json provenance(const Options& opts, const gf_tolerances& tol) {
  return json{{"tool", "gframe"},
              {"version", gf_version()},
              {"seed", opts.seed},
              {"samples", opts.samples},
              {"tolerances", tolerances_json(tol)}};
}

class Report {
 public:
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void set_frame(const gf_classification& c, const gf_bounds& b) {
    classification_ = json{{"bessel", c.is_bessel != 0},
                           {"frame", c.is_frame != 0},
                           {"complete", c.is_complete != 0},
                           {"orthonormal_set", c.is_orthonormal_set != 0},
                           {"orthonormal_basis", c.is_on_basis != 0},
                           {"riesz_basis", c.is_riesz_basis != 0}};
    bounds_ = json{{"lower", b.lower},
                   {"upper", b.upper},
                   {"frame", b.is_frame != 0},
                   {"tight", b.is_tight != 0},
                   {"parseval", b.is_parseval != 0}};
  }

  /// Passes when measured <= tolerance.
  void at_most(const std::string& name, double measured, double tolerance) {
    add(name, measured <= tolerance, measured, tolerance);
  }

  /// Passes when measured > tolerance.
  void exceeds(const std::string& name, double measured, double tolerance) {
    add(name, measured > tolerance, measured, tolerance);
  }

  void add(const std::string& name, bool pass, double measured, double tolerance) {
    checks_.push_back(json{{"name", name}, {"pass", pass}, {"measured", measured}, {"tolerance", tolerance}});
    all_pass_ = all_pass_ && pass;
  }

  void note(const std::string& key, json value) { extra_[key] = std::move(value); }

  bool all_pass() const noexcept { return all_pass_; }

  json to_json(const json& prov) const {
    json doc{{"subject", subject_},
             {"classification", classification_},
             {"bounds", bounds_},
             {"checks", checks_}};
    for (const auto& item : extra_.items()) doc[item.key()] = item.value();
    doc["provenance"] = prov;
    doc["status"] = all_pass_ ? "pass" : "fail";
    return doc;
  }

 private:
  std::string subject_;
  json classification_ = json::object();
  json bounds_ = json::object();
  json checks_ = json::array();
  json extra_ = json::object();
  bool all_pass_ = true;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string yes_no(const json& v) { return v.get<bool>() ? "yes" : "no"; }

std::string human_text(const json& doc) {
  std::ostringstream os;
  os << "subject: " << doc["subject"].get<std::string>() << "\n";
  if (!doc["classification"].empty()) {
    os << "classification:";
    for (const auto& item : doc["classification"].items()) os << " " << item.key() << "=" << yes_no(item.value());
    os << "\n";
  }
  if (!doc["bounds"].empty()) {
    const json& b = doc["bounds"];
    os << "bounds: A=" << fmt(b["lower"].get<double>()) << " B=" << fmt(b["upper"].get<double>())
       << " tight=" << yes_no(b["tight"]) << " parseval=" << yes_no(b["parseval"]) << "\n";
  }
  std::size_t width = 5;
  for (const auto& c : doc["checks"]) width = std::max(width, c["name"].get<std::string>().size());
  os << "\n" << std::left;
  os << "check" << std::string(width - 5 + 2, ' ') << "pass  measured      tolerance\n";
  for (const auto& c : doc["checks"]) {
    const std::string name = c["name"].get<std::string>();
    const std::string pass = c["pass"].get<bool>() ? "yes " : "NO  ";
    std::string measured = fmt(c["measured"].get<double>());
    measured.resize(std::max<std::size_t>(measured.size(), 12), ' ');
    os << name << std::string(width - name.size() + 2, ' ') << pass << "  " << measured << "  "
       << fmt(c["tolerance"].get<double>()) << "\n";
  }
  os << "\nstatus: " << doc["status"].get<std::string>() << "\n";
  return os.str();
}

void emit_document(const Options& opts, const json& doc) {
  const std::string text = opts.human && doc.contains("checks") ? human_text(doc) : doc.dump(2) + "\n";
  if (opts.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(opts.out, std::ios::binary);
  if (!out) throw InputError("cannot write '" + opts.out + "'");
  out << text;
}

// ---- suites ---------------------------------------------------------------

struct Context {
  const Options& opts;
  gf_tolerances tol;
};

std::vector<int64_t> block_rows(const gf_frame* f) {
  std::vector<int64_t> rows(gf_frame_num_blocks(f));
  for (std::size_t j = 0; j < rows.size(); ++j) rows[j] = gf_frame_block_rows(f, j);
  return rows;
}

bool uniform_blocks(const gf_frame* f) {
  const auto rows = block_rows(f);
  return std::all_of(rows.begin(), rows.end(), [&](int64_t r) { return r == rows.front(); });
}

std::vector<double> interleave(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (const Complex& c : v) {
    out.push_back(c.real());
    out.push_back(c.imag());
  }
  return out;
}

std::vector<double> random_vector(int64_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> v(static_cast<std::size_t>(2 * n));
  for (double& x : v) x = normal(rng);
  return v;
}

void describe_frame(Report& report, const gf_frame* f, const Context& ctx) {
  gf_classification c{};
  gf_bounds b{};
  call(gf_frame_classify(f, &ctx.tol, &c));
  call(gf_frame_bounds(f, &ctx.tol, &b));
  report.set_frame(c, b);
}

void classify_checks(Report& report, const gf_frame* f, const Context& ctx) {
  gf_bounds b{};
  call(gf_frame_bounds(f, &ctx.tol, &b));
  double violation = 0.0;
  call(gf_frame_inequality_violation(f, ctx.opts.samples, ctx.opts.seed, &ctx.tol, &violation));
  report.at_most("frame_inequality", violation, kInequalitySlack);
}

void dual_checks(Report& report, const gf_frame* f, const Context& ctx) {
  gf_frame* raw = nullptr;
  call(gf_canonical_dual(f, &ctx.tol, &raw));
  Frame dual(raw);
  double forward = 0.0, backward = 0.0;
  call(gf_resolution_defect(f, dual.get(), &forward));
  call(gf_resolution_defect(dual.get(), f, &backward));
  report.at_most("resolution_of_identity", forward, kResolutionTol);
  report.at_most("resolution_of_identity_adjoint", backward, kResolutionTol);

  gf_bounds b{}, db{};
  call(gf_frame_bounds(f, &ctx.tol, &b));
  call(gf_frame_bounds(dual.get(), &ctx.tol, &db));
  const double lo_err = std::abs(db.lower - 1.0 / b.upper) * b.upper;
  const double hi_err = std::abs(db.upper - 1.0 / b.lower) * b.lower;
  report.at_most("dual_bounds", std::max(lo_err, hi_err), kDualBoundsTol);

  if (!ctx.opts.emit.empty()) {
    const std::string name = std::string("canonical dual of ") + gf_frame_name(f);
    call(gf_frame_set_name(dual.get(), name.c_str()));
    write_frame(dual.get(), ctx.opts.emit);
  }
}

void alt_dual_checks(Report& report, const gf_frame* f, const Context& ctx) {
  const int64_t n = gf_frame_hilbert_dim(f);
  std::vector<double> probe;
  if (ctx.opts.g0.empty()) {
    probe.assign(static_cast<std::size_t>(2 * n), 0.0);
    probe[0] = 1.0;
  } else {
    const auto values = parse_complex_list(ctx.opts.g0);
    if (static_cast<int64_t>(values.size()) != n) {
      throw InputError("--g0 needs " + std::to_string(n) + " entries, got " + std::to_string(values.size()));
    }
    probe = interleave(values);
  }

  gf_frame *raw_alt = nullptr, *raw_canon = nullptr;
  call(gf_alternate_dual(f, probe.data(), ctx.opts.seed, &ctx.tol, &raw_alt));
  Frame alt(raw_alt);
  call(gf_canonical_dual(f, &ctx.tol, &raw_canon));
  Frame canon(raw_canon);

  double defect = 0.0;
  call(gf_resolution_defect(f, alt.get(), &defect));
  report.at_most("alternate_is_dual", defect, kResolutionTol);

  double distance = 0.0;
  call(gf_max_block_distance(alt.get(), canon.get(), &distance));
  report.exceeds("differs_from_canonical", distance, kAltDualSeparation);

  std::mt19937_64 rng(ctx.opts.seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ctx.opts.samples; ++i) {
    const std::vector<double> v = random_vector(n, rng);
    double parts[3];
    call(gf_dual_norm_decomposition(f, alt.get(), v.data(), &ctx.tol, parts));
    worst = std::max(worst, (parts[0] - parts[2]) / std::max(parts[2], 1e-300));
  }
  report.at_most("canonical_minimal_norm", worst, kMinimalityTol);

  int canon_first = 0, alt_first = 0;
  call(gf_gram_characterization(f, canon.get(), alt.get(), &ctx.tol, &canon_first));
  call(gf_gram_characterization(f, alt.get(), canon.get(), &ctx.tol, &alt_first));
  report.add("gram_characterization", canon_first != 0 && alt_first == 0,
             static_cast<double>(canon_first != 0 && alt_first == 0), ctx.tol.eq);

  if (!ctx.opts.emit.empty()) {
    const std::string name = std::string("alternate dual of ") + gf_frame_name(f);
    call(gf_frame_set_name(alt.get(), name.c_str()));
    write_frame(alt.get(), ctx.opts.emit);
  }
}

void perturb_checks(Report& report, const gf_frame* lambda, const gf_frame* theta, const Context& ctx) {
  gf_perturbation_report r{};
  call(gf_optimal_m(lambda, theta, &ctx.tol, &r));
  report.note("perturbation", json{{"m_lambda", r.m_lambda},
                                   {"m_theta", r.m_theta},
                                   {"m_opt", r.m_opt},
                                   {"guaranteed_lower", r.guaranteed_lower},
                                   {"guaranteed_upper", r.guaranteed_upper},
                                   {"actual_lower", r.actual_lower},
                                   {"actual_upper", r.actual_upper}});

  double sampled = 0.0;
  call(gf_sampled_m(lambda, theta, ctx.opts.samples, ctx.opts.seed, &sampled));
  report.at_most("sampled_m_within_optimal", (sampled - r.m_opt) / std::max(r.m_opt, 1e-300), kSampledMTol);
  const double scale = std::max(1.0, r.actual_upper);
  report.at_most("guaranteed_lower_bound", r.guaranteed_lower - r.actual_lower, ctx.tol.eq * scale);
  report.at_most("guaranteed_upper_bound", r.actual_upper - r.guaranteed_upper, ctx.tol.eq * scale);

  gf_one_sided_report o{};
  call(gf_one_sided_m(lambda, theta, &ctx.tol, &o));
  report.at_most("one_sided_lower_bound", o.lower_bound - o.actual_lower, ctx.tol.eq * scale);

  if (!ctx.opts.m) return;
  gf_gavruta_report g{};
  const gf_status status = gf_gavruta_check(lambda, theta, *ctx.opts.m, ctx.opts.n, ctx.opts.samples,
                                            ctx.opts.seed, &ctx.tol, &g, nullptr);
  if (status == GF_ERR_PREMISE_NOT_VERIFIABLE) {
    report.at_most("gavruta_premise", g.premise_sup, *ctx.opts.m);
    return;
  }
  call(status);
  report.at_most("gavruta_premise", g.premise_sup, *ctx.opts.m);
  report.at_most("v_norm_bound", g.v_norm - std::sqrt(g.b1 * g.b2), kVNormSlack);
  report.add("theta_lower_bound", g.theta_bound_ok != 0, g.guaranteed_lower_theta - g.actual_lower_theta,
             ctx.tol.eq);
  if (g.has_lambda_bound) {
    report.add("lambda_lower_bound", g.lambda_bound_ok != 0,
               g.guaranteed_lower_lambda - g.actual_lower_lambda, ctx.tol.eq);
  }
  report.note("gavruta", json{{"m", *ctx.opts.m},
                              {"n", ctx.opts.n},
                              {"vacuous_m", g.vacuous_m != 0},
                              {"spectral_defect", g.spectral_defect},
                              {"guaranteed_lower_theta", g.guaranteed_lower_theta},
                              {"guaranteed_lower_lambda", g.guaranteed_lower_lambda}});
}

bool wants(const std::string& check, const char* name) { return check == "all" || check == name; }

std::pair<int, int> node_counts(int levels, int blocks, const Options& opts) {
  int radial = 0, angular = 0;
  gf_required_nodes(levels, blocks, &radial, &angular);
  return {opts.radial.value_or(radial), opts.angular.value_or(angular)};
}

void require_truncation_flags(int levels, int blocks, const Options& opts) {
  if ((opts.levels && *opts.levels != levels) || (opts.blocks && *opts.blocks != blocks)) {
    throw InputError("frame provides K = " + std::to_string(levels) + " levels and L = " +
                     std::to_string(blocks) + " blocks; --K/--L disagree");
  }
}

void coherent_checks(Report& report, const gf_frame* f, const Context& ctx) {
  const Options& opts = ctx.opts;
  if (opts.check != "all" && opts.check != "identity" && opts.check != "eigen" &&
      opts.check != "uncertainty") {
    throw InputError("--check must be one of identity, eigen, uncertainty, all");
  }
  const Complex z = parse_complex(opts.z), w = parse_complex(opts.w);
  gf_classification c{};
  call(gf_frame_classify(f, &ctx.tol, &c));

  if (c.is_on_basis) {
    gf_fock* raw = nullptr;
    call(gf_fock_build(f, &ctx.tol, &raw));
    Fock fock(raw);
    const int levels = gf_fock_levels(fock.get()), blocks = gf_fock_blocks(fock.get());
    require_truncation_flags(levels, blocks, opts);
    if (wants(opts.check, "identity")) {
      const auto [radial, angular] = node_counts(levels, blocks, opts);
      double err = 0.0;
      call(gf_quadrature_identity_error(fock.get(), radial, angular, &err));
      report.at_most("quadrature_identity", err, kIdentityTol);
    }
    if (wants(opts.check, "eigen")) {
      double res[4];
      call(gf_eigen_residuals(fock.get(), z.real(), z.imag(), w.real(), w.imag(), opts.defect_max, res));
      report.at_most("eigen_a", res[0], res[2] + kEigenSlack);
      report.at_most("eigen_b", res[1], res[3] + kEigenSlack);
    }
    if (wants(opts.check, "uncertainty")) {
      double prod[2];
      call(gf_uncertainty_products(fock.get(), z.real(), z.imag(), w.real(), w.imag(), prod));
      report.at_most("uncertainty_a", std::abs(prod[0] - 0.5), kUncertaintyTol);
      report.at_most("uncertainty_b", std::abs(prod[1] - 0.5), kUncertaintyTol);
    }
    return;
  }

  if (!c.is_riesz_basis) {
    throw ApiFailure(GF_ERR_NOT_RIESZ_BASIS, "coherent: input is neither a g-orthonormal nor a g-Riesz basis");
  }
  if (!uniform_blocks(f)) {
    throw ApiFailure(GF_ERR_NON_UNIFORM_BLOCKS, "coherent: blocks must share one dimension K");
  }
  const int levels = static_cast<int>(gf_frame_block_rows(f, 0));
  const int blocks = static_cast<int>(gf_frame_num_blocks(f));
  require_truncation_flags(levels, blocks, opts);
  const auto [radial, angular] = node_counts(levels, blocks, opts);
  gf_bicoherent_report b{};
  call(gf_bicoherent_check(f, z.real(), z.imag(), w.real(), w.imag(), opts.defect_max, radial, angular,
                           &ctx.tol, &b));
  report.note("bicoherent", json{{"condition", b.condition}, {"truncation_defect", b.truncation_defect}});
  report.at_most("collapse_up_dual", b.collapse_error, kCollapseTol);
  report.at_most("overlap_lambda_up", b.overlap_error, kOverlapTol);
  report.at_most("biquad_lambda_dual", b.biquad_lambda_dual, kBiquadTol);
  report.at_most("biquad_dual_lambda", b.biquad_dual_lambda, kBiquadTol);
  report.at_most("biquad_lambda_up", b.biquad_lambda_up, kBiquadTol);
  report.at_most("biquad_up_lambda", b.biquad_up_lambda, kBiquadTol);
  report.at_most("lowering_lambda_dual", b.lowering_error, kOperatorTol);
  report.at_most("a_dual_equals_a_up", b.a_dual_vs_up, kOperatorTol);
  report.at_most("a_lambda_equals_a_up", b.a_lambda_vs_up, kOperatorTol);
  report.at_most("eigen_lambda", b.eigen_residual_lambda, b.eigen_residual_bound + kEigenSlack);
  report.at_most("eigen_dual", b.eigen_residual_dual, b.eigen_residual_bound + kEigenSlack);
  report.at_most("eigen_up", b.eigen_residual_up, b.eigen_residual_bound + kEigenSlack);
}

// ---- dispatch ---------------------------------------------------------------

std::string subject_of(const std::vector<Frame>& frames) {
  std::string s = gf_frame_name(frames.front().get());
  for (std::size_t i = 1; i < frames.size(); ++i) s += std::string(" vs ") + gf_frame_name(frames[i].get());
  return s;
}

void require_files(const std::string& command, const std::vector<std::string>& files, std::size_t lo,
                   std::size_t hi) {
  if (files.size() < lo || files.size() > hi) {
    throw InputError(command + " expects " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" +
                                                                                   std::to_string(hi)) +
                     " frame file(s)");
  }
}

int run(const std::string& command, const Options& opts) {
  const Context ctx{opts, make_tolerances(opts)};
  const std::size_t max_files = command == "perturb" ? 2 : command == "all" ? 2 : 1;
  const std::size_t min_files = command == "perturb" ? 2 : 1;
  require_files(command, opts.files, min_files, max_files);

  std::vector<Frame> frames;
  for (const auto& path : opts.files) frames.push_back(load_frame(path));
  const gf_frame* f = frames.front().get();

  Report report(subject_of(frames));
  describe_frame(report, f, ctx);

  if (command == "classify") {
    classify_checks(report, f, ctx);
  } else if (command == "dual") {
    dual_checks(report, f, ctx);
  } else if (command == "alt-dual") {
    alt_dual_checks(report, f, ctx);
  } else if (command == "perturb") {
    perturb_checks(report, f, frames[1].get(), ctx);
  } else if (command == "coherent") {
    coherent_checks(report, f, ctx);
  } else if (command == "all") {
    gf_classification c{};
    call(gf_frame_classify(f, &ctx.tol, &c));
    classify_checks(report, f, ctx);
    if (c.is_frame) dual_checks(report, f, ctx);
    if (c.is_frame && !c.is_riesz_basis) alt_dual_checks(report, f, ctx);
    if (c.is_riesz_basis && uniform_blocks(f)) coherent_checks(report, f, ctx);
    if (frames.size() == 2) perturb_checks(report, f, frames[1].get(), ctx);
  }

  emit_document(opts, report.to_json(provenance(opts, ctx.tol)));
  return report.all_pass() ? kAllPass : kCheckFailed;
}

int report_error(const Options& opts, const std::string& code, const std::string& message, int exit_code) {
  std::cerr << "gframe: " << message << "\n";
  json doc{{"status", "error"},
           {"error", json{{"code", code}, {"message", message}, {"exit_code", exit_code}}},
           {"provenance", json{{"tool", "gframe"}, {"version", gf_version()}, {"seed", opts.seed}}}};
  try {
    emit_document(opts, doc);
  } catch (const std::exception&) {
    std::cout << doc.dump(2) << "\n";
  }
  return exit_code;
}

void add_global_flags(CLI::App& cmd, Options& opts) {
  cmd.add_option("--tol", opts.tol, "Equality tolerance (overrides GFRAME_TOL)");
  cmd.add_option("--seed", opts.seed, "Seed for sampled checks")->capture_default_str();
  cmd.add_option("--samples", opts.samples, "Random vectors per sampled check")->capture_default_str();
  cmd.add_option("--out", opts.out, "Write the report to this path instead of stdout");
  cmd.add_flag("--human", opts.human, "Tabular text instead of JSON");
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"g-frame analysis toolkit", "gframe"};
  app.set_version_flag("--version", std::string(gf_version()));
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "Frame bounds and classification");
  auto* dual = app.add_subcommand("dual", "Canonical dual and resolution of identity");
  auto* alt = app.add_subcommand("alt-dual", "Alternate dual from a kernel vector and a probe");
  auto* perturb = app.add_subcommand("perturb", "Perturbation constants for a pair of families");
  auto* coherent = app.add_subcommand("coherent", "Coherent-state checks on a g-orthonormal or g-Riesz basis");
  auto* all = app.add_subcommand("all", "Every applicable suite");

  for (CLI::App* cmd : {classify, dual, alt, perturb, coherent, all}) {
    add_global_flags(*cmd, opts);
    cmd->add_option("files", opts.files, "Frame spec files")->required();
  }
  dual->add_option("--emit", opts.emit, "Write the canonical dual to this path");
  alt->add_option("--emit", opts.emit, "Write the alternate dual to this path");
  alt->add_option("--g0", opts.g0, "Probe vector as comma-separated complex entries (default e_0)");
  for (CLI::App* cmd : {perturb, all}) {
    cmd->add_option("--m", opts.m, "Gavruta constant m (< 1); enables the Gavruta check");
    cmd->add_option("--n", opts.n, "Gavruta constant n (> -1)")->capture_default_str();
  }
  for (CLI::App* cmd : {coherent, all}) {
    cmd->add_option("--z", opts.z, "First label, e.g. 0.5+0.25i")->capture_default_str();
    cmd->add_option("--w", opts.w, "Second label")->capture_default_str();
    cmd->add_option("--K", opts.levels, "Expected Fock levels per block");
    cmd->add_option("--L", opts.blocks, "Expected number of blocks");
    cmd->add_option("--radial", opts.radial, "Radial quadrature nodes (default: minimum exact)");
    cmd->add_option("--angular", opts.angular, "Angular quadrature nodes (default: minimum exact)");
    cmd->add_option("--defect-max", opts.defect_max, "Largest allowed truncation defect")->capture_default_str();
  }
  coherent->add_option("--check", opts.check, "identity, eigen, uncertainty or all")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(opts, "usage", e.what(), kInputError);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opts);
  } catch (const ApiFailure& e) {
    return report_error(opts, gf_status_name(e.status()), e.what(), exit_code_for(e.status()));
  } catch (const InputError& e) {
    return report_error(opts, "input", e.what(), kInputError);
  } catch (const std::exception& e) {
    return report_error(opts, "internal", e.what(), kNumericalFailure);
  }
}
