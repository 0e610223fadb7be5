// Copyright 2026 The Liouville Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// liouville: command-line runner for the Liouville map along earthquake paths.
//
// Exit codes: 0 success, 1 threshold not met, 2 invalid input, 3 numerical
// failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liouville/currents.hpp"
#include "liouville/deriv.hpp"
#include "liouville/earthquake.hpp"
#include "liouville/error.hpp"
#include "liouville/geometry.hpp"
#include "liouville/lamination.hpp"
#include "report.hpp"

namespace {

using liouville::Complex;
using liouville::Error;
using liouville::ErrorKind;
using liouville::cli::Cell;
using liouville::cli::Report;

constexpr int kExitPass = 0;
constexpr int kExitThreshold = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct CommonOptions {
  std::string format = "text";
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::string output;
};

struct LaminationOptions {
  std::string path;
  std::vector<std::string> leaves;
  std::vector<double> orbit;
  std::vector<std::string> orbit_seed;
  double orbit_weight = 1.0;
  std::size_t orbit_n = 0;
};

struct TestFunctionOptions {
  std::vector<std::string> box;
  std::string kind = "tent";
  double lambda = 1.0;
};

struct TauOptions {
  double re = 0.0;
  double im = 0.0;
  Complex value() const { return {re, im}; }
};

std::vector<std::string> split_tokens(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string token; in >> token;) tokens.push_back(token);
  return tokens;
}

double parse_real(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidArgument, "not a number: '" + token + "'");
  }
  return value;
}

void add_common(CLI::App* app, CommonOptions& common,
                const std::string& tol_help = "Absolute quadrature tolerance") {
  app->add_option("--format", common.format, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app->add_option("--tol", common.tol, tol_help)->capture_default_str();
  app->add_option("--seed", common.seed, "Random seed")->capture_default_str();
  app->add_option("--output", common.output, "Write to this file instead of stdout");
}

void add_lamination(CLI::App* app, LaminationOptions& lam) {
  app->add_option("--lamination", lam.path, "Lamination file (lines 'p q w')");
  app->add_option("--leaf", lam.leaves, "Leaf 'p,q,w' (weight optional), repeatable");
  app->add_option("--orbit", lam.orbit, "Orbit generator matrix a b c d")->expected(4);
  app->add_option("--orbit-seed", lam.orbit_seed, "Orbit seed leaf p q")->expected(2);
  app->add_option("--orbit-weight", lam.orbit_weight, "Orbit leaf weight")
      ->capture_default_str();
  app->add_option("--orbit-n", lam.orbit_n, "Orbit leaves gamma^k(seed), |k| <= n")
      ->capture_default_str();
}

void add_test_function(CLI::App* app, TestFunctionOptions& xi, bool required = true) {
  auto* box = app->add_option("--box", xi.box, "Support box a b c d ('inf' allowed)")
                  ->expected(4)
                  ->allow_extra_args(false);
  if (required) box->required();
  app->add_option("--kind", xi.kind, "Test function: tent or bump")
      ->check(CLI::IsMember({"tent", "bump"}))
      ->capture_default_str();
  app->add_option("--lambda", xi.lambda, "Hölder exponent of the bump")
      ->capture_default_str();
}

void add_tau(CLI::App* app, TauOptions& tau, double default_re) {
  tau.re = default_re;
  app->add_option("--tau", tau.re, "Real part of tau")->capture_default_str();
  app->add_option("--tau-im", tau.im, "Imaginary part of tau")->capture_default_str();
}

liouville::Box make_box(const std::vector<std::string>& corners) {
  if (corners.size() != 4) throw Error(ErrorKind::kInvalidArgument, "a box needs 4 corners");
  std::vector<liouville::BoundaryPoint> p;
  for (const std::string& c : corners) {
    p.push_back(liouville::BoundaryPoint::real(liouville::parse_coordinate(c)));
  }
  return liouville::Box::create(p[0], p[1], p[2], p[3]);
}

liouville::TestFunction make_test_function(const TestFunctionOptions& options) {
  const liouville::Box box = make_box(options.box);
  if (options.kind == "tent") {
    if (options.lambda != 1.0) {
      throw Error(ErrorKind::kInvalidArgument, "the tent has lambda = 1; use --kind bump");
    }
    return liouville::tent_test_function(box);
  }
  return liouville::bump_test_function(box, options.lambda);
}

liouville::FiniteLamination make_lamination(const LaminationOptions& options) {
  const bool orbit = !options.orbit.empty() || !options.orbit_seed.empty();
  if (orbit) {
    if (!options.path.empty() || !options.leaves.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "an orbit excludes --lamination and --leaf");
    }
    if (options.orbit.size() != 4 || options.orbit_seed.size() != 2) {
      throw Error(ErrorKind::kInvalidArgument, "an orbit needs --orbit and --orbit-seed");
    }
    const auto gamma = liouville::MobiusMap::real(options.orbit[0], options.orbit[1],
                                                  options.orbit[2], options.orbit[3]);
    const auto seed = liouville::Geodesic::real(liouville::parse_coordinate(options.orbit_seed[0]),
                                                liouville::parse_coordinate(options.orbit_seed[1]));
    return liouville::orbit_lamination(gamma, seed, options.orbit_weight, options.orbit_n);
  }
  std::vector<liouville::Leaf> leaves;
  if (!options.path.empty()) leaves = liouville::load_lamination(options.path).leaves();
  for (const std::string& text : options.leaves) {
    const std::vector<std::string> tokens = split_tokens(text);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw Error(ErrorKind::kInvalidArgument, "a leaf is 'p,q' or 'p,q,w': '" + text + "'");
    }
    const double weight = tokens.size() == 3 ? parse_real(tokens[2]) : 1.0;
    leaves.push_back({liouville::Geodesic::real(liouville::parse_coordinate(tokens[0]),
                                                liouville::parse_coordinate(tokens[1])),
                      weight});
  }
  return liouville::FiniteLamination::create(std::move(leaves));
}

// The option of the same long name given before the subcommand name, if any.
const CLI::Option* given_on_parent(const CLI::App* app, const std::string& name) {
  const CLI::App* parent = app->get_parent();
  if (parent == nullptr) return nullptr;
  for (const CLI::Option* option : parent->get_options()) {
    if (!option->get_lnames().empty() && option->get_lnames().front() == name &&
        option->count() > 0) {
      return option;
    }
  }
  return nullptr;
}

// Common options given before the subcommand name apply to it unless the
// subcommand repeats them.
void inherit_common(const CLI::App* sub, const CommonOptions& top, CommonOptions& common) {
  auto unset = [&](const std::string& name) {
    return sub->get_option("--" + name)->count() == 0 &&
           given_on_parent(sub, name) != nullptr;
  };
  if (unset("format")) common.format = top.format;
  if (unset("tol")) common.tol = top.tol;
  if (unset("seed")) common.seed = top.seed;
  if (unset("output")) common.output = top.output;
}

// Records every option of the subcommand, given or defaulted.
void record_config(const CLI::App* app, Report& report) {
  auto& config = report.config();
  config["command"] = app->get_name();
  for (const CLI::Option* option : app->get_options()) {
    if (option->get_lnames().empty()) continue;
    const std::string name = option->get_lnames().front();
    if (name == "help") continue;
    const CLI::Option* inherited = option->count() == 0 ? given_on_parent(app, name) : nullptr;
    if (inherited != nullptr) option = inherited;
    if (option->count() > 0) {
      const auto& results = option->results();
      if (results.size() == 1 && option->get_expected_max() <= 1) {
        config[name] = results.front();
      } else {
        config[name] = results;
      }
    } else if (!option->get_default_str().empty()) {
      config[name] = option->get_default_str();
    }
  }
}

int emit(const Report& report, const CommonOptions& common, int code) {
  const auto format = liouville::cli::parse_format(common.format);
  if (common.output.empty()) {
    report.write(std::cout, format);
  } else {
    std::ofstream out(common.output);
    if (!out) {
      std::cerr << "error: cannot write " << common.output << '\n';
      return kExitInvalid;
    }
    report.write(out, format);
  }
  return code;
}

int exit_code_for(const Error& e) {
  return liouville::is_numerical(e.kind()) ? kExitNumerical : kExitInvalid;
}

// Runs closed form and oracle and writes a derivative report; a failure after
// the closed form succeeded still writes the partial report.
int derivative_command(const CLI::App* app, const CommonOptions& common, double threshold,
                       const std::function<Complex()>& closed_form,
                       const std::function<liouville::DerivativeReport()>& oracle) {
  Report report({"closed_re", "closed_im", "oracle_re", "oracle_im", "abs_err", "rel_err"});
  record_config(app, report);
  const Complex closed = closed_form();
  liouville::DerivativeReport result;
  try {
    result = oracle();
  } catch (const Error& e) {
    report.add_row({closed.real(), closed.imag(), kNan, kNan, kNan, kNan});
    report.set_summary("threshold", threshold);
    report.set_summary("status", std::string("numerical_failure"));
    report.set_summary("error", std::string(e.what()));
    emit(report, common, 0);
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  const liouville::DerivativeReport full = [&] {
    liouville::DerivativeReport r = liouville::make_report(closed, result.oracle);
    r.oracle_method = result.oracle_method;
    r.oracle_raw = result.oracle_raw;
    r.oracle_error_estimate = result.oracle_error_estimate;
    r.step = result.step;
    r.radius = result.radius;
    r.points = result.points;
    r.tol = result.tol;
    return r;
  }();
  report.add_row({full.closed_form.real(), full.closed_form.imag(), full.oracle.real(),
                  full.oracle.imag(), full.abs_err, full.rel_err});
  report.set_summary("oracle_method", full.oracle_method);
  if (full.oracle_method == "fd") {
    report.set_summary("step", full.step);
    report.set_summary("oracle_raw_re", full.oracle_raw.real());
    report.set_summary("oracle_raw_im", full.oracle_raw.imag());
  } else {
    report.set_summary("radius", full.radius);
    report.set_summary("points", static_cast<long long>(full.points));
  }
  report.set_summary("oracle_error_estimate", full.oracle_error_estimate);
  report.set_summary("tol", full.tol);
  report.set_summary("threshold", threshold);
  const bool pass = full.rel_err <= threshold;
  report.set_summary("status", std::string(pass ? "pass" : "fail"));
  return emit(report, common, pass ? kExitPass : kExitThreshold);
}

liouville::DerivativeReport fd_oracle(const liouville::FiniteLamination& mu,
                                      const liouville::TestFunction& xi, double tol,
                                      double step, int order) {
  auto path = [&](double t) {
    return liouville::earthquake_functional(mu, t, xi, tol, liouville::Route::kQuadrature);
  };
  const liouville::FdResult fd = liouville::fd_derivative(path, 0.0, step, order);
  liouville::DerivativeReport r;
  r.oracle = fd.value;
  r.oracle_raw = fd.raw;
  r.oracle_error_estimate = fd.error_estimate;
  r.oracle_method = "fd";
  r.step = step;
  r.tol = tol;
  return r;
}

liouville::Route parse_route(const std::string& name) {
  return name == "dyadic" ? liouville::Route::kDyadic : liouville::Route::kQuadrature;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouville measures, earthquakes and derivatives of the Liouville map"};
  app.require_subcommand(0, 1);

  // Top level and `liouville`: mass of a box.
  CommonOptions top_common;
  std::vector<std::string> top_box;
  add_common(&app, top_common);
  app.add_option("--box", top_box, "Box a b c d ('inf' allowed)")->expected(4);

  CommonOptions mass_common;
  std::vector<std::string> mass_box;
  auto* mass = app.add_subcommand("liouville", "Liouville mass of a box");
  add_common(mass, mass_common);
  mass->add_option("--box", mass_box, "Box a b c d ('inf' allowed)")->expected(4)->required();

  CommonOptions quake_common;
  LaminationOptions quake_lam;
  TauOptions quake_tau;
  std::vector<std::string> quake_points;
  auto* quake = app.add_subcommand("quake-eval", "Images of boundary points under E^{tau mu}");
  add_common(quake, quake_common);
  add_lamination(quake, quake_lam);
  add_tau(quake, quake_tau, 0.0);
  quake->add_option("--points", quake_points, "Boundary points ('inf' allowed)")->required();

  CommonOptions d1_common;
  LaminationOptions d1_lam;
  TestFunctionOptions d1_xi;
  double d1_step = 1e-4, d1_threshold = 1e-5;
  auto* d1 = app.add_subcommand("d1", "First derivative along the earthquake path vs FD");
  add_common(d1, d1_common);
  add_lamination(d1, d1_lam);
  add_test_function(d1, d1_xi);
  d1->add_option("--step", d1_step, "Finite-difference step")->capture_default_str();
  d1->add_option("--threshold", d1_threshold, "Pass if rel_err <= threshold")
      ->capture_default_str();

  CommonOptions d2_common;
  LaminationOptions d2_lam;
  TestFunctionOptions d2_xi;
  double d2_step = 1e-3, d2_threshold = 1e-3;
  auto* d2 = app.add_subcommand("d2", "Second derivative along the earthquake path vs FD");
  add_common(d2, d2_common);
  add_lamination(d2, d2_lam);
  add_test_function(d2, d2_xi);
  d2->add_option("--step", d2_step, "Finite-difference step")->capture_default_str();
  d2->add_option("--threshold", d2_threshold, "Pass if rel_err <= threshold")
      ->capture_default_str();

  CommonOptions qb_common;
  LaminationOptions qb_lam;
  TestFunctionOptions qb_xi;
  TauOptions qb_tau;
  std::string qb_route = "dyadic";
  double qb_radius = 0.05, qb_threshold = 1e-3;
  int qb_points = 32;
  auto* qb = app.add_subcommand("d1-quakebend", "Quake-bend derivative vs Cauchy integral");
  add_common(qb, qb_common);
  add_lamination(qb, qb_lam);
  add_test_function(qb, qb_xi);
  add_tau(qb, qb_tau, 0.0);
  qb->add_option("--route", qb_route, "Functional route: dyadic or quadrature")
      ->check(CLI::IsMember({"dyadic", "quadrature"}))
      ->capture_default_str();
  qb->add_option("--radius", qb_radius, "Cauchy circle radius")->capture_default_str();
  qb->add_option("--points", qb_points, "Cauchy circle points")->capture_default_str();
  qb->add_option("--threshold", qb_threshold, "Pass if rel_err <= threshold")
      ->capture_default_str();

  CommonOptions decay_common;
  TestFunctionOptions decay_xi;
  std::vector<std::string> decay_geodesics;
  std::size_t decay_count = 8;
  double decay_dmin = 1.0, decay_dmax = 8.0;
  std::optional<double> decay_max_slope;
  auto* decay = app.add_subcommand("decay", "Decay of the first-derivative integral");
  decay_common.tol = 1e-6;
  add_common(decay, decay_common, "Relative accuracy of each integral");
  add_test_function(decay, decay_xi);
  decay->add_option("--geodesic", decay_geodesics, "Geodesic 'p,q', repeatable");
  decay->add_option("--count", decay_count, "Size of the receding family")
      ->capture_default_str();
  decay->add_option("--d-min", decay_dmin, "Smallest distance from i")->capture_default_str();
  decay->add_option("--d-max", decay_dmax, "Largest distance from i")->capture_default_str();
  decay->add_option("--max-slope", decay_max_slope, "Pass if fitted slope <= this");

  CommonOptions kj_common;
  LaminationOptions kj_lam;
  TestFunctionOptions kj_xi;
  TauOptions kj_tau;
  std::vector<double> kj_radii;
  std::string kj_route = "quadrature";
  auto* kj = app.add_subcommand("kj", "Quake-bend derivative of growing truncations");
  add_common(kj, kj_common);
  add_lamination(kj, kj_lam);
  add_test_function(kj, kj_xi);
  add_tau(kj, kj_tau, 0.0);
  kj->add_option("--radii", kj_radii, "Increasing hyperbolic radii about i")->required();
  kj->add_option("--route", kj_route, "Functional route: dyadic or quadrature")
      ->check(CLI::IsMember({"dyadic", "quadrature"}))
      ->capture_default_str();

  CommonOptions th_common;
  LaminationOptions th_lam;
  std::size_t th_samples = 1000;
  auto* thurston = app.add_subcommand("thurston-estimate", "Lower bound for the Thurston norm");
  add_common(thurston, th_common);
  add_lamination(thurston, th_lam);
  thurston->add_option("--samples", th_samples, "Random unit arcs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  const std::pair<CLI::App*, CommonOptions*> subcommands[] = {
      {mass, &mass_common},   {quake, &quake_common}, {d1, &d1_common},
      {d2, &d2_common},       {qb, &qb_common},       {decay, &decay_common},
      {kj, &kj_common},       {thurston, &th_common}};
  for (const auto& [sub, common] : subcommands) {
    if (sub->parsed()) inherit_common(sub, top_common, *common);
  }

  try {
    if (app.get_subcommands().empty() || mass->parsed()) {
      const bool sub = mass->parsed();
      const auto& corners = sub ? mass_box : top_box;
      const CommonOptions& common = sub ? mass_common : top_common;
      if (corners.empty()) {
        std::cerr << app.help();
        return kExitInvalid;
      }
      Report report({"mass"});
      record_config(sub ? mass : &app, report);
      if (!sub) report.config()["command"] = "liouville";
      report.add_row({liouville::liouville_box(make_box(corners))});
      return emit(report, common, kExitPass);
    }

    if (quake->parsed()) {
      const auto mu = make_lamination(quake_lam);
      const auto f = liouville::elementary_earthquake(mu, quake_tau.value());
      Report report({"point", "image"});
      record_config(quake, report);
      for (const std::string& token : quake_points) {
        const auto p = liouville::BoundaryPoint::real(liouville::parse_coordinate(token));
        const auto image = f.evaluate(p);
        if (image.is_infinite()) {
          report.add_row({token, std::string("inf")});
        } else {
          report.add_row({token, image.value()});
        }
      }
      return emit(report, quake_common, kExitPass);
    }

    if (d1->parsed()) {
      const auto mu = make_lamination(d1_lam);
      const auto xi = make_test_function(d1_xi);
      const double tol = d1_common.tol;
      return derivative_command(
          d1, d1_common, d1_threshold,
          [&] { return Complex(liouville::d1_lamination(mu, xi, tol)); },
          [&] { return fd_oracle(mu, xi, tol, d1_step, 1); });
    }

    if (d2->parsed()) {
      const auto mu = make_lamination(d2_lam);
      const auto xi = make_test_function(d2_xi);
      const double tol = d2_common.tol;
      return derivative_command(
          d2, d2_common, d2_threshold,
          [&] { return Complex(liouville::d2_lamination(mu, xi, tol)); },
          [&] { return fd_oracle(mu, xi, tol, d2_step, 2); });
    }

    if (qb->parsed()) {
      const auto mu = make_lamination(qb_lam);
      const auto xi = make_test_function(qb_xi);
      const double tol = qb_common.tol;
      const liouville::Route route = parse_route(qb_route);
      const Complex tau = qb_tau.value();
      Report partial({"closed_re", "closed_im", "oracle_re", "oracle_im", "abs_err", "rel_err"});
      Complex closed;
      try {
        closed = liouville::d1_quakebend(mu, tau, xi, tol, route);
      } catch (const Error& e) {
        record_config(qb, partial);
        partial.add_row({kNan, kNan, kNan, kNan, kNan, kNan});
        partial.set_summary("threshold", qb_threshold);
        partial.set_summary("status", std::string("numerical_failure"));
        partial.set_summary("error", std::string(e.what()));
        emit(partial, qb_common, 0);
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
      }
      return derivative_command(
          qb, qb_common, qb_threshold, [&] { return closed; },
          [&] {
            auto path = [&](Complex s) {
              return liouville::earthquake_functional(mu, s, xi, tol, route);
            };
            const auto c = liouville::cauchy_derivative(path, tau, qb_radius, qb_points, 1);
            liouville::DerivativeReport r;
            r.oracle = c.value;
            r.oracle_method = "cauchy";
            r.radius = c.radius;
            r.points = c.points;
            r.tol = tol;
            return r;
          });
    }

    if (decay->parsed()) {
      const auto xi = make_test_function(decay_xi);
      std::vector<liouville::Geodesic> family;
      if (!decay_geodesics.empty()) {
        for (const std::string& text : decay_geodesics) {
          const auto tokens = split_tokens(text);
          if (tokens.size() != 2) {
            throw Error(ErrorKind::kInvalidArgument, "a geodesic is 'p,q': '" + text + "'");
          }
          family.push_back(liouville::Geodesic::real(liouville::parse_coordinate(tokens[0]),
                                                     liouville::parse_coordinate(tokens[1])));
        }
      } else {
        family = liouville::receding_family(xi.support(), decay_count, decay_dmin, decay_dmax);
      }
      const auto fit = liouville::decay_profile(xi, family, decay_common.tol);
      Report report({"distance", "magnitude"});
      record_config(decay, report);
      for (std::size_t k = 0; k < fit.distances.size(); ++k) {
        report.add_row({fit.distances[k], fit.magnitudes[k]});
      }
      report.set_summary("intercept", fit.fitted_intercept);
      report.set_summary("slope", fit.fitted_slope);
      const bool pass = !decay_max_slope || fit.fitted_slope <= *decay_max_slope;
      return emit(report, decay_common, pass ? kExitPass : kExitThreshold);
    }

    if (kj->parsed()) {
      const auto mu = make_lamination(kj_lam);
      const auto xi = make_test_function(kj_xi);
      const auto rows = liouville::kj_stabilization(mu, xi, kj_radii, kj_tau.value(),
                                                    kj_common.tol, parse_route(kj_route));
      Report report({"radius", "leaves", "value_re", "value_im", "change"});
      record_config(kj, report);
      Complex previous = 0.0;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const double change = k == 0 ? kNan : std::abs(rows[k].value - previous);
        report.add_row({rows[k].radius, static_cast<long long>(rows[k].leaves),
                        rows[k].value.real(), rows[k].value.imag(), change});
        previous = rows[k].value;
      }
      if (!rows.empty()) {
        report.set_summary("final_re", rows.back().value.real());
        report.set_summary("final_im", rows.back().value.imag());
      }
      return emit(report, kj_common, kExitPass);
    }

    if (thurston->parsed()) {
      const auto mu = make_lamination(th_lam);
      const auto estimate = liouville::thurston_norm_estimate(mu, th_samples, th_common.seed);
      Report report({"value", "arcs_examined"});
      record_config(thurston, report);
      report.add_row({estimate.value, static_cast<long long>(estimate.arcs_examined)});
      report.set_summary("arc_start_x", estimate.arc_start.x);
      report.set_summary("arc_start_y", estimate.arc_start.y);
      report.set_summary("arc_end_x", estimate.arc_end.x);
      report.set_summary("arc_end_y", estimate.arc_end.y);
      return emit(report, th_common, kExitPass);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
