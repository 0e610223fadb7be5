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

// Acceptance suite: one PASS/FAIL line per criterion, each with its measured
// error and runtime. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liouville/currents.hpp"
#include "liouville/deriv.hpp"
#include "liouville/earthquake.hpp"
#include "liouville/geometry.hpp"
#include "liouville/lamination.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

namespace {

using liouville::BoundaryPoint;
using liouville::Box;
using liouville::Complex;
using liouville::FiniteLamination;
using liouville::Geodesic;
using liouville::MobiusMap;
using liouville::PiecewiseMobiusMap;
using liouville::Route;
using liouville::TestFunction;

// Outcome of one criterion: pass flag and a one-line summary of the numbers.
struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a named measurement against its bound.
  void check(const std::string& name, double value, double bound) {
    const bool ok = value <= bound;
    pass = pass && ok;
    append(name + "=" + format(value) + (ok ? " <= " : " > ") + format(bound));
  }
  void require(const std::string& name, bool ok) {
    pass = pass && ok;
    append(name + (ok ? " ok" : " FAILED"));
  }
  void note(const std::string& text) { append(text); }

  static std::string format(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", x);
    return buffer;
  }

 private:
  void append(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

double rel_err(Complex value, Complex reference) {
  const double scale = std::abs(reference);
  return scale > 0.0 ? std::abs(value - reference) / scale : std::abs(value);
}

const Geodesic kVertical = Geodesic::real(0.0, INFINITY);

FiniteLamination single_leaf() { return FiniteLamination::create({{kVertical, 1.0}}); }

FiniteLamination fan() {
  return FiniteLamination::create({{kVertical, 1.0},
                                   {Geodesic::real(0.5, 8.0), 0.7},
                                   {Geodesic::real(-0.5, -5.0), 1.3}});
}

FiniteLamination nested_pair() {
  return FiniteLamination::create({{kVertical, 1.0}, {Geodesic::real(1.0, 4.0), 0.8}});
}

Box single_box() { return Box::real(1.0, 3.0, -2.0, -1.0); }
Box nested_box() { return Box::real(2.0, 3.0, -2.0, -1.0); }

// First derivative of the earthquake path at 0 by Richardson-extrapolated
// central differences.
double fd_first(const FiniteLamination& mu, const TestFunction& xi, double tol) {
  return liouville::fd_derivative(
             [&](double t) { return liouville::earthquake_functional(mu, t, xi, tol); }, 0.0,
             1e-4, 1)
      .value.real();
}

// Shared with criterion 5, which compares against the single-leaf value.
double g_single_leaf_d1 = std::nan("");

Outcome box_exactness() {
  Outcome out;
  const double mass = liouville::liouville_box(Box::real(-1.0, 0.0, 1.0, INFINITY));
  out.check("|mass-log2|", std::abs(mass - std::numbers::ln2), 1e-12);
  const double integral = liouville::oracle::liouville_mass_integral(-1.0, 0.0, 1.0, INFINITY);
  out.check("|mass-oracle|", std::abs(mass - integral), 1e-8);
  return out;
}

Outcome mobius_invariance() {
  Outcome out;
  liouville::sampling::Rng rng(20260101);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const MobiusMap gamma = liouville::sampling::random_isometry(rng);
    const Box box = liouville::sampling::random_box(rng);
    const Box moved = Box::create(gamma.apply(box.a()), gamma.apply(box.b()),
                                  gamma.apply(box.c()), gamma.apply(box.d()));
    worst = std::max(worst,
                     std::abs(liouville::liouville_box(moved) - liouville::liouville_box(box)));
  }
  out.check("max_diff", worst, 1e-9);
  return out;
}

Outcome complex_distance() {
  Outcome out;
  liouville::sampling::Rng rng(20260102);
  double worst_formula = 0.0;
  double worst_cos = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto [g, h] = liouville::sampling::random_crossing_pair(rng);
    const Complex tau(liouville::sampling::uniform(rng, -1.0, 1.0),
                      liouville::sampling::uniform(rng, -1.0, 1.0));
    const double omega = liouville::sampling::uniform(rng, 0.2, 2.0);

    // Image of h under the simple quake-bend along g, h taken from g's right
    // to its left.
    const Geodesic oriented = liouville::oriented_right_to_left(g, h);
    const PiecewiseMobiusMap quake = liouville::simple_earthquake(g, tau * omega);
    const Geodesic image = {quake.evaluate(oriented.p_minus), quake.evaluate(oriented.p_plus)};
    const Complex via_cross_ratio = liouville::cosh_complex_distance(g, image);

    // The same quantity after moving g to (0, inf): with h = (x, y), x > 0,
    // it is (-x e - y) / (x e - y) for e = exp(tau omega).
    const MobiusMap standard = liouville::mobius_to_standard(g);
    const double x = standard.apply(oriented.p_minus).real_value();
    const double y = standard.apply(oriented.p_plus).real_value();
    const Complex xe = x * std::exp(tau * omega);
    const Complex explicit_formula = (-xe - y) / (xe - y);
    worst_formula = std::max(worst_formula, std::abs(via_cross_ratio - explicit_formula) /
                                            std::max(1.0, std::abs(explicit_formula)));

    const Complex real_pair = liouville::cosh_complex_distance(g, h);
    worst_cos = std::max(worst_cos, std::abs(real_pair - liouville::cos_angle(g, h)));
  }
  out.check("formula_max_diff", worst_formula, 1e-10);
  out.check("cos_max_diff", worst_cos, 1e-12);
  return out;
}

Outcome first_derivative() {
  Outcome out;
  constexpr double kTol = 1e-8;
  struct Case {
    const char* name;
    FiniteLamination mu;
    Box box;
  };
  const Case cases[] = {{"single", single_leaf(), single_box()},
                        {"fan", fan(), single_box()},
                        {"nested", nested_pair(), nested_box()}};
  for (const Case& c : cases) {
    const TestFunction xi = liouville::tent_test_function(c.box);
    const double closed = liouville::d1_lamination(c.mu, xi, kTol);
    const double fd = fd_first(c.mu, xi, kTol);
    out.check(std::string(c.name) + "_rel", rel_err(closed, fd), 1e-5);
    if (std::string(c.name) == "single") g_single_leaf_d1 = closed;
  }
  return out;
}

Outcome quakebend_derivative() {
  Outcome out;
  const FiniteLamination mu = single_leaf();
  const TestFunction xi = liouville::tent_test_function(single_box());
  for (Complex tau : {Complex(0.0), Complex(0.1), Complex(0.1, 0.05)}) {
    const std::string tag = "tau=" + Outcome::format(tau.real()) + "+" +
                            Outcome::format(tau.imag()) + "i";
    const Complex integrand = liouville::oracle::quakebend_single_leaf(1.0, tau, xi, 1e-11);
    const Complex dyadic = liouville::d1_quakebend(mu, tau, xi, 1e-8, Route::kDyadic);
    out.check(tag + " |explicit-dyadic|", std::abs(integrand - dyadic), 1e-6);
    const Complex cauchy =
        liouville::cauchy_derivative(
            [&](Complex s) { return liouville::earthquake_functional(mu, s, xi, 1e-11); }, tau,
            0.05, 32, 1)
            .value;
    out.check(tag + " explicit_vs_cauchy_rel", rel_err(integrand, cauchy), 1e-3);
    out.check(tag + " dyadic_vs_cauchy_rel", rel_err(dyadic, cauchy), 1e-3);
    if (tau == Complex(0.0)) {
      if (std::isnan(g_single_leaf_d1)) {
        g_single_leaf_d1 = liouville::d1_lamination(mu, xi, 1e-8);
      }
      out.check("tau=0 vs first derivative", std::abs(integrand - g_single_leaf_d1), 1e-6);
    }
  }
  return out;
}

Outcome second_derivative() {
  Outcome out;
  constexpr double kTol = 1e-10;
  struct Case {
    const char* name;
    FiniteLamination mu;
    Box box;
  };
  const Case cases[] = {{"single", single_leaf(), single_box()},
                        {"nested", nested_pair(), nested_box()}};
  for (const Case& c : cases) {
    const TestFunction xi = liouville::tent_test_function(c.box);
    const double closed = liouville::d2_lamination(c.mu, xi, kTol);
    const double fd =
        liouville::fd_derivative(
            [&](double t) { return liouville::earthquake_functional(c.mu, t, xi, kTol); }, 0.0,
            1e-3, 2)
            .value.real();
    out.require(std::string(c.name) + "_sign", (closed > 0.0) == (fd > 0.0));
    out.check(std::string(c.name) + "_rel", rel_err(closed, fd), 1e-3);
  }
  return out;
}

Outcome decay_bound() {
  Outcome out;
  const Box box = Box::real(-1.0, 1.0, 2.0, -2.0);
  const std::vector<Geodesic> family = liouville::receding_family(box, 8, 1.0, 8.0);
  for (double lambda : {0.5, 1.0}) {
    const TestFunction xi = liouville::bump_test_function(box, lambda);
    const liouville::DecayFit fit = liouville::decay_profile(xi, family, 1e-6);
    out.check("lambda=" + Outcome::format(lambda) + " slope", fit.fitted_slope,
              -(1.0 + lambda) + 0.2);
  }
  return out;
}

Outcome dyadic_series() {
  Outcome out;
  const PiecewiseMobiusMap f = liouville::elementary_earthquake(single_leaf(), 1.0);
  const TestFunction xi = liouville::tent_test_function(single_box());
  liouville::DyadicOptions options;
  options.n_min = 11;
  options.tol = 1e-10;
  const liouville::DyadicResult dyadic = liouville::functional_dyadic(f, xi, nullptr, options);
  auto increment = [&](int n) {
    for (const liouville::DyadicLevel& level : dyadic.levels) {
      if (level.n == n) return std::abs(level.increment);
    }
    return std::nan("");
  };
  double worst_ratio = INFINITY;
  // Successive increments I_{n+1} - I_n for n = 4, ..., 10; level m stores
  // I_m - I_{m-1}.
  for (int m = 5; m < 11; ++m) {
    const double ratio = increment(m) / increment(m + 1);
    worst_ratio = std::isnan(ratio) ? -1.0 : std::min(worst_ratio, ratio);
  }
  out.require("min_increment_ratio=" + Outcome::format(worst_ratio) + " >= 1.5",
              worst_ratio >= 1.5);
  liouville::QuadOptions quad;
  quad.tol = 1e-10;
  const Complex reference = liouville::functional_quad(f, xi, nullptr, quad).value;
  out.check("|limit-quadrature|", std::abs(dyadic.value - reference), 1e-6);
  return out;
}

Outcome kj_stabilization() {
  Outcome out;
  const FiniteLamination mu = liouville::orbit_lamination(
      MobiusMap::real(2.0, 0.0, 0.0, 0.5), Geodesic::real(1.0, 2.0), 1.0, 25);
  out.require("leaves=" + std::to_string(mu.size()), mu.size() == 51);
  const TestFunction xi = liouville::tent_test_function(Box::real(-0.5, 3.0, 5.0, -1.0));
  const Complex tau(0.1, 0.05);
  constexpr double kTol = 1e-10;
  const std::vector<double> radii = {2.0, 5.0, 10.0, 20.0, 30.0, 40.0};
  const auto rows = liouville::kj_stabilization(mu, xi, radii, tau, kTol, Route::kQuadrature);
  std::ostringstream table;
  for (const auto& row : rows) table << " r" << row.radius << ":" << row.leaves;
  out.note("leaves by radius" + table.str());
  const Complex last = rows.back().value;
  out.check("|last-previous|", std::abs(last - rows[rows.size() - 2].value), 1e-6);
  const Complex full = liouville::d1_quakebend(mu, tau, xi, kTol, Route::kQuadrature);
  out.check("|last-full|", std::abs(last - full), 1e-6);
  return out;
}

double point_gap(const BoundaryPoint& p, const BoundaryPoint& q) {
  return std::abs(liouville::det(p, q));
}

Outcome structural_properties() {
  Outcome out;
  const FiniteLamination mu = FiniteLamination::create({{kVertical, 1.0},
                                                        {Geodesic::real(0.5, 8.0), 0.7},
                                                        {Geodesic::real(1.0, 2.0), 0.5},
                                                        {Geodesic::real(-0.5, -5.0), 1.3},
                                                        {Geodesic::real(-2.0, -1.0), 0.9},
                                                        {Geodesic::real(10.0, 20.0), 0.4}});
  liouville::sampling::Rng rng(20260110);
  std::vector<double> points;
  for (int k = 0; k < 1000; ++k) {
    points.push_back(std::tan(0.5 * liouville::sampling::uniform(rng, -3.1, 3.1)));
  }
  const double tau = 0.7;
  const PiecewiseMobiusMap e = liouville::elementary_earthquake(mu, tau);

  double worst_order = 0.0;
  std::vector<std::size_t> order(mu.size());
  std::iota(order.begin(), order.end(), 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    for (double x : points) {
      worst_order = std::max(worst_order, point_gap(liouville::oracle::iterated_earthquake(
                                                        mu, order, tau, x),
                                                    e.evaluate(x)));
    }
  }
  out.check("order_max_diff", worst_order, 1e-11);

  double worst_equivariance = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const MobiusMap gamma = liouville::sampling::random_isometry(rng);
    const PiecewiseMobiusMap lhs = liouville::normalize_012inf(
        liouville::elementary_earthquake(liouville::pushforward(gamma, mu), tau));
    const PiecewiseMobiusMap rhs =
        liouville::normalize_012inf(e.post_compose(gamma).pre_compose(gamma.inverse()));
    for (double x : points) {
      worst_equivariance =
          std::max(worst_equivariance, point_gap(lhs.evaluate(x), rhs.evaluate(x)));
    }
  }
  out.check("equivariance_max_diff", worst_equivariance, 1e-11);

  const PiecewiseMobiusMap zero = liouville::elementary_earthquake(mu, 0.0);
  bool identity = true;
  for (const MobiusMap& piece : zero.pieces()) {
    identity = identity && piece.approx_equal(MobiusMap::identity(), 1e-15);
  }
  out.require("identity_at_zero", identity);

  bool semigroup = true;
  const Geodesic g = Geodesic::real(1.0, 4.0);
  for (auto [s, t] : {std::pair{0.3, 0.5}, std::pair{-1.2, 0.7}, std::pair{2.0, 2.0}}) {
    const MobiusMap composed = liouville::translation_along(g, s) *
                               liouville::translation_along(g, t);
    semigroup = semigroup &&
                composed.approx_equal(liouville::translation_along(g, s + t), 1e-14);
    const PiecewiseMobiusMap es = liouville::simple_earthquake(g, s);
    const PiecewiseMobiusMap et = liouville::simple_earthquake(g, t);
    const PiecewiseMobiusMap est = liouville::simple_earthquake(g, s + t);
    for (std::size_t k = 0; k < est.pieces().size(); ++k) {
      semigroup = semigroup &&
                  (es.pieces()[k] * et.pieces()[k]).approx_equal(est.pieces()[k], 1e-14);
    }
  }
  out.require("one_leaf_semigroup", semigroup);
  return out;
}

struct Criterion {
  int id;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, 1.0, box_exactness},          {2, 5.0, mobius_invariance},
      {3, 5.0, complex_distance},       {4, 30.0, first_derivative},
      {5, 60.0, quakebend_derivative},  {6, 60.0, second_derivative},
      {7, 30.0, decay_bound},           {8, 30.0, dyadic_series},
      {9, 60.0, kj_stabilization},      {10, 10.0, structural_properties},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.note(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcome.check("runtime_s", seconds, c.limit_seconds);
    if (!outcome.pass) ++failures;
    std::printf("criterion %d: %s  %s\n", c.id, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
