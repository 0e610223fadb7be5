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

#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "liouville/earthquake.hpp"

namespace liouville::oracle {
namespace {

Complex simpson_step(const std::function<Complex(double)>& f, double a, double b,
                     Complex fa, Complex fm, Complex fb, Complex whole, double tol,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const Complex flm = f(lm);
  const Complex frm = f(rm);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const Complex delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

Complex simpson(const std::function<Complex(double)>& f, double a, double b, double tol) {
  // Start from a few panels so that narrow features are not skipped.
  constexpr int kPanels = 8;
  Complex total = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    const double lo = a + (b - a) * k / kPanels;
    const double hi = a + (b - a) * (k + 1) / kPanels;
    const double m = 0.5 * (lo + hi);
    const Complex flo = f(lo), fm = f(m), fhi = f(hi);
    const Complex whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
    total += simpson_step(f, lo, hi, flo, fm, fhi, whole, tol / kPanels, 40);
  }
  return total;
}

Complex simpson2d(const std::function<Complex(double, double)>& f, double a, double b,
                  double c, double d, double tol) {
  const double inner_tol = 0.1 * tol / (b - a);
  return simpson(
      [&](double x) { return simpson([&](double y) { return f(x, y); }, c, d, inner_tol); },
      a, b, tol);
}

double liouville_mass_integral(double a, double b, double c, double d) {
  if (!(a < b && b < c && c < d)) {
    throw std::invalid_argument("need a < b < c < d");
  }
  auto density = [](double x, double y) -> Complex { return 1.0 / ((x - y) * (x - y)); };
  if (std::isfinite(d)) return simpson2d(density, a, b, c, d, 1e-12).real();
  // The tail beyond R is (b - a) / R + O(1 / R^2) + O(1 / R^3).
  constexpr double kR = 1000.0;
  // The inner integral over [c, R] is split at a geometric grid to keep the
  // adaptive rule efficient on the long interval.
  auto truncated = [&](double r) {
    double total = 0.0;
    double lo = c;
    double hi = c + 1.0;
    while (lo < r) {
      const double top = std::min(hi, r);
      total += simpson2d(density, a, b, lo, top, 1e-13).real();
      lo = top;
      hi = c + 2.0 * (hi - c);
    }
    return total;
  };
  const double i1 = truncated(kR);
  const double i2 = truncated(2.0 * kR);
  const double i4 = truncated(4.0 * kR);
  // Richardson in h = 1 / R with ratios 2: remove h, then h^2.
  const double r12 = 2.0 * i2 - i1;
  const double r24 = 2.0 * i4 - i2;
  return (4.0 * r24 - r12) / 3.0;
}

Complex quakebend_single_leaf(double omega, Complex tau, const TestFunction& xi, double tol) {
  const Box& box = xi.support();
  const double a = box.a().real_value(), b = box.b().real_value();
  const double c = box.c().real_value(), d = box.d().real_value();
  if (!(0.0 < a && a < b && std::isfinite(b) && c < d && d < 0.0 && std::isfinite(c))) {
    throw std::invalid_argument("box must be [a, b] x [c, d] with 0 < a < b, c < d < 0");
  }
  const Complex e = std::exp(tau * omega);
  auto integrand = [&](double x, double y) -> Complex {
    const Complex xe = x * e;
    const Complex cosh_d = (-xe - y) / (xe - y);
    const Complex density = e / ((xe - y) * (xe - y));
    return xi.evaluate_inside(BoundaryPoint::real(x), BoundaryPoint::real(y)) * cosh_d *
           density;
  };
  return omega * simpson2d(integrand, a, b, c, d, tol);
}

BoundaryPoint iterated_earthquake(const FiniteLamination& mu,
                                  const std::vector<std::size_t>& order, double tau,
                                  double x) {
  std::vector<PiecewiseMobiusMap> applied;
  auto move = [&applied](BoundaryPoint p) {
    for (const PiecewiseMobiusMap& e : applied) p = e.evaluate(p);
    return p;
  };
  for (std::size_t index : order) {
    const Leaf& leaf = mu.leaves().at(index);
    const Geodesic moved = {move(leaf.geodesic.p_minus), move(leaf.geodesic.p_plus)};
    applied.push_back(simple_earthquake(moved, tau * leaf.weight));
  }
  return move(BoundaryPoint::real(x));
}

}  // namespace liouville::oracle
