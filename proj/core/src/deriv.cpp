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

#include "liouville/deriv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "liouville/error.hpp"

namespace liouville {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A leaf together with its transport to the standard geodesic (0, inf), for
// fast side and angle queries.
struct LeafFrame {
  Geodesic g;
  double weight;
  double a, b, c, d;

  LeafFrame(const Geodesic& geodesic, double w) : g(geodesic), weight(w) {
    const MobiusMap m = mobius_to_standard(geodesic);
    a = m.a().real();
    b = m.b().real();
    c = m.c().real();
    d = m.d().real();
  }

  // Transported homogeneous coordinates of a real point; the sign of u * v is
  // positive on the right of the leaf.
  void transport(const BoundaryPoint& p, double& u, double& v) const {
    const double pu = p.u().real();
    const double pv = p.v().real();
    u = a * pu + b * pv;
    v = c * pu + d * pv;
  }
};

// Angle data of h = (x, y) against one leaf, using the crossing convention.
struct Crossing {
  bool crosses = false;
  bool x_on_right = false;
  double cos = 0.0;
  double sin = 0.0;  // >= 0
};

Crossing crossing(const LeafFrame& leaf, const BoundaryPoint& x, const BoundaryPoint& y) {
  double xu, xv, yu, yv;
  leaf.transport(x, xu, xv);
  leaf.transport(y, yu, yv);
  const double px = xu * xv;
  const double py = yu * yv;
  Crossing out;
  if (!(px * py < 0.0)) return out;
  const double denom = xu * yv - yu * xv;
  const double numer = xu * yv + yu * xv;
  out.crosses = true;
  out.x_on_right = px > 0.0;
  out.cos = out.x_on_right ? -numer / denom : numer / denom;
  out.sin = 2.0 * std::sqrt(-px * py) / std::abs(denom);
  return out;
}

// Whether the arc [start, start + length] meets the left and the right side.
void arc_sides(const LeafFrame& leaf, const Box& box, bool first, bool& left,
               bool& right) {
  const BoundaryPoint& p = first ? box.a() : box.c();
  const BoundaryPoint& q = first ? box.b() : box.d();
  const double length = first ? box.first_length() : box.second_length();
  left = right = false;
  for (const BoundaryPoint* e : {&p, &q}) {
    double u, v;
    leaf.transport(*e, u, v);
    if (u * v > 0.0) right = true;
    if (u * v < 0.0) left = true;
  }
  for (const BoundaryPoint* e : {&leaf.g.p_minus, &leaf.g.p_plus}) {
    const double o = first ? box.first_offset(*e) : box.second_offset(*e);
    if (o > 0.0 && o < length) left = right = true;
  }
}

// Leaves crossed by at least one geodesic of the box.
std::vector<LeafFrame> relevant_leaves(const std::vector<Leaf>& leaves, const Box& box) {
  std::vector<LeafFrame> out;
  for (const Leaf& leaf : leaves) {
    LeafFrame frame(leaf.geodesic, leaf.weight);
    bool l1, r1, l2, r2;
    arc_sides(frame, box, true, l1, r1);
    arc_sides(frame, box, false, l2, r2);
    if ((l1 && r2) || (r1 && l2)) out.push_back(frame);
  }
  return out;
}

std::vector<BoundaryPoint> endpoints(const std::vector<LeafFrame>& leaves) {
  std::vector<BoundaryPoint> out;
  for (const LeafFrame& leaf : leaves) {
    out.push_back(leaf.g.p_minus);
    out.push_back(leaf.g.p_plus);
  }
  return out;
}

double first_order(const std::vector<Leaf>& leaves, const TestFunction& xi, double tol) {
  const std::vector<LeafFrame> frames = relevant_leaves(leaves, xi.support());
  if (frames.empty()) return 0.0;
  auto kernel = [&frames](const Geodesic& h) -> Complex {
    double total = 0.0;
    for (const LeafFrame& leaf : frames) {
      const Crossing k = crossing(leaf, h.p_minus, h.p_plus);
      if (k.crosses) total += leaf.weight * k.cos;
    }
    return total;
  };
  return quad_weighted(xi, kernel, tol, endpoints(frames)).value.real();
}

double second_order(const std::vector<Leaf>& leaves, const TestFunction& xi, double tol) {
  const std::vector<LeafFrame> frames = relevant_leaves(leaves, xi.support());
  if (frames.empty()) return 0.0;
  auto kernel = [&frames](const Geodesic& h) -> Complex {
    struct Hit {
      std::size_t index;
      Crossing k;
    };
    std::vector<Hit> hits;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      const Crossing k = crossing(frames[i], h.p_minus, h.p_plus);
      if (k.crosses) hits.push_back({i, k});
    }
    double total = 0.0;
    for (const Hit& p : hits) {
      const double wp = frames[p.index].weight;
      total += wp * wp * (p.k.cos * p.k.cos - 0.5 * p.k.sin * p.k.sin);
    }
    for (std::size_t m = 0; m < hits.size(); ++m) {
      for (std::size_t n = m + 1; n < hits.size(); ++n) {
        const Hit& p = hits[m];
        const Hit& q = hits[n];
        const double dh =
            point_distance(geodesic_intersection(frames[p.index].g, h),
                           geodesic_intersection(frames[q.index].g, h));
        const double pair = p.k.cos * q.k.cos - 0.5 * p.k.sin * q.k.sin * std::exp(-dh);
        // Ordered pairs (i, k) and (k, i).
        total += 2.0 * frames[p.index].weight * frames[q.index].weight * pair;
      }
    }
    return total;
  };
  return quad_weighted(xi, kernel, tol, endpoints(frames)).value.real();
}

double factorial(int k) {
  double out = 1.0;
  for (int j = 2; j <= k; ++j) out *= j;
  return out;
}

}  // namespace

DerivativeReport make_report(Complex closed_form, Complex oracle) {
  DerivativeReport report;
  report.closed_form = closed_form;
  report.oracle = oracle;
  report.abs_err = std::abs(closed_form - oracle);
  const double scale = std::abs(oracle);
  report.rel_err = scale > 0.0 ? report.abs_err / scale : report.abs_err;
  return report;
}

double d1_simple(const Geodesic& g, double omega, const TestFunction& xi, double tol) {
  return first_order({Leaf{g, omega}}, xi, tol);
}

double d1_lamination(const FiniteLamination& mu, const TestFunction& xi, double tol) {
  return first_order(mu.leaves(), xi, tol);
}

double d2_simple(const Geodesic& g, double omega, const TestFunction& xi, double tol) {
  return second_order({Leaf{g, omega}}, xi, tol);
}

double d2_lamination(const FiniteLamination& mu, const TestFunction& xi, double tol) {
  return second_order(mu.leaves(), xi, tol);
}

Complex d1_quakebend(const FiniteLamination& mu, Complex tau, const TestFunction& xi,
                     double tol, Route route) {
  const std::vector<LeafFrame> frames = relevant_leaves(mu.leaves(), xi.support());
  if (frames.empty()) return 0.0;
  const PiecewiseMobiusMap f = elementary_earthquake(mu, tau);
  std::vector<Geodesic> images;
  for (const LeafFrame& leaf : frames) images.push_back(f.evaluate(leaf.g));
  Weight weight = [&frames, &images](const Geodesic& h, const Geodesic& image) -> Complex {
    Complex total = 0.0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      const Crossing k = crossing(frames[i], h.p_minus, h.p_plus);
      if (!k.crosses) continue;
      const Geodesic oriented = k.x_on_right ? image : image.reversed();
      total += frames[i].weight * cosh_complex_distance(images[i], oriented);
    }
    return total;
  };
  if (route == Route::kQuadrature) {
    QuadOptions options;
    options.tol = tol;
    options.splits = endpoints(frames);
    return functional_quad(f, xi, weight, options).value;
  }
  DyadicOptions options;
  options.tol = tol;
  return functional_dyadic(f, xi, weight, options).value;
}

Complex earthquake_functional(const FiniteLamination& mu, Complex tau,
                              const TestFunction& xi, double tol, Route route) {
  const PiecewiseMobiusMap f = elementary_earthquake(mu, tau);
  if (route == Route::kQuadrature) {
    QuadOptions options;
    options.tol = tol;
    return functional_quad(f, xi, nullptr, options).value;
  }
  DyadicOptions options;
  options.tol = tol;
  return functional_dyadic(f, xi, nullptr, options).value;
}

Complex simple_earthquake_functional(const Geodesic& g, Complex length,
                                     const TestFunction& xi, double tol) {
  QuadOptions options;
  options.tol = tol;
  return functional_quad(simple_earthquake(g, length), xi, nullptr, options).value;
}

FdResult fd_derivative(const std::function<Complex(double)>& path, double t0, double step,
                       int order) {
  if (!(step > 0.0)) throw Error(ErrorKind::kInvalidArgument, "step must be positive");
  auto at = [&](double t) -> Complex {
    try {
      const Complex value = path(t);
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error(ErrorKind::kStencilFailure, "non-finite path value");
      }
      return value;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kStencilFailure) throw;
      throw Error(ErrorKind::kStencilFailure,
                  "path failed at t = " + std::to_string(t) + ": " + e.what());
    }
  };
  FdResult out;
  if (order == 1) {
    const double h = step;
    const Complex coarse = (at(t0 + h) - at(t0 - h)) / (2.0 * h);
    const Complex fine = (at(t0 + 0.5 * h) - at(t0 - 0.5 * h)) / h;
    out.raw = coarse;
    out.value = (4.0 * fine - coarse) / 3.0;
    out.error_estimate = std::abs(out.value - fine);
    return out;
  }
  if (order == 2) {
    const double h = step;
    const Complex f0 = at(t0);
    const Complex f1 = at(t0 + h), fm1 = at(t0 - h);
    const Complex f2 = at(t0 + 2.0 * h), fm2 = at(t0 - 2.0 * h);
    const Complex three = (f1 - 2.0 * f0 + fm1) / (h * h);
    out.value = (-f2 + 16.0 * f1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    out.raw = three;
    out.error_estimate = std::abs(out.value - three);
    return out;
  }
  throw Error(ErrorKind::kInvalidArgument, "order must be 1 or 2");
}

CauchyResult cauchy_derivative(const std::function<Complex(Complex)>& path, Complex tau0,
                               double radius, int points, int order) {
  if (!(radius > 0.0) || points < 1 || order < 0) {
    throw Error(ErrorKind::kInvalidArgument, "need radius > 0, points >= 1, order >= 0");
  }
  double r = radius;
  for (int attempt = 0; attempt <= 4; ++attempt, r *= 0.5) {
    try {
      Complex sum = 0.0;
      for (int j = 0; j < points; ++j) {
        const double theta = kTwoPi * j / points;
        const Complex w = std::polar(1.0, theta);
        sum += path(tau0 + r * w) * std::polar(1.0, -order * theta);
      }
      CauchyResult out;
      out.value = factorial(order) * sum / (std::pow(r, order) * points);
      out.radius = r;
      out.points = points;
      return out;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kBranchGuard) continue;
      throw Error(ErrorKind::kPathEvaluationFailure, e.what());
    }
  }
  throw Error(ErrorKind::kPathEvaluationFailure,
              "branch guard tripped at every radius down to " + std::to_string(2.0 * r));
}

DecayFit decay_profile(const TestFunction& xi, const std::vector<Geodesic>& geodesics,
                       double tol) {
  if (geodesics.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "need at least two geodesics");
  }
  if (!(tol > 0.0)) throw Error(ErrorKind::kInvalidArgument, "tol must be positive");
  DecayFit fit;
  for (const Geodesic& g : geodesics) {
    const double d = distance_to_geodesic(reference_point(), g);
    if (!fit.distances.empty() && !(d > fit.distances.back())) {
      throw Error(ErrorKind::kInvalidArgument, "distances must strictly increase");
    }
    fit.distances.push_back(d);
  }
  for (const Geodesic& g : geodesics) {
    const std::vector<Leaf> leaf = {Leaf{g, 1.0}};
    // Tighten the absolute tolerance until it is relative to the value.
    double abs_tol = 1e-6;
    double value = first_order(leaf, xi, abs_tol);
    for (int pass = 0; pass < 8 && value != 0.0 && abs_tol > tol * std::abs(value); ++pass) {
      abs_tol = 0.5 * tol * std::abs(value);
      value = first_order(leaf, xi, abs_tol);
    }
    fit.magnitudes.push_back(std::abs(value));
  }
  double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < fit.distances.size(); ++k) {
    if (!(fit.magnitudes[k] > 0.0)) continue;
    const double x = fit.distances[k];
    const double y = std::log(fit.magnitudes[k]);
    n += 1.0;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  if (n < 2.0) throw Error(ErrorKind::kAllZero, "fewer than two nonzero integrals");
  fit.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.fitted_intercept = (sy - fit.fitted_slope * sx) / n;
  return fit;
}

std::vector<Geodesic> receding_family(const Box& box, std::size_t count, double d_min,
                                      double d_max) {
  if (count < 2 || !(d_min < d_max)) {
    throw Error(ErrorKind::kInvalidArgument, "need count >= 2 and d_min < d_max");
  }
  const BoundaryPoint corner = box.b();
  const double theta_b = corner.angle();
  // The moving endpoint may run back from b as far as the end of the second arc.
  double reach = std::fmod(theta_b - box.d().angle(), kTwoPi);
  if (reach <= 0.0) reach += kTwoPi;
  reach *= 0.999;
  auto geodesic = [&](double delta) {
    return Geodesic::create(BoundaryPoint::from_angle(theta_b - delta), corner);
  };
  auto distance = [&](double delta) {
    return distance_to_geodesic(reference_point(), geodesic(delta));
  };
  // Distance decreases as delta grows up to its minimum; search only there.
  double best_delta = reach;
  double best = distance(reach);
  constexpr int kScan = 2000;
  for (int k = 1; k < kScan; ++k) {
    const double delta = reach * k / kScan;
    const double dist = distance(delta);
    if (dist < best) {
      best = dist;
      best_delta = delta;
    }
  }
  if (d_min < best) {
    throw Error(ErrorKind::kInvalidArgument, "d_min is below the closest member");
  }
  std::vector<Geodesic> family;
  for (std::size_t k = 0; k < count; ++k) {
    const double target =
        d_min + (d_max - d_min) * static_cast<double>(k) / static_cast<double>(count - 1);
    // Bisection in log(delta) on (tiny, best_delta].
    double lo = std::log(1e-15), hi = std::log(best_delta);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (distance(std::exp(mid)) > target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    family.push_back(geodesic(std::exp(0.5 * (lo + hi))));
  }
  return family;
}

std::vector<KjRow> kj_stabilization(const FiniteLamination& mu, const TestFunction& xi,
                                    const std::vector<double>& radii, Complex tau,
                                    double tol, Route route) {
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (!(radii[k] > radii[k - 1])) {
      throw Error(ErrorKind::kInvalidArgument, "radii must increase");
    }
  }
  std::vector<KjRow> rows;
  for (double r : radii) {
    const FiniteLamination truncated = restrict_to_disk(mu, r);
    rows.push_back({r, truncated.size(), d1_quakebend(truncated, tau, xi, tol, route)});
  }
  return rows;
}

}  // namespace liouville
