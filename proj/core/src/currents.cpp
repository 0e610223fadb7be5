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

#include "liouville/currents.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <utility>

#include "liouville/error.hpp"

namespace liouville {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mod_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double wrap_angle(double theta) {
  theta = mod_two_pi(theta);
  return theta > kPi ? theta - kTwoPi : theta;
}

// log(1 + z) without cancellation for small z.
Complex log1p_complex(Complex z) {
  const Complex u = 1.0 + z;
  if (u == Complex(1.0)) return z;
  return std::log(u) * z / (u - 1.0);
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Neumaier summation of complex terms.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(sum_re_, comp_re_, x.real());
    add_part(sum_im_, comp_im_, x.imag());
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

// ---------------------------------------------------------------------------
// Gauss-Kronrod 7/15

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  Complex value;
  double error;
};

template <typename F>
Panel gk15(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex fc = f(center);
  Complex kronrod = kWgk[7] * fc;
  Complex gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {lo, hi, half * kronrod, std::abs(half * (kronrod - gauss))};
}

struct Adaptive {
  Complex value;
  double error;
  std::size_t evaluations;
  bool converged;
};

// Globally adaptive bisection: always splits the panel with the largest error
// estimate until the total estimate drops below tol.
template <typename F>
Adaptive adapt(F&& f, double lo, double hi, double tol, std::size_t budget) {
  auto by_error = [](const Panel& p, const Panel& q) { return p.error < q.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> heap(by_error);
  heap.push(gk15(f, lo, hi));
  std::size_t evaluations = 15;
  double total_error = heap.top().error;
  bool converged = true;
  std::vector<Panel> finished;
  while (total_error > tol) {
    if (evaluations + 30 > budget) {
      converged = false;
      break;
    }
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) ||
        worst.hi - worst.lo <= 1e-14 * std::max(1.0, std::abs(mid))) {
      // Cannot split further; keep its error in the estimate.
      heap.pop();
      finished.push_back(worst);
      converged = false;
      if (heap.empty()) break;
      continue;
    }
    heap.pop();
    const Panel left = gk15(f, worst.lo, mid);
    const Panel right = gk15(f, mid, worst.hi);
    evaluations += 30;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (heap.size() % 64 == 0) {
      // Refresh the running error to avoid drift.
      double fresh = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        fresh += copy.top().error;
        copy.pop();
      }
      for (const Panel& p : finished) fresh += p.error;
      total_error = fresh;
    }
  }
  while (!heap.empty()) {
    finished.push_back(heap.top());
    heap.pop();
  }
  std::sort(finished.begin(), finished.end(),
            [](const Panel& p, const Panel& q) { return p.lo < q.lo; });
  CompensatedSum sum;
  double error = 0.0;
  for (const Panel& p : finished) {
    sum.add(p.value);
    error += p.error;
  }
  return {sum.value(), error, evaluations, converged && error <= tol};
}

// Split offsets strictly inside (0, length), sorted, with the ends added.
std::vector<double> segment_offsets(std::vector<double> cuts, double length) {
  std::vector<double> out = {0.0};
  std::sort(cuts.begin(), cuts.end());
  const double margin = 1e-12 * std::max(1.0, length);
  for (double c : cuts) {
    if (c > margin && c < length - margin && c - out.back() > margin) out.push_back(c);
  }
  if (length - out.back() <= margin) out.pop_back();
  out.push_back(length);
  return out;
}

// Angle-parameterized point (sin(theta / 2), cos(theta / 2)).
struct Vec2 {
  Complex u;
  Complex v;
};

Vec2 angle_vector(double theta) { return {std::sin(0.5 * theta), std::cos(0.5 * theta)}; }

Vec2 apply_raw(const MobiusMap& m, const Vec2& p) {
  return {m.a() * p.u + m.b() * p.v, m.c() * p.u + m.d() * p.v};
}

Complex det_raw(const Vec2& p, const Vec2& q) { return p.u * q.v - p.v * q.u; }

// Hat profile on [0, 1] peaking at 1/2.
double hat(double s) { return std::max(0.0, 1.0 - std::abs(2.0 * s - 1.0)); }

// Largest |d s / d theta| of a mass coordinate over an arc, from a dense scan of
// its closed-form derivative, with a 2% safety margin.
template <typename Derivative>
double max_slope(Derivative&& derivative, double start, double length) {
  constexpr int kSamples = 4000;
  double best = 0.0;
  for (int k = 0; k <= kSamples; ++k) {
    best = std::max(best, std::abs(derivative(start + length * k / kSamples)));
  }
  return 1.02 * best;
}

// Derivative in theta of log det(P(theta), q) for the angle vector P.
double dlog_det(double theta, const BoundaryPoint& q) {
  const Vec2 p = angle_vector(theta);
  const Vec2 dp = {0.5 * std::cos(0.5 * theta), -0.5 * std::sin(0.5 * theta)};
  const Vec2 qq = {q.u(), q.v()};
  return (det_raw(dp, qq) / det_raw(p, qq)).real();
}

}  // namespace

// ---------------------------------------------------------------------------
// Box

Box Box::create(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c,
                const BoundaryPoint& d) {
  for (const BoundaryPoint* p : {&a, &b, &c, &d}) {
    if (!p->is_real()) throw Error(ErrorKind::kInvalidArgument, "box corners must be real");
  }
  const BoundaryPoint* corners[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (corners[i]->approx_equal(*corners[j])) {
        throw Error(ErrorKind::kDegenerateConfiguration, "box corners must be distinct");
      }
    }
  }
  const double ta = a.angle();
  const double ob = mod_two_pi(b.angle() - ta);
  const double oc = mod_two_pi(c.angle() - ta);
  const double od = mod_two_pi(d.angle() - ta);
  if (!(0.0 < ob && ob < oc && oc < od && od < kTwoPi)) {
    throw Error(ErrorKind::kInvalidArgument,
                "box arcs must be disjoint with corners in counterclockwise order");
  }
  Box box;
  box.a_ = a;
  box.b_ = b;
  box.c_ = c;
  box.d_ = d;
  box.first_start_ = ta;
  box.first_length_ = ob;
  box.second_start_ = c.angle();
  box.second_length_ = od - oc;
  return box;
}

Box Box::real(double a, double b, double c, double d) {
  return create(BoundaryPoint::real(a), BoundaryPoint::real(b), BoundaryPoint::real(c),
                BoundaryPoint::real(d));
}

namespace {

double arc_offset(double start, double length, const BoundaryPoint& p) {
  if (!p.is_real()) return -1.0;
  const double o = mod_two_pi(p.angle() - start);
  constexpr double kSlack = 1e-13;
  if (o <= length + kSlack) return std::min(o, length);
  if (o >= kTwoPi - kSlack) return 0.0;
  return -1.0;
}

}  // namespace

double Box::first_offset(const BoundaryPoint& p) const {
  return arc_offset(first_start_, first_length_, p);
}

double Box::second_offset(const BoundaryPoint& p) const {
  return arc_offset(second_start_, second_length_, p);
}

bool Box::contains(const Geodesic& h) const {
  return first_offset(h.p_minus) >= 0.0 && second_offset(h.p_plus) >= 0.0;
}

double geodesic_distance(const Geodesic& h1, const Geodesic& h2) {
  const PointH i = {0.0, 1.0};
  return std::max(angle_metric(i, h1.p_minus, h2.p_minus),
                  angle_metric(i, h1.p_plus, h2.p_plus));
}

// ---------------------------------------------------------------------------
// Test functions

TestFunction::TestFunction(Box support, Kernel fn, double holder_exponent,
                           double holder_seminorm, std::vector<BoundaryPoint> kinks)
    : support_(std::move(support)),
      fn_(std::move(fn)),
      holder_exponent_(holder_exponent),
      holder_seminorm_(holder_seminorm),
      kinks_(std::move(kinks)) {
  if (!(holder_exponent > 0.0 && holder_exponent <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "Hölder exponent must lie in (0, 1]");
  }
  if (!(holder_seminorm >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "Hölder seminorm must be nonnegative");
  }
}

TestFunction TestFunction::separable(Box support, Factor first, Factor second,
                                     double holder_exponent, double holder_seminorm,
                                     std::vector<BoundaryPoint> kinks) {
  Kernel fn = [first, second](const BoundaryPoint& x, const BoundaryPoint& y) {
    return first(x) * second(y);
  };
  TestFunction xi(std::move(support), std::move(fn), holder_exponent, holder_seminorm,
                  std::move(kinks));
  xi.first_ = std::move(first);
  xi.second_ = std::move(second);
  return xi;
}

Complex TestFunction::evaluate(const Geodesic& h) const {
  if (!support_.contains(h)) return 0.0;
  return evaluate_inside(h.p_minus, h.p_plus);
}

Complex TestFunction::evaluate_inside(const BoundaryPoint& x, const BoundaryPoint& y) const {
  return fn_(x, y);
}

TestFunction TestFunction::scaled(Complex factor) const {
  TestFunction xi = *this;
  if (first_) {
    Factor first = first_;
    xi.first_ = [first, factor](const BoundaryPoint& x) { return factor * first(x); };
  }
  Kernel fn = fn_;
  xi.fn_ = [fn, factor](const BoundaryPoint& x, const BoundaryPoint& y) {
    return factor * fn(x, y);
  };
  xi.holder_seminorm_ = std::abs(factor) * holder_seminorm_;
  return xi;
}

TestFunction bump_test_function(const Box& box, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "lambda must lie in (0, 1]");
  }
  const BoundaryPoint a = box.a(), b = box.b(), c = box.c(), d = box.d();
  const double total = liouville_box(box);
  // Mass coordinates of the two arcs, from the Plücker form of cr - 1.
  auto s1 = [=](const BoundaryPoint& x) {
    const Complex q = det(a, x) * det(c, d) / (det(a, d) * det(x, c));
    return log1p_complex(q).real() / total;
  };
  auto s2 = [=](const BoundaryPoint& y) {
    const Complex q = det(a, b) * det(c, y) / (det(a, y) * det(b, c));
    return log1p_complex(q).real() / total;
  };
  auto first = [=](const BoundaryPoint& x) -> Complex {
    const double h = hat(s1(x));
    return lambda == 1.0 ? h : std::pow(h, lambda);
  };
  auto second = [=](const BoundaryPoint& y) -> Complex {
    const double h = hat(s2(y));
    return lambda == 1.0 ? h : std::pow(h, lambda);
  };
  const double slope1 = max_slope(
      [&](double t) { return (dlog_det(t, d) - dlog_det(t, c)) / total; },
      box.first_start(), box.first_length());
  const double slope2 = max_slope(
      [&](double t) { return (dlog_det(t, b) - dlog_det(t, a)) / total; },
      box.second_start(), box.second_length());
  const double seminorm = std::pow(2.0 * slope1, lambda) + std::pow(2.0 * slope2, lambda);
  const DyadicPartition halves = dyadic_partition(box, 1);
  return TestFunction::separable(box, first, second, lambda, seminorm,
                                 {halves.first[1], halves.second[1]});
}

TestFunction tent_test_function(const Box& box) { return bump_test_function(box, 1.0); }

TestFunction compose_inverse(const TestFunction& xi, const PiecewiseMobiusMap& f) {
  if (!f.is_real()) {
    throw Error(ErrorKind::kInvalidArgument, "compose_inverse needs a real map");
  }
  const PiecewiseMobiusMap g = f.inverse();
  const Box& s = xi.support();
  Box image = Box::create(f.evaluate(s.a()), f.evaluate(s.b()), f.evaluate(s.c()),
                          f.evaluate(s.d()));
  std::vector<BoundaryPoint> kinks;
  for (const BoundaryPoint& k : xi.kinks()) kinks.push_back(f.evaluate(k));
  for (const BoundaryPoint& k : g.breakpoints()) kinks.push_back(k);
  TestFunction::Kernel fn = [xi, g](const BoundaryPoint& x, const BoundaryPoint& y) {
    return xi.evaluate_inside(g.evaluate(x), g.evaluate(y));
  };
  return TestFunction(std::move(image), std::move(fn), xi.holder_exponent(),
                      std::numeric_limits<double>::infinity(), std::move(kinks));
}

// ---------------------------------------------------------------------------
// Box masses

double liouville_box(const Box& box) {
  return log1p_complex(cross_ratio_minus_one(box.a(), box.b(), box.c(), box.d())).real();
}

Complex pullback_box(const PiecewiseMobiusMap& f, const Box& box) {
  Complex q;
  try {
    q = cross_ratio_minus_one(f.evaluate(box.a()), f.evaluate(box.b()),
                              f.evaluate(box.c()), f.evaluate(box.d()));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kDegenerateConfiguration) {
      throw Error(ErrorKind::kBranchGuard, "image corners collide");
    }
    throw;
  }
  const Complex cr = 1.0 + q;
  if (!finite(cr) || (cr.imag() == 0.0 && cr.real() <= 0.0)) {
    throw Error(ErrorKind::kBranchGuard, "cross-ratio on the negative real axis");
  }
  return log1p_complex(q);
}

// ---------------------------------------------------------------------------
// Quadrature

QuadResult functional_quad(const PiecewiseMobiusMap& f, const TestFunction& xi,
                           const Weight& weight, const QuadOptions& options) {
  if (!(options.tol > 0.0)) throw Error(ErrorKind::kInvalidArgument, "tol must be positive");
  const Box& box = xi.support();

  std::vector<BoundaryPoint> cuts = f.breakpoints();
  cuts.insert(cuts.end(), xi.kinks().begin(), xi.kinks().end());
  cuts.insert(cuts.end(), options.splits.begin(), options.splits.end());
  std::vector<double> first_cuts, second_cuts;
  for (const BoundaryPoint& p : cuts) {
    if (const double o = box.first_offset(p); o >= 0.0) first_cuts.push_back(o);
    if (const double o = box.second_offset(p); o >= 0.0) second_cuts.push_back(o);
  }
  const std::vector<double> rows = segment_offsets(first_cuts, box.first_length());
  const std::vector<double> cols = segment_offsets(second_cuts, box.second_length());
  const double area = box.first_length() * box.second_length();
  const double cells = static_cast<double>((rows.size() - 1) * (cols.size() - 1));

  QuadResult result;
  CompensatedSum total;
  std::size_t budget = options.max_evaluations;
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    const double t0 = box.first_start() + rows[r];
    const double t1 = box.first_start() + rows[r + 1];
    const MobiusMap& m1 = f.pieces()[f.piece_index_at_angle(wrap_angle(0.5 * (t0 + t1)))];
    for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
      const double p0 = box.second_start() + cols[c];
      const double p1 = box.second_start() + cols[c + 1];
      const MobiusMap& m2 =
          f.pieces()[f.piece_index_at_angle(wrap_angle(0.5 * (p0 + p1)))];
      const Complex jacobian = m1.determinant() * m2.determinant() / 4.0;
      // Half the budget by area, half shared equally, so that thin cells next
      // to clustered cuts are not asked for more than rounding allows.
      const double cell_tol =
          0.5 * options.tol * ((t1 - t0) * (p1 - p0) / area + 1.0 / cells);
      const double inner_tol = 0.5 * cell_tol / (t1 - t0);
      double worst_inner = 0.0;
      bool inner_ok = true;

      auto outer = [&](double theta) -> Complex {
        const BoundaryPoint x = BoundaryPoint::from_angle(theta);
        Complex xi_x = 1.0;
        if (xi.is_separable()) {
          xi_x = xi.first_factor(x);
          if (xi_x == Complex(0.0)) return 0.0;
        }
        const Vec2 fx = apply_raw(m1, angle_vector(theta));
        const BoundaryPoint fx_point = BoundaryPoint::projective(fx.u, fx.v);
        auto inner = [&](double phi) -> Complex {
          const BoundaryPoint y = BoundaryPoint::from_angle(phi);
          const Complex xi_value =
              xi.is_separable() ? xi_x * xi.second_factor(y) : xi.evaluate_inside(x, y);
          if (xi_value == Complex(0.0)) return 0.0;
          const Vec2 fy = apply_raw(m2, angle_vector(phi));
          const Complex dd = det_raw(fx, fy);
          Complex value = xi_value * jacobian / (dd * dd);
          if (weight) {
            value *= weight(Geodesic{x, y},
                            Geodesic{fx_point, BoundaryPoint::projective(fy.u, fy.v)});
          }
          return value;
        };
        const Adaptive in = adapt(inner, p0, p1, inner_tol, budget);
        result.evaluations += in.evaluations;
        budget = budget > in.evaluations ? budget - in.evaluations : 0;
        worst_inner = std::max(worst_inner, in.error);
        inner_ok = inner_ok && in.converged;
        return in.value;
      };
      const Adaptive out = adapt(outer, t0, t1, 0.5 * cell_tol, budget / 15 + 15);
      total.add(out.value);
      result.error_estimate += out.error + (t1 - t0) * worst_inner;
      result.converged = result.converged && out.converged && inner_ok;
    }
  }
  result.value = total.value();
  if (!std::isfinite(result.value.real()) || !std::isfinite(result.value.imag())) {
    throw Error(ErrorKind::kBranchGuard, "non-finite integrand");
  }
  return result;
}

QuadResult quad_weighted(const TestFunction& xi,
                         const std::function<Complex(const Geodesic&)>& kernel,
                         double tol, const std::vector<BoundaryPoint>& splits) {
  QuadOptions options;
  options.tol = tol;
  options.splits = splits;
  Weight weight;
  if (kernel) weight = [&kernel](const Geodesic& h, const Geodesic&) { return kernel(h); };
  return functional_quad(PiecewiseMobiusMap::identity(), xi, weight, options);
}

// ---------------------------------------------------------------------------
// Dyadic sums

DyadicPartition dyadic_partition(const Box& box, int n) {
  if (n < 0 || n > 24) throw Error(ErrorKind::kInvalidArgument, "level out of range");
  const BoundaryPoint &a = box.a(), &b = box.b(), &c = box.c(), &d = box.d();
  const double total = liouville_box(box);
  const std::size_t count = std::size_t{1} << n;
  DyadicPartition part;
  part.first.reserve(count + 1);
  part.second.reserve(count + 1);
  part.first.push_back(a);
  part.second.push_back(c);
  const Complex ad_over_ac = det(a, d) / det(a, c);
  const Complex bc_over_ac = det(b, c) / det(a, c);
  for (std::size_t k = 1; k < count; ++k) {
    const double K = std::exp(total * static_cast<double>(k) / static_cast<double>(count));
    // log cr(a, s, c, d) = k L / 2^n  <=>  s ~ d - R c.
    const Complex r1 = K * ad_over_ac;
    part.first.push_back(BoundaryPoint::projective(d.u() - r1 * c.u(), d.v() - r1 * c.v()));
    // log cr(a, b, c, t) = k L / 2^n  <=>  t ~ b - R a.
    const Complex r2 = K * bc_over_ac;
    part.second.push_back(BoundaryPoint::projective(b.u() - r2 * a.u(), b.v() - r2 * a.v()));
  }
  part.first.push_back(b);
  part.second.push_back(d);
  return part;
}

namespace {

DyadicLevel dyadic_level(const PiecewiseMobiusMap& f, const TestFunction& xi,
                         const Weight& weight, int n) {
  const DyadicPartition part = dyadic_partition(xi.support(), n);
  const std::size_t count = part.first.size() - 1;
  std::vector<BoundaryPoint> fa(count + 1), fc(count + 1);
  for (std::size_t s = 0; s <= count; ++s) fa[s] = f.evaluate(part.first[s]);
  for (std::size_t t = 0; t <= count; ++t) fc[t] = f.evaluate(part.second[t]);

  std::vector<Complex> xi_first, xi_second;
  if (xi.is_separable()) {
    xi_first.resize(count + 1);
    xi_second.resize(count + 1);
    for (std::size_t s = 1; s <= count; ++s) xi_first[s] = xi.first_factor(part.first[s]);
    for (std::size_t t = 1; t <= count; ++t) xi_second[t] = xi.second_factor(part.second[t]);
  }

  std::vector<Complex> dc(count + 1);
  for (std::size_t t = 1; t <= count; ++t) dc[t] = det(fc[t - 1], fc[t]);
  std::vector<Complex> previous(count + 1), current(count + 1);
  auto fill_row = [&](std::size_t s, std::vector<Complex>& row) {
    for (std::size_t t = 0; t <= count; ++t) {
      row[t] = det(fa[s], fc[t]);
      if (!(std::abs(row[t]) >= 1e-12)) {
        throw Error(ErrorKind::kBranchGuard, "image points collide");
      }
    }
  };
  fill_row(0, previous);

  CompensatedSum sum, mass;
  DyadicLevel level;
  level.n = n;
  for (std::size_t s = 1; s <= count; ++s) {
    fill_row(s, current);
    const Complex da = det(fa[s - 1], fa[s]);
    for (std::size_t t = 1; t <= count; ++t) {
      const Complex q = da * dc[t] / (previous[t] * current[t - 1]);
      const Complex cr = 1.0 + q;
      if (!finite(cr) || cr == Complex(0.0) || (cr.imag() == 0.0 && cr.real() <= 0.0)) {
        throw Error(ErrorKind::kBranchGuard, "cell cross-ratio on the negative real axis");
      }
      const Complex log_cr = log1p_complex(q);
      level.max_abs_arg = std::max(level.max_abs_arg, std::abs(log_cr.imag()));
      mass.add(log_cr);
      Complex xi_value = xi.is_separable()
                             ? xi_first[s] * xi_second[t]
                             : xi.evaluate_inside(part.first[s], part.second[t]);
      if (xi_value == Complex(0.0)) continue;
      if (weight) {
        xi_value *= weight(Geodesic{part.first[s], part.second[t]}, Geodesic{fa[s], fc[t]});
      }
      sum.add(xi_value * log_cr);
    }
    std::swap(previous, current);
  }
  level.sum = sum.value();
  level.total_mass = mass.value();
  level.accepted = level.max_abs_arg <= 0.5 * kPi;
  return level;
}

}  // namespace

DyadicResult functional_dyadic(const PiecewiseMobiusMap& f, const TestFunction& xi,
                               const Weight& weight, const DyadicOptions& options) {
  if (!(options.tol > 0.0)) throw Error(ErrorKind::kInvalidArgument, "tol must be positive");
  if (options.n0 < 0 || options.n_max < options.n0) {
    throw Error(ErrorKind::kInvalidArgument, "need 0 <= n0 <= n_max");
  }
  DyadicResult result;
  const double negligible = 1e-3 * options.tol;
  int stalled = 0;
  bool any_accepted = false;
  for (int n = options.n0; n <= options.n_max; ++n) {
    DyadicLevel level = dyadic_level(f, xi, weight, n);
    auto& levels = result.levels;
    if (!levels.empty()) {
      const DyadicLevel& prev = levels.back();
      if (std::abs(level.total_mass - prev.total_mass) > 1.0) {
        throw Error(ErrorKind::kBranchGuard, "total mass changed between levels");
      }
      level.increment = level.sum - prev.sum;
    }
    level.extrapolated = level.sum;
    if (levels.size() >= 2) {
      const Complex d1 = level.increment;
      const Complex d0 = levels.back().increment;
      if (d1 - d0 != Complex(0.0) && std::abs(d1) > negligible) {
        level.extrapolated = level.sum - d1 * d1 / (d1 - d0);
      }
    }
    any_accepted = any_accepted || level.accepted;
    levels.push_back(level);

    const std::size_t k = levels.size() - 1;
    if (k >= 2) {
      const double now = std::abs(levels[k].increment);
      const double before = std::abs(levels[k - 1].increment);
      stalled = (now >= before && now > negligible) ? stalled + 1 : 0;
      if (stalled >= 4) {
        throw Error(ErrorKind::kSlowConvergence,
                    "dyadic increments failed to decrease over 4 levels");
      }
    }
    if (k < 3 || !level.accepted || n < options.n_min) continue;
    auto decays = [&](std::size_t j) {
      const double now = std::abs(levels[j].increment);
      const double before = std::abs(levels[j - 1].increment);
      return now <= negligible || before >= 1.5 * now;
    };
    const double change = std::abs(levels[k].extrapolated - levels[k - 1].extrapolated);
    if (change < options.tol && decays(k) && decays(k - 1)) {
      result.value = level.extrapolated;
      result.last_sum = level.sum;
      result.error_estimate = change;
      result.converged = true;
      return result;
    }
  }
  if (!any_accepted) {
    throw Error(ErrorKind::kBranchGuard, "every level has a cell with |arg cr| > pi/2");
  }
  const DyadicLevel& last = result.levels.back();
  throw Error(ErrorKind::kSlowConvergence,
              "dyadic sums not within tol by level " + std::to_string(last.n) +
                  " (last change " +
                  std::to_string(std::abs(last.extrapolated -
                                          result.levels[result.levels.size() - 2].extrapolated)) +
                  ")");
}

}  // namespace liouville
