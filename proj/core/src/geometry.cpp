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

#include "liouville/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "liouville/error.hpp"

namespace liouville {
namespace {

constexpr double kPi = std::numbers::pi;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Drops imaginary parts that are pure rounding noise relative to the real
// part; keeps real inputs bit-for-bit real.
Complex clean(Complex z) {
  if (z.imag() != 0.0 && std::abs(z.imag()) <= 1e-17 * std::abs(z.real())) {
    return {z.real(), 0.0};
  }
  return z;
}

// Unit-modulus representatives of the two sides of a real point relative to
// the standard geodesic: sign of u * v.
double real_product(const BoundaryPoint& p) {
  return (p.u() * std::conj(p.v())).real();
}

}  // namespace

// ---------------------------------------------------------------------------
// BoundaryPoint

BoundaryPoint BoundaryPoint::projective(Complex u, Complex v) {
  if (!finite(u) || !finite(v)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite projective coordinates");
  }
  const double au = std::abs(u);
  const double av = std::abs(v);
  if (au == 0.0 && av == 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "projective point (0 : 0)");
  }
  if (au > av) return {Complex(1.0), clean(v / u)};
  return {clean(u / v), Complex(1.0)};
}

BoundaryPoint BoundaryPoint::real(double x) {
  if (std::isnan(x)) throw Error(ErrorKind::kInvalidArgument, "NaN boundary point");
  if (std::isinf(x)) return infinity();
  return projective(x, 1.0);
}

BoundaryPoint BoundaryPoint::complex(Complex z) {
  if (std::isinf(z.real()) || std::isinf(z.imag())) return infinity();
  return projective(z, 1.0);
}

BoundaryPoint BoundaryPoint::from_angle(double theta) {
  // cos(pi / 2) rounds to 6e-17, so +-pi is special-cased to land on infinity.
  if (std::abs(theta) == std::numbers::pi) return infinity();
  return projective(std::sin(0.5 * theta), std::cos(0.5 * theta));
}

bool BoundaryPoint::is_real(double tol) const {
  return std::abs(u_.imag()) <= tol && std::abs(v_.imag()) <= tol;
}

Complex BoundaryPoint::value() const {
  if (is_infinite()) return {std::numeric_limits<double>::infinity(), 0.0};
  if (v_ == Complex(1.0)) return u_;
  return 1.0 / v_;
}

double BoundaryPoint::real_value() const { return value().real(); }

double BoundaryPoint::angle() const {
  double u = u_.real();
  double v = v_.real();
  if (v < 0.0 || (v == 0.0 && u < 0.0)) {
    u = -u;
    v = -v;
  }
  return 2.0 * std::atan2(u, v);
}

bool BoundaryPoint::approx_equal(const BoundaryPoint& other, double rel_tol) const {
  return coincide(*this, other, rel_tol);
}

// ---------------------------------------------------------------------------
// PointH

PointH PointH::create(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "point is not in the upper half-plane");
  }
  return {x, y};
}

// ---------------------------------------------------------------------------
// MobiusMap

MobiusMap MobiusMap::from_entries(Complex a, Complex b, Complex c, Complex d) {
  if (!finite(a) || !finite(b) || !finite(c) || !finite(d)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite matrix entry");
  }
  const bool real = a.imag() == 0.0 && b.imag() == 0.0 && c.imag() == 0.0 &&
                    d.imag() == 0.0;
  if (real) return MobiusMap::real(a.real(), b.real(), c.real(), d.real());
  const Complex dt = a * d - b * c;
  if (std::abs(dt) <= 1e-14 * (std::abs(a * d) + std::abs(b * c))) {
    throw Error(ErrorKind::kDegenerateConfiguration, "singular matrix");
  }
  const Complex s = std::sqrt(dt);
  return {a / s, b / s, c / s, d / s, false};
}

MobiusMap MobiusMap::real(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite matrix entry");
  }
  const double dt = a * d - b * c;
  if (std::abs(dt) <= 1e-14 * (std::abs(a * d) + std::abs(b * c))) {
    throw Error(ErrorKind::kDegenerateConfiguration, "singular matrix");
  }
  const double s = std::sqrt(std::abs(dt));
  return {a / s, b / s, c / s, d / s, true};
}

MobiusMap MobiusMap::scaling(Complex factor) {
  if (factor.imag() == 0.0) return real(factor.real(), 0.0, 0.0, 1.0);
  return from_entries(factor, 0.0, 0.0, 1.0);
}

bool MobiusMap::preserves_upper_half_plane() const {
  return real_ && determinant().real() > 0.0;
}

BoundaryPoint MobiusMap::apply(const BoundaryPoint& p) const {
  return BoundaryPoint::projective(a_ * p.u() + b_ * p.v(), c_ * p.u() + d_ * p.v());
}

Complex MobiusMap::apply(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

PointH MobiusMap::apply(const PointH& z) const {
  if (!preserves_upper_half_plane()) {
    throw Error(ErrorKind::kInvalidArgument, "map does not preserve H");
  }
  const Complex w = apply(z.z());
  return PointH::create(w.real(), w.imag());
}

MobiusMap MobiusMap::inverse() const {
  if (real_) return real(d_.real(), -b_.real(), -c_.real(), a_.real());
  return from_entries(d_, -b_, -c_, a_);
}

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
  const Complex a = a_ * o.a_ + b_ * o.c_;
  const Complex b = a_ * o.b_ + b_ * o.d_;
  const Complex c = c_ * o.a_ + d_ * o.c_;
  const Complex d = c_ * o.b_ + d_ * o.d_;
  if (real_ && o.real_) return real(a.real(), b.real(), c.real(), d.real());
  return from_entries(a, b, c, d);
}

bool MobiusMap::approx_equal(const MobiusMap& other, double tol) const {
  const Complex mine[4] = {a_, b_, c_, d_};
  const Complex theirs[4] = {other.a_, other.b_, other.c_, other.d_};
  int k = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(mine[i]) > std::abs(mine[k])) k = i;
  }
  if (std::abs(theirs[k]) == 0.0) return false;
  const Complex lambda = mine[k] / theirs[k];
  const double scale = std::abs(mine[k]);
  for (int i = 0; i < 4; ++i) {
    if (std::abs(mine[i] - lambda * theirs[i]) > tol * scale) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Geodesic

Geodesic Geodesic::create(const BoundaryPoint& from, const BoundaryPoint& to) {
  if (from.approx_equal(to)) {
    throw Error(ErrorKind::kDegenerateConfiguration, "geodesic endpoints coincide");
  }
  return {from, to};
}

Geodesic Geodesic::real(double from, double to) {
  return create(BoundaryPoint::real(from), BoundaryPoint::real(to));
}

bool Geodesic::approx_equal(const Geodesic& other, double rel_tol) const {
  return p_minus.approx_equal(other.p_minus, rel_tol) &&
         p_plus.approx_equal(other.p_plus, rel_tol);
}

Geodesic apply(const MobiusMap& m, const Geodesic& g) {
  return {m.apply(g.p_minus), m.apply(g.p_plus)};
}

// ---------------------------------------------------------------------------
// Cross-ratios

namespace {

void require_distinct(const BoundaryPoint& a, const BoundaryPoint& b,
                      const BoundaryPoint& c, const BoundaryPoint& d) {
  if (coincide(a, b) || coincide(a, c) || coincide(a, d) || coincide(b, c) ||
      coincide(b, d) || coincide(c, d)) {
    throw Error(ErrorKind::kDegenerateConfiguration, "cross-ratio of coinciding points");
  }
}

}  // namespace

Complex cross_ratio(const BoundaryPoint& a, const BoundaryPoint& b,
                    const BoundaryPoint& c, const BoundaryPoint& d) {
  const Complex ac = det(a, c), bd = det(b, d), ad = det(a, d), bc = det(b, c);
  require_distinct(a, b, c, d);
  return clean((ac * bd) / (ad * bc));
}

Complex cross_ratio_minus_one(const BoundaryPoint& a, const BoundaryPoint& b,
                              const BoundaryPoint& c, const BoundaryPoint& d) {
  const Complex ad = det(a, d), bc = det(b, c);
  const Complex ab = det(a, b), cd = det(c, d);
  require_distinct(a, b, c, d);
  return clean((ab * cd) / (ad * bc));
}

// ---------------------------------------------------------------------------
// Transport to the standard geodesic (0, inf)

MobiusMap mobius_to_standard(const Geodesic& g) {
  const BoundaryPoint& p = g.p_minus;
  const BoundaryPoint& q = g.p_plus;
  // Rows pick out det(z, p) and det(z, q).
  Complex a = p.v(), b = -p.u(), c = q.v(), d = -q.u();
  if (p.is_real(0.0) && q.is_real(0.0)) {
    if ((a * d - b * c).real() < 0.0) {
      a = -a;
      b = -b;
    }
    return MobiusMap::real(a.real(), b.real(), c.real(), d.real());
  }
  return MobiusMap::from_entries(a, b, c, d);
}

MobiusMap translation_along(const Geodesic& g, Complex length) {
  const MobiusMap m = mobius_to_standard(g);
  return m.inverse() * MobiusMap::scaling(std::exp(length)) * m;
}

// ---------------------------------------------------------------------------
// Sides, crossing, angles

namespace {

void require_real(const Geodesic& g) {
  if (!g.is_real()) {
    throw Error(ErrorKind::kInvalidArgument, "expected a real geodesic");
  }
}

void require_no_shared(const Geodesic& g, const Geodesic& h) {
  if (g.p_minus.approx_equal(h.p_minus) || g.p_minus.approx_equal(h.p_plus) ||
      g.p_plus.approx_equal(h.p_minus) || g.p_plus.approx_equal(h.p_plus)) {
    throw Error(ErrorKind::kSharedEndpoint, "geodesics share an endpoint");
  }
}

// Endpoints of h transported so that g becomes (0, inf).
struct Transported {
  BoundaryPoint x;
  BoundaryPoint y;
};

Transported transport(const Geodesic& g, const Geodesic& h) {
  const MobiusMap m = mobius_to_standard(g);
  return {m.apply(h.p_minus), m.apply(h.p_plus)};
}

}  // namespace

Side side_of(const Geodesic& g, const BoundaryPoint& p) {
  require_real(g);
  const BoundaryPoint q = mobius_to_standard(g).apply(p);
  const double s = real_product(q);
  if (std::abs(s) <= kPointTolerance) return Side::kOn;
  return s < 0.0 ? Side::kLeft : Side::kRight;
}

Side side_of(const Geodesic& g, const PointH& z) {
  require_real(g);
  const Complex w = mobius_to_standard(g).apply(z.z());
  if (std::abs(w.real()) <= 1e-14 * std::abs(w)) return Side::kOn;
  return w.real() < 0.0 ? Side::kLeft : Side::kRight;
}

bool geodesics_cross(const Geodesic& g, const Geodesic& h) {
  require_real(g);
  require_real(h);
  require_no_shared(g, h);
  const Transported t = transport(g, h);
  return real_product(t.x) * real_product(t.y) < 0.0;
}

double cos_angle(const Geodesic& g, const Geodesic& h) {
  if (!geodesics_cross(g, h)) return 0.0;
  const Transported t = transport(g, h);
  const double xu = t.x.u().real(), xv = t.x.v().real();
  const double yu = t.y.u().real(), yv = t.y.v().real();
  // (-x - y) / (x - y) with x = xu / xv and y = yu / yv.
  return -(xu * yv + yu * xv) / (xu * yv - yu * xv);
}

double sin_angle(const Geodesic& g, const Geodesic& h) {
  if (!geodesics_cross(g, h)) return 0.0;
  const Transported t = transport(g, h);
  const double xu = t.x.u().real(), xv = t.x.v().real();
  const double yu = t.y.u().real(), yv = t.y.v().real();
  // 2 sqrt(-x y) / |x - y|.
  const double magnitude =
      2.0 * std::sqrt(-(xu * xv) * (yu * yv)) / std::abs(xu * yv - yu * xv);
  return real_product(t.x) > 0.0 ? magnitude : -magnitude;
}

Geodesic oriented_right_to_left(const Geodesic& g, const Geodesic& h) {
  if (!geodesics_cross(g, h)) {
    throw Error(ErrorKind::kNotCrossing, "geodesics do not cross");
  }
  return side_of(g, h.p_minus) == Side::kRight ? h : h.reversed();
}

double crossing_cos(const Geodesic& g, const Geodesic& h) {
  if (!geodesics_cross(g, h)) return 0.0;
  return cos_angle(g, oriented_right_to_left(g, h));
}

double crossing_sin(const Geodesic& g, const Geodesic& h) {
  return std::abs(sin_angle(g, h));
}

Complex cosh_complex_distance(const Geodesic& g, const Geodesic& h) {
  return 1.0 - 2.0 / cross_ratio(h.p_plus, g.p_minus, h.p_minus, g.p_plus);
}

// ---------------------------------------------------------------------------
// Interior distances

double point_distance(const PointH& z, const PointH& w) {
  const double dx = z.x - w.x;
  const double dy = z.y - w.y;
  const double chord = std::sqrt(dx * dx + dy * dy);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z.y * w.y)));
}

double distance_to_geodesic(const PointH& z, const Geodesic& g) {
  require_real(g);
  const Complex w = mobius_to_standard(g).apply(z.z());
  return std::asinh(std::abs(w.real()) / w.imag());
}

PointH geodesic_intersection(const Geodesic& g, const Geodesic& h) {
  if (!geodesics_cross(g, h)) {
    throw Error(ErrorKind::kNotCrossing, "geodesics do not cross");
  }
  const MobiusMap m = mobius_to_standard(g);
  const Transported t = transport(g, h);
  const double x = t.x.real_value();
  const double y = t.y.real_value();
  const Complex w = m.inverse().apply(Complex(0.0, std::sqrt(-x * y)));
  return PointH::create(w.real(), w.imag());
}

double angle_metric(const PointH& z0, const BoundaryPoint& p, const BoundaryPoint& q) {
  const MobiusMap to_i = MobiusMap::real(1.0, -z0.x, 0.0, z0.y);
  const double d = std::abs(to_i.apply(p).angle() - to_i.apply(q).angle());
  const double folded = std::fmod(d, 2.0 * kPi);
  return std::min(folded, 2.0 * kPi - folded);
}

}  // namespace liouville
