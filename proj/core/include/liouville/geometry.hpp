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

// Exact-formula geometry of the upper half-plane and its ideal boundary.
//
// Boundary points live in homogeneous coordinates so that infinity is an
// ordinary value. Every formula that would divide by a difference of points is
// written as a ratio of 2x2 determinants det(p, q) = p.u q.v - p.v q.u.

#pragma once

#include <algorithm>
#include <complex>

namespace liouville {

using Complex = std::complex<double>;

// Relative tolerance for deciding that two boundary points coincide.
inline constexpr double kPointTolerance = 1e-14;

// A point (u : v) of the Riemann sphere; v == 0 is infinity.
//
// Stored canonically: the component of larger modulus is exactly 1, so real
// points keep real coordinates and max(|u|, |v|) == 1.
class BoundaryPoint {
 public:
  BoundaryPoint() : u_(0.0), v_(1.0) {}

  static BoundaryPoint projective(Complex u, Complex v);
  // +-inf map to the point at infinity.
  static BoundaryPoint real(double x);
  static BoundaryPoint complex(Complex z);
  static BoundaryPoint infinity() { return projective(1.0, 0.0); }
  // The real point tan(theta / 2); theta = pi is infinity.
  static BoundaryPoint from_angle(double theta);

  Complex u() const { return u_; }
  Complex v() const { return v_; }

  bool is_infinite() const { return v_ == Complex(0.0); }
  bool is_real(double tol = 1e-12) const;

  // Affine coordinate u / v; infinite points return (inf, 0).
  Complex value() const;
  // Real part of value(); infinity gives +inf.
  double real_value() const;

  // Angle coordinate theta in (-pi, pi] with real_value() == tan(theta / 2).
  // This is the boundary angle of the disk model seen from i, so infinity
  // sits at pi. Only meaningful for real points.
  double angle() const;

  bool approx_equal(const BoundaryPoint& other,
                    double rel_tol = kPointTolerance) const;

 private:
  BoundaryPoint(Complex u, Complex v) : u_(u), v_(v) {}

  Complex u_;
  Complex v_;
};

// det(p, q) = p.u q.v - p.v q.u; vanishes iff p == q.
inline Complex det(const BoundaryPoint& p, const BoundaryPoint& q) {
  return p.u() * q.v() - p.v() * q.u();
}

// Whether det(p, q) vanishes to within tol relative to its two products, so
// that points near 0 or near infinity keep their full relative precision.
inline bool coincide(const BoundaryPoint& p, const BoundaryPoint& q,
                     double tol = kPointTolerance) {
  const double scale = std::max(std::abs(p.u() * q.v()), std::abs(p.v() * q.u()));
  return std::abs(det(p, q)) <= tol * scale;
}

// Upper half-plane point x + iy, y > 0.
struct PointH {
  double x = 0.0;
  double y = 1.0;

  static PointH create(double x, double y);
  Complex z() const { return {x, y}; }
};

// 2x2 invertible matrix acting by fractional linear transformations.
//
// Complex matrices are scaled to determinant 1 (up to sign). Real matrices are
// scaled by sqrt(|det|), so an orientation-reversing real matrix keeps
// determinant -1 and the real flavor.
class MobiusMap {
 public:
  MobiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0), real_(true) {}

  static MobiusMap identity() { return {}; }
  static MobiusMap from_entries(Complex a, Complex b, Complex c, Complex d);
  static MobiusMap real(double a, double b, double c, double d);
  // z -> factor * z.
  static MobiusMap scaling(Complex factor);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }
  Complex determinant() const { return a_ * d_ - b_ * c_; }
  Complex trace() const { return a_ + d_; }
  bool is_real() const { return real_; }
  // Real flavor with positive determinant.
  bool preserves_upper_half_plane() const;

  BoundaryPoint apply(const BoundaryPoint& p) const;
  // Action on a finite point (for example an interior point of H).
  Complex apply(Complex z) const;
  PointH apply(const PointH& z) const;

  MobiusMap inverse() const;
  // (*this) o other.
  MobiusMap operator*(const MobiusMap& other) const;

  // Equality of the projective classes, entrywise relative to the largest
  // entry.
  bool approx_equal(const MobiusMap& other, double tol = 1e-12) const;

 private:
  MobiusMap(Complex a, Complex b, Complex c, Complex d, bool real)
      : a_(a), b_(b), c_(c), d_(d), real_(real) {}

  Complex a_, b_, c_, d_;
  bool real_;
};

// Oriented geodesic from p_minus to p_plus.
struct Geodesic {
  BoundaryPoint p_minus;
  BoundaryPoint p_plus;

  // Throws kDegenerateConfiguration when the endpoints coincide.
  static Geodesic create(const BoundaryPoint& from, const BoundaryPoint& to);
  static Geodesic real(double from, double to);

  Geodesic reversed() const { return {p_plus, p_minus}; }
  bool is_real() const { return p_minus.is_real() && p_plus.is_real(); }
  bool approx_equal(const Geodesic& other,
                    double rel_tol = kPointTolerance) const;
};

Geodesic apply(const MobiusMap& m, const Geodesic& g);

enum class Side { kLeft, kRight, kOn };

// cr(a, b, c, d) = ((a - c)(b - d)) / ((a - d)(b - c)), evaluated as a ratio
// of determinants. Throws kDegenerateConfiguration unless the points are
// pairwise distinct.
Complex cross_ratio(const BoundaryPoint& a, const BoundaryPoint& b,
                    const BoundaryPoint& c, const BoundaryPoint& d);

// cr(a, b, c, d) - 1 = det(a, b) det(c, d) / (det(a, d) det(b, c)), free of
// cancellation when the box [a, b] x [c, d] is thin.
Complex cross_ratio_minus_one(const BoundaryPoint& a, const BoundaryPoint& b,
                              const BoundaryPoint& c, const BoundaryPoint& d);

// Möbius map sending g.p_minus to 0 and g.p_plus to infinity. Real geodesics
// get a real map with determinant +1, so it preserves H and sides.
MobiusMap mobius_to_standard(const Geodesic& g);

// Translation along g by a (complex) length: the conjugate of
// z -> exp(length) z by mobius_to_standard(g).
MobiusMap translation_along(const Geodesic& g, Complex length);

// Which side of the oriented real geodesic g the real point p lies on. For
// g = (0, inf) the negative reals are on the left.
Side side_of(const Geodesic& g, const BoundaryPoint& p);

// Side of an interior point.
Side side_of(const Geodesic& g, const PointH& z);

// Linked endpoint pairs. Throws kSharedEndpoint if an endpoint coincides.
bool geodesics_cross(const Geodesic& g, const Geodesic& h);

// Cosine of the angle between the oriented geodesics g and h (0 when they do
// not cross). For g = (0, inf) and h = (x, y): (-x - y) / (x - y).
double cos_angle(const Geodesic& g, const Geodesic& h);

// Sine of the angle from g to h; positive when h crosses g from g's right to
// g's left, 0 when they do not cross.
double sin_angle(const Geodesic& g, const Geodesic& h);

// Cosine and sine of the counterclockwise angle, in (0, pi), from the oriented
// geodesic g to the unoriented line of h. Equal to cos_angle and sin_angle
// after orienting h to cross g from right to left; independent of both
// orientations up to the sign of cos under reversing g (which it ignores).
// These are the kernels of the earthquake derivative formulas.
double crossing_cos(const Geodesic& g, const Geodesic& h);
double crossing_sin(const Geodesic& g, const Geodesic& h);

// h re-oriented so that it crosses g from g's right to g's left. Requires
// geodesics_cross(g, h).
Geodesic oriented_right_to_left(const Geodesic& g, const Geodesic& h);

// cosh of the complex distance between the lines g and h of hyperbolic
// 3-space: 1 - 2 / cr(h.p_plus, g.p_minus, h.p_minus, g.p_plus). Equals
// cos_angle for real crossing pairs and +-cosh(distance) for real disjoint
// pairs.
Complex cosh_complex_distance(const Geodesic& g, const Geodesic& h);

double point_distance(const PointH& z, const PointH& w);

// Hyperbolic distance from z to the real geodesic g.
double distance_to_geodesic(const PointH& z, const Geodesic& g);

// The point of H on both g and h. Throws kNotCrossing.
PointH geodesic_intersection(const Geodesic& g, const Geodesic& h);

// Angle at z0 between the geodesic rays to the real points p and q, in
// [0, pi].
double angle_metric(const PointH& z0, const BoundaryPoint& p,
                    const BoundaryPoint& q);

}  // namespace liouville
