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

// Liouville measure of boxes of geodesics and pulled-back Liouville
// functionals, computed by adaptive quadrature or by dyadic box sums.
//
// Boundary arcs are parameterized by the angle coordinate theta with
// x = tan(theta / 2). In these coordinates the Liouville density
// dx dy / (x - y)^2 becomes dtheta dphi / (4 sin^2((theta - phi) / 2)), which
// stays finite through the point at infinity.

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "liouville/earthquake.hpp"
#include "liouville/geometry.hpp"

namespace liouville {

// Product [a, b] x [c, d] of two disjoint closed boundary arcs. Each arc runs
// counterclockwise (increasing angle) from its first to its second endpoint,
// so a, b, c, d must be in counterclockwise cyclic order.
class Box {
 public:
  static Box create(const BoundaryPoint& a, const BoundaryPoint& b,
                    const BoundaryPoint& c, const BoundaryPoint& d);
  static Box real(double a, double b, double c, double d);

  const BoundaryPoint& a() const { return a_; }
  const BoundaryPoint& b() const { return b_; }
  const BoundaryPoint& c() const { return c_; }
  const BoundaryPoint& d() const { return d_; }

  // Start angle and angular length of each arc.
  double first_start() const { return first_start_; }
  double first_length() const { return first_length_; }
  double second_start() const { return second_start_; }
  double second_length() const { return second_length_; }

  // Angular offset of p along the first (second) arc, or a negative value
  // when p lies outside it. Endpoints are inside.
  double first_offset(const BoundaryPoint& p) const;
  double second_offset(const BoundaryPoint& p) const;

  bool contains(const Geodesic& h) const;

  // [c, d] x [a, b].
  Box swapped() const { return create(c_, d_, a_, b_); }

 private:
  BoundaryPoint a_, b_, c_, d_;
  double first_start_ = 0.0, first_length_ = 0.0;
  double second_start_ = 0.0, second_length_ = 0.0;
};

// Product of the angle metrics at i of the two endpoint pairs, taken as the
// maximum of the two.
double geodesic_distance(const Geodesic& h1, const Geodesic& h2);

// A compactly supported Hölder function on oriented geodesics.
class TestFunction {
 public:
  using Kernel = std::function<Complex(const BoundaryPoint& x, const BoundaryPoint& y)>;
  using Factor = std::function<Complex(const BoundaryPoint& p)>;

  // fn is only called with x in the first arc and y in the second arc of
  // support. kinks are points of either arc where fn fails to be smooth;
  // quadrature splits there. holder_seminorm is a declared bound.
  TestFunction(Box support, Kernel fn, double holder_exponent, double holder_seminorm,
               std::vector<BoundaryPoint> kinks = {});

  // fn(x, y) = first(x) * second(y).
  static TestFunction separable(Box support, Factor first, Factor second,
                                double holder_exponent, double holder_seminorm,
                                std::vector<BoundaryPoint> kinks = {});

  // Zero outside the support.
  Complex evaluate(const Geodesic& h) const;
  Complex operator()(const Geodesic& h) const { return evaluate(h); }
  // Evaluation for x in the first arc and y in the second, without checks.
  Complex evaluate_inside(const BoundaryPoint& x, const BoundaryPoint& y) const;

  const Box& support() const { return support_; }
  double holder_exponent() const { return holder_exponent_; }
  double holder_seminorm() const { return holder_seminorm_; }
  const std::vector<BoundaryPoint>& kinks() const { return kinks_; }

  bool is_separable() const { return static_cast<bool>(first_); }
  Complex first_factor(const BoundaryPoint& x) const { return first_(x); }
  Complex second_factor(const BoundaryPoint& y) const { return second_(y); }

  // factor * (*this).
  TestFunction scaled(Complex factor) const;

 private:
  Box support_;
  Kernel fn_;
  Factor first_;
  Factor second_;
  double holder_exponent_;
  double holder_seminorm_;
  std::vector<BoundaryPoint> kinks_;
};

// Product of two hats, each piecewise linear in the Liouville mass coordinate
// of its arc: s1(x) = log cr(a, x, c, d) / L and s2(y) = log cr(a, b, c, y) / L,
// where L is the box mass. Both hats peak (value 1) at mass 1/2, so the kinks
// fall on the cuts of every dyadic partition of level >= 1.
TestFunction tent_test_function(const Box& support);

// The tent raised to the power lambda in (0, 1]; Hölder of exponent lambda.
TestFunction bump_test_function(const Box& support, double lambda);

// xi o f^{-1} for an orientation-preserving real f; supported on f(support).
// The declared seminorm is infinite (unknown).
TestFunction compose_inverse(const TestFunction& xi, const PiecewiseMobiusMap& f);

// log cr(a, b, c, d) > 0.
double liouville_box(const Box& box);

// Principal log cr(f(a), f(b), f(c), f(d)); complex for quake-bends. Throws
// BranchGuard when the cross-ratio lies on the closed negative real axis.
Complex pullback_box(const PiecewiseMobiusMap& f, const Box& box);

// Weight of a geodesic h = (x, y) of the support box, given also its image
// f(h) under the deformation.
using Weight = std::function<Complex(const Geodesic& h, const Geodesic& image)>;

struct QuadResult {
  Complex value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

struct QuadOptions {
  double tol = 1e-10;  // absolute
  std::size_t max_evaluations = 200'000'000;
  // Extra split points for both arcs, for example kernel discontinuities.
  std::vector<BoundaryPoint> splits;
};

// The pulled-back functional  integral of xi(h) weight(h) dL_[f](h),  that is
// the double integral of xi(x, y) weight f'(x) f'(y) / (f(x) - f(y))^2 over the
// support of xi. Nested adaptive Gauss-Kronrod (7/15) quadrature in the angle
// coordinates, split at the breakpoints of f, the kinks of xi and
// options.splits. A null weight means weight 1.
QuadResult functional_quad(const PiecewiseMobiusMap& f, const TestFunction& xi,
                           const Weight& weight, const QuadOptions& options);

// The integral of xi(h) kernel(h) against the Liouville measure.
QuadResult quad_weighted(const TestFunction& xi,
                         const std::function<Complex(const Geodesic&)>& kernel,
                         double tol, const std::vector<BoundaryPoint>& splits = {});

// Cut points of the level-n dyadic partition: 2^n + 1 points per arc, each
// strip between consecutive cuts carrying mass L / 2^n. Computed in closed
// form from the cross-ratio equation of each cut.
struct DyadicPartition {
  std::vector<BoundaryPoint> first;
  std::vector<BoundaryPoint> second;
};

DyadicPartition dyadic_partition(const Box& box, int n);

struct DyadicLevel {
  int n = 0;
  Complex sum = 0.0;           // I_n
  Complex increment = 0.0;     // I_n - I_{n-1}
  Complex extrapolated = 0.0;  // Aitken estimate of the limit
  Complex total_mass = 0.0;    // sum of log cr over all cells, weight 1
  double max_abs_arg = 0.0;    // largest |arg cr| over the cells
  bool accepted = true;        // false when some |arg cr| > pi / 2
};

struct DyadicOptions {
  int n0 = 2;
  int n_min = 0;    // compute at least this many levels
  int n_max = 12;
  double tol = 1e-8;
};

struct DyadicResult {
  Complex value = 0.0;  // extrapolated limit
  Complex last_sum = 0.0;
  double error_estimate = 0.0;
  std::vector<DyadicLevel> levels;
  bool converged = false;
};

// I_n = sum over the 4^n cells of the level-n partition of
// xi(a_s, c_t) weight(a_s, c_t) log cr(f(a_{s-1}), f(a_s), f(c_{t-1}), f(c_t)).
// Levels n0, n0 + 1, ... are computed until the Aitken-extrapolated limits of
// two consecutive levels differ by less than tol and the last three increments
// each shrink by a factor of at least 1.5.
//
// Throws BranchGuard when a cell cross-ratio is zero, non-finite or on the
// closed negative real axis, when image points collide, when the total mass
// jumps between levels, or when no level up to n_max is free of cells with
// |arg cr| > pi / 2. Throws SlowConvergence when increments fail to decrease
// over 4 consecutive levels, or when n_max is reached before tol.
DyadicResult functional_dyadic(const PiecewiseMobiusMap& f, const TestFunction& xi,
                               const Weight& weight, const DyadicOptions& options);

}  // namespace liouville
