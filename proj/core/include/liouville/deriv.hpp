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

// Closed-form first and second derivatives of the Liouville functional along
// earthquake and quake-bend paths, and the numerical oracles used to check
// them.
//
// Angle kernels use the crossing angle: the angle from the leaf to the line of
// h oriented to cross the leaf from right to left (crossing_cos and
// crossing_sin). With this convention every kernel is independent of the
// orientations of both the leaf and h, as the earthquake itself is.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "liouville/currents.hpp"
#include "liouville/earthquake.hpp"
#include "liouville/lamination.hpp"

namespace liouville {

enum class Route { kQuadrature, kDyadic };

struct DerivativeReport {
  Complex closed_form = 0.0;
  Complex oracle = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::string oracle_method;  // "fd", "cauchy", "quadrature" or "dyadic"
  Complex oracle_raw = 0.0;   // FD: the value before Richardson extrapolation
  double oracle_error_estimate = 0.0;
  double step = 0.0;          // FD step
  double radius = 0.0;        // Cauchy radius actually used
  int points = 0;             // Cauchy points
  double tol = 0.0;           // quadrature tolerance
};

// Fills abs_err and rel_err (relative to |oracle|, or absolute if it is 0).
DerivativeReport make_report(Complex closed_form, Complex oracle);

// omega * integral of xi(h) cos(g, h) dL(h).
double d1_simple(const Geodesic& g, double omega, const TestFunction& xi, double tol);

// Sum over leaves of d1_simple.
double d1_lamination(const FiniteLamination& mu, const TestFunction& xi, double tol);

// Sum over leaves g_i of omega_i times the integral of
// xi(h) cosh d(E(g_i), E(h)) dL_[E](h), with E the quake-bend E^{tau mu} and h
// restricted to geodesics crossing g_i.
Complex d1_quakebend(const FiniteLamination& mu, Complex tau, const TestFunction& xi,
                     double tol, Route route = Route::kDyadic);

// omega^2 * integral of xi(h) (cos^2(g, h) - sin^2(g, h) / 2) dL(h).
double d2_simple(const Geodesic& g, double omega, const TestFunction& xi, double tol);

// Sum over ordered pairs (i, k) of omega_i omega_k times the integral of
// xi(h) (cos(g_i, h) cos(g_k, h) - sin(g_i, h) sin(g_k, h) exp(-d_h) / 2) over
// the geodesics h crossing both leaves; d_h is the distance along h between
// its intersections with g_i and g_k.
double d2_lamination(const FiniteLamination& mu, const TestFunction& xi, double tol);

// The pulled-back functional of xi under E^{tau mu}.
Complex earthquake_functional(const FiniteLamination& mu, Complex tau,
                              const TestFunction& xi, double tol,
                              Route route = Route::kQuadrature);
// The same for the simple earthquake along g with the given (complex) length.
Complex simple_earthquake_functional(const Geodesic& g, Complex length,
                                     const TestFunction& xi, double tol);

struct FdResult {
  Complex value = 0.0;  // Richardson-extrapolated (order 1) or 5-point (order 2)
  Complex raw = 0.0;    // plain central difference at the given step
  double error_estimate = 0.0;
};

// Order 1: central differences at step and step / 2 combined by one Richardson
// step. Order 2: the 5-point second difference, with the 3-point one as the
// error reference. Throws StencilFailure if the path fails at a stencil point.
FdResult fd_derivative(const std::function<Complex(double)>& path, double t0,
                       double step, int order);

struct CauchyResult {
  Complex value = 0.0;
  double radius = 0.0;  // radius actually used
  int points = 0;
};

// k-th derivative at tau0 from the trapezoid rule on the circle of the given
// radius: k! / (r^k N) sum_j path(tau0 + r w^j) w^{-jk}. When the path throws
// BranchGuard the radius is halved, up to 4 times; any other failure, or
// running out of retries, throws PathEvaluationFailure.
CauchyResult cauchy_derivative(const std::function<Complex(Complex)>& path, Complex tau0,
                               double radius = 0.05, int points = 32, int order = 1);

struct DecayFit {
  std::vector<double> distances;   // d_g, distance from i to g
  std::vector<double> magnitudes;  // |integral of xi(h) cos(g, h) dL(h)|
  double fitted_slope = 0.0;
  double fitted_intercept = 0.0;
};

// Least-squares fit of log I(g) against d_g. tol is the relative accuracy of
// each I(g). Geodesics must have strictly increasing distance from i (else
// InvalidArgument); throws AllZero if every I(g) vanishes.
DecayFit decay_profile(const TestFunction& xi, const std::vector<Geodesic>& geodesics,
                       double tol);

// Geodesics from a moving point to the corner b of the box, with distances from
// i evenly spaced in [d_min, d_max]. The moving endpoint starts inside the
// first arc and recedes into b as the distance grows.
std::vector<Geodesic> receding_family(const Box& box, std::size_t count, double d_min,
                                      double d_max);

struct KjRow {
  double radius = 0.0;
  std::size_t leaves = 0;
  Complex value = 0.0;
};

// d1_quakebend of restrict_to_disk(mu, r) for each radius r (increasing).
std::vector<KjRow> kj_stabilization(const FiniteLamination& mu, const TestFunction& xi,
                                    const std::vector<double>& radii, Complex tau,
                                    double tol, Route route = Route::kQuadrature);

}  // namespace liouville
