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

// Reference computations for the tests, independent of the library routes
// they check: integrals are taken in the affine coordinates x, y by adaptive
// Simpson rules, and earthquakes are composed one simple earthquake at a time
// instead of stratum by stratum.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "liouville/currents.hpp"
#include "liouville/lamination.hpp"

namespace liouville::oracle {

using Complex = std::complex<double>;

// Adaptive Simpson integral of f over [a, b] to absolute tolerance tol.
Complex simpson(const std::function<Complex(double)>& f, double a, double b, double tol);

// Nested adaptive Simpson integral of f(x, y) over [a, b] x [c, d].
Complex simpson2d(const std::function<Complex(double, double)>& f, double a, double b,
                  double c, double d, double tol);

// Double integral of dx dy / (x - y)^2 over [a, b] x [c, d] with finite
// a < b < c and d either finite (> c) or +inf. The infinite case integrates
// up to R = 1000, 2000, 4000 and removes the 1/R and 1/R^2 terms of the tail
// by Richardson extrapolation.
double liouville_mass_integral(double a, double b, double c, double d);

// The single-leaf quake-bend derivative for the leaf (0, inf) with weight
// omega: omega times the integral over the support box of xi of
//   xi(x, y) (-x e - y) / (x e - y) * e / (x e - y)^2,  e = exp(tau omega).
// The box must have its first arc inside (0, inf) and its second inside
// (-inf, 0), both finite.
Complex quakebend_single_leaf(double omega, Complex tau, const TestFunction& xi, double tol);

// Image of the real point x under the earthquake of mu (real tau) built by
// composing simple earthquakes one leaf at a time in the given order: each
// leaf is first moved by the earthquakes already applied, then the simple
// earthquake along the moved leaf is applied.
BoundaryPoint iterated_earthquake(const FiniteLamination& mu,
                                  const std::vector<std::size_t>& order, double tau,
                                  double x);

}  // namespace liouville::oracle
