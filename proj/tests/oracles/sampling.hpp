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

// Random configurations for property tests, drawn from a seeded generator.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "liouville/currents.hpp"
#include "liouville/geometry.hpp"

namespace liouville::sampling {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Orientation-preserving real Möbius map with entries of moderate size.
inline MobiusMap random_isometry(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    double a = normal(rng), b = normal(rng), c = normal(rng), d = normal(rng);
    const double det = a * d - b * c;
    if (std::abs(det) < 0.2) continue;
    if (det < 0.0) {
      a = -a;
      b = -b;
    }
    return MobiusMap::real(a, b, c, d);
  }
}

// Sorted angles on the circle, pairwise at least min_gap apart (cyclically).
inline std::array<double, 4> random_angles(Rng& rng, double min_gap) {
  for (;;) {
    std::array<double, 4> t;
    for (double& x : t) x = uniform(rng, -std::numbers::pi, std::numbers::pi);
    std::sort(t.begin(), t.end());
    bool ok = t[0] + 2.0 * std::numbers::pi - t[3] >= min_gap;
    for (int k = 0; k < 3; ++k) ok = ok && t[k + 1] - t[k] >= min_gap;
    if (ok) return t;
  }
}

// A box whose corners are in counterclockwise order.
inline Box random_box(Rng& rng, double min_gap = 0.05) {
  const auto t = random_angles(rng, min_gap);
  return Box::create(BoundaryPoint::from_angle(t[0]), BoundaryPoint::from_angle(t[1]),
                     BoundaryPoint::from_angle(t[2]), BoundaryPoint::from_angle(t[3]));
}

// Two real geodesics with linked endpoints, in random orientations.
inline std::pair<Geodesic, Geodesic> random_crossing_pair(Rng& rng, double min_gap = 0.05) {
  const auto t = random_angles(rng, min_gap);
  auto p = [&](int k) { return BoundaryPoint::from_angle(t[k]); };
  Geodesic g = Geodesic::create(p(0), p(2));
  Geodesic h = Geodesic::create(p(1), p(3));
  if (uniform(rng, 0.0, 1.0) < 0.5) g = g.reversed();
  if (uniform(rng, 0.0, 1.0) < 0.5) h = h.reversed();
  return {g, h};
}

}  // namespace liouville::sampling
