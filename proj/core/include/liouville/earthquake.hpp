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

// Earthquakes and quake-bends of finite laminations, as piecewise Möbius maps
// of the boundary circle.

#pragma once

#include <cstddef>
#include <vector>

#include "liouville/geometry.hpp"
#include "liouville/lamination.hpp"

namespace liouville {

// A map of the boundary circle given by one Möbius map per arc between
// consecutive breakpoints.
//
// Breakpoints are sorted by angle coordinate. Arc k runs from breakpoint k to
// breakpoint k + 1 (the last arc wraps through infinity back to breakpoint 0)
// and owns its right-hand endpoint, so a breakpoint is evaluated by the piece
// of the arc that ends there. With no breakpoints there is a single piece.
class PiecewiseMobiusMap {
 public:
  PiecewiseMobiusMap() : pieces_{MobiusMap::identity()} {}

  static PiecewiseMobiusMap identity() { return {}; }
  static PiecewiseMobiusMap from_mobius(const MobiusMap& m);
  // Breakpoints must be real and distinct. pieces[k] belongs to the arc that
  // starts at breakpoints[k]; both are sorted together here.
  static PiecewiseMobiusMap from_pieces(std::vector<BoundaryPoint> breakpoints,
                                        std::vector<MobiusMap> pieces);

  const std::vector<BoundaryPoint>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& breakpoint_angles() const { return angles_; }
  const std::vector<MobiusMap>& pieces() const { return pieces_; }
  bool is_real() const;

  // Index of the piece owning the real point p.
  std::size_t piece_index(const BoundaryPoint& p) const;
  std::size_t piece_index_at_angle(double theta) const;
  const MobiusMap& piece(const BoundaryPoint& p) const { return pieces_[piece_index(p)]; }

  BoundaryPoint evaluate(const BoundaryPoint& p) const;
  BoundaryPoint evaluate(double x) const { return evaluate(BoundaryPoint::real(x)); }
  Geodesic evaluate(const Geodesic& g) const;

  // m o (*this).
  PiecewiseMobiusMap post_compose(const MobiusMap& m) const;
  // (*this) o m for a real map m preserving orientation of the circle.
  PiecewiseMobiusMap pre_compose(const MobiusMap& m) const;
  // Inverse of an orientation-preserving real map.
  PiecewiseMobiusMap inverse() const;

  // Largest projective jump between adjacent pieces at the breakpoints.
  double continuity_defect() const;

  // Parameter and source recorded by the earthquake builders.
  Complex tau() const { return tau_; }
  const FiniteLamination& source() const { return source_; }

 private:
  std::vector<BoundaryPoint> breakpoints_;
  std::vector<double> angles_;
  std::vector<MobiusMap> pieces_;
  Complex tau_ = 0.0;
  FiniteLamination source_;

  friend PiecewiseMobiusMap simple_earthquake(const Geodesic&, Complex);
  friend PiecewiseMobiusMap elementary_earthquake(const FiniteLamination&, Complex);
};

// Identity on the left of g and translation_along(g, length) on the right.
// Complex lengths give the quake-bend along g.
PiecewiseMobiusMap simple_earthquake(const Geodesic& g, Complex length);

// The earthquake (real tau) or quake-bend (complex tau) of mu. The piece on a
// complementary arc is T_1 o ... o T_k where g_1, ..., g_k are the leaves
// separating it from the base stratum, nearest the base first, and
// T_j = translation_along(g_j, tau * weight_j).
PiecewiseMobiusMap elementary_earthquake(const FiniteLamination& mu, Complex tau);

// Post-composition with the Möbius map sending f(0), f(1), f(inf) to 0, 1, inf.
PiecewiseMobiusMap normalize_012inf(const PiecewiseMobiusMap& f);

// Sends the three distinct points p, q, r to 0, 1, infinity.
MobiusMap mobius_from_three_points(const BoundaryPoint& p, const BoundaryPoint& q,
                                   const BoundaryPoint& r);

}  // namespace liouville
