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

#include "liouville/earthquake.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace liouville {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
  while (theta > std::numbers::pi) theta -= kTwoPi;
  while (theta <= -std::numbers::pi) theta += kTwoPi;
  return theta;
}

// Midpoint of arc k of the sorted angle list.
BoundaryPoint arc_midpoint(const std::vector<double>& angles, std::size_t k) {
  const std::size_t m = angles.size();
  if (m == 0) return BoundaryPoint::real(0.0);
  const double start = angles[k];
  const double end = k + 1 < m ? angles[k + 1] : angles[0] + kTwoPi;
  return BoundaryPoint::from_angle(wrap_angle(0.5 * (start + end)));
}

// Angular length of the boundary arc on the right of g.
double right_arc_length(const Geodesic& g) {
  double length = g.p_plus.angle() - g.p_minus.angle();
  if (length <= 0.0) length += kTwoPi;
  return length;
}

}  // namespace

PiecewiseMobiusMap PiecewiseMobiusMap::from_mobius(const MobiusMap& m) {
  PiecewiseMobiusMap f;
  f.pieces_ = {m};
  return f;
}

PiecewiseMobiusMap PiecewiseMobiusMap::from_pieces(std::vector<BoundaryPoint> breakpoints,
                                                   std::vector<MobiusMap> pieces) {
  if (breakpoints.empty()) {
    if (pieces.size() != 1) {
      throw Error(ErrorKind::kInvalidArgument, "a map without breakpoints has one piece");
    }
    return from_mobius(pieces.front());
  }
  if (pieces.size() != breakpoints.size()) {
    throw Error(ErrorKind::kInvalidArgument, "need one piece per breakpoint");
  }
  std::vector<std::size_t> order(breakpoints.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> angles(breakpoints.size());
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    if (!breakpoints[k].is_real()) {
      throw Error(ErrorKind::kInvalidArgument, "breakpoints must be real");
    }
    angles[k] = breakpoints[k].angle();
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return angles[i] < angles[j]; });
  PiecewiseMobiusMap f;
  f.pieces_.clear();
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && breakpoints[order[k]].approx_equal(breakpoints[order[k - 1]])) {
      throw Error(ErrorKind::kDegenerateConfiguration, "repeated breakpoint");
    }
    f.breakpoints_.push_back(breakpoints[order[k]]);
    f.angles_.push_back(angles[order[k]]);
    f.pieces_.push_back(pieces[order[k]]);
  }
  return f;
}

bool PiecewiseMobiusMap::is_real() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const MobiusMap& m) { return m.is_real(); });
}

std::size_t PiecewiseMobiusMap::piece_index_at_angle(double theta) const {
  const std::size_t m = angles_.size();
  if (m == 0) return 0;
  const auto it = std::lower_bound(angles_.begin(), angles_.end(), theta);
  const auto j = static_cast<std::size_t>(it - angles_.begin());
  if (j == 0 || j == m) return m - 1;
  return j - 1;
}

std::size_t PiecewiseMobiusMap::piece_index(const BoundaryPoint& p) const {
  if (angles_.empty()) return 0;
  if (!p.is_real()) {
    throw Error(ErrorKind::kInvalidArgument, "piecewise maps act on real points");
  }
  return piece_index_at_angle(p.angle());
}

BoundaryPoint PiecewiseMobiusMap::evaluate(const BoundaryPoint& p) const {
  return pieces_[piece_index(p)].apply(p);
}

Geodesic PiecewiseMobiusMap::evaluate(const Geodesic& g) const {
  return {evaluate(g.p_minus), evaluate(g.p_plus)};
}

PiecewiseMobiusMap PiecewiseMobiusMap::post_compose(const MobiusMap& m) const {
  PiecewiseMobiusMap f = *this;
  for (MobiusMap& piece : f.pieces_) piece = m * piece;
  return f;
}

PiecewiseMobiusMap PiecewiseMobiusMap::pre_compose(const MobiusMap& m) const {
  if (!m.preserves_upper_half_plane()) {
    throw Error(ErrorKind::kInvalidArgument, "pre-composition needs an isometry of H");
  }
  if (breakpoints_.empty()) return from_mobius(pieces_.front() * m);
  const MobiusMap inverse = m.inverse();
  std::vector<BoundaryPoint> points;
  std::vector<MobiusMap> pieces;
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    points.push_back(inverse.apply(breakpoints_[k]));
    pieces.push_back(pieces_[k] * m);
  }
  PiecewiseMobiusMap f = from_pieces(std::move(points), std::move(pieces));
  f.tau_ = tau_;
  return f;
}

PiecewiseMobiusMap PiecewiseMobiusMap::inverse() const {
  if (!is_real()) {
    throw Error(ErrorKind::kInvalidArgument, "only real maps are inverted");
  }
  if (breakpoints_.empty()) return from_mobius(pieces_.front().inverse());
  std::vector<BoundaryPoint> points;
  std::vector<MobiusMap> pieces;
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    points.push_back(pieces_[k].apply(breakpoints_[k]));
    pieces.push_back(pieces_[k].inverse());
  }
  return from_pieces(std::move(points), std::move(pieces));
}

double PiecewiseMobiusMap::continuity_defect() const {
  double worst = 0.0;
  const std::size_t m = breakpoints_.size();
  for (std::size_t k = 0; k < m; ++k) {
    const MobiusMap& before = pieces_[(k + m - 1) % m];
    const MobiusMap& after = pieces_[k];
    const BoundaryPoint p = before.apply(breakpoints_[k]);
    const BoundaryPoint q = after.apply(breakpoints_[k]);
    worst = std::max(worst, std::abs(det(p, q)));
  }
  return worst;
}

PiecewiseMobiusMap simple_earthquake(const Geodesic& g, Complex length) {
  if (!g.is_real()) {
    throw Error(ErrorKind::kInvalidArgument, "earthquake axis must be real");
  }
  const MobiusMap shift = translation_along(g, length);
  PiecewiseMobiusMap f = PiecewiseMobiusMap::from_pieces(
      {g.p_minus, g.p_plus}, {MobiusMap::identity(), MobiusMap::identity()});
  for (std::size_t k = 0; k < 2; ++k) {
    if (side_of(g, arc_midpoint(f.angles_, k)) == Side::kRight) f.pieces_[k] = shift;
  }
  f.tau_ = length;
  return f;
}

PiecewiseMobiusMap elementary_earthquake(const FiniteLamination& mu, Complex tau) {
  const auto& leaves = mu.leaves();
  PiecewiseMobiusMap f;
  f.tau_ = tau;
  f.source_ = mu;
  if (leaves.empty()) return f;

  std::vector<BoundaryPoint> points;
  std::vector<double> reach(leaves.size());
  std::vector<MobiusMap> shifts;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    points.push_back(leaves[i].geodesic.p_minus);
    points.push_back(leaves[i].geodesic.p_plus);
    reach[i] = right_arc_length(leaves[i].geodesic);
    shifts.push_back(translation_along(leaves[i].geodesic, tau * leaves[i].weight));
  }
  PiecewiseMobiusMap sorted = PiecewiseMobiusMap::from_pieces(
      std::move(points), std::vector<MobiusMap>(2 * leaves.size()));
  f.breakpoints_ = std::move(sorted.breakpoints_);
  f.angles_ = std::move(sorted.angles_);
  f.pieces_.assign(f.breakpoints_.size(), MobiusMap::identity());

  std::vector<std::size_t> separating;
  for (std::size_t k = 0; k < f.pieces_.size(); ++k) {
    const BoundaryPoint mid = arc_midpoint(f.angles_, k);
    separating.clear();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (side_of(leaves[i].geodesic, mid) == Side::kRight) separating.push_back(i);
    }
    // Nested leaves: the one nearest the base has the largest right arc.
    std::stable_sort(separating.begin(), separating.end(),
                     [&](std::size_t i, std::size_t j) { return reach[i] > reach[j]; });
    MobiusMap piece = MobiusMap::identity();
    for (std::size_t i : separating) piece = piece * shifts[i];
    f.pieces_[k] = piece;
  }
  return f;
}

MobiusMap mobius_from_three_points(const BoundaryPoint& p, const BoundaryPoint& q,
                                   const BoundaryPoint& r) {
  const Complex qr = det(q, r);
  const Complex qp = det(q, p);
  if (coincide(q, r) || coincide(q, p) || coincide(p, r)) {
    throw Error(ErrorKind::kDegenerateConfiguration, "three points must be distinct");
  }
  return MobiusMap::from_entries(p.v() * qr, -p.u() * qr, r.v() * qp, -r.u() * qp);
}

PiecewiseMobiusMap normalize_012inf(const PiecewiseMobiusMap& f) {
  const MobiusMap m = mobius_from_three_points(f.evaluate(0.0), f.evaluate(1.0),
                                               f.evaluate(BoundaryPoint::infinity()));
  return f.post_compose(m);
}

}  // namespace liouville
