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

#include "liouville/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace liouville {
namespace {

bool shares_endpoint(const Geodesic& g, const Geodesic& h) {
  return g.p_minus.approx_equal(h.p_minus) || g.p_minus.approx_equal(h.p_plus) ||
         g.p_plus.approx_equal(h.p_minus) || g.p_plus.approx_equal(h.p_plus);
}

Leaf oriented(const Leaf& leaf) {
  if (side_of(leaf.geodesic, reference_point()) == Side::kRight) {
    return {leaf.geodesic.reversed(), leaf.weight};
  }
  return leaf;
}

// Rotation about i by the angle phi.
MobiusMap rotation_about_i(double phi) {
  const double c = std::cos(0.5 * phi);
  const double s = std::sin(0.5 * phi);
  return MobiusMap::real(c, s, -s, c);
}

struct Arc {
  PointH start;
  PointH end;
};

// Unit-length segment of the geodesic through i with direction angle phi
// (phi = 0 is vertical), shifted by offset along itself, then moved by frame.
Arc unit_arc(const MobiusMap& frame, double phi, double offset) {
  const MobiusMap m = frame * rotation_about_i(phi);
  return {m.apply(PointH{0.0, std::exp(offset - 0.5)}),
          m.apply(PointH{0.0, std::exp(offset + 0.5)})};
}

}  // namespace

void ValidationReport::throw_if_failed() const {
  if (issues.empty()) return;
  throw Error(issues.front().kind, issues.front().message);
}

ValidationReport validate(const std::vector<Leaf>& leaves) {
  ValidationReport report;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const double w = leaves[i].weight;
    if (!(w > 0.0) || !std::isfinite(w)) {
      report.issues.push_back({ErrorKind::kNonpositiveWeight, i, i,
                               "leaf " + std::to_string(i) + " has weight " +
                                   std::to_string(w)});
    }
    if (!leaves[i].geodesic.is_real()) {
      report.issues.push_back({ErrorKind::kInvalidArgument, i, i,
                               "leaf " + std::to_string(i) + " is not real"});
    }
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const Geodesic& g = leaves[i].geodesic;
      const Geodesic& h = leaves[j].geodesic;
      if (!g.is_real() || !h.is_real()) continue;
      if (shares_endpoint(g, h)) {
        report.issues.push_back({ErrorKind::kSharedEndpoint, i, j,
                                 "leaves " + std::to_string(i) + " and " +
                                     std::to_string(j) + " share an endpoint"});
      } else if (geodesics_cross(g, h)) {
        report.issues.push_back({ErrorKind::kCrossingLeaves, i, j,
                                 "leaves " + std::to_string(i) + " and " +
                                     std::to_string(j) + " cross"});
      }
    }
  }
  return report;
}

FiniteLamination FiniteLamination::create(std::vector<Leaf> leaves) {
  validate(leaves).throw_if_failed();
  for (Leaf& leaf : leaves) leaf = oriented(leaf);
  return FiniteLamination(std::move(leaves));
}

double FiniteLamination::total_weight() const {
  double total = 0.0;
  for (const Leaf& leaf : leaves_) total += leaf.weight;
  return total;
}

double FiniteLamination::max_weight() const {
  double best = 0.0;
  for (const Leaf& leaf : leaves_) best = std::max(best, leaf.weight);
  return best;
}

FiniteLamination FiniteLamination::scaled(double factor) const {
  if (!(factor > 0.0)) {
    throw Error(ErrorKind::kNonpositiveWeight, "scale factor must be positive");
  }
  std::vector<Leaf> leaves = leaves_;
  for (Leaf& leaf : leaves) leaf.weight *= factor;
  return FiniteLamination(std::move(leaves));
}

ValidationReport validate(const FiniteLamination& mu) {
  ValidationReport report = validate(mu.leaves());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (side_of(mu.leaves()[i].geodesic, reference_point()) == Side::kRight) {
      report.issues.push_back({ErrorKind::kValidationFailed, i, i,
                               "leaf " + std::to_string(i) +
                                   " has the base stratum on its right"});
    }
  }
  return report;
}

double transverse_measure(const FiniteLamination& mu, const PointH& z,
                          const PointH& w) {
  double total = 0.0;
  for (const Leaf& leaf : mu.leaves()) {
    const Side a = side_of(leaf.geodesic, z);
    const Side b = side_of(leaf.geodesic, w);
    if (a == Side::kOn || b == Side::kOn || a != b) total += leaf.weight;
  }
  return total;
}

ThurstonEstimate thurston_norm_estimate(const FiniteLamination& mu,
                                        std::size_t samples, std::uint64_t seed) {
  ThurstonEstimate best;
  auto consider = [&](const Arc& arc) {
    ++best.arcs_examined;
    const double m = transverse_measure(mu, arc.start, arc.end);
    if (m > best.value) {
      best.value = m;
      best.arc_start = arc.start;
      best.arc_end = arc.end;
    }
  };
  if (mu.empty()) return best;

  for (const Leaf& leaf : mu.leaves()) {
    const Geodesic& g = leaf.geodesic;
    if (!g.p_minus.is_infinite() && !g.p_plus.is_infinite()) {
      const double p = g.p_minus.real_value();
      const double q = g.p_plus.real_value();
      const double center = 0.5 * (p + q);
      const double radius = 0.5 * std::abs(q - p);
      consider({{center, radius * std::exp(-0.5)}, {center, radius * std::exp(0.5)}});
    }
    // Perpendicular at the point of the leaf nearest i.
    const MobiusMap m = mobius_to_standard(g);
    const double height = std::abs(m.apply(reference_point().z()));
    const MobiusMap frame = m.inverse() * MobiusMap::real(height, 0.0, 0.0, 1.0);
    consider(unit_arc(frame, 0.5 * std::numbers::pi, 0.0));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t index =
        std::min(mu.size() - 1, static_cast<std::size_t>(unit(rng) * mu.size()));
    const double along = 4.0 * unit(rng) - 2.0;
    const double phi = std::numbers::pi * unit(rng);
    const double offset = unit(rng) - 0.5;
    const MobiusMap m = mobius_to_standard(mu.leaves()[index].geodesic);
    const double height = std::abs(m.apply(reference_point().z())) * std::exp(along);
    const MobiusMap frame = m.inverse() * MobiusMap::real(height, 0.0, 0.0, 1.0);
    consider(unit_arc(frame, phi, offset));
  }
  return best;
}

FiniteLamination restrict_to_disk(const FiniteLamination& mu, double radius) {
  if (!(radius >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "radius must be nonnegative");
  }
  std::vector<Leaf> kept;
  for (const Leaf& leaf : mu.leaves()) {
    if (distance_to_geodesic(reference_point(), leaf.geodesic) <= radius + 1e-9) {
      kept.push_back(leaf);
    }
  }
  return FiniteLamination::create(std::move(kept));
}

double hyperbolic_radius(double euclidean_radius) {
  if (!(euclidean_radius >= 0.0) || !(euclidean_radius < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "Euclidean radius must lie in [0, 1)");
  }
  return 2.0 * std::atanh(euclidean_radius);
}

FiniteLamination orbit_lamination(const MobiusMap& gamma, const Geodesic& seed,
                                  double weight, std::size_t n) {
  if (!gamma.preserves_upper_half_plane() || !(std::abs(gamma.trace()) > 2.0)) {
    throw Error(ErrorKind::kInvalidArgument, "orbit generator must be real hyperbolic");
  }
  const MobiusMap inverse = gamma.inverse();
  std::vector<Geodesic> backward;
  std::vector<Geodesic> forward;
  Geodesic g = seed;
  Geodesic h = seed;
  for (std::size_t k = 0; k < n; ++k) {
    g = apply(inverse, g);
    h = apply(gamma, h);
    backward.push_back(g);
    forward.push_back(h);
  }
  std::vector<Leaf> leaves;
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) {
    leaves.push_back({*it, weight});
  }
  leaves.push_back({seed, weight});
  for (const Geodesic& f : forward) leaves.push_back({f, weight});
  return FiniteLamination::create(std::move(leaves));
}

FiniteLamination pushforward(const MobiusMap& gamma, const FiniteLamination& mu) {
  if (!gamma.is_real()) {
    throw Error(ErrorKind::kInvalidArgument, "pushforward needs a real map");
  }
  std::vector<Leaf> leaves;
  leaves.reserve(mu.size());
  for (const Leaf& leaf : mu.leaves()) {
    leaves.push_back({apply(gamma, leaf.geodesic), leaf.weight});
  }
  return FiniteLamination::create(std::move(leaves));
}

double parse_coordinate(const std::string& token) {
  if (token == "inf" || token == "+inf" || token == "-inf" || token == "Inf" ||
      token == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::kInvalidArgument, "not a number: '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidArgument, "not a number: '" + token + "'");
  }
  return value;
}

FiniteLamination parse_lamination(std::istream& in) {
  std::vector<Leaf> leaves;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw Error(ErrorKind::kInvalidArgument,
                  "line " + std::to_string(number) + ": expected 3 fields");
    }
    try {
      const double p = parse_coordinate(tokens[0]);
      const double q = parse_coordinate(tokens[1]);
      std::size_t used = 0;
      const double w = std::stod(tokens[2], &used);
      if (used != tokens[2].size()) throw Error(ErrorKind::kInvalidArgument, "bad weight");
      leaves.push_back({Geodesic::real(p, q), w});
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(number) + ": " + e.what());
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidArgument,
                  "line " + std::to_string(number) + ": malformed weight");
    }
  }
  return FiniteLamination::create(std::move(leaves));
}

FiniteLamination load_lamination(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
  return parse_lamination(in);
}

}  // namespace liouville
