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

// Finitely supported measured laminations of the upper half-plane.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "liouville/error.hpp"
#include "liouville/geometry.hpp"

namespace liouville {

struct Leaf {
  Geodesic geodesic;
  double weight = 1.0;
};

// The point i, used to pick out the base stratum.
inline PointH reference_point() { return {0.0, 1.0}; }

struct ValidationIssue {
  ErrorKind kind;
  std::size_t first;   // leaf index
  std::size_t second;  // second leaf index, equal to first for single-leaf issues
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  // Throws an Error carrying the kind of the first issue, if any.
  void throw_if_failed() const;
};

// Reports every nonpositive weight, every shared endpoint and every crossing
// pair.
ValidationReport validate(const std::vector<Leaf>& leaves);

// Pairwise disjoint weighted real geodesics, each stored with the base stratum
// (the region containing i) on its left. A leaf passing through i keeps the
// orientation it was given.
class FiniteLamination {
 public:
  FiniteLamination() = default;

  // Validates, then orients. Throws CrossingLeaves, SharedEndpoint or
  // NonpositiveWeight.
  static FiniteLamination create(std::vector<Leaf> leaves);

  const std::vector<Leaf>& leaves() const { return leaves_; }
  std::size_t size() const { return leaves_.size(); }
  bool empty() const { return leaves_.empty(); }
  double total_weight() const;
  double max_weight() const;

  // Every weight multiplied by factor > 0.
  FiniteLamination scaled(double factor) const;

 private:
  explicit FiniteLamination(std::vector<Leaf> leaves) : leaves_(std::move(leaves)) {}

  std::vector<Leaf> leaves_;
};

ValidationReport validate(const FiniteLamination& mu);

// Lower bound for the Thurston norm from sampled geodesic arcs of length 1.
struct ThurstonEstimate {
  double value = 0.0;
  std::size_t arcs_examined = 0;
  // Endpoints of the arc attaining value.
  PointH arc_start;
  PointH arc_end;
};

// Examines one arc perpendicular to each leaf at its Euclidean top (or at the
// point nearest i for vertical leaves), then `samples` random arcs based near
// the leaves. The random stream depends only on seed, so the estimate is
// nondecreasing in samples.
ThurstonEstimate thurston_norm_estimate(const FiniteLamination& mu,
                                        std::size_t samples,
                                        std::uint64_t seed = 0);

// Weight of the leaves separating the endpoints of the geodesic segment [z, w].
double transverse_measure(const FiniteLamination& mu, const PointH& z,
                          const PointH& w);

// Leaves at hyperbolic distance at most radius from i. A leaf at the threshold
// (within 1e-9) is kept.
FiniteLamination restrict_to_disk(const FiniteLamination& mu, double radius);

// Hyperbolic radius of the Euclidean disk of radius r < 1 in the disk model.
double hyperbolic_radius(double euclidean_radius);

// Leaves gamma^k(seed) for k = -n..n, all with the given weight. Throws
// InvalidArgument unless gamma is real hyperbolic, CrossingLeaves if the orbit
// is not a lamination.
FiniteLamination orbit_lamination(const MobiusMap& gamma, const Geodesic& seed,
                                  double weight, std::size_t n);

FiniteLamination pushforward(const MobiusMap& gamma, const FiniteLamination& mu);

// Parses `p_minus p_plus weight` lines. Tokens `inf`, `+inf`, `-inf` denote
// the point at infinity; `#` starts a comment. Throws InvalidArgument with the
// line number on malformed input, and the validation errors of create().
FiniteLamination parse_lamination(std::istream& in);
FiniteLamination load_lamination(const std::string& path);

// Parses one boundary coordinate token, accepting `inf`.
double parse_coordinate(const std::string& token);

}  // namespace liouville
