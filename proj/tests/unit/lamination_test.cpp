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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "error_matchers.hpp"

namespace liouville {
namespace {

std::string data_path(const std::string& name) {
  return std::string(LIOUVILLE_TEST_DATA_DIR) + "/" + name;
}

FiniteLamination parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_lamination(in);
}

TEST(LaminationTest, BaseStratumOnTheLeft) {
  const FiniteLamination mu = FiniteLamination::create({
      {Geodesic::real(4.0, 1.0), 0.8},
      {Geodesic::real(-5.0, -0.5), 1.3},
      {Geodesic::real(6.0, 5.0), 1.0},
  });
  for (const Leaf& leaf : mu.leaves()) {
    EXPECT_EQ(side_of(leaf.geodesic, reference_point()), Side::kLeft);
  }
  EXPECT_DOUBLE_EQ(mu.leaves()[0].geodesic.p_minus.real_value(), 1.0);
}

TEST(LaminationTest, LeafThroughReferenceKeepsOrientation) {
  const FiniteLamination up = FiniteLamination::create({{Geodesic::real(0.0, INFINITY), 1.0}});
  EXPECT_TRUE(up.leaves()[0].geodesic.p_plus.is_infinite());
  const FiniteLamination down =
      FiniteLamination::create({{Geodesic::real(INFINITY, 0.0), 1.0}});
  EXPECT_TRUE(down.leaves()[0].geodesic.p_minus.is_infinite());
}

TEST(LaminationTest, RejectsInvalidLeaves) {
  EXPECT_ERROR_KIND(FiniteLamination::create({{Geodesic::real(0.0, INFINITY), 1.0},
                                              {Geodesic::real(-1.0, 1.0), 1.0}}),
                    ErrorKind::kCrossingLeaves);
  EXPECT_ERROR_KIND(FiniteLamination::create({{Geodesic::real(0.0, INFINITY), 1.0},
                                              {Geodesic::real(0.0, 3.0), 1.0}}),
                    ErrorKind::kSharedEndpoint);
  EXPECT_ERROR_KIND(FiniteLamination::create({{Geodesic::real(0.0, INFINITY), 0.0}}),
                    ErrorKind::kNonpositiveWeight);
  EXPECT_ERROR_KIND(FiniteLamination::create({{Geodesic::real(0.0, INFINITY), -1.0}}),
                    ErrorKind::kNonpositiveWeight);
}

TEST(LaminationTest, ValidateReportsEveryIssue) {
  const ValidationReport report = validate(std::vector<Leaf>{
      {Geodesic::real(0.0, INFINITY), 1.0},
      {Geodesic::real(-1.0, 1.0), 1.0},
      {Geodesic::real(5.0, 6.0), -2.0},
  });
  ASSERT_EQ(report.issues.size(), 2u);
  EXPECT_FALSE(report.ok());
  bool saw_crossing = false, saw_weight = false;
  for (const ValidationIssue& issue : report.issues) {
    if (issue.kind == ErrorKind::kCrossingLeaves) {
      saw_crossing = true;
      EXPECT_EQ(issue.first, 0u);
      EXPECT_EQ(issue.second, 1u);
    }
    if (issue.kind == ErrorKind::kNonpositiveWeight) {
      saw_weight = true;
      EXPECT_EQ(issue.first, 2u);
    }
  }
  EXPECT_TRUE(saw_crossing);
  EXPECT_TRUE(saw_weight);
  EXPECT_TRUE(validate(std::vector<Leaf>{}).ok());
}

TEST(LaminationTest, ScaledAndTotals) {
  const FiniteLamination mu = FiniteLamination::create(
      {{Geodesic::real(0.0, INFINITY), 1.0}, {Geodesic::real(1.0, 4.0), 0.8}});
  EXPECT_DOUBLE_EQ(mu.total_weight(), 1.8);
  EXPECT_DOUBLE_EQ(mu.max_weight(), 1.0);
  const FiniteLamination twice = mu.scaled(2.0);
  EXPECT_DOUBLE_EQ(twice.total_weight(), 3.6);
  EXPECT_ERROR_KIND(mu.scaled(0.0), ErrorKind::kNonpositiveWeight);
}

TEST(ParseTest, CommentsInfinityAndWeights) {
  const FiniteLamination mu = parse_text(
      "# two leaves\n"
      "0 inf 1   # vertical\n"
      "\n"
      "-3 -2 0.5\n");
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_TRUE(mu.leaves()[0].geodesic.p_plus.is_infinite());
  EXPECT_DOUBLE_EQ(mu.leaves()[1].weight, 0.5);
  EXPECT_TRUE(parse_text("-inf -3 2\n").leaves()[0].geodesic.p_minus.is_infinite() ||
              parse_text("-inf -3 2\n").leaves()[0].geodesic.p_plus.is_infinite());
  EXPECT_DOUBLE_EQ(parse_coordinate("+inf"), INFINITY);
  EXPECT_DOUBLE_EQ(parse_coordinate("-2.5"), -2.5);
}

TEST(ParseTest, ErrorsCarryLineNumbers) {
  try {
    parse_text("0 inf 1\n1 2\n");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  try {
    parse_text("0 inf 1\n-1 1 1\n");
    FAIL() << "expected a crossing error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCrossingLeaves);
  }
  EXPECT_ERROR_KIND(parse_text("0 x 1\n"), ErrorKind::kInvalidArgument);
  EXPECT_ERROR_KIND(parse_text("0 1 1w\n"), ErrorKind::kInvalidArgument);
}

TEST(ParseTest, LoadsDataFiles) {
  EXPECT_EQ(load_lamination(data_path("fan.lam")).size(), 3u);
  EXPECT_EQ(load_lamination(data_path("nested.lam")).size(), 2u);
  EXPECT_ERROR_KIND(load_lamination(data_path("crossing.lam")), ErrorKind::kCrossingLeaves);
  EXPECT_ERROR_KIND(load_lamination(data_path("missing.lam")), ErrorKind::kInvalidArgument);
}

TEST(OrbitTest, SizeAndValidity) {
  const MobiusMap gamma = MobiusMap::real(2.0, 0.0, 0.0, 0.5);
  const FiniteLamination mu = orbit_lamination(gamma, Geodesic::real(1.0, 2.0), 1.0, 25);
  EXPECT_EQ(mu.size(), 51u);
  EXPECT_TRUE(validate(mu).ok());
  EXPECT_ERROR_KIND(orbit_lamination(MobiusMap::real(1.0, 1.0, 0.0, 1.0),
                                     Geodesic::real(1.0, 2.0), 1.0, 3),
                    ErrorKind::kInvalidArgument);
  // Rotation about i is elliptic.
  EXPECT_ERROR_KIND(orbit_lamination(MobiusMap::real(0.0, 1.0, -1.0, 0.0),
                                     Geodesic::real(1.0, 2.0), 1.0, 3),
                    ErrorKind::kInvalidArgument);
}

TEST(OrbitTest, RestrictToDisk) {
  const FiniteLamination mu =
      orbit_lamination(MobiusMap::real(2.0, 0.0, 0.0, 0.5), Geodesic::real(1.0, 2.0), 1.0, 25);
  std::size_t previous = 0;
  for (double r : {0.5, 2.0, 5.0, 10.0, 40.0}) {
    const FiniteLamination kept = restrict_to_disk(mu, r);
    EXPECT_GE(kept.size(), previous);
    for (const Leaf& leaf : kept.leaves()) {
      EXPECT_LE(distance_to_geodesic(reference_point(), leaf.geodesic), r + 1e-9);
    }
    previous = kept.size();
  }
  EXPECT_EQ(previous, mu.size());
  EXPECT_ERROR_KIND(restrict_to_disk(mu, -1.0), ErrorKind::kInvalidArgument);
}

TEST(OrbitTest, HyperbolicRadius) {
  EXPECT_DOUBLE_EQ(hyperbolic_radius(0.0), 0.0);
  EXPECT_NEAR(hyperbolic_radius(0.5), std::log(3.0), 1e-14);
  EXPECT_ERROR_KIND(hyperbolic_radius(1.0), ErrorKind::kInvalidArgument);
}

TEST(TransverseMeasureTest, CountsSeparatingLeaves) {
  const FiniteLamination mu = FiniteLamination::create(
      {{Geodesic::real(0.0, INFINITY), 1.0}, {Geodesic::real(1.0, 4.0), 0.8}});
  EXPECT_DOUBLE_EQ(transverse_measure(mu, {-1.0, 1.0}, {1.0, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(transverse_measure(mu, {-1.0, 1.0}, {2.5, 0.5}), 1.8);
  EXPECT_DOUBLE_EQ(transverse_measure(mu, {2.5, 0.5}, {2.5, 0.6}), 0.0);
}

TEST(ThurstonEstimateTest, SingleLeafAndDeterminism) {
  const FiniteLamination mu = FiniteLamination::create({{Geodesic::real(0.0, INFINITY), 2.0}});
  const ThurstonEstimate estimate = thurston_norm_estimate(mu, 100, 1);
  EXPECT_DOUBLE_EQ(estimate.value, 2.0);
  EXPECT_NEAR(point_distance(estimate.arc_start, estimate.arc_end), 1.0, 1e-12);

  const FiniteLamination fan = load_lamination(data_path("fan.lam"));
  const ThurstonEstimate a = thurston_norm_estimate(fan, 500, 42);
  const ThurstonEstimate b = thurston_norm_estimate(fan, 500, 42);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.arcs_examined, b.arcs_examined);
  EXPECT_GE(thurston_norm_estimate(fan, 2000, 42).value, a.value);
  EXPECT_LE(a.value, fan.total_weight());
  EXPECT_EQ(thurston_norm_estimate(FiniteLamination(), 10, 0).value, 0.0);
}

TEST(PushforwardTest, MovesLeaves) {
  const FiniteLamination mu = FiniteLamination::create({{Geodesic::real(1.0, 4.0), 0.8}});
  const FiniteLamination moved = pushforward(MobiusMap::real(1.0, 1.0, 0.0, 1.0), mu);
  ASSERT_EQ(moved.size(), 1u);
  const Geodesic& g = moved.leaves()[0].geodesic;
  const double lo = std::min(g.p_minus.real_value(), g.p_plus.real_value());
  const double hi = std::max(g.p_minus.real_value(), g.p_plus.real_value());
  EXPECT_NEAR(lo, 2.0, 1e-14);
  EXPECT_NEAR(hi, 5.0, 1e-14);
  EXPECT_DOUBLE_EQ(moved.leaves()[0].weight, 0.8);
}

}  // namespace
}  // namespace liouville
