// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The cogmac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cogmac/region.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cogmac/oracle.hpp"
#include "cogmac/sumrate_solver.hpp"
#include "testing/instances.hpp"

namespace cogmac {
namespace {

using testing::make_instance;
using testing::two_user_instance;

double cross(RatePoint o, RatePoint a, RatePoint b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

void expect_convex_ccw(const std::vector<RatePoint>& hull) {
  ASSERT_GE(hull.size(), 3u);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RatePoint a = hull[i];
    const RatePoint b = hull[(i + 1) % hull.size()];
    const RatePoint c = hull[(i + 2) % hull.size()];
    EXPECT_GE(cross(a, b, c), -1e-12);
  }
}

TEST(RatePolytopeTest, FullCooperationLeavesNothing) {
  const auto ch = two_user_instance();
  const auto poly = polytope_for_gamma(ch, PowerSplit::ones(2));
  for (std::uint32_t mask = 1; mask < 4; ++mask) EXPECT_EQ(poly.bound(mask), 0.0);
}

TEST(RatePolytopeTest, TwoUserHandValues) {
  const auto ch = make_instance({1.0, 1.0}, {0.3, 0.3}, {1.0, 1.0}, 1, 1, 1, 1.0);
  const auto poly = polytope_for_gamma(ch, PowerSplit::zeros(2));
  EXPECT_DOUBLE_EQ(poly.bound(0b01), 0.5);
  EXPECT_DOUBLE_EQ(poly.bound(0b10), 0.5);
  EXPECT_DOUBLE_EQ(poly.bound(0b11), 0.5 * std::log2(3.0));
  EXPECT_NEAR(poly.bound(0b11), 0.7925, 5e-5);
  EXPECT_THROW(poly.bound(0), InvalidArgument);
  EXPECT_THROW(poly.bound(4), InvalidArgument);
}

TEST(RatePolytopeTest, SizeCap) {
  const std::vector<double> ones(11, 1.0);
  const auto ch = make_instance(ones, ones, ones, 1, 1, 1, 1);
  EXPECT_THROW(polytope_for_gamma(ch, PowerSplit::zeros(11)), UnsupportedSize);
  const std::vector<double> ten(10, 1.0);
  const auto ok = make_instance(ten, ten, ten, 1, 1, 1, 1);
  EXPECT_EQ(polytope_for_gamma(ok, PowerSplit::zeros(10)).bounds().size(), 1024u);
}

TEST(RatePolytopeTest, MonotoneAndSubadditiveForSmallK) {
  InstanceGenerator gen(55);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t k_users = 1; k_users <= 4; ++k_users) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto ch = gen.next(k_users);
      std::vector<double> g(k_users);
      for (double& v : g) v = unit(rng);
      const auto poly = polytope_for_gamma(ch, PowerSplit(g));
      const std::uint32_t full = (1u << k_users) - 1;
      for (std::uint32_t a = 1; a <= full; ++a) {
        for (std::uint32_t b = 1; b <= full; ++b) {
          if ((a & b) == a) {
            EXPECT_LE(poly.bound(a), poly.bound(b));
          }
          if ((a & b) == 0) {
            EXPECT_LE(poly.bound(a | b), poly.bound(a) + poly.bound(b) + 1e-15);
          }
        }
      }
    }
  }
}

RatePolytope two_user_polytope(double c1, double c2, double c12) {
  return RatePolytope(PowerSplit::zeros(2), {0.0, c1, c2, c12});
}

TEST(PentagonTest, DominantFace) {
  const auto v = pentagon_vertices(two_user_polytope(1.0, 1.0, 1.5));
  const std::vector<RatePoint> expected{{0, 0}, {1, 0}, {1, 0.5}, {0.5, 1}, {0, 1}};
  EXPECT_EQ(v, expected);
}

TEST(PentagonTest, RectangleWhenSumBoundInactive) {
  const auto v = pentagon_vertices(two_user_polytope(0.5, 0.25, 0.75));
  const std::vector<RatePoint> expected{{0, 0}, {0.5, 0}, {0.5, 0.25}, {0, 0.25}};
  EXPECT_EQ(v, expected);
}

TEST(PentagonTest, ZeroPolytopeIsOrigin) {
  const auto v = pentagon_vertices(two_user_polytope(0, 0, 0));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (RatePoint{0, 0}));
}

TEST(PentagonTest, NeedsTwoUsers) {
  EXPECT_THROW(pentagon_vertices(RatePolytope(PowerSplit::zeros(1), {0.0, 1.0})), UnsupportedSize);
}

TEST(ConvexHullTest, DropsInteriorAndCollinearPoints) {
  const auto hull = convex_hull({{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 2}, {1, 1}, {0, 1}, {2, 2}});
  const std::vector<RatePoint> expected{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  EXPECT_EQ(hull, expected);
  EXPECT_TRUE(hull_contains(hull, {1, 1}, 0.0));
  EXPECT_TRUE(hull_contains(hull, {2, 1}, 0.0));
  EXPECT_FALSE(hull_contains(hull, {2.001, 1}, 1e-6));
}

TEST(ConvexHullTest, DegenerateInputs) {
  EXPECT_TRUE(convex_hull({}).empty());
  EXPECT_EQ(convex_hull({{0, 0}, {0, 0}}).size(), 1u);
  const auto seg = convex_hull({{0, 0}, {1, 1}, {2, 2}});
  EXPECT_EQ(seg.size(), 2u);
}

TEST(GridIntervalsTest, NestedUnderHalving) {
  EXPECT_EQ(grid_intervals(0.5), 2u);
  EXPECT_EQ(grid_intervals(0.25), 4u);
  EXPECT_EQ(grid_intervals(1e-3), 1000u);
  EXPECT_EQ(grid_intervals(0.3), 4u);
  EXPECT_EQ(grid_intervals(5.0), 1u);
  EXPECT_THROW(grid_intervals(0.0), InvalidArgument);
  EXPECT_THROW(grid_intervals(-1.0), InvalidArgument);
}

TEST(SampleFeasibleSetTest, NoInterferenceReturnsWholeGrid) {
  const auto samples = sample_feasible_set(testing::no_interference_instance(), 0.1);
  EXPECT_EQ(samples.size(), 121u);
}

TEST(SampleFeasibleSetTest, SingleUserRoot) {
  const auto samples = sample_feasible_set(testing::unit_instance(), 0.01);
  ASSERT_EQ(samples.size(), 1u);
  EXPECT_NEAR(samples[0][0], testing::unit_gamma(), 1e-15);
}

TEST(SampleFeasibleSetTest, TwoUserPointsPreservePrimaryRate) {
  const auto ch = two_user_instance();
  const auto samples = sample_feasible_set(ch, 1e-3);
  EXPECT_GT(samples.size(), 500u);
  const double baseline = baseline_primary_rate(ch);
  for (const auto& g : samples) {
    EXPECT_NEAR(primary_rate(ch, g), baseline, 1e-6);
    EXPECT_LE(relative_residual(ch, g), 1e-9);
  }
  EXPECT_TRUE(std::is_sorted(samples.begin(), samples.end(),
                             [](const PowerSplit& a, const PowerSplit& b) { return a.values() < b.values(); }));
}

TEST(SampleFeasibleSetTest, ThreeUsersAndSizeCap) {
  InstanceGenerator gen(8);
  const auto ch3 = gen.next(3);
  const auto samples = sample_feasible_set(ch3, 0.05);
  EXPECT_FALSE(samples.empty());
  for (const auto& g : samples) EXPECT_LE(relative_residual(ch3, g), 1e-9);
  EXPECT_THROW(sample_feasible_set(gen.next(4), 0.1), UnsupportedSize);
}

TEST(RegionBoundaryTest, DominatingSplitGivesItsPentagon) {
  // User 1 does not interfere: its best choice is gamma = 0 and every other
  // feasible pentagon sits inside that one.
  const auto ch = make_instance({1.0, 0.7}, {0.5, 0.0}, {2.0, 3.0}, 1.0, 2.0, 1.0, 1.0);
  const auto region = region_boundary(ch, 0.05);
  const double root = testing::bisect_coordinate(ch, {0.0, 0.0}, 0);
  const auto pentagon = pentagon_vertices(polytope_for_gamma(ch, PowerSplit({root, 0.0})));
  ASSERT_EQ(region.points.size(), pentagon.size());
  for (std::size_t i = 0; i < pentagon.size(); ++i) {
    EXPECT_NEAR(region.points[i].r1, pentagon[i].r1, 1e-12);
    EXPECT_NEAR(region.points[i].r2, pentagon[i].r2, 1e-12);
  }
}

TEST(RegionBoundaryTest, NoInterferenceGivesZeroSplitPentagon) {
  const auto ch = testing::no_interference_instance();
  const auto region = region_boundary(ch, 0.05);
  const auto pentagon = pentagon_vertices(polytope_for_gamma(ch, PowerSplit::zeros(2)));
  EXPECT_EQ(region.points, pentagon);
}

TEST(RegionBoundaryTest, ContainsEverySampledPentagonAndIsConvex) {
  const auto ch = two_user_instance();
  const double step = 0.01;
  const auto region = region_boundary(ch, step);
  expect_convex_ccw(region.points);
  EXPECT_EQ(region.points.front(), (RatePoint{0.0, 0.0}));
  for (const auto& g : sample_feasible_set(ch, step)) {
    for (const RatePoint& v : pentagon_vertices(polytope_for_gamma(ch, g))) {
      EXPECT_TRUE(hull_contains(region.points, v, 1e-12));
    }
  }
  // Axis intercepts are hull vertices.
  const auto on_axis = [&](bool first) {
    return std::any_of(region.points.begin(), region.points.end(), [&](const RatePoint& p) {
      return first ? (p.r2 == 0.0 && p.r1 > 0.0) : (p.r1 == 0.0 && p.r2 > 0.0);
    });
  };
  EXPECT_TRUE(on_axis(true));
  EXPECT_TRUE(on_axis(false));
}

TEST(RegionBoundaryTest, SumRateFaceTouchesSolverOptimum) {
  const auto ch = two_user_instance();
  const double step = 1e-3;
  const auto region = region_boundary(ch, step);
  double best = 0.0;
  for (const auto& p : region.points) best = std::max(best, p.r1 + p.r2);
  const SolverResult r = solve_max_sum_rate(ch);
  EXPECT_LE(std::abs(best - r.sum_rate), 2.0 * sum_rate_lipschitz(ch) * step);
  EXPECT_LE(std::abs(best - r.sum_rate), 5e-3);
}

TEST(RegionBoundaryTest, RefinementNeverShrinks) {
  const auto ch = two_user_instance();
  for (const auto& [coarse, fine] : std::vector<std::pair<double, double>>{{0.5, 0.25}, {0.02, 0.01}}) {
    const auto a = region_boundary(ch, coarse);
    const auto b = region_boundary(ch, fine);
    for (const RatePoint& v : a.points) EXPECT_TRUE(hull_contains(b.points, v, 1e-9));
  }
}

TEST(RegionBoundaryTest, NeedsTwoUsers) {
  EXPECT_THROW(region_boundary(testing::unit_instance(), 0.1), UnsupportedSize);
}

}  // namespace
}  // namespace cogmac
