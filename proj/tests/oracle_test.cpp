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

#include "cogmac/oracle.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "testing/instances.hpp"

namespace cogmac {
namespace {

using testing::make_instance;
using testing::two_user_instance;
using testing::unit_instance;
using testing::unit_gamma;

TEST(GridSearchTest, SingleUserMatchesClosedForm) {
  const OracleResult o = grid_search(unit_instance(), 1e-3);
  EXPECT_NEAR(o.best_gamma[0], unit_gamma(), 1e-12);
  EXPECT_NEAR(o.best_gamma[0], 0.36603, 5e-6);
  EXPECT_EQ(o.points_evaluated, 1u);
  EXPECT_EQ(o.best_sum_rate, sum_rate(unit_instance(), o.best_gamma));
}

TEST(GridSearchTest, NoInterferenceKeepsEverything) {
  const OracleResult o = grid_search(testing::no_interference_instance(), 1e-2);
  EXPECT_EQ(o.best_gamma, PowerSplit::zeros(2));
}

TEST(GridSearchTest, TwoUserAgreesWithSolver) {
  const auto ch = two_user_instance();
  const OracleResult o = grid_search(ch, 1e-3);
  const SolverResult r = solve_max_sum_rate(ch);
  EXPECT_LE(std::abs(r.sum_rate - o.best_sum_rate), 1e-3);
  EXPECT_LE(relative_residual(ch, o.best_gamma), 1e-9);
  EXPECT_EQ(o.grid_step, 1e-3);
}

TEST(GridSearchTest, DeterministicAndSizeLimited) {
  InstanceGenerator gen(17);
  const auto ch = gen.next(3);
  const OracleResult a = grid_search(ch, 0.02);
  const OracleResult b = grid_search(ch, 0.02);
  EXPECT_EQ(a.best_gamma, b.best_gamma);
  EXPECT_EQ(a.best_sum_rate, b.best_sum_rate);
  EXPECT_EQ(a.points_evaluated, b.points_evaluated);
  EXPECT_THROW(grid_search(gen.next(4), 0.1), UnsupportedSize);
}

TEST(GridSearchTest, BoundsTheSolverFromBelow) {
  for (const auto& ch : random_suite(999, 12)) {
    const double step = 1e-2;
    const OracleResult o = grid_search(ch, step);
    const SolverResult r = solve_max_sum_rate(ch);
    EXPECT_GE(r.sum_rate, o.best_sum_rate - sum_rate_lipschitz(ch) * step);
    // The oracle only visits feasible points, so it cannot beat the optimum
    // by more than the solver's own feasibility slack.
    EXPECT_LE(o.best_sum_rate, r.sum_rate + 1e-6);
  }
}

TEST(KktCheckTest, SingleUserOptimumPasses) {
  const auto ch = unit_instance();
  const KktReport report = kkt_check(ch, solve_max_sum_rate(ch), 1e-6);
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.users.size(), 1u);
  EXPECT_FALSE(report.users[0].saturated);
}

TEST(KktCheckTest, PerturbedSplitFails) {
  const auto ch = two_user_instance();
  SolverResult r = solve_max_sum_rate(ch);
  std::vector<double> g = r.gamma_star.values();
  g[0] = std::min(1.0, g[0] + 0.05);
  r.gamma_star = PowerSplit(g);
  const KktReport report = kkt_check(ch, r, 1e-6);
  EXPECT_FALSE(report.pass);
  EXPECT_FALSE(report.feasibility_ok);
  EXPECT_GT(std::abs(report.users[0].derivative), 1e-6 * report.users[0].scale);
}

TEST(KktCheckTest, DegenerateInstancePassesWithNoStationarityEntries) {
  const auto ch = testing::no_interference_instance();
  const KktReport report = kkt_check(ch, solve_max_sum_rate(ch), 1e-6);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.users.empty());
}

TEST(KktCheckTest, UnconvergedResultFails) {
  const auto ch = two_user_instance();
  SolverConfig cfg = SolverConfig::defaults_for(ch);
  cfg.max_outer_iters = 2;
  const KktReport report = kkt_check(ch, solve_max_sum_rate(ch, cfg), 1e-6);
  EXPECT_FALSE(report.status_ok);
  EXPECT_FALSE(report.pass);
}

TEST(KktCheckTest, PassesAcrossRandomSuite) {
  for (const auto& ch : random_suite(2024, 30)) {
    const SolverResult r = solve_max_sum_rate(ch);
    ASSERT_EQ(r.status, SolverStatus::Converged);
    EXPECT_TRUE(kkt_check(ch, r, 1e-6).pass);
  }
}

TEST(SingleUserClosedFormTest, UnitInstance) {
  EXPECT_NEAR(single_user_closed_form(unit_instance()), unit_gamma(), 1e-15);
}

TEST(SingleUserClosedFormTest, SatisfiesConstraintOnRandomInstances) {
  InstanceGenerator gen(31);
  for (int i = 0; i < 100; ++i) {
    const auto ch = gen.next(1);
    const double g = single_user_closed_form(ch);
    EXPECT_GE(g, 0.0);
    EXPECT_LE(g, 1.0);
    EXPECT_LE(relative_residual(ch, std::vector<double>{g}), 1e-12);
  }
}

TEST(SingleUserClosedFormTest, StrongInterferenceLimit) {
  // As g sqrt(P) grows the root tends to sqrt(T / (1 + T)), not to zero:
  // the relayed amplitude must keep pace with the leaked power.
  const auto ch = make_instance({1.0}, {1e3}, {1.0}, 1.0, 1.0, 1.0, 1.0);
  const double g = single_user_closed_form(ch);
  EXPECT_NEAR(g, std::sqrt(0.5), 1e-3);
  EXPECT_LT(g, std::sqrt(0.5));
  EXPECT_LE(relative_residual(ch, std::vector<double>{g}), 1e-12);
}

TEST(SingleUserClosedFormTest, SilentPrimaryNeedsNothing) {
  EXPECT_EQ(single_user_closed_form(make_instance({1.0}, {1.0}, {1.0}, 0.0, 1.0, 1.0, 1.0)), 0.0);
}

TEST(SingleUserClosedFormTest, Preconditions) {
  EXPECT_THROW(single_user_closed_form(two_user_instance()), UnsupportedSize);
  EXPECT_THROW(single_user_closed_form(make_instance({1.0}, {0.0}, {1.0}, 1, 1, 1, 1)), UndefinedCoordinate);
}

TEST(InstanceGeneratorTest, RangesAndReproducibility) {
  const auto a = random_suite(5, 30);
  const auto b = random_suite(5, 30);
  ASSERT_EQ(a.size(), 30u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_EQ(a[i].num_users(), 1 + i % 3);
    const auto& p = a[i].params();
    for (std::size_t k = 0; k < p.h.size(); ++k) {
      EXPECT_GE(p.h[k], 0.1);
      EXPECT_LE(p.h[k], 2.0);
      EXPECT_GE(p.g[k], 0.1);
      EXPECT_LE(p.g[k], 2.0);
      EXPECT_GE(p.p[k], 0.5);
      EXPECT_LE(p.p[k], 10.0);
    }
    EXPECT_GE(p.sigma_p2, 0.5);
    EXPECT_LE(p.sigma_p2, 2.0);
    EXPECT_GE(p.sigma_c2, 0.5);
    EXPECT_LE(p.sigma_c2, 2.0);
  }
  EXPECT_NE(random_suite(6, 1)[0], a[0]);
}

}  // namespace
}  // namespace cogmac
