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

#include "cogmac/region.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cogmac {

namespace {

constexpr double kFeasibleTol = 1e-9;

}  // namespace

OracleResult grid_search(const ChannelInstance& ch, double grid_step) {
  const std::size_t k_users = ch.num_users();
  if (k_users > 3) {
    throw UnsupportedSize("grid search supports at most 3 users, got " + std::to_string(k_users));
  }
  const std::size_t n = grid_intervals(grid_step);

  OracleResult best;
  best.grid_step = grid_step;
  if (!ch.has_interference()) {
    best.best_gamma = PowerSplit::zeros(k_users);
    best.best_sum_rate = sum_rate(ch, best.best_gamma);
    best.points_evaluated = 1;
    return best;
  }

  std::vector<double> gamma(k_users, 0.0);
  std::vector<double> best_gamma;
  double best_rate = -1.0;
  std::size_t evaluated = 0;

  for (std::size_t solved = 0; solved < k_users; ++solved) {
    if (ch.g(solved) == 0.0) continue;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < k_users; ++k) {
      if (k != solved) free.push_back(k);
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= n + 1;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rem = idx;
      for (std::size_t i = free.size(); i-- > 0;) {
        gamma[free[i]] = static_cast<double>(rem % (n + 1)) / static_cast<double>(n);
        rem /= n + 1;
      }
      const auto root = solve_feasible_coordinate(ch, gamma, solved);
      if (!root) continue;
      gamma[solved] = *root;
      if (relative_residual(ch, gamma) > kFeasibleTol) continue;
      ++evaluated;
      const double rate = sum_rate(ch, gamma);
      if (rate > best_rate) {
        best_rate = rate;
        best_gamma = gamma;
      }
    }
  }

  if (best_gamma.empty()) {
    throw std::runtime_error("grid search found no feasible point");
  }
  best.best_gamma = PowerSplit(std::move(best_gamma));
  best.best_sum_rate = best_rate;
  best.points_evaluated = evaluated;
  return best;
}

double sum_rate_lipschitz(const ChannelInstance& ch) {
  double total = 0.0;
  for (std::size_t k = 0; k < ch.num_users(); ++k) total += ch.h(k) * ch.h(k) * ch.p(k);
  return total / (ch.sigma_c2() * std::numbers::ln2);
}

KktReport kkt_check(const ChannelInstance& ch, const SolverResult& result, double tol) {
  KktReport report;
  const PowerSplit& gamma = result.gamma_star;
  report.bounds_ok = gamma.size() == ch.num_users();
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    report.bounds_ok = report.bounds_ok && gamma[k] >= 0.0 && gamma[k] <= 1.0;
  }
  if (!report.bounds_ok) return report;

  report.relative_residual = relative_residual(ch, gamma);

  if (result.status == SolverStatus::DegenerateNoInterference) {
    report.status_ok = !ch.has_interference();
    report.feasibility_ok = report.relative_residual <= tol;
    report.pass = report.status_ok && report.feasibility_ok;
    return report;
  }

  report.status_ok = result.status == SolverStatus::Converged;
  report.feasibility_ok = report.relative_residual <= tol;

  const double lambda = result.lambda_star;
  const double x = coherent_amplitude(ch, gamma);
  const double s = ch.primary_signal_power();
  bool stationary = true;
  for (std::size_t k = 0; k < ch.num_users(); ++k) {
    const double own = 2.0 * ch.h(k) * ch.h(k) * ch.p(k);
    const double relay = 2.0 * lambda * ch.sigma_p2() * x * ch.g(k) * std::sqrt(ch.p(k));
    const double leak = 2.0 * lambda * s * ch.g(k) * ch.g(k) * ch.p(k);

    UserStationarity u;
    u.user = k;
    u.gamma = gamma[k];
    u.derivative = -own * gamma[k] + relay + leak * gamma[k];
    u.scale = own + std::abs(relay) + leak;
    u.saturated = gamma[k] == 1.0;
    u.ok = u.saturated ? u.derivative >= -tol * u.scale : std::abs(u.derivative) <= tol * u.scale;
    stationary = stationary && u.ok;
    report.users.push_back(u);
  }
  report.pass = report.status_ok && report.feasibility_ok && stationary;
  return report;
}

double single_user_closed_form(const ChannelInstance& ch) {
  if (ch.num_users() != 1) {
    throw UnsupportedSize("single-user closed form needs K == 1, got " + std::to_string(ch.num_users()));
  }
  if (ch.g(0) == 0.0) throw UndefinedCoordinate("single-user closed form needs g > 0");
  const double s = ch.primary_signal_power();
  const double t = s / ch.sigma_p2();
  const double g2p = ch.g(0) * ch.g(0) * ch.p(0);
  return (-std::sqrt(s) + std::sqrt(s + t * (1.0 + t) * g2p)) / (std::sqrt(g2p) * (1.0 + t));
}

double InstanceGenerator::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

ChannelInstance InstanceGenerator::next(std::size_t num_users) {
  ChannelInstance::Params p;
  for (std::size_t k = 0; k < num_users; ++k) {
    p.h.push_back(uniform(0.1, 2.0));
    p.g.push_back(uniform(0.1, 2.0));
    p.p.push_back(uniform(0.5, 10.0));
  }
  p.h_p = uniform(0.1, 2.0);
  p.p_p = uniform(0.5, 10.0);
  p.sigma_p2 = uniform(0.5, 2.0);
  p.sigma_c2 = uniform(0.5, 2.0);
  p.f = uniform(0.1, 2.0);
  return ChannelInstance(std::move(p));
}

std::vector<ChannelInstance> random_suite(std::uint64_t seed, std::size_t count) {
  InstanceGenerator gen(seed);
  std::vector<ChannelInstance> suite;
  suite.reserve(count);
  for (std::size_t i = 0; i < count; ++i) suite.push_back(gen.next(1 + i % 3));
  return suite;
}

}  // namespace cogmac
