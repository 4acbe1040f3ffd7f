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
// ------------------------------------------------------------------------
//
// Independent checks for the sum-rate solver: exhaustive search over the
// feasible set, first-order optimality verification and the single-user
// closed form.

#ifndef COGMAC_ORACLE_HPP
#define COGMAC_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cogmac/channel_model.hpp"
#include "cogmac/sumrate_solver.hpp"

namespace cogmac {

struct OracleResult {
  PowerSplit best_gamma;
  double best_sum_rate = 0.0;
  double grid_step = 0.0;
  std::size_t points_evaluated = 0;
};

/// Best sum rate over the feasible set, found by gridding all but one
/// coordinate over [0, 1] and solving the remaining one onto the constraint,
/// for every choice of solved coordinate with g_k > 0. Scan order is fixed
/// and ties keep the earliest point. Throws UnsupportedSize for K > 3.
OracleResult grid_search(const ChannelInstance& ch, double grid_step);

/// Upper bound on sum_k |d sum_rate / d gamma_k| over the unit box:
/// sum_k h_k^2 P_k / (sigma_c^2 ln 2). Times a grid step it bounds the
/// sum-rate error of a gamma that is within that step in every coordinate.
double sum_rate_lipschitz(const ChannelInstance& ch);

struct UserStationarity {
  std::size_t user = 0;
  double gamma = 0.0;
  double derivative = 0.0;  // dJ/dgamma_k at (lambda*, gamma*)
  double scale = 0.0;       // magnitude of the terms making up the derivative
  bool saturated = false;
  bool ok = false;
};

struct KktReport {
  std::vector<UserStationarity> users;
  double relative_residual = 0.0;
  bool status_ok = false;
  bool feasibility_ok = false;
  bool bounds_ok = false;
  bool pass = false;
};

/// Checks the Lagrangian stationarity conditions at a solver output:
/// interior derivatives vanish within tol * scale, saturated derivatives are
/// >= -tol * scale, and the relative feasibility residual is within tol.
/// A degenerate (interference-free) result passes with no per-user entries.
/// Results that did not converge are reported as failing.
KktReport kkt_check(const ChannelInstance& ch, const SolverResult& result, double tol);

/// Feasible ratio for a single interfering user:
///   (-h_p sqrt(P_p) + sqrt(h_p^2 P_p + T (1 + T) g^2 P)) / (g sqrt(P) (1 + T)),
///   T = h_p^2 P_p / sigma_p^2.
/// Throws UnsupportedSize unless K == 1, UndefinedCoordinate if g == 0.
double single_user_closed_form(const ChannelInstance& ch);

/// Seeded scenario generator: gains uniform in [0.1, 2], powers in
/// [0.5, 10], noise variances in [0.5, 2]. Draws are mapped from the raw
/// 64-bit engine output so sequences are identical across standard libraries.
class InstanceGenerator {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20080417;

  explicit InstanceGenerator(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  ChannelInstance next(std::size_t num_users);

 private:
  double uniform(double lo, double hi);

  std::mt19937_64 engine_;
};

/// `count` instances from one generator, cycling K through 1, 2, 3.
std::vector<ChannelInstance> random_suite(std::uint64_t seed, std::size_t count);

}  // namespace cogmac

#endif  // COGMAC_ORACLE_HPP
