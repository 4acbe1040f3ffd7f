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
// Maximum sum-rate power split by a Lagrangian multiplier sweep.
//
// For a multiplier lambda the stationary point of
//
//   J(gamma) = sum_k (1 - gamma_k^2) h_k^2 P_k + lambda * phi(gamma)
//
// is, for users still inside the box,
//
//   gamma_k = lambda sigma_p^2 X / ((beta_k^2 - lambda h_p^2 P_p) g_k sqrt(P_k)),
//
// with X the coherent amplitude. Substituting back gives X in closed form for
// a given split of users into interior (gamma_k < 1) and saturated
// (gamma_k = 1) sets. Starting from lambda = 0 with every user interior, the
// sweep raises lambda in fixed steps, moves users whose ratio reaches 1 into
// the saturated set, and stops once phi turns nonnegative. The bracketing
// step is then bisected until the feasibility residual meets tolerance.

#ifndef COGMAC_SUMRATE_SOLVER_HPP
#define COGMAC_SUMRATE_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cogmac/channel_model.hpp"

namespace cogmac {

struct SolverConfig {
  double lambda_step = 0.0;          // sweep increment of the multiplier
  double residual_tol = 1e-10;       // relative feasibility tolerance
  std::int64_t max_outer_iters = 0;  // cap on sweep increments
  bool bisection_refine = true;
  double refine_tol = 0.0;           // multiplier bracket width at which bisection stops

  /// Throws InvalidArgument if a field is nonpositive or refine_tol >= lambda_step.
  void validate() const;

  /// Instance-scaled defaults. lambda_step is 1e-3 of the smallest pole
  /// beta_k^2 / (h_p^2 P_p) over interfering users; the iteration cap lets
  /// the sweep run past the largest pole, where every user is saturated.
  static SolverConfig defaults_for(const ChannelInstance& ch);
};

/// Partition of users into interior and saturated sets at one multiplier.
/// Users with g_k == 0 are kept interior with gamma_k pinned at 0.
struct ActiveSetState {
  double lambda = 0.0;
  std::vector<std::size_t> interior;   // ascending
  std::vector<std::size_t> saturated;  // ascending
  double x_value = 0.0;
  PowerSplit gamma;

  /// All users interior, lambda = 0, gamma = 0.
  static ActiveSetState initial(const ChannelInstance& ch);
};

enum class SolverStatus {
  Converged,
  MaxItersExceeded,
  DegenerateNoInterference,
  /// Refinement was disabled or exhausted before residual_tol was reached.
  ToleranceNotMet,
};

std::string_view to_string(SolverStatus status);

struct SolverResult {
  PowerSplit gamma_star;
  double sum_rate = 0.0;
  double lambda_star = 0.0;
  double x_value = 0.0;
  double residual = 0.0;  // relative
  std::int64_t outer_iterations = 0;
  std::int64_t refine_iterations = 0;
  std::int64_t active_set_changes = 0;
  std::vector<std::size_t> saturated;
  SolverStatus status = SolverStatus::Converged;
};

/// Closed-form X for the partition in `sets`:
///
///   X = (h_p sqrt(P_p) + sum_{saturated} g_k sqrt(P_k))
///       / (1 - lambda sigma_p^2 sum_{interior, g_k > 0} (beta_k^2 - lambda h_p^2 P_p)^-1)
///
/// Throws SingularityError when lambda > 0 and an interior denominator
/// beta_k^2 - lambda h_p^2 P_p is nonpositive, or the overall denominator is.
double x_closed_form(const ChannelInstance& ch, double lambda, const ActiveSetState& sets);

/// Per-user ratios at (lambda, x) for the partition in `sets`. Saturated users
/// get 1, interior users the stationary formula clipped to [0, 1], users with
/// g_k == 0 get 0. Users whose formula reaches 1 (or whose denominator is
/// nonpositive) are listed in `saturating`, largest raw value first; the
/// caller is expected to move them with update_active_set.
struct GammaUpdate {
  PowerSplit gamma;
  std::vector<std::size_t> saturating;
};
GammaUpdate gamma_of_lambda(const ChannelInstance& ch, double lambda, double x,
                            const ActiveSetState& sets);

/// Recomputes X and gamma at `lambda` starting from the partition in `state`,
/// saturating users one at a time (largest raw ratio first) until no interior
/// ratio reaches 1. Saturated users never return to the interior.
ActiveSetState update_active_set(const ChannelInstance& ch, double lambda, const ActiveSetState& state);

SolverResult solve_max_sum_rate(const ChannelInstance& ch, const SolverConfig& cfg);

inline SolverResult solve_max_sum_rate(const ChannelInstance& ch) {
  return solve_max_sum_rate(ch, SolverConfig::defaults_for(ch));
}

/// Multiplier trajectory on an even grid 0..lambda_max with `samples` points,
/// carrying the active set forward from row to row.
std::vector<ActiveSetState> sweep_trajectory(const ChannelInstance& ch, double lambda_max,
                                             std::size_t samples);

}  // namespace cogmac

#endif  // COGMAC_SUMRATE_SOLVER_HPP
