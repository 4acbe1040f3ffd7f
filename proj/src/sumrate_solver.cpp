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

#include "cogmac/sumrate_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace cogmac {

namespace {

bool pinned(const ChannelInstance& ch, std::size_t k) { return ch.g(k) == 0.0; }

// beta_k^2 - lambda h_p^2 P_p
double pole_gap(const ChannelInstance& ch, double lambda, std::size_t k) {
  const double beta = ch.beta(k);
  return beta * beta - lambda * ch.primary_signal_power();
}

double numerator(const ChannelInstance& ch, const ActiveSetState& sets) {
  double num = ch.h_p() * std::sqrt(ch.p_p());
  for (std::size_t k : sets.saturated) num += ch.g(k) * std::sqrt(ch.p(k));
  return num;
}

// gamma_k = coefficient_k * X for an interior user with a positive pole gap.
double coefficient(const ChannelInstance& ch, double lambda, std::size_t k, double gap) {
  return lambda * ch.sigma_p2() / (gap * ch.g(k) * std::sqrt(ch.p(k)));
}

void saturate(ActiveSetState& state, std::size_t k) {
  std::erase(state.interior, k);
  state.saturated.insert(std::lower_bound(state.saturated.begin(), state.saturated.end(), k), k);
}

// Picks the next interior user to saturate at (lambda, partition), or
// nothing if the partition is self-consistent.
std::optional<std::size_t> next_saturation(const ChannelInstance& ch, double lambda,
                                           const ActiveSetState& state) {
  if (lambda <= 0.0) return std::nullopt;

  // Past its pole the user would have reached 1 on the way.
  double smallest_gap = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> past_pole;
  for (std::size_t k : state.interior) {
    if (pinned(ch, k)) continue;
    const double gap = pole_gap(ch, lambda, k);
    if (gap <= 0.0 && gap < smallest_gap) {
      smallest_gap = gap;
      past_pole = k;
    }
  }
  if (past_pole) return past_pole;

  // X blew up: the user with the largest slope in X crosses 1 first.
  double weighted = 0.0;
  double best_coeff = -1.0;
  std::optional<std::size_t> steepest;
  for (std::size_t k : state.interior) {
    if (pinned(ch, k)) continue;
    const double gap = pole_gap(ch, lambda, k);
    weighted += 1.0 / gap;
    const double c = coefficient(ch, lambda, k, gap);
    if (c > best_coeff) {
      best_coeff = c;
      steepest = k;
    }
  }
  const double denom = 1.0 - lambda * ch.sigma_p2() * weighted;
  if (denom <= 0.0) return steepest;

  const double x = numerator(ch, state) / denom;
  double best_raw = 1.0;
  std::optional<std::size_t> crossing;
  for (std::size_t k : state.interior) {
    if (pinned(ch, k)) continue;
    const double raw = coefficient(ch, lambda, k, pole_gap(ch, lambda, k)) * x;
    if (raw >= best_raw && (!crossing || raw > best_raw)) {
      best_raw = raw;
      crossing = k;
    }
  }
  return crossing;
}

}  // namespace

std::string_view to_string(SolverStatus status) {
  switch (status) {
    case SolverStatus::Converged: return "Converged";
    case SolverStatus::MaxItersExceeded: return "MaxItersExceeded";
    case SolverStatus::DegenerateNoInterference: return "DegenerateNoInterference";
    case SolverStatus::ToleranceNotMet: return "ToleranceNotMet";
  }
  return "Unknown";
}

void SolverConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(lambda_step)) throw InvalidArgument("field `lambda_step`: must be positive");
  if (!positive(residual_tol)) throw InvalidArgument("field `residual_tol`: must be positive");
  if (max_outer_iters <= 0) throw InvalidArgument("field `max_outer_iters`: must be positive");
  if (!positive(refine_tol)) throw InvalidArgument("field `refine_tol`: must be positive");
  if (!(refine_tol < lambda_step)) {
    throw InvalidArgument("field `refine_tol`: must be smaller than lambda_step");
  }
}

SolverConfig SolverConfig::defaults_for(const ChannelInstance& ch) {
  const double s = ch.primary_signal_power();
  double min_pole = std::numeric_limits<double>::infinity();
  double max_pole = 0.0;
  for (std::size_t k = 0; k < ch.num_users(); ++k) {
    if (pinned(ch, k) || s == 0.0) continue;
    const double beta = ch.beta(k);
    const double pole = beta * beta / s;
    if (pole > 0.0) min_pole = std::min(min_pole, pole);
    max_pole = std::max(max_pole, pole);
  }
  const double scale = std::isfinite(min_pole) ? min_pole : 1.0;

  SolverConfig cfg;
  cfg.lambda_step = 1e-3 * scale;
  cfg.refine_tol = 1e-12 * cfg.lambda_step;
  constexpr double kMaxCap = 2e9;
  cfg.max_outer_iters =
      static_cast<std::int64_t>(std::min(kMaxCap, std::ceil(max_pole / cfg.lambda_step) + 1000.0));
  return cfg;
}

ActiveSetState ActiveSetState::initial(const ChannelInstance& ch) {
  ActiveSetState state;
  for (std::size_t k = 0; k < ch.num_users(); ++k) state.interior.push_back(k);
  state.x_value = ch.h_p() * std::sqrt(ch.p_p());
  state.gamma = PowerSplit::zeros(ch.num_users());
  return state;
}

double x_closed_form(const ChannelInstance& ch, double lambda, const ActiveSetState& sets) {
  double weighted = 0.0;
  if (lambda > 0.0) {
    for (std::size_t k : sets.interior) {
      if (pinned(ch, k)) continue;
      const double gap = pole_gap(ch, lambda, k);
      if (gap <= 0.0) {
        throw SingularityError("user " + std::to_string(k) + " is past its pole at lambda " +
                               std::to_string(lambda));
      }
      weighted += 1.0 / gap;
    }
  }
  const double denom = 1.0 - lambda * ch.sigma_p2() * weighted;
  if (denom <= 0.0) {
    throw SingularityError("closed-form X denominator is nonpositive at lambda " + std::to_string(lambda));
  }
  return numerator(ch, sets) / denom;
}

GammaUpdate gamma_of_lambda(const ChannelInstance& ch, double lambda, double x,
                            const ActiveSetState& sets) {
  std::vector<double> gamma(ch.num_users(), 0.0);
  std::vector<std::pair<double, std::size_t>> crossing;
  for (std::size_t k : sets.saturated) gamma[k] = 1.0;
  for (std::size_t k : sets.interior) {
    if (pinned(ch, k) || lambda <= 0.0) continue;
    const double gap = pole_gap(ch, lambda, k);
    const double raw = gap > 0.0 ? coefficient(ch, lambda, k, gap) * x
                                 : std::numeric_limits<double>::infinity();
    if (raw >= 1.0) {
      gamma[k] = 1.0;
      crossing.emplace_back(raw, k);
    } else {
      gamma[k] = std::max(raw, 0.0);
    }
  }
  std::stable_sort(crossing.begin(), crossing.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  GammaUpdate update{PowerSplit(std::move(gamma)), {}};
  for (const auto& [raw, k] : crossing) update.saturating.push_back(k);
  return update;
}

ActiveSetState update_active_set(const ChannelInstance& ch, double lambda, const ActiveSetState& state) {
  ActiveSetState next = state;
  next.lambda = lambda;
  while (auto k = next_saturation(ch, lambda, next)) {
    saturate(next, *k);
  }
  try {
    next.x_value = x_closed_form(ch, lambda, next);
  } catch (const SingularityError& e) {
    throw SingularityError(std::string("inconsistent active set after saturation: ") + e.what());
  }
  next.gamma = gamma_of_lambda(ch, lambda, next.x_value, next).gamma;
  return next;
}

namespace {

double relres(const ChannelInstance& ch, const ActiveSetState& s) {
  return relative_residual(ch, s.gamma);
}

// Users with h_k == 0 cost nothing to saturate, so they jump to 1 at the
// first positive multiplier and phi is discontinuous at lambda = 0. When the
// bracket straddles that jump, place them directly on the constraint.
std::optional<ActiveSetState> place_free_users(const ChannelInstance& ch, const ActiveSetState& lo) {
  ActiveSetState s = lo;
  std::vector<double> gamma = lo.gamma.values();
  for (std::size_t k : lo.interior) {
    if (pinned(ch, k) || ch.h(k) != 0.0) continue;
    if (auto root = solve_feasible_coordinate(ch, gamma, k)) {
      gamma[k] = *root;
      if (*root == 1.0) saturate(s, k);
      s.gamma = PowerSplit(std::move(gamma));
      s.x_value = coherent_amplitude(ch, s.gamma);
      return s;
    }
    gamma[k] = 1.0;
    saturate(s, k);
  }
  return std::nullopt;
}

SolverResult make_result(const ChannelInstance& ch, const ActiveSetState& s, SolverStatus status) {
  SolverResult r;
  r.gamma_star = s.gamma;
  r.sum_rate = sum_rate(ch, s.gamma);
  r.lambda_star = s.lambda;
  r.x_value = s.x_value;
  r.residual = relres(ch, s);
  r.saturated = s.saturated;
  r.active_set_changes = static_cast<std::int64_t>(s.saturated.size());
  r.status = status;
  return r;
}

}  // namespace

SolverResult solve_max_sum_rate(const ChannelInstance& ch, const SolverConfig& cfg) {
  cfg.validate();
  ActiveSetState lo = ActiveSetState::initial(ch);

  if (!ch.has_interference()) {
    return make_result(ch, lo, SolverStatus::DegenerateNoInterference);
  }
  if (feasibility_residual(ch, lo.gamma) >= 0.0) {
    return make_result(ch, lo, SolverStatus::Converged);
  }

  std::int64_t step = 1;
  std::optional<ActiveSetState> hi;
  for (; step <= cfg.max_outer_iters; ++step) {
    ActiveSetState cur = update_active_set(ch, static_cast<double>(step) * cfg.lambda_step, lo);
    if (feasibility_residual(ch, cur.gamma) >= 0.0) {
      hi = std::move(cur);
      break;
    }
    lo = std::move(cur);
  }
  if (!hi) {
    SolverResult r = make_result(ch, lo, SolverStatus::MaxItersExceeded);
    r.outer_iterations = cfg.max_outer_iters;
    return r;
  }

  std::int64_t refine_iterations = 0;
  if (cfg.bisection_refine) {
    while (relres(ch, *hi) > cfg.residual_tol && hi->lambda - lo.lambda > cfg.refine_tol) {
      const double mid = 0.5 * (lo.lambda + hi->lambda);
      if (mid <= lo.lambda || mid >= hi->lambda) break;
      ActiveSetState s = update_active_set(ch, mid, lo);
      ++refine_iterations;
      if (feasibility_residual(ch, s.gamma) < 0.0) {
        lo = std::move(s);
      } else {
        hi = std::move(s);
      }
    }
  }

  ActiveSetState best = relres(ch, lo) < relres(ch, *hi) ? lo : *hi;
  if (relres(ch, best) > cfg.residual_tol) {
    if (auto placed = place_free_users(ch, lo); placed && relres(ch, *placed) <= cfg.residual_tol) {
      best = std::move(*placed);
    }
  }
  const SolverStatus status =
      relres(ch, best) <= cfg.residual_tol ? SolverStatus::Converged : SolverStatus::ToleranceNotMet;
  SolverResult r = make_result(ch, best, status);
  r.outer_iterations = step;
  r.refine_iterations = refine_iterations;
  return r;
}

std::vector<ActiveSetState> sweep_trajectory(const ChannelInstance& ch, double lambda_max,
                                             std::size_t samples) {
  if (!(std::isfinite(lambda_max) && lambda_max >= 0.0)) {
    throw InvalidArgument("lambda_max must be finite and nonnegative");
  }
  if (samples == 0) throw InvalidArgument("samples must be positive");

  std::vector<ActiveSetState> rows;
  rows.reserve(samples);
  ActiveSetState state = ActiveSetState::initial(ch);
  for (std::size_t i = 0; i < samples; ++i) {
    const double lambda =
        samples == 1 ? 0.0 : lambda_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    state = update_active_set(ch, lambda, state);
    rows.push_back(state);
  }
  return rows;
}

}  // namespace cogmac
