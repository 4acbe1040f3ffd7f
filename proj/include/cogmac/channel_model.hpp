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
// Scenario parameters and rate formulas of the cognitive multiple-access
// channel.
//
// K cognitive users transmit to a common access point while a primary user
// talks to its own receiver. Cognitive user k knows the primary codeword and
// spends a fraction gamma_k^2 of its power P_k relaying it; the remaining
// (1 - gamma_k^2) P_k carries its own dirty-paper-coded message. The access
// point therefore sees an interference-free Gaussian MAC, and the primary
// receiver sees a coherent boost plus residual interference.
//
// All rates are in bits per channel use (log base 2).

#ifndef COGMAC_CHANNEL_MODEL_HPP
#define COGMAC_CHANNEL_MODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cogmac/errors.hpp"

namespace cogmac {

/// Scalar description of one scenario. Constructed only through the
/// validating constructor; every instance satisfies the invariants below.
///
///   - h, g, p have the same nonzero length K
///   - gains finite and >= 0, powers and noise variances finite and > 0
///
/// `f` (primary-to-access-point gain) is carried for reporting only. Dirty
/// paper coding at the cognitive encoders removes the primary signal at the
/// access point, so it never enters a rate.
class ChannelInstance {
 public:
  struct Params {
    std::vector<double> h;  // cognitive user -> access point gains
    std::vector<double> g;  // cognitive user -> primary receiver gains
    std::vector<double> p;  // cognitive power budgets (W)
    double h_p = 0.0;       // primary link gain
    double p_p = 0.0;       // primary power budget (W)
    double sigma_p2 = 0.0;  // primary receiver noise variance
    double sigma_c2 = 0.0;  // access point noise variance
    double f = 0.0;         // primary -> access point gain, unused in rates

    bool operator==(const Params&) const = default;
  };

  /// Throws InvalidArgument naming the offending field (e.g. "p[0]").
  explicit ChannelInstance(Params params);

  std::size_t num_users() const { return params_.h.size(); }

  double h(std::size_t k) const { return params_.h[k]; }
  double g(std::size_t k) const { return params_.g[k]; }
  double p(std::size_t k) const { return params_.p[k]; }
  double h_p() const { return params_.h_p; }
  double p_p() const { return params_.p_p; }
  double sigma_p2() const { return params_.sigma_p2; }
  double sigma_c2() const { return params_.sigma_c2; }
  double f() const { return params_.f; }

  const Params& params() const { return params_; }

  /// h_k / g_k. Throws UndefinedCoordinate when g_k == 0.
  double beta(std::size_t k) const;

  /// h_p^2 P_p, the primary signal power at its receiver.
  double primary_signal_power() const { return params_.h_p * params_.h_p * params_.p_p; }

  /// True when some user leaks power into the primary receiver.
  bool has_interference() const;

  bool operator==(const ChannelInstance&) const = default;

 private:
  Params params_;
};

/// Cooperation ratios gamma, one per user, each in [0, 1].
class PowerSplit {
 public:
  PowerSplit() = default;
  /// Throws InvalidArgument if any entry is outside [0, 1] or not finite.
  explicit PowerSplit(std::vector<double> gamma);

  static PowerSplit zeros(std::size_t k) { return PowerSplit(std::vector<double>(k, 0.0)); }
  static PowerSplit ones(std::size_t k) { return PowerSplit(std::vector<double>(k, 1.0)); }

  std::size_t size() const { return gamma_.size(); }
  double operator[](std::size_t k) const { return gamma_[k]; }
  const std::vector<double>& values() const { return gamma_; }
  operator std::span<const double>() const { return gamma_; }

  bool operator==(const PowerSplit&) const = default;

 private:
  std::vector<double> gamma_;
};

// The rate and residual functions below accept any span of ratios so that
// inner loops can evaluate candidates without building a PowerSplit. They
// check the dimension but not the [0, 1] box; PowerSplit enforces that.

/// 1/2 log2(1 + h_p^2 P_p / sigma_p^2): the primary rate with no cognitive users.
double baseline_primary_rate(const ChannelInstance& ch);

/// Primary rate with coherent relaying and residual interference.
double primary_rate(const ChannelInstance& ch, std::span<const double> gamma);

/// Cross-multiplied feasibility constraint
///
///   phi = sigma_p^2 X^2 - h_p^2 P_p (sigma_p^2 + sum_k g_k^2 (1 - gamma_k^2) P_k),
///   X   = h_p sqrt(P_p) + sum_k g_k gamma_k sqrt(P_k).
///
/// phi == 0 exactly on the feasible set; phi < 0 means the primary rate is
/// below its baseline.
double feasibility_residual(const ChannelInstance& ch, std::span<const double> gamma);

/// Normalizer for phi: max(h_p^2 P_p sum g_k^2 P_k, sigma_p^2 h_p^2 P_p).
/// Falls back to phi(gamma = 1) = sigma_p^2 (sum g_k sqrt(P_k))^2 when the
/// primary link is silent, and to 1 when that is zero as well.
double residual_scale(const ChannelInstance& ch);

/// |phi| / residual_scale(ch).
double relative_residual(const ChannelInstance& ch, std::span<const double> gamma);

/// 1/2 log2(1 + sum_k (1 - gamma_k^2) h_k^2 P_k / sigma_c^2).
double sum_rate(const ChannelInstance& ch, std::span<const double> gamma);

/// X = h_p sqrt(P_p) + sum_k g_k gamma_k sqrt(P_k), the coherent amplitude at
/// the primary receiver.
double coherent_amplitude(const ChannelInstance& ch, std::span<const double> gamma);

/// Solves phi = 0 for gamma_k with every other coordinate held at its value
/// in `gamma` (entry k is ignored). Returns the root in [0, 1] if one
/// exists. Throws UndefinedCoordinate if g_k == 0.
///
/// With T = h_p^2 P_p / sigma_p^2, x = g_k sqrt(P_k) and B, A collecting the
/// other users, phi / sigma_p^2 = x^2 (1 + T) gamma_k^2 + 2 B x gamma_k + B^2 - A.
/// Since B >= 0 the smaller root is never positive; only the larger one is
/// returned, evaluated in cancellation-free form.
std::optional<double> solve_feasible_coordinate(const ChannelInstance& ch,
                                                std::span<const double> gamma,
                                                std::size_t k);

}  // namespace cogmac

#endif  // COGMAC_CHANNEL_MODEL_HPP
