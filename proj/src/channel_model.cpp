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

#include "cogmac/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cogmac {

namespace {

void require(bool ok, const std::string& field, const char* what) {
  if (!ok) {
    throw InvalidArgument("field `" + field + "`: " + what);
  }
}

void check_vector(const std::vector<double>& v, const char* name, bool strictly_positive) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string field = std::string(name) + "[" + std::to_string(k) + "]";
    require(std::isfinite(v[k]), field, "must be finite");
    if (strictly_positive) {
      require(v[k] > 0.0, field, "must be positive");
    } else {
      require(v[k] >= 0.0, field, "must be nonnegative");
    }
  }
}

void check_dimension(const ChannelInstance& ch, std::span<const double> gamma) {
  if (gamma.size() != ch.num_users()) {
    throw InvalidArgument("gamma has " + std::to_string(gamma.size()) + " entries, channel has " +
                          std::to_string(ch.num_users()) + " users");
  }
}

}  // namespace

ChannelInstance::ChannelInstance(Params params) : params_(std::move(params)) {
  require(!params_.h.empty(), "h", "at least one user is required");
  require(params_.g.size() == params_.h.size(), "g", "length must match h");
  require(params_.p.size() == params_.h.size(), "p", "length must match h");
  check_vector(params_.h, "h", false);
  check_vector(params_.g, "g", false);
  check_vector(params_.p, "p", true);
  require(std::isfinite(params_.h_p) && params_.h_p >= 0.0, "h_p", "must be finite and nonnegative");
  require(std::isfinite(params_.p_p) && params_.p_p > 0.0, "p_p", "must be finite and positive");
  require(std::isfinite(params_.sigma_p2) && params_.sigma_p2 > 0.0, "sigma_p2",
          "must be finite and positive");
  require(std::isfinite(params_.sigma_c2) && params_.sigma_c2 > 0.0, "sigma_c2",
          "must be finite and positive");
  require(std::isfinite(params_.f) && params_.f >= 0.0, "f", "must be finite and nonnegative");
}

double ChannelInstance::beta(std::size_t k) const {
  if (params_.g[k] == 0.0) {
    throw UndefinedCoordinate("beta undefined for user " + std::to_string(k) + " with g == 0");
  }
  return params_.h[k] / params_.g[k];
}

bool ChannelInstance::has_interference() const {
  for (double gk : params_.g) {
    if (gk > 0.0) return true;
  }
  return false;
}

PowerSplit::PowerSplit(std::vector<double> gamma) : gamma_(std::move(gamma)) {
  for (std::size_t k = 0; k < gamma_.size(); ++k) {
    if (!(gamma_[k] >= 0.0 && gamma_[k] <= 1.0)) {
      throw InvalidArgument("gamma[" + std::to_string(k) + "] outside [0, 1]");
    }
  }
}

double baseline_primary_rate(const ChannelInstance& ch) {
  return 0.5 * std::log2(1.0 + ch.primary_signal_power() / ch.sigma_p2());
}

double coherent_amplitude(const ChannelInstance& ch, std::span<const double> gamma) {
  check_dimension(ch, gamma);
  double x = ch.h_p() * std::sqrt(ch.p_p());
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    x += ch.g(k) * gamma[k] * std::sqrt(ch.p(k));
  }
  return x;
}

namespace {

// sigma_p^2 + sum_k g_k^2 (1 - gamma_k^2) P_k
double interference_plus_noise(const ChannelInstance& ch, std::span<const double> gamma) {
  double d = ch.sigma_p2();
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    d += ch.g(k) * ch.g(k) * (1.0 - gamma[k] * gamma[k]) * ch.p(k);
  }
  return d;
}

}  // namespace

double primary_rate(const ChannelInstance& ch, std::span<const double> gamma) {
  const double x = coherent_amplitude(ch, gamma);
  return 0.5 * std::log2(1.0 + x * x / interference_plus_noise(ch, gamma));
}

double feasibility_residual(const ChannelInstance& ch, std::span<const double> gamma) {
  check_dimension(ch, gamma);
  // With a = h_p sqrt(P_p), c = X - a and L the residual leakage,
  // phi = sigma_p^2 c (c + 2a) - a^2 L; the sigma_p^2 a^2 terms cancel exactly.
  const double a = ch.h_p() * std::sqrt(ch.p_p());
  double c = 0.0;
  double leak = 0.0;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    c += ch.g(k) * gamma[k] * std::sqrt(ch.p(k));
    leak += ch.g(k) * ch.g(k) * (1.0 - gamma[k] * gamma[k]) * ch.p(k);
  }
  return ch.sigma_p2() * c * (c + 2.0 * a) - a * a * leak;
}

double residual_scale(const ChannelInstance& ch) {
  double leak = 0.0;
  double amplitude = 0.0;
  for (std::size_t k = 0; k < ch.num_users(); ++k) {
    leak += ch.g(k) * ch.g(k) * ch.p(k);
    amplitude += ch.g(k) * std::sqrt(ch.p(k));
  }
  const double s = ch.primary_signal_power();
  const double scale = std::max(s * leak, ch.sigma_p2() * s);
  if (scale > 0.0) return scale;
  const double fallback = ch.sigma_p2() * amplitude * amplitude;
  return fallback > 0.0 ? fallback : 1.0;
}

double relative_residual(const ChannelInstance& ch, std::span<const double> gamma) {
  return std::abs(feasibility_residual(ch, gamma)) / residual_scale(ch);
}

double sum_rate(const ChannelInstance& ch, std::span<const double> gamma) {
  check_dimension(ch, gamma);
  double own = 0.0;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    own += (1.0 - gamma[k] * gamma[k]) * ch.h(k) * ch.h(k) * ch.p(k);
  }
  return 0.5 * std::log2(1.0 + own / ch.sigma_c2());
}

std::optional<double> solve_feasible_coordinate(const ChannelInstance& ch,
                                                std::span<const double> gamma,
                                                std::size_t k) {
  check_dimension(ch, gamma);
  if (k >= ch.num_users()) {
    throw InvalidArgument("user index " + std::to_string(k) + " out of range");
  }
  if (ch.g(k) == 0.0) {
    throw UndefinedCoordinate("user " + std::to_string(k) + " has g == 0; gamma_k does not enter the constraint");
  }

  const double t = ch.primary_signal_power() / ch.sigma_p2();
  const double x = ch.g(k) * std::sqrt(ch.p(k));
  double b = ch.h_p() * std::sqrt(ch.p_p());
  double rest = ch.sigma_p2() + x * x;
  for (std::size_t j = 0; j < ch.num_users(); ++j) {
    if (j == k) continue;
    b += ch.g(j) * gamma[j] * std::sqrt(ch.p(j));
    rest += ch.g(j) * ch.g(j) * (1.0 - gamma[j] * gamma[j]) * ch.p(j);
  }
  const double a = t * rest;
  const double excess = a - b * b;
  const double disc = b * b + (1.0 + t) * excess;
  if (disc < 0.0) return std::nullopt;

  const double denom = x * (std::sqrt(disc) + b);
  double root = denom > 0.0 ? excess / denom : 0.0;

  // Absorb rounding at the box edges.
  constexpr double kEdge = 1e-12;
  if (root < 0.0 && root > -kEdge) root = 0.0;
  if (root > 1.0 && root < 1.0 + kEdge) root = 1.0;
  if (root < 0.0 || root > 1.0) return std::nullopt;
  return root;
}

}  // namespace cogmac
