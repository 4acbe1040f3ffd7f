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
#include <array>
#include <cmath>
#include <string>

namespace cogmac {

namespace {

constexpr double kSampleResidualTol = 1e-9;

double cross(RatePoint o, RatePoint a, RatePoint b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

bool lex_less(RatePoint a, RatePoint b) { return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2); }

double distance_to_segment(RatePoint p, RatePoint a, RatePoint b) {
  const double dx = b.r1 - a.r1;
  const double dy = b.r2 - a.r2;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.r1 - a.r1) * dx + (p.r2 - a.r2) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.r1 - (a.r1 + t * dx), p.r2 - (a.r2 + t * dy));
}

}  // namespace

RatePolytope::RatePolytope(PowerSplit gamma, std::vector<double> bounds)
    : gamma_(std::move(gamma)), bounds_(std::move(bounds)) {
  if (bounds_.size() != (std::size_t{1} << gamma_.size())) {
    throw InvalidArgument("polytope needs one bound per user subset");
  }
}

double RatePolytope::bound(std::uint32_t mask) const {
  if (mask == 0 || mask >= bounds_.size()) {
    throw InvalidArgument("subset mask " + std::to_string(mask) + " out of range");
  }
  return bounds_[mask];
}

RatePolytope polytope_for_gamma(const ChannelInstance& ch, const PowerSplit& gamma) {
  const std::size_t k_users = ch.num_users();
  if (k_users > kMaxPolytopeUsers) {
    throw UnsupportedSize("rate polytope supports at most " + std::to_string(kMaxPolytopeUsers) +
                          " users, got " + std::to_string(k_users));
  }
  if (gamma.size() != k_users) throw InvalidArgument("gamma dimension does not match channel");

  std::vector<double> own(k_users);
  for (std::size_t k = 0; k < k_users; ++k) {
    own[k] = ch.h(k) * ch.h(k) * (1.0 - gamma[k] * gamma[k]) * ch.p(k) / ch.sigma_c2();
  }
  std::vector<double> bounds(std::size_t{1} << k_users, 0.0);
  for (std::uint32_t mask = 1; mask < bounds.size(); ++mask) {
    double snr = 0.0;
    for (std::size_t k = 0; k < k_users; ++k) {
      if (mask & (1u << k)) snr += own[k];
    }
    bounds[mask] = 0.5 * std::log2(1.0 + snr);
  }
  return RatePolytope(gamma, std::move(bounds));
}

std::vector<RatePoint> pentagon_vertices(const RatePolytope& poly) {
  if (poly.num_users() != 2) {
    throw UnsupportedSize("pentagon vertices need exactly 2 users, got " + std::to_string(poly.num_users()));
  }
  const double c1 = poly.bound(0b01);
  const double c2 = poly.bound(0b10);
  const double c12 = poly.bound(0b11);
  const std::array<RatePoint, 5> corners{{
      {0.0, 0.0},
      {c1, 0.0},
      {c1, std::min(c2, c12 - c1)},
      {std::min(c1, c12 - c2), c2},
      {0.0, c2},
  }};
  std::vector<RatePoint> out;
  for (const RatePoint& v : corners) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::size_t grid_intervals(double grid_step) {
  if (!(std::isfinite(grid_step) && grid_step > 0.0)) {
    throw InvalidArgument("grid_step must be positive and finite");
  }
  const double n = std::ceil(1.0 / grid_step - 1e-9);
  if (n > 1e7) throw InvalidArgument("grid_step too small");
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

std::vector<PowerSplit> sample_feasible_set(const ChannelInstance& ch, double grid_step) {
  const std::size_t k_users = ch.num_users();
  if (k_users > 3) {
    throw UnsupportedSize("feasible-set sampling supports at most 3 users, got " + std::to_string(k_users));
  }
  const std::size_t n = grid_intervals(grid_step);
  auto node = [n](std::size_t i) { return static_cast<double>(i) / static_cast<double>(n); };

  std::vector<std::vector<double>> found;
  std::vector<double> gamma(k_users, 0.0);

  if (!ch.has_interference()) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < k_users; ++k) total *= n + 1;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rem = idx;
      for (std::size_t k = k_users; k-- > 0;) {
        gamma[k] = node(rem % (n + 1));
        rem /= n + 1;
      }
      found.push_back(gamma);
    }
    std::vector<PowerSplit> out;
    out.reserve(found.size());
    for (auto& g : found) out.emplace_back(std::move(g));
    return out;
  }

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
        gamma[free[i]] = node(rem % (n + 1));
        rem /= n + 1;
      }
      gamma[solved] = 0.0;
      const auto root = solve_feasible_coordinate(ch, gamma, solved);
      if (!root) continue;
      gamma[solved] = *root;
      if (relative_residual(ch, gamma) <= kSampleResidualTol) found.push_back(gamma);
    }
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<PowerSplit> out;
  out.reserve(found.size());
  for (auto& g : found) out.emplace_back(std::move(g));
  return out;
}

std::vector<RatePoint> convex_hull(std::vector<RatePoint> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;

  std::vector<RatePoint> hull(2 * points.size());
  std::size_t m = 0;
  for (const RatePoint& p : points) {
    while (m >= 2 && cross(hull[m - 2], hull[m - 1], p) <= 0.0) --m;
    hull[m++] = p;
  }
  const std::size_t lower = m + 1;
  for (std::size_t i = points.size() - 1; i-- > 0;) {
    while (m >= lower && cross(hull[m - 2], hull[m - 1], points[i]) <= 0.0) --m;
    hull[m++] = points[i];
  }
  hull.resize(m - 1);
  return hull;
}

bool hull_contains(const std::vector<RatePoint>& hull, RatePoint p, double tol) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return std::hypot(p.r1 - hull[0].r1, p.r2 - hull[0].r2) <= tol;
  if (hull.size() == 2) return distance_to_segment(p, hull[0], hull[1]) <= tol;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RatePoint a = hull[i];
    const RatePoint b = hull[(i + 1) % hull.size()];
    const double len = std::hypot(b.r1 - a.r1, b.r2 - a.r2);
    if (cross(a, b, p) < -tol * len) return false;
  }
  return true;
}

RegionBoundary region_boundary(const ChannelInstance& ch, double grid_step) {
  if (ch.num_users() != 2) {
    throw UnsupportedSize("region boundary needs exactly 2 users, got " + std::to_string(ch.num_users()));
  }
  const std::vector<PowerSplit> samples = sample_feasible_set(ch, grid_step);
  std::vector<RatePoint> cloud{{0.0, 0.0}};
  for (const PowerSplit& gamma : samples) {
    const auto vertices = pentagon_vertices(polytope_for_gamma(ch, gamma));
    cloud.insert(cloud.end(), vertices.begin(), vertices.end());
  }
  RegionBoundary region;
  region.points = convex_hull(std::move(cloud));
  region.samples_used = samples.size();
  region.gamma_grid_step = grid_step;
  return region;
}

}  // namespace cogmac
