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
// Capacity region: per-split MAC polytopes, sampling of the feasible set and
// the two-user convex hull of their union.

#ifndef COGMAC_REGION_HPP
#define COGMAC_REGION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cogmac/channel_model.hpp"

namespace cogmac {

inline constexpr std::size_t kMaxPolytopeUsers = 10;

/// Sum-rate bounds c_T for every nonempty user subset T at a fixed split.
/// Subsets are bitmasks: bit k set means user k is in T.
class RatePolytope {
 public:
  RatePolytope(PowerSplit gamma, std::vector<double> bounds);

  std::size_t num_users() const { return gamma_.size(); }
  const PowerSplit& gamma() const { return gamma_; }
  /// c_T for mask in [1, 2^K).
  double bound(std::uint32_t mask) const;
  const std::vector<double>& bounds() const { return bounds_; }

 private:
  PowerSplit gamma_;
  std::vector<double> bounds_;  // indexed by mask, entry 0 is 0
};

struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;
  bool operator==(const RatePoint&) const = default;
};

/// Counterclockwise hull of the two-user region, starting at the origin.
struct RegionBoundary {
  std::vector<RatePoint> points;
  std::size_t samples_used = 0;
  double gamma_grid_step = 0.0;
};

/// c_T = 1/2 log2(1 + sum_{k in T} h_k^2 (1 - gamma_k^2) P_k / sigma_c^2).
/// Throws UnsupportedSize for K > kMaxPolytopeUsers.
RatePolytope polytope_for_gamma(const ChannelInstance& ch, const PowerSplit& gamma);

/// (0,0), (c1,0), (c1, c12-c1), (c12-c2, c2), (0,c2) with coincident vertices
/// collapsed. Throws UnsupportedSize unless K == 2.
std::vector<RatePoint> pentagon_vertices(const RatePolytope& poly);

/// Points of the feasible set on a uniform grid of the free coordinates.
///
/// K = 1: the single root. K = 2: each coordinate in turn is gridded over
/// {0, step, ..., 1} and the other solved for. K = 3: two coordinates
/// gridded, the third solved. Without interference every grid point is
/// feasible and the full grid is returned. Output is deduplicated and sorted
/// lexicographically. Throws UnsupportedSize for K > 3.
std::vector<PowerSplit> sample_feasible_set(const ChannelInstance& ch, double grid_step);

/// Number of grid intervals for a step: ceil(1 / step) with a small slack,
/// so that halving a step of the form 1/n doubles the count exactly.
std::size_t grid_intervals(double grid_step);

/// Andrew's monotone chain; counterclockwise, collinear points dropped.
std::vector<RatePoint> convex_hull(std::vector<RatePoint> points);

/// Hull of the union of pentagons over the sampled feasible set.
/// Throws UnsupportedSize unless K == 2.
RegionBoundary region_boundary(const ChannelInstance& ch, double grid_step);

/// True if p lies inside or on the counterclockwise hull, with slack tol.
bool hull_contains(const std::vector<RatePoint>& hull, RatePoint p, double tol);

}  // namespace cogmac

#endif  // COGMAC_REGION_HPP
