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

#include "testing/instances.hpp"

#include <cmath>

namespace cogmac::testing {

ChannelInstance make_instance(std::vector<double> h, std::vector<double> g, std::vector<double> p,
                              double h_p, double p_p, double sigma_p2, double sigma_c2) {
  ChannelInstance::Params params;
  params.h = std::move(h);
  params.g = std::move(g);
  params.p = std::move(p);
  params.h_p = h_p;
  params.p_p = p_p;
  params.sigma_p2 = sigma_p2;
  params.sigma_c2 = sigma_c2;
  return ChannelInstance(std::move(params));
}

ChannelInstance unit_instance() { return make_instance({1.0}, {1.0}, {1.0}, 1.0, 1.0, 1.0, 1.0); }

ChannelInstance two_user_instance() {
  return make_instance({1.0, 0.8}, {0.4, 0.2}, {5.0, 5.0}, 1.0, 10.0, 1.0, 1.0);
}

ChannelInstance no_interference_instance() {
  return make_instance({1.0, 0.8}, {0.0, 0.0}, {5.0, 5.0}, 1.0, 10.0, 1.0, 1.0);
}

double unit_gamma() { return (std::sqrt(3.0) - 1.0) / 2.0; }

double bisect(const std::function<double(double)>& f, double lo, double hi, int iterations) {
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double bisect_coordinate(const ChannelInstance& ch, std::vector<double> gamma, std::size_t k) {
  auto phi = [&](double v) {
    gamma[k] = v;
    const double x = ch.h_p() * std::sqrt(ch.p_p()) + [&] {
      double s = 0.0;
      for (std::size_t j = 0; j < gamma.size(); ++j) s += ch.g(j) * gamma[j] * std::sqrt(ch.p(j));
      return s;
    }();
    double d = ch.sigma_p2();
    for (std::size_t j = 0; j < gamma.size(); ++j) d += ch.g(j) * ch.g(j) * (1.0 - gamma[j] * gamma[j]) * ch.p(j);
    return ch.sigma_p2() * x * x - ch.h_p() * ch.h_p() * ch.p_p() * d;
  };
  if (phi(0.0) > 0.0 || phi(1.0) < 0.0) return -1.0;
  return bisect(phi, 0.0, 1.0);
}

std::filesystem::path scenario_path(const std::string& name) {
  return std::filesystem::path(COGMAC_SCENARIO_DIR) / name;
}

}  // namespace cogmac::testing
