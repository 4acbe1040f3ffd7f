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
// Scenario files: one JSON document per experiment.
//
//   {
//     "name": "two-user",                 optional
//     "h": [1.0, 0.8], "g": [0.4, 0.2], "p": [5, 5],
//     "h_p": 1.0, "p_p": 10.0, "sigma_p2": 1.0, "sigma_c2": 1.0, "f": 0.3,
//     "num_users": 2,                     optional, must match len(h)
//     "solver": { "lambda_step": ..., "residual_tol": ..., "max_outer_iters": ...,
//                 "bisection_refine": true, "refine_tol": ... }   optional
//   }
//
// Unknown keys are rejected. "f" defaults to 0 when absent.

#ifndef COGMAC_CLI_SCENARIO_HPP
#define COGMAC_CLI_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cogmac/channel_model.hpp"
#include "cogmac/sumrate_solver.hpp"

namespace cogmac::cli {

/// Malformed scenario; what() names the offending field.
class ScenarioError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct SolverOverrides {
  std::optional<double> lambda_step;
  std::optional<double> residual_tol;
  std::optional<std::int64_t> max_outer_iters;
  std::optional<bool> bisection_refine;
  std::optional<double> refine_tol;

  /// Instance defaults with every present override applied. If only
  /// lambda_step is overridden, refine_tol follows it.
  SolverConfig resolve(const ChannelInstance& ch) const;
};

struct Scenario {
  std::optional<std::string> name;
  ChannelInstance channel;
  SolverOverrides solver;
};

Scenario parse_scenario(const nlohmann::ordered_json& doc);
Scenario load_scenario(const std::filesystem::path& path);

/// Scenario document with the effective solver configuration filled in.
/// Channel values are written at full precision so the echo re-parses to an
/// identical instance.
nlohmann::ordered_json scenario_to_json(const Scenario& scenario, const SolverConfig& cfg);

}  // namespace cogmac::cli

#endif  // COGMAC_CLI_SCENARIO_HPP
