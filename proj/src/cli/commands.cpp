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

#include "cogmac/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cogmac/channel_model.hpp"
#include "cogmac/cli/format.hpp"
#include "cogmac/cli/scenario.hpp"
#include "cogmac/oracle.hpp"
#include "cogmac/region.hpp"
#include "cogmac/sumrate_solver.hpp"

namespace cogmac::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kDefaultGridStep = 1e-3;
constexpr double kDefaultKktTol = 1e-6;
constexpr double kDefaultGapTol = 1e-3;
constexpr std::size_t kDefaultSweepSamples = 201;
constexpr double kSweepOvershoot = 1.25;

struct SolveOptions {
  std::string scenario;
  std::string out;
  std::optional<double> lambda_step;
  std::optional<double> tol;
  bool timing = false;
};

struct RegionOptions {
  std::string scenario;
  std::string out;
  double grid_step = kDefaultGridStep;
};

struct SweepOptions {
  std::string scenario;
  std::string out;
  std::optional<double> lambda_max;
  std::size_t samples = kDefaultSweepSamples;
};

struct ValidateOptions {
  std::string scenario;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::size_t count = 50;
  double grid_step = kDefaultGridStep;
  double tol = kDefaultKktTol;
  double gap_tol = kDefaultGapTol;
  std::optional<double> lambda_step;
};

double r12(double v) { return round_significant(v); }

json rounded(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(r12(v));
  return arr;
}

json user_numbers(const std::vector<std::size_t>& users) {
  json arr = json::array();
  for (std::size_t k : users) arr.push_back(k + 1);
  return arr;
}

// Writes `text` to the file at `path`, or to `out` when path is empty.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file '" + path + "'");
  file << text;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json solver_fields(const ChannelInstance& ch, const SolverResult& r) {
  const double baseline = baseline_primary_rate(ch);
  const double achieved = primary_rate(ch, r.gamma_star);
  json doc;
  doc["status"] = std::string(to_string(r.status));
  doc["gamma_star"] = rounded(r.gamma_star.values());
  doc["sum_rate_bits"] = r12(r.sum_rate);
  doc["lambda_star"] = r12(r.lambda_star);
  doc["x_value"] = r12(r.x_value);
  doc["relative_residual"] = r12(r.residual);
  doc["baseline_primary_rate_bits"] = r12(baseline);
  doc["achieved_primary_rate_bits"] = r12(achieved);
  doc["primary_rate_gap_bits"] = r12(achieved - baseline);
  doc["saturated_users"] = user_numbers(r.saturated);
  doc["outer_iterations"] = r.outer_iterations;
  doc["refine_iterations"] = r.refine_iterations;
  doc["active_set_changes"] = r.active_set_changes;
  return doc;
}

int exit_code_for(SolverStatus status) {
  switch (status) {
    case SolverStatus::Converged:
    case SolverStatus::DegenerateNoInterference:
      return kExitOk;
    case SolverStatus::MaxItersExceeded:
    case SolverStatus::ToleranceNotMet:
      return kExitNotConverged;
  }
  return kExitNotConverged;
}

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
  Scenario scenario = load_scenario(opt.scenario);
  if (opt.lambda_step) scenario.solver.lambda_step = opt.lambda_step;
  if (opt.tol) scenario.solver.residual_tol = opt.tol;
  const SolverConfig cfg = scenario.solver.resolve(scenario.channel);

  const auto start = std::chrono::steady_clock::now();
  const SolverResult result = solve_max_sum_rate(scenario.channel, cfg);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  json doc;
  doc["artifact_version"] = kVersion;
  doc["command"] = "solve";
  doc["scenario"] = scenario_to_json(scenario, cfg);
  doc.update(solver_fields(scenario.channel, result));
  if (opt.timing) doc["wall_clock_seconds"] = elapsed.count();
  emit(opt.out, out, dump(doc));
  return exit_code_for(result.status);
}

int cmd_region(const RegionOptions& opt, std::ostream& out, std::ostream& err) {
  const Scenario scenario = load_scenario(opt.scenario);
  const RegionBoundary region = region_boundary(scenario.channel, opt.grid_step);

  std::string csv = "r1_bits,r2_bits\n";
  double best = 0.0;
  for (const RatePoint& p : region.points) {
    csv += format_number(p.r1) + "," + format_number(p.r2) + "\n";
    best = std::max(best, p.r1 + p.r2);
  }
  std::ostringstream summary;
  summary << "vertices: " << region.points.size() << "\n"
          << "samples: " << region.samples_used << "\n"
          << "grid_step: " << format_number(region.gamma_grid_step) << "\n"
          << "max_sum_rate_bits: " << format_number(best) << "\n";

  emit(opt.out, out, csv);
  (opt.out.empty() ? err : out) << summary.str();
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
  const Scenario scenario = load_scenario(opt.scenario);
  const ChannelInstance& ch = scenario.channel;
  const SolverConfig cfg = scenario.solver.resolve(ch);

  double lambda_max = 0.0;
  if (opt.lambda_max) {
    lambda_max = *opt.lambda_max;
  } else {
    const SolverResult r = solve_max_sum_rate(ch, cfg);
    lambda_max = r.status == SolverStatus::Converged && r.lambda_star > 0.0
                     ? kSweepOvershoot * r.lambda_star
                     : 1000.0 * cfg.lambda_step;
  }
  const auto rows = sweep_trajectory(ch, lambda_max, opt.samples);

  std::string csv = "lambda,x";
  for (std::size_t k = 0; k < ch.num_users(); ++k) csv += ",gamma_" + std::to_string(k + 1);
  csv += ",phi,saturated\n";
  for (const ActiveSetState& row : rows) {
    csv += format_number(row.lambda) + "," + format_number(row.x_value);
    for (double v : row.gamma.values()) csv += "," + format_number(v);
    csv += "," + format_number(feasibility_residual(ch, row.gamma)) + ",";
    for (std::size_t i = 0; i < row.saturated.size(); ++i) {
      if (i > 0) csv += ";";
      csv += std::to_string(row.saturated[i] + 1);
    }
    csv += "\n";
  }
  emit(opt.out, out, csv);
  return kExitOk;
}

struct Verdict {
  json doc;
  bool pass = false;
};

Verdict validate_instance(const ChannelInstance& ch, const SolverConfig& cfg, const ValidateOptions& opt) {
  if (ch.num_users() > 3) {
    throw UnsupportedSize("validate supports at most 3 users, got " + std::to_string(ch.num_users()));
  }
  const SolverResult result = solve_max_sum_rate(ch, cfg);
  const OracleResult oracle = grid_search(ch, opt.grid_step);
  const KktReport kkt = kkt_check(ch, result, opt.tol);

  const double gap = result.sum_rate - oracle.best_sum_rate;
  const bool gap_ok = std::abs(gap) <= opt.gap_tol;

  json failures = json::array();
  if (!kkt.status_ok) failures.push_back("status");
  if (!kkt.bounds_ok) failures.push_back("bounds");
  if (!kkt.feasibility_ok) failures.push_back("feasibility");
  if (std::any_of(kkt.users.begin(), kkt.users.end(), [](const UserStationarity& u) { return !u.ok; })) {
    failures.push_back("stationarity");
  }
  if (!gap_ok) failures.push_back("sum_rate_gap");

  json users = json::array();
  for (const UserStationarity& u : kkt.users) {
    users.push_back({{"user", u.user + 1},
                     {"gamma", r12(u.gamma)},
                     {"derivative", r12(u.derivative)},
                     {"scale", r12(u.scale)},
                     {"saturated", u.saturated},
                     {"ok", u.ok}});
  }

  Verdict v;
  v.pass = kkt.pass && gap_ok;
  v.doc["num_users"] = ch.num_users();
  v.doc["solver"] = solver_fields(ch, result);
  v.doc["oracle"] = {{"grid_step", r12(oracle.grid_step)},
                     {"points_evaluated", oracle.points_evaluated},
                     {"best_gamma", rounded(oracle.best_gamma.values())},
                     {"best_sum_rate_bits", r12(oracle.best_sum_rate)}};
  v.doc["sum_rate_gap_bits"] = r12(gap);
  v.doc["gap_tol_bits"] = r12(opt.gap_tol);
  v.doc["kkt"] = {{"tol", r12(opt.tol)},
                  {"relative_residual", r12(kkt.relative_residual)},
                  {"feasibility_ok", kkt.feasibility_ok},
                  {"bounds_ok", kkt.bounds_ok},
                  {"users", users},
                  {"pass", kkt.pass}};
  v.doc["failures"] = failures;
  v.doc["verdict"] = v.pass ? "pass" : "fail";
  return v;
}

int cmd_validate(const ValidateOptions& opt, std::ostream& out) {
  json doc;
  doc["artifact_version"] = kVersion;
  doc["command"] = "validate";
  bool pass = true;

  if (!opt.scenario.empty()) {
    Scenario scenario = load_scenario(opt.scenario);
    if (opt.lambda_step) scenario.solver.lambda_step = opt.lambda_step;
    const SolverConfig cfg = scenario.solver.resolve(scenario.channel);
    doc["scenario"] = scenario_to_json(scenario, cfg);
    Verdict v = validate_instance(scenario.channel, cfg, opt);
    doc.update(v.doc);
    pass = v.pass;
  } else if (opt.seed) {
    const auto suite = random_suite(*opt.seed, opt.count);
    json instances = json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < suite.size(); ++i) {
      SolverConfig cfg = SolverConfig::defaults_for(suite[i]);
      if (opt.lambda_step) cfg = SolverOverrides{opt.lambda_step, {}, {}, {}, {}}.resolve(suite[i]);
      Verdict v = validate_instance(suite[i], cfg, opt);
      json entry;
      entry["index"] = i;
      entry["scenario"] = scenario_to_json(Scenario{{}, suite[i], {}}, cfg);
      entry.update(v.doc);
      instances.push_back(std::move(entry));
      if (v.pass) ++passed;
    }
    doc["suite"] = {{"seed", *opt.seed}, {"count", opt.count}};
    doc["instances"] = std::move(instances);
    doc["passed"] = passed;
    pass = passed == suite.size();
    doc["verdict"] = pass ? "pass" : "fail";
  } else {
    throw InvalidArgument("validate needs --scenario or --seed");
  }
  emit(opt.out, out, dump(doc));
  return pass ? kExitOk : kExitNotConverged;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-rate optimal power splitting for the cognitive multiple-access channel", "cogmac"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Maximum sum-rate power split (JSON report)");
  solve_cmd->add_option("--scenario", solve.scenario, "Scenario JSON file")->required();
  solve_cmd->add_option("--out", solve.out, "Output file (default: standard output)");
  solve_cmd->add_option("--lambda-step", solve.lambda_step, "Multiplier sweep step");
  solve_cmd->add_option("--tol", solve.tol, "Relative feasibility tolerance");
  solve_cmd->add_flag("--timing", solve.timing, "Include wall-clock duration in the report");

  RegionOptions region;
  auto* region_cmd = app.add_subcommand("region", "Two-user capacity region hull (CSV)");
  region_cmd->add_option("--scenario", region.scenario, "Scenario JSON file")->required();
  region_cmd->add_option("--grid-step", region.grid_step, "Grid step of the sampled coordinate");
  region_cmd->add_option("--out", region.out, "CSV output file (default: standard output)");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Multiplier trajectory (CSV)");
  sweep_cmd->add_option("--scenario", sweep.scenario, "Scenario JSON file")->required();
  sweep_cmd->add_option("--lambda-max", sweep.lambda_max, "Largest multiplier (default: 1.25 x optimum)");
  sweep_cmd->add_option("--samples", sweep.samples, "Number of rows")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep.out, "CSV output file (default: standard output)");

  ValidateOptions validate;
  auto* validate_cmd = app.add_subcommand("validate", "Cross-check the solver against the oracle (JSON)");
  auto* scenario_opt = validate_cmd->add_option("--scenario", validate.scenario, "Scenario JSON file");
  auto* seed_opt = validate_cmd->add_option("--seed", validate.seed, "Seed of a randomized suite");
  scenario_opt->excludes(seed_opt);
  validate_cmd->add_option("--count", validate.count, "Instances in the randomized suite");
  validate_cmd->add_option("--grid-step", validate.grid_step, "Oracle grid step");
  validate_cmd->add_option("--tol", validate.tol, "Scaled KKT and feasibility tolerance");
  validate_cmd->add_option("--gap-tol", validate.gap_tol, "Allowed sum-rate gap to the oracle (bits)");
  validate_cmd->add_option("--lambda-step", validate.lambda_step, "Multiplier sweep step");
  validate_cmd->add_option("--out", validate.out, "Output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*region_cmd) return cmd_region(region, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*validate_cmd) return cmd_validate(validate, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cogmac::cli
