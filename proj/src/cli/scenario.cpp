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

#include "cogmac/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace cogmac::cli {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ScenarioError("field `" + field + "`: " + what);
}

double number(const json& doc, const std::string& field) {
  if (!doc.is_number()) fail(field, "expected a number");
  return doc.get<double>();
}

std::vector<double> numbers(const json& doc, const std::string& field) {
  if (!doc.is_array()) fail(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.push_back(number(doc[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const json& required(const json& doc, const std::string& field) {
  auto it = doc.find(field);
  if (it == doc.end()) fail(field, "missing");
  return *it;
}

SolverOverrides parse_solver(const json& doc) {
  static const std::set<std::string> known{"lambda_step", "residual_tol", "max_outer_iters",
                                           "bisection_refine", "refine_tol"};
  if (!doc.is_object()) fail("solver", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) fail("solver." + key, "unknown field");
  }
  SolverOverrides s;
  if (doc.contains("lambda_step")) s.lambda_step = number(doc["lambda_step"], "solver.lambda_step");
  if (doc.contains("residual_tol")) s.residual_tol = number(doc["residual_tol"], "solver.residual_tol");
  if (doc.contains("refine_tol")) s.refine_tol = number(doc["refine_tol"], "solver.refine_tol");
  if (doc.contains("max_outer_iters")) {
    const json& v = doc["max_outer_iters"];
    if (!v.is_number_integer()) fail("solver.max_outer_iters", "expected an integer");
    s.max_outer_iters = v.get<std::int64_t>();
  }
  if (doc.contains("bisection_refine")) {
    const json& v = doc["bisection_refine"];
    if (!v.is_boolean()) fail("solver.bisection_refine", "expected true or false");
    s.bisection_refine = v.get<bool>();
  }
  return s;
}

}  // namespace

SolverConfig SolverOverrides::resolve(const ChannelInstance& ch) const {
  SolverConfig cfg = SolverConfig::defaults_for(ch);
  if (lambda_step) {
    cfg.lambda_step = *lambda_step;
    cfg.refine_tol = 1e-12 * *lambda_step;
    if (*lambda_step > 0.0 && !max_outer_iters) {
      // Keep the same multiplier range reachable with the new step.
      const SolverConfig base = SolverConfig::defaults_for(ch);
      const double reach = base.lambda_step * static_cast<double>(base.max_outer_iters);
      cfg.max_outer_iters = static_cast<std::int64_t>(std::min(2e9, std::ceil(reach / *lambda_step) + 1000.0));
    }
  }
  if (residual_tol) cfg.residual_tol = *residual_tol;
  if (max_outer_iters) cfg.max_outer_iters = *max_outer_iters;
  if (bisection_refine) cfg.bisection_refine = *bisection_refine;
  if (refine_tol) cfg.refine_tol = *refine_tol;
  try {
    cfg.validate();
  } catch (const InvalidArgument& e) {
    throw ScenarioError(std::string("solver: ") + e.what());
  }
  return cfg;
}

Scenario parse_scenario(const json& doc) {
  static const std::set<std::string> known{"name", "num_users", "h",        "g",        "p", "h_p",
                                           "p_p",  "sigma_p2",  "sigma_c2", "f",        "solver"};
  if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) fail(key, "unknown field");
  }

  ChannelInstance::Params p;
  p.h = numbers(required(doc, "h"), "h");
  p.g = numbers(required(doc, "g"), "g");
  p.p = numbers(required(doc, "p"), "p");
  p.h_p = number(required(doc, "h_p"), "h_p");
  p.p_p = number(required(doc, "p_p"), "p_p");
  p.sigma_p2 = number(required(doc, "sigma_p2"), "sigma_p2");
  p.sigma_c2 = number(required(doc, "sigma_c2"), "sigma_c2");
  if (doc.contains("f")) p.f = number(doc["f"], "f");

  if (doc.contains("num_users")) {
    const json& v = doc["num_users"];
    if (!v.is_number_unsigned() || v.get<std::size_t>() != p.h.size()) {
      fail("num_users", "must equal the length of h");
    }
  }

  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "expected a string");
    name = doc["name"].get<std::string>();
  }

  try {
    ChannelInstance channel(std::move(p));
    SolverOverrides solver;
    if (doc.contains("solver")) solver = parse_solver(doc["solver"]);
    solver.resolve(channel);
    return Scenario{std::move(name), std::move(channel), solver};
  } catch (const ScenarioError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ScenarioError(e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError("scenario file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_scenario(doc);
}

json scenario_to_json(const Scenario& scenario, const SolverConfig& cfg) {
  const auto& p = scenario.channel.params();
  json doc;
  if (scenario.name) doc["name"] = *scenario.name;
  doc["num_users"] = scenario.channel.num_users();
  doc["h"] = p.h;
  doc["g"] = p.g;
  doc["p"] = p.p;
  doc["h_p"] = p.h_p;
  doc["p_p"] = p.p_p;
  doc["sigma_p2"] = p.sigma_p2;
  doc["sigma_c2"] = p.sigma_c2;
  doc["f"] = p.f;
  doc["solver"] = {
      {"lambda_step", cfg.lambda_step},
      {"residual_tol", cfg.residual_tol},
      {"max_outer_iters", cfg.max_outer_iters},
      {"bisection_refine", cfg.bisection_refine},
      {"refine_tol", cfg.refine_tol},
  };
  return doc;
}

}  // namespace cogmac::cli
