// Copyright 2026 the lgcavity authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lgcavity::cli {

namespace {

using nlohmann::json;

double parse_double_field(const std::string& text, const std::string& field) {
  try {
    size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(field);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(field + ": expected a number, got '" + text +
                                "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream stream(text);
  while (std::getline(stream, current, sep)) parts.push_back(current);
  return parts;
}

double parse_beta_value(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") {
    return std::numeric_limits<double>::infinity();
  }
  const double beta = parse_double_field(text, "beta");
  if (!(beta > 0.0)) {
    throw std::invalid_argument("beta: must be positive or 'inf'");
  }
  return beta;
}

}  // namespace

std::array<double, 3> parse_time_grid_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("t-grid: expected start:stop:step");
  }
  return {parse_double_field(parts[0], "t-grid start"),
          parse_double_field(parts[1], "t-grid stop"),
          parse_double_field(parts[2], "t-grid step")};
}

std::array<double, 3> parse_beta_grid_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("beta-grid: expected lo:hi:n");
  }
  const double n = parse_double_field(parts[2], "beta-grid n");
  if (n < 1.0 || n != std::floor(n)) {
    throw std::invalid_argument("beta-grid: n must be a positive integer");
  }
  const auto endpoint = [](const std::string& text, const std::string& name) {
    if (text == "inf" || text == "Inf" || text == "INF") {
      return std::numeric_limits<double>::infinity();
    }
    return parse_double_field(text, name);
  };
  return {endpoint(parts[0], "beta-grid lo"),
          endpoint(parts[1], "beta-grid hi"), n};
}

ResolvedConfig resolve(const RunConfig& config) {
  ResolvedConfig r;

  if (config.model == "quadratic") {
    r.model = CouplingModel::Quadratic;
  } else if (config.model == "linear") {
    r.model = CouplingModel::Linear;
  } else {
    throw std::invalid_argument("model: must be 'quadratic' or 'linear'");
  }

  if (config.mode == "paper") {
    r.mode = CorrelatorMode::Paper;
  } else if (config.mode == "derived") {
    r.mode = CorrelatorMode::Derived;
  } else {
    throw std::invalid_argument("mode: must be 'paper' or 'derived'");
  }

  r.params.omega_qubit = config.omega_qubit;
  r.params.omega_cavity = config.omega_cavity;
  r.params.coupling = Complex(config.g_re, config.g_im);
  r.params.inv_temperature = parse_beta_value(config.beta);
  try {
    r.params.validate();
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("params: ") + e.what());
  }

  r.obs.a = Complex(config.obs[0], config.obs[1]);
  r.obs.a_z = config.obs[2];
  try {
    r.obs.validate();
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("obs: ") + e.what());
  }

  if (config.qubit_init == "ground") {
    r.rho_q = QubitState::ground();
  } else if (config.qubit_init == "excited") {
    r.rho_q = QubitState::excited();
  } else if (config.qubit_init == "plus") {
    r.rho_q = QubitState::plus_x();
  } else if (config.qubit_init == "mixed") {
    r.rho_q = QubitState::maximally_mixed();
  } else {
    throw std::invalid_argument(
        "qubit-init: must be ground, excited, plus or mixed");
  }

  if (!(config.tol > 0.0)) {
    throw std::invalid_argument("tol: must be positive");
  }
  r.tol = config.tol;
  if (config.oracle_dim != 0 && config.oracle_dim < 2) {
    throw std::invalid_argument("oracle-dim: must be 0 (auto) or >= 2");
  }
  r.oracle_dim = config.oracle_dim;
  if (!(config.refine_tol > 0.0)) {
    throw std::invalid_argument("refine-tol: must be positive");
  }
  r.refine_tol = config.refine_tol;

  r.provider_name = config.provider;
  if (config.provider == "perturbative") {
    if (r.model != CouplingModel::Quadratic) {
      throw std::invalid_argument(
          "provider: the perturbative trace applies to the quadratic model "
          "only");
    }
    r.provider = quadratic_provider();
  } else if (config.provider == "exact") {
    if (r.model != CouplingModel::Linear) {
      throw std::invalid_argument(
          "provider: the exact trace applies to the linear model only");
    }
    r.provider = linear_provider();
  } else if (config.provider == "oracle") {
    r.provider = OracleProvider(r.model, r.oracle_dim);
  } else {
    throw std::invalid_argument(
        "provider: must be perturbative, exact or oracle");
  }

  try {
    r.t_values =
        make_time_grid(config.t_grid[0], config.t_grid[1], config.t_grid[2]);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("t-grid: ") + e.what());
  }

  if (!(config.beta_grid_lo > 0.0) || !(config.beta_grid_hi > 0.0) ||
      config.beta_grid_n < 1) {
    throw std::invalid_argument(
        "beta-grid: endpoints must be positive and n >= 1");
  }
  if (config.beta_grid_n == 1) {
    // Single-temperature sweep; an infinite beta entry means T = 0 exactly.
    r.inv_beta_grid = {std::isinf(config.beta_grid_lo)
                           ? 0.0
                           : 1.0 / config.beta_grid_lo};
    return r;
  }
  if (std::isinf(config.beta_grid_lo) || std::isinf(config.beta_grid_hi)) {
    throw std::invalid_argument(
        "beta-grid: 'inf' endpoints are only valid with n = 1");
  }
  const double beta_cold =
      std::max(config.beta_grid_lo, config.beta_grid_hi);
  const double beta_hot = std::min(config.beta_grid_lo, config.beta_grid_hi);
  // Cold to hot, so records arrive by increasing temperature.
  const auto betas = make_log_grid(beta_cold, beta_hot, config.beta_grid_n);
  r.inv_beta_grid.reserve(betas.size());
  for (const double beta : betas) r.inv_beta_grid.push_back(1.0 / beta);

  return r;
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  json doc;
  try {
    input >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument("config: invalid JSON in '" + path +
                                "': " + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("config: top level must be an object");
  }

  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "model") {
        config.model = value.get<std::string>();
      } else if (key == "mode") {
        config.mode = value.get<std::string>();
      } else if (key == "provider") {
        config.provider = value.get<std::string>();
      } else if (key == "omega_qubit") {
        config.omega_qubit = value.get<double>();
      } else if (key == "omega_cavity") {
        config.omega_cavity = value.get<double>();
      } else if (key == "g") {
        if (value.is_array()) {
          if (value.size() != 2) {
            throw std::invalid_argument("g: expected [re, im]");
          }
          config.g_re = value[0].get<double>();
          config.g_im = value[1].get<double>();
        } else {
          config.g_re = value.get<double>();
          config.g_im = 0.0;
        }
      } else if (key == "beta") {
        config.beta = value.is_string() ? value.get<std::string>()
                                        : json(value).dump();
      } else if (key == "obs") {
        if (!value.is_array() || value.size() != 3) {
          throw std::invalid_argument("obs: expected [ax, ay, az]");
        }
        for (int i = 0; i < 3; ++i) config.obs[i] = value[i].get<double>();
      } else if (key == "qubit_init") {
        config.qubit_init = value.get<std::string>();
      } else if (key == "t_grid") {
        if (!value.is_array() || value.size() != 3) {
          throw std::invalid_argument("t_grid: expected [start, stop, step]");
        }
        for (int i = 0; i < 3; ++i) config.t_grid[i] = value[i].get<double>();
      } else if (key == "beta_grid") {
        if (!value.is_array() || value.size() != 3) {
          throw std::invalid_argument("beta_grid: expected [lo, hi, n]");
        }
        config.beta_grid_lo = value[0].get<double>();
        config.beta_grid_hi = value[1].get<double>();
        config.beta_grid_n = value[2].get<long>();
      } else if (key == "tol") {
        config.tol = value.get<double>();
      } else if (key == "oracle_dim") {
        config.oracle_dim = value.get<long>();
      } else if (key == "refine_tol") {
        config.refine_tol = value.get<double>();
      } else if (key == "out") {
        config.out = value.get<std::string>();
      } else if (key == "fit_target") {
        config.fit_target = value.get<std::string>();
      } else if (key == "g_list") {
        config.g_list = value.get<std::vector<double>>();
      } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

std::string config_json(const RunConfig& config) {
  json doc;
  doc["model"] = config.model;
  doc["mode"] = config.mode;
  doc["provider"] = config.provider;
  doc["omega_qubit"] = config.omega_qubit;
  doc["omega_cavity"] = config.omega_cavity;
  doc["g"] = {config.g_re, config.g_im};
  doc["beta"] = config.beta;
  doc["obs"] = {config.obs[0], config.obs[1], config.obs[2]};
  doc["qubit_init"] = config.qubit_init;
  doc["t_grid"] = {config.t_grid[0], config.t_grid[1], config.t_grid[2]};
  doc["beta_grid"] = {config.beta_grid_lo, config.beta_grid_hi,
                      double(config.beta_grid_n)};
  doc["tol"] = config.tol;
  doc["oracle_dim"] = config.oracle_dim;
  doc["refine_tol"] = config.refine_tol;
  doc["fit_target"] = config.fit_target;
  doc["g_list"] = config.g_list;
  return doc.dump(2);
}

}  // namespace lgcavity::cli
