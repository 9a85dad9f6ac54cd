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

#ifndef LGCAVITY_CLI_RUN_CONFIG_HPP
#define LGCAVITY_CLI_RUN_CONFIG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lgcavity/analysis.hpp"
#include "lgcavity/fock_oracle.hpp"
#include "lgcavity/lg_engine.hpp"
#include "lgcavity/model.hpp"

namespace lgcavity::cli {

/// Raw run settings as given on the command line or in a JSON config file.
/// Defaults are the sweep-experiment working point: Omega = 1, omega = 0.1,
/// g = 0.075, beta = 10, the xz-diagonal observable, ground-state qubit,
/// and a [0, 4pi] time grid of step pi/200.
struct RunConfig {
  std::string model = "quadratic";        // quadratic | linear
  std::string mode = "paper";             // paper | derived
  std::string provider = "perturbative";  // perturbative | exact | oracle
  double omega_qubit = 1.0;
  double omega_cavity = 0.1;
  double g_re = 0.075;
  double g_im = 0.0;
  std::string beta = "10";  // positive number or "inf"
  std::array<double, 3> obs{0.7071067811865476, 0.0, 0.7071067811865476};
  std::string qubit_init = "ground";  // ground | excited | plus | mixed
  std::array<double, 3> t_grid{0.0, 12.566370614359172, 0.015707963267948967};
  // beta endpoints of the temperature sweep, log-spaced, swept cold to hot.
  double beta_grid_lo = 10.0;
  double beta_grid_hi = 0.8;
  long beta_grid_n = 24;
  double tol = 1e-10;
  long oracle_dim = 0;  // 0 = auto
  double refine_tol = 1e-6;
  std::string out;  // empty = stdout
  std::string fit_target = "lgmin";  // lgmin | tmin
  std::string fit_input;             // minima CSV path for `fit`
  std::vector<double> g_list{0.065, 0.13, 0.26, 0.39, 0.52};
};

/// Field-checked, ready-to-run form of a RunConfig.
struct ResolvedConfig {
  ModelParams params;
  Observable obs;
  QubitState rho_q;
  CorrelatorMode mode = CorrelatorMode::Paper;
  CouplingModel model = CouplingModel::Quadratic;
  VTraceProvider provider;
  std::string provider_name;
  std::vector<double> t_values;
  std::vector<double> inv_beta_grid;  // increasing temperature
  double tol = 1e-10;
  long oracle_dim = 0;
  double refine_tol = 1e-6;
};

/// Validates every field and builds the provider. Any violation throws
/// std::invalid_argument naming the offending field.
ResolvedConfig resolve(const RunConfig& config);

/// Overlays the JSON config file at `path` onto `config`. Unknown keys and
/// type mismatches throw std::invalid_argument.
void apply_config_file(RunConfig& config, const std::string& path);

/// "start:stop:step" for --t-grid.
std::array<double, 3> parse_time_grid_spec(const std::string& spec);

/// "lo:hi:n" for --beta-grid.
std::array<double, 3> parse_beta_grid_spec(const std::string& spec);

/// Serialized form of the resolved inputs, embedded in sidecar metadata.
std::string config_json(const RunConfig& config);

}  // namespace lgcavity::cli

#endif  // LGCAVITY_CLI_RUN_CONFIG_HPP
