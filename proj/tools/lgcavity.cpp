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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/run_config.hpp"
#include "lgcavity/version.hpp"

namespace {

using lgcavity::cli::RunConfig;

/// Command-line values; only fields the user actually set are overlaid on
/// top of the config file and the built-in defaults.
struct Overrides {
  std::optional<std::string> model, mode, provider, beta, qubit_init;
  std::optional<std::string> t_grid, beta_grid, out, fit_target;
  std::optional<double> omega_qubit, omega_cavity, g, tol, refine_tol;
  std::optional<long> oracle_dim;
  std::vector<double> obs;
  std::vector<double> g_list;
  std::string config_path;
  std::string fit_input;
};

void add_common_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path,
                  "JSON config file (flags override its values)");
  cmd->add_option("--model", o.model, "quadratic | linear");
  cmd->add_option("--mode", o.mode, "paper | derived");
  cmd->add_option("--provider", o.provider, "perturbative | exact | oracle");
  cmd->add_option("--omega-qubit", o.omega_qubit, "qubit splitting Omega");
  cmd->add_option("--omega-cavity", o.omega_cavity, "cavity frequency omega");
  cmd->add_option("--g", o.g, "coupling constant (real)");
  cmd->add_option("--beta", o.beta, "inverse temperature, or 'inf'");
  cmd->add_option("--obs", o.obs, "observable components ax,ay,az")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--qubit-init", o.qubit_init,
                  "ground | excited | plus | mixed");
  cmd->add_option("--t-grid", o.t_grid, "time grid start:stop:step");
  cmd->add_option("--beta-grid", o.beta_grid,
                  "log-spaced beta sweep lo:hi:n (swept cold to hot)");
  cmd->add_option("--tol", o.tol, "thermal-sum tolerance");
  cmd->add_option("--oracle-dim", o.oracle_dim, "Fock levels (0 = auto)");
  cmd->add_option("--refine-tol", o.refine_tol,
                  "golden-section bracket width for minima");
  cmd->add_option("--out", o.out,
                  "output path (default stdout; adds a .meta.json sidecar)");
}

RunConfig assemble(const Overrides& o) {
  RunConfig config;
  if (!o.config_path.empty()) {
    lgcavity::cli::apply_config_file(config, o.config_path);
  }
  if (o.model) config.model = *o.model;
  if (o.mode) config.mode = *o.mode;
  if (o.provider) config.provider = *o.provider;
  if (o.omega_qubit) config.omega_qubit = *o.omega_qubit;
  if (o.omega_cavity) config.omega_cavity = *o.omega_cavity;
  if (o.g) {
    config.g_re = *o.g;
    config.g_im = 0.0;
  }
  if (o.beta) config.beta = *o.beta;
  if (!o.obs.empty()) {
    config.obs = {o.obs[0], o.obs[1], o.obs[2]};
  }
  if (o.qubit_init) config.qubit_init = *o.qubit_init;
  if (o.t_grid) config.t_grid = lgcavity::cli::parse_time_grid_spec(*o.t_grid);
  if (o.beta_grid) {
    const auto spec = lgcavity::cli::parse_beta_grid_spec(*o.beta_grid);
    config.beta_grid_lo = spec[0];
    config.beta_grid_hi = spec[1];
    config.beta_grid_n = long(spec[2]);
  }
  if (o.tol) config.tol = *o.tol;
  if (o.oracle_dim) config.oracle_dim = *o.oracle_dim;
  if (o.refine_tol) config.refine_tol = *o.refine_tol;
  if (o.out) config.out = *o.out;
  if (o.fit_target) config.fit_target = *o.fit_target;
  if (!o.fit_input.empty()) config.fit_input = o.fit_input;
  if (!o.g_list.empty()) config.g_list = o.g_list;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-time Leggett-Garg inequality toolkit for a qubit coupled to a "
      "thermal cavity mode"};
  app.set_version_flag("--version", lgcavity::kVersion);
  app.require_subcommand(1);

  Overrides o;
  CLI::App* scan = app.add_subcommand(
      "scan", "LG quantities over a time grid (CSV)");
  add_common_options(scan, o);

  CLI::App* minima = app.add_subcommand(
      "minima", "first violating minimum per temperature (CSV)");
  add_common_options(minima, o);

  CLI::App* fit = app.add_subcommand(
      "fit", "power-law fit of a minima CSV (JSON)");
  fit->add_option("input", o.fit_input, "minima CSV file")->required();
  fit->add_option("--target", o.fit_target, "lgmin | tmin");
  fit->add_option("--out", o.out, "output path (default stdout)");
  fit->add_option("--config", o.config_path, "JSON config file");

  CLI::App* sweep_g = app.add_subcommand(
      "sweep-g", "temperature power-law exponents per coupling (CSV)");
  add_common_options(sweep_g, o);
  sweep_g->add_option("--g-list", o.g_list,
                      "comma-separated coupling values")
      ->delimiter(',');

  CLI::App* oracle_check = app.add_subcommand(
      "oracle-check", "validation against the dense Fock oracle (JSON)");
  add_common_options(oracle_check, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lgcavity::cli::kExitConfigError;
  }

  RunConfig config;
  try {
    config = assemble(o);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return lgcavity::cli::kExitConfigError;
  }

  if (scan->parsed()) {
    return lgcavity::cli::cmd_scan(config, std::cout, std::cerr);
  }
  if (minima->parsed()) {
    return lgcavity::cli::cmd_minima(config, std::cout, std::cerr);
  }
  if (fit->parsed()) {
    return lgcavity::cli::cmd_fit(config, std::cout, std::cerr);
  }
  if (sweep_g->parsed()) {
    return lgcavity::cli::cmd_sweep_g(config, std::cout, std::cerr);
  }
  if (oracle_check->parsed()) {
    return lgcavity::cli::cmd_oracle_check(config, std::cout, std::cerr);
  }
  return lgcavity::cli::kExitConfigError;
}
