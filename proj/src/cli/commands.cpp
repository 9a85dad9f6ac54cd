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

#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cli/table_io.hpp"
#include "lgcavity/errors.hpp"
#include "lgcavity/exact_linear.hpp"
#include "lgcavity/pert_propagator.hpp"
#include "lgcavity/version.hpp"

namespace lgcavity::cli {

namespace {

using nlohmann::json;

void write_sidecar(const RunConfig& config, const std::string& command) {
  json meta;
  meta["command"] = command;
  meta["version"] = kVersion;
  meta["config"] = json::parse(config_json(config));
  std::ofstream sidecar(config.out + ".meta.json");
  if (!sidecar) {
    throw std::invalid_argument("out: cannot write '" + config.out +
                                ".meta.json'");
  }
  sidecar << meta.dump(2) << '\n';
}

/// Data goes to --out when set (plus a .meta.json sidecar), else to the
/// stream handed in by the caller.
void emit(const RunConfig& config, const std::string& command,
          const std::string& data, std::ostream& fallback) {
  if (config.out.empty()) {
    fallback << data;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("out: cannot write '" + config.out + "'");
  }
  file << data;
  write_sidecar(config, command);
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const TruncationError& e) {
    err << "truncation error: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumericalError;
  }
}

VTraceProvider analytic_provider_for(CouplingModel model) {
  return model == CouplingModel::Quadratic ? quadratic_provider()
                                           : linear_provider();
}

}  // namespace

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    const ResolvedConfig r = resolve(config);
    const ScanSeries series = scan(r.mode, r.provider, r.params, r.obs,
                                   r.rho_q, r.t_values, r.tol);

    Table table;
    table.columns = {"T",      "lg_pp",  "lg_pm",     "lg_mp",
                     "lg_mm",  "exp_A0", "exp_A1",    "corr_A0A1",
                     "v_re",   "v_im",   "terms_used"};
    table.rows.reserve(series.t_values.size());
    for (size_t i = 0; i < series.t_values.size(); ++i) {
      const LGQuad& q = series.lg_values[i];
      const VTrace& v = series.v_traces[i];
      table.rows.push_back({q.T, q.lg_pp, q.lg_pm, q.lg_mp, q.lg_mm, q.exp_a0,
                            q.exp_a1, q.corr_a0a1, v.value.real(),
                            v.value.imag(), double(v.terms_used)});
    }

    std::ostringstream data;
    write_csv(data, table);
    emit(config, "scan", data.str(), out);
    return kExitOk;
  });
}

int cmd_minima(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    const ResolvedConfig r = resolve(config);
    SweepConfig sweep;
    sweep.mode = r.mode;
    sweep.base = r.params;
    sweep.obs = r.obs;
    sweep.rho_q = r.rho_q;
    sweep.t_grid = r.t_values;
    sweep.tol = r.tol;
    sweep.refine_tol = r.refine_tol;

    const auto records = sweep_temperature(
        r.provider, sweep, r.inv_beta_grid, [&err](double inv_beta) {
          err << "no violation at inv_beta=" << format_double(inv_beta)
              << "; stopping sweep\n";
        });

    Table table;
    table.columns = {"inv_beta", "g", "T_min", "LG_min", "refined"};
    table.rows.reserve(records.size());
    for (const auto& rec : records) {
      table.rows.push_back({rec.temperature, rec.coupling, rec.t_min,
                            rec.lg_min, rec.refined ? 1.0 : 0.0});
    }

    std::ostringstream data;
    write_csv(data, table);
    emit(config, "minima", data.str(), out);
    return kExitOk;
  });
}

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    if (config.fit_input.empty()) {
      throw std::invalid_argument("fit: input CSV path required");
    }
    if (config.fit_target != "lgmin" && config.fit_target != "tmin") {
      throw std::invalid_argument("fit: target must be 'lgmin' or 'tmin'");
    }
    std::ifstream input(config.fit_input);
    if (!input) {
      throw std::invalid_argument("fit: cannot open '" + config.fit_input +
                                  "'");
    }
    const Table table = read_csv(input);
    const long x_col = table.column_index("inv_beta");
    const long lg_col = table.column_index("LG_min");
    const long t_col = table.column_index("T_min");
    if (x_col < 0 || lg_col < 0 || t_col < 0) {
      throw std::invalid_argument(
          "fit: input must have inv_beta, T_min and LG_min columns");
    }

    std::vector<FitPoint> points;
    points.reserve(table.rows.size());
    for (size_t i = 0; i < table.rows.size(); ++i) {
      const auto& row = table.rows[i];
      FitPoint p;
      p.x = row[x_col];
      if (config.fit_target == "lgmin") {
        if (!(row[lg_col] < 0.0)) {
          throw std::invalid_argument(
              "fit: row " + std::to_string(i + 1) +
              " has LG_min >= 0; log(-LG_min) undefined");
        }
        p.y = std::log(-row[lg_col]);
      } else {
        if (!(row[t_col] > 0.0)) {
          throw std::invalid_argument("fit: row " + std::to_string(i + 1) +
                                      " has T_min <= 0");
        }
        p.y = std::log(row[t_col]);
      }
      points.push_back(p);
    }

    const FitResult fit = fit_power_law(points);
    json doc;
    doc["a"] = fit.a;
    doc["b"] = fit.b;
    doc["c"] = fit.c;
    doc["residual_rms"] = fit.residual_rms;
    doc["converged"] = fit.converged;
    doc["n_points"] = fit.n_points;
    emit(config, "fit", doc.dump(2) + "\n", out);
    return fit.converged ? kExitOk : kExitFitNotConverged;
  });
}

int cmd_sweep_g(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  return run_guarded(err, [&]() {
    if (config.g_list.empty()) {
      throw std::invalid_argument("sweep-g: g list must not be empty");
    }
    const ResolvedConfig r = resolve(config);
    SweepConfig sweep;
    sweep.mode = r.mode;
    sweep.base = r.params;
    sweep.obs = r.obs;
    sweep.rho_q = r.rho_q;
    sweep.t_grid = r.t_values;
    sweep.tol = r.tol;
    sweep.refine_tol = r.refine_tol;

    const auto entries = sweep_coupling(
        config.g_list, r.provider, sweep, r.inv_beta_grid,
        [&err](double g, double inv_beta) {
          err << "g=" << format_double(g)
              << ": no violation at inv_beta=" << format_double(inv_beta)
              << "; stopping sweep\n";
        });

    Table table;
    table.columns = {"g",  "b1", "b1_converged", "b2", "b2_converged",
                     "n_records"};
    for (const auto& e : entries) {
      table.rows.push_back({e.g, e.fit_log_neg_lgmin.b,
                            e.fit_log_neg_lgmin.converged ? 1.0 : 0.0,
                            e.fit_log_tmin.b,
                            e.fit_log_tmin.converged ? 1.0 : 0.0,
                            double(e.n_records)});
    }

    std::ostringstream data;
    write_csv(data, table);
    emit(config, "sweep-g", data.str(), out);
    return kExitOk;
  });
}

int cmd_oracle_check(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
  return run_guarded(err, [&]() {
    const ResolvedConfig r = resolve(config);
    const VTraceProvider analytic = analytic_provider_for(r.model);

    ModelParams half = r.params;
    half.coupling *= 0.5;
    const OracleContext ctx(r.params, r.model, r.oracle_dim);
    const OracleContext ctx_half(half, r.model, r.oracle_dim);

    double err_full = 0.0;
    double err_half = 0.0;
    for (const double t : r.t_values) {
      err_full = std::max(err_full,
                          std::abs(analytic(r.params, t, r.tol).value -
                                   ctx.v_trace_value(t)));
      err_half = std::max(
          err_half, std::abs(analytic(half, t, r.tol).value -
                             ctx_half.v_trace_value(t)));
    }
    const double g6_ratio =
        err_half > 0.0 ? err_full / err_half
                       : std::numeric_limits<double>::quiet_NaN();

    const QubitMoments moments = qubit_moments(r.obs, r.rho_q);
    double mode_gap = 0.0;
    for (const double t : r.t_values) {
      const VTrace v = r.provider(r.params, t, r.tol);
      const LGQuad paper = lg_quad_from_trace(
          CorrelatorMode::Paper, r.obs, moments, v, r.params.omega_qubit, t);
      const LGQuad derived = lg_quad_from_trace(
          CorrelatorMode::Derived, r.obs, moments, v, r.params.omega_qubit, t);
      mode_gap = std::max(mode_gap, std::abs(paper.lg_pm - derived.lg_pm));
    }

    // Probability normalization on a thinned grid: the joint-space oracle
    // costs two dense eigendecompositions per point.
    double prob_defect = 0.0;
    const TruncatedSpace space = TruncatedSpace::create(ctx.dim());
    const size_t stride = std::max<size_t>(1, r.t_values.size() / 32);
    for (size_t i = 0; i < r.t_values.size(); i += stride) {
      const double t = r.t_values[i];
      const VTrace v = r.provider(r.params, t, r.tol);
      double engine_sum = 0.0;
      for (const int mu : {+1, -1}) {
        for (const int nu : {+1, -1}) {
          engine_sum += joint_probability(mu, nu, r.mode, r.obs, moments, v,
                                          r.params.omega_qubit, t);
        }
      }
      prob_defect = std::max(prob_defect, std::abs(engine_sum - 1.0));
      const JointProbabilities oracle_probs = joint_probabilities_oracle(
          r.params, r.obs, r.rho_q, t, space, r.model);
      prob_defect = std::max(prob_defect, std::abs(oracle_probs.sum() - 1.0));
    }

    json doc;
    doc["max_vtrace_err"] = err_full;
    doc["g6_ratio"] = g6_ratio;
    doc["prob_norm_err"] = prob_defect;
    doc["mode_discrepancy_max"] = mode_gap;
    emit(config, "oracle-check", doc.dump(2) + "\n", out);
    return kExitOk;
  });
}

}  // namespace lgcavity::cli
