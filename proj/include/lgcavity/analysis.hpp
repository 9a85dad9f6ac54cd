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

#ifndef LGCAVITY_ANALYSIS_HPP
#define LGCAVITY_ANALYSIS_HPP

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lgcavity/lg_engine.hpp"
#include "lgcavity/model.hpp"

namespace lgcavity {

/// One LG evaluation per grid time, with the photon traces kept for
/// serialization and the run configuration kept for provenance.
struct ScanSeries {
  std::vector<double> t_values;
  std::vector<LGQuad> lg_values;
  std::vector<VTrace> v_traces;
  CorrelatorMode mode = CorrelatorMode::Paper;
  ModelParams params;
  Observable obs;
};

/// Evaluates lg_quad over a strictly increasing time grid. Grid points are
/// evaluated independently (and possibly in parallel); output order matches
/// the grid. Provider failures are rethrown with the offending t attached.
ScanSeries scan(CorrelatorMode mode, const VTraceProvider& provider,
                const ModelParams& params, const Observable& obs,
                const QubitState& rho_q, std::span<const double> t_grid,
                double tol);

/// First local minimum of LG_{1,-1} below zero, refined in time.
struct MinimumRecord {
  double temperature = 0.0;  ///< beta^{-1} (0 at zero temperature)
  double coupling = 0.0;     ///< |g|
  double t_min = 0.0;
  double lg_min = 0.0;
  bool refined = false;
};

/// Scalar LG_{1,-1}(t) evaluator used for minimum refinement.
using LgPmFunction = std::function<double(double)>;

LgPmFunction make_lg_pm_function(CorrelatorMode mode,
                                 const VTraceProvider& provider,
                                 const ModelParams& params,
                                 const Observable& obs,
                                 const QubitState& rho_q, double tol);

/// Finds the first interior grid index i with lg[i] < lg[i-1],
/// lg[i] < lg[i+1] and lg[i] < 0, then refines it by golden-section search
/// on [t_{i-1}, t_{i+1}] down to bracket width refine_tol. Returns nullopt
/// when no such index exists (absence of a violation is a value, not an
/// error). A monotone run ending negative has no interior minimum.
std::optional<MinimumRecord> first_violation_minimum(
    const ScanSeries& series, const LgPmFunction& lg_pm, double refine_tol);

/// Everything a temperature or coupling sweep needs besides its grid.
struct SweepConfig {
  CorrelatorMode mode = CorrelatorMode::Paper;
  ModelParams base;  ///< inv_temperature and coupling overridden per point
  Observable obs = Observable::xz_diagonal();
  QubitState rho_q = QubitState::ground();
  std::vector<double> t_grid;
  double tol = 1e-10;
  double refine_tol = 1e-6;
};

/// One scan plus minimum per inverse temperature, in grid order. The grid
/// is expected ordered by increasing beta^{-1}; the sweep stops at the
/// first entry with no violation (reported through on_no_violation) since
/// the violation only shrinks from there and the fits need log(-lg_min).
std::vector<MinimumRecord> sweep_temperature(
    const VTraceProvider& provider, const SweepConfig& config,
    std::span<const double> inv_beta_grid,
    const std::function<void(double)>& on_no_violation = {});

/// Damped Gauss-Newton fit of y = a x^b + c.
struct FitPoint {
  double x = 0.0;
  double y = 0.0;
};

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double residual_rms = 0.0;
  bool converged = false;
  long n_points = 0;
};

/// Least squares on at least 4 points with x > 0 (fewer throws
/// std::invalid_argument). Levenberg-Marquardt damping with analytic
/// Jacobian; accepted steps never increase the residual; convergence when
/// the relative residual change or the step norm drops below 1e-12, with
/// at most 500 iterations (non-convergence returns best-so-far with
/// converged = false). Without an explicit init, c starts just below
/// min(y), b from the log-log slope of y - c over the upper half of the x
/// range, and a from the last point.
FitResult fit_power_law(std::span<const FitPoint> points,
                        std::optional<std::array<double, 3>> init = {});

/// Exponents of the temperature power laws for one coupling value.
struct CouplingSweepEntry {
  double g = 0.0;
  FitResult fit_log_neg_lgmin;  ///< fit of log(-lg_min) vs beta^{-1}
  FitResult fit_log_tmin;       ///< fit of log(t_min) vs beta^{-1}
  long n_records = 0;
};

/// sweep_temperature plus both fits per coupling value. The supplied grid
/// acts as a probe: when a coupling's violation dies inside it, the fit
/// window is re-spanned to the front 40% of that coupling's violating
/// range (same point count), so every curve is fitted over a comparable
/// stage of its decay instead of its log-divergent extinction tail. Fit
/// failures are recorded (converged = false), never fatal; fewer than 4
/// violating records also yields converged = false entries.
std::vector<CouplingSweepEntry> sweep_coupling(
    std::span<const double> g_grid, const VTraceProvider& provider,
    const SweepConfig& config, std::span<const double> inv_beta_grid,
    const std::function<void(double, double)>& on_no_violation = {});

/// start, start+step, ..., up to stop (inclusive within half a step).
/// start == stop yields the single-point grid {start}.
std::vector<double> make_time_grid(double start, double stop, double step);

/// n log-spaced values from lo to hi inclusive (n >= 2; n = 1 gives {lo}).
std::vector<double> make_log_grid(double lo, double hi, long n);

}  // namespace lgcavity

#endif  // LGCAVITY_ANALYSIS_HPP
