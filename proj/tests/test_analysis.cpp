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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lgcavity/analysis.hpp"
#include "lgcavity/errors.hpp"
#include "lgcavity/exact_linear.hpp"
#include "lgcavity/pert_propagator.hpp"

using namespace lgcavity;

namespace {

const ModelParams kWorkingPoint{1.0, 0.1, 0.075, 10.0};
const double kPi = M_PI;

SweepConfig default_sweep() {
  SweepConfig cfg;
  cfg.t_grid = make_time_grid(0.0, 4.0 * kPi, kPi / 200.0);
  return cfg;
}

ScanSeries synthetic_series(const std::vector<double>& t,
                            const std::vector<double>& lg_pm) {
  ScanSeries s;
  s.t_values = t;
  s.params = kWorkingPoint;
  s.obs = Observable::xz_diagonal();
  s.lg_values.resize(t.size());
  s.v_traces.resize(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    s.lg_values[i].T = t[i];
    s.lg_values[i].lg_pm = lg_pm[i];
  }
  return s;
}

}  // namespace

TEST_CASE("grid builders") {
  SUBCASE("time grid") {
    const auto grid = make_time_grid(0.0, 1.0, 0.25);
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(make_time_grid(2.0, 2.0, 1.0) == std::vector<double>{2.0});
    CHECK_THROWS_AS(make_time_grid(1.0, 0.5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_time_grid(0.0, 1.0, 0.0), std::invalid_argument);
  }
  SUBCASE("log grid") {
    const auto grid = make_log_grid(0.1, 1.25, 24);
    REQUIRE(grid.size() == 24);
    CHECK(grid.front() == 0.1);
    CHECK(grid.back() == 1.25);
    for (size_t i = 1; i < grid.size(); ++i) {
      CHECK(grid[i] / grid[i - 1] ==
            doctest::Approx(grid[1] / grid[0]).epsilon(1e-12));
    }
    CHECK_THROWS_AS(make_log_grid(0.0, 1.0, 4), std::invalid_argument);
  }
}

TEST_CASE("time scans") {
  const Observable xz = Observable::xz_diagonal();
  const QubitState ground = QubitState::ground();
  SUBCASE("single point at T = 0") {
    const ScanSeries s =
        scan(CorrelatorMode::Paper, quadratic_provider(), kWorkingPoint, xz,
             ground, std::vector<double>{0.0}, 1e-10);
    REQUIRE(s.t_values.size() == 1);
    CHECK(s.lg_values[0].lg_pm == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.v_traces[0].value == Complex(1.0));
  }
  SUBCASE("grid must increase strictly") {
    CHECK_THROWS_AS(scan(CorrelatorMode::Paper, quadratic_provider(),
                         kWorkingPoint, xz, ground,
                         std::vector<double>{0.0, 1.0, 1.0}, 1e-10),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan(CorrelatorMode::Paper, quadratic_provider(),
                         kWorkingPoint, xz, ground, std::vector<double>{},
                         1e-10),
                    std::invalid_argument);
  }
  SUBCASE("working point attains a violation") {
    const auto grid = make_time_grid(0.0, 4.0 * kPi, kPi / 200.0);
    const ScanSeries s = scan(CorrelatorMode::Paper, quadratic_provider(),
                              kWorkingPoint, xz, ground, grid, 1e-10);
    double min_pm = 1.0;
    for (const LGQuad& q : s.lg_values) min_pm = std::min(min_pm, q.lg_pm);
    CHECK(min_pm < 0.0);
  }
  SUBCASE("linear model at beta = 1.5 never violates") {
    ModelParams p = kWorkingPoint;
    p.inv_temperature = 1.5;
    const auto grid = make_time_grid(0.0, 4.0 * kPi, kPi / 200.0);
    const ScanSeries s = scan(CorrelatorMode::Paper, linear_provider(), p, xz,
                              ground, grid, 1e-10);
    double min_pm = 1.0;
    for (const LGQuad& q : s.lg_values) min_pm = std::min(min_pm, q.lg_pm);
    CHECK(min_pm >= 0.0);
  }
  SUBCASE("provider failures carry the offending time") {
    const VTraceProvider flaky = [](const ModelParams& params, double t,
                                    double tol) -> VTrace {
      if (t > 2.0) throw TruncationError("needs a larger space");
      return v_trace_quadratic(params, t, tol);
    };
    try {
      scan(CorrelatorMode::Paper, flaky, kWorkingPoint, xz, ground,
           std::vector<double>{0.0, 1.0, 2.5}, 1e-10);
      FAIL("expected an exception");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find("T=2.5") != std::string::npos);
    }
  }
}

TEST_CASE("first violating minimum") {
  SUBCASE("zero-temperature linear model against the closed form") {
    ModelParams p = kWorkingPoint;
    p.inv_temperature = std::numeric_limits<double>::infinity();
    const Observable xz = Observable::xz_diagonal();
    const auto grid = make_time_grid(0.0, 4.0 * kPi, kPi / 200.0);
    const ScanSeries s = scan(CorrelatorMode::Paper, linear_provider(), p, xz,
                              QubitState::ground(), grid, 1e-10);
    const LgPmFunction lg_pm = make_lg_pm_function(
        CorrelatorMode::Paper, linear_provider(), p, xz,
        QubitState::ground(), 1e-10);
    const auto record = first_violation_minimum(s, lg_pm, 1e-6);
    REQUIRE(record.has_value());
    CHECK(record->refined);
    CHECK(record->temperature == 0.0);
    CHECK(record->coupling == doctest::Approx(0.075));

    // Independent minimization of the closed form near the first dip.
    auto closed = [&](double t) {
      return lg_closed_form_zero_temperature(p, xz, t);
    };
    double lo = 2.8, hi = 3.3;
    for (int i = 0; i < 200; ++i) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (closed(m1) < closed(m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    const double t_star = 0.5 * (lo + hi);
    CHECK(std::abs(record->t_min - t_star) < 2e-6);
    CHECK(record->lg_min == doctest::Approx(closed(t_star)).epsilon(1e-9));
    // the first dip sits near (but not exactly at) T = pi
    CHECK(std::abs(record->t_min - kPi) < 0.08);
    CHECK(record->lg_min < -0.17);
  }
  SUBCASE("series without a dip below zero") {
    const auto none = first_violation_minimum(
        synthetic_series({0.0, 1.0, 2.0, 3.0}, {0.5, 0.2, 0.1, 0.3}), {},
        1e-6);
    CHECK_FALSE(none.has_value());
  }
  SUBCASE("monotone decrease ending negative has no interior minimum") {
    const auto none = first_violation_minimum(
        synthetic_series({0.0, 1.0, 2.0, 3.0}, {0.5, 0.2, -0.1, -0.3}), {},
        1e-6);
    CHECK_FALSE(none.has_value());
  }
  SUBCASE("stable under grid refinement") {
    const Observable xz = Observable::xz_diagonal();
    const QubitState ground = QubitState::ground();
    const LgPmFunction lg_pm =
        make_lg_pm_function(CorrelatorMode::Paper, quadratic_provider(),
                            kWorkingPoint, xz, ground, 1e-10);
    std::optional<MinimumRecord> records[2];
    int idx = 0;
    for (const double step : {kPi / 200.0, kPi / 400.0}) {
      const auto grid = make_time_grid(0.0, 4.0 * kPi, step);
      const ScanSeries s = scan(CorrelatorMode::Paper, quadratic_provider(),
                                kWorkingPoint, xz, ground, grid, 1e-10);
      records[idx++] = first_violation_minimum(s, lg_pm, 1e-6);
    }
    REQUIRE(records[0].has_value());
    REQUIRE(records[1].has_value());
    CHECK(std::abs(records[0]->t_min - records[1]->t_min) <= 1e-6);
    // local-minimum certificate
    CHECK(lg_pm(records[0]->t_min - 1e-6) >= records[0]->lg_min - 1e-12);
    CHECK(lg_pm(records[0]->t_min + 1e-6) >= records[0]->lg_min - 1e-12);
  }
}

TEST_CASE("temperature sweeps") {
  SUBCASE("coupling 0.26 reproduces the published trends") {
    SweepConfig cfg = default_sweep();
    cfg.base.coupling = 0.26;
    const auto grid = make_log_grid(0.1, 1.25, 24);
    std::vector<double> stopped;
    const auto records = sweep_temperature(
        quadratic_provider(), cfg, grid,
        [&stopped](double inv_beta) { stopped.push_back(inv_beta); });
    REQUIRE(records.size() >= 4);
    CHECK(records.size() < grid.size());  // violation dies inside the range
    CHECK(stopped.size() == 1);
    for (size_t i = 1; i < records.size(); ++i) {
      CHECK(-records[i].lg_min < -records[i - 1].lg_min);
      CHECK(records[i].t_min < records[i - 1].t_min);
    }
  }
  SUBCASE("zero-temperature entry reproduces the closed-form record") {
    SweepConfig cfg = default_sweep();
    const auto records = sweep_temperature(linear_provider(), cfg,
                                           std::vector<double>{0.0});
    REQUIRE(records.size() == 1);
    CHECK(records[0].temperature == 0.0);
    CHECK(std::abs(records[0].t_min - kPi) < 0.08);
    CHECK(records[0].lg_min == doctest::Approx(-0.171).epsilon(2e-2));
  }
  SUBCASE("empty grid gives empty records") {
    SweepConfig cfg = default_sweep();
    CHECK(sweep_temperature(quadratic_provider(), cfg, std::vector<double>{})
              .empty());
  }
}

TEST_CASE("power-law fitting") {
  SUBCASE("noise-free recovery") {
    std::vector<FitPoint> pts;
    for (int i = 0; i < 20; ++i) {
      const double x = 0.1 + 0.06 * i;
      pts.push_back({x, 2.0 * std::pow(x, 0.7) - 3.0});
    }
    const FitResult f = fit_power_law(pts);
    CHECK(f.converged);
    CHECK(f.a == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(f.b == doctest::Approx(0.7).epsilon(1e-8));
    CHECK(f.c == doctest::Approx(-3.0).epsilon(1e-8));
    CHECK(f.residual_rms < 1e-10);
    CHECK(f.n_points == 20);
  }
  SUBCASE("noise-free recovery on a decreasing curve") {
    std::vector<FitPoint> pts;
    for (int i = 0; i < 20; ++i) {
      const double x = 0.1 + 0.06 * i;
      pts.push_back({x, -5.0 * std::pow(x, 1.2) - 2.0});
    }
    const FitResult f = fit_power_law(pts);
    CHECK(f.converged);
    CHECK(f.a == doctest::Approx(-5.0).epsilon(1e-8));
    CHECK(f.b == doctest::Approx(1.2).epsilon(1e-8));
    CHECK(f.c == doctest::Approx(-2.0).epsilon(1e-8));
  }
  SUBCASE("exponent survives small additive noise") {
    std::mt19937 rng(41);
    std::normal_distribution<double> noise(0.0, 1e-6);
    std::vector<FitPoint> pts;
    for (int i = 0; i < 30; ++i) {
      const double x = 0.1 + 0.04 * i;
      pts.push_back({x, 2.0 * std::pow(x, 0.7) - 3.0 + noise(rng)});
    }
    const FitResult f = fit_power_law(pts);
    CHECK(f.converged);
    CHECK(std::abs(f.b - 0.7) < 1e-3);
  }
  SUBCASE("degenerate constant data") {
    std::vector<FitPoint> pts = {{0.1, 2.0}, {0.2, 2.0}, {0.4, 2.0},
                                 {0.8, 2.0}, {1.6, 2.0}};
    const FitResult f = fit_power_law(pts);
    CHECK(f.converged);
    CHECK(f.residual_rms < 1e-10);
    // The model is degenerate here; either a ~ 0 or b ~ 0 represents it.
    CHECK((std::abs(f.a) < 1e-6 || std::abs(f.b) < 1e-6));
  }
  SUBCASE("input validation") {
    std::vector<FitPoint> few = {{0.1, 1.0}, {0.2, 2.0}, {0.3, 3.0}};
    CHECK_THROWS_AS(fit_power_law(few), std::invalid_argument);
    std::vector<FitPoint> bad_x = {{0.1, 1.0}, {-0.2, 2.0}, {0.3, 3.0},
                                   {0.4, 1.0}};
    CHECK_THROWS_AS(fit_power_law(bad_x), std::invalid_argument);
  }
  SUBCASE("explicit initialization is honored") {
    std::vector<FitPoint> pts;
    for (int i = 0; i < 12; ++i) {
      const double x = 0.2 + 0.1 * i;
      pts.push_back({x, 4.0 * std::pow(x, -0.5) + 1.0});
    }
    const FitResult f =
        fit_power_law(pts, std::array<double, 3>{3.0, -0.4, 0.5});
    CHECK(f.converged);
    CHECK(f.b == doctest::Approx(-0.5).epsilon(1e-7));
  }
}

TEST_CASE("coupling sweeps") {
  SUBCASE("single coupling gives a single converged entry") {
    SweepConfig cfg = default_sweep();
    const auto entries =
        sweep_coupling(std::vector<double>{0.065}, quadratic_provider(), cfg,
                       make_log_grid(0.1, 1.25, 24));
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].g == 0.065);
    CHECK(entries[0].n_records == 24);
    CHECK(entries[0].fit_log_neg_lgmin.converged);
    CHECK(entries[0].fit_log_tmin.converged);
    CHECK(entries[0].fit_log_neg_lgmin.b > 0.0);
  }
  SUBCASE("tmin exponent has an interior maximum near g = 0.0234") {
    SweepConfig cfg = default_sweep();
    const auto entries = sweep_coupling(
        std::vector<double>{0.0117, 0.0234, 0.0468}, quadratic_provider(),
        cfg, make_log_grid(0.1, 1.25, 24));
    REQUIRE(entries.size() == 3);
    for (const auto& e : entries) CHECK(e.fit_log_tmin.converged);
    CHECK(entries[1].fit_log_tmin.b > entries[0].fit_log_tmin.b);
    CHECK(entries[1].fit_log_tmin.b > entries[2].fit_log_tmin.b);
  }
}
