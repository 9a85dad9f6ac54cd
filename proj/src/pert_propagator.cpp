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

#include "lgcavity/pert_propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "lgcavity/math_detail.hpp"
#include "thermal_sum.hpp"

namespace lgcavity {

namespace {

/// Everything matrix elements need that depends only on (params, T).
struct QuadraticContext {
  PhaseFactors pf;
  double kappa_norm_sq;  // |kappa|^2
  double g_abs_sq;
  double omega_plus;
  double omega_minus;
  double s_plus;   // (t~+ - sin t~+)/t~+
  double s_minus;  // (t~- - sin t~-)/t~-

  QuadraticContext(const ModelParams& params, double T)
      : pf(phase_factors(params, T)) {
    const DerivedCouplings d = derived_couplings(params);
    kappa_norm_sq = std::norm(d.kappa);
    g_abs_sq = d.g_abs_sq;
    omega_plus = d.omega_plus;
    omega_minus = d.omega_minus;
    s_plus = detail::x_minus_sin_over_x(pf.t_tilde_plus);
    s_minus = detail::x_minus_sin_over_x(pf.t_tilde_minus);
  }

  // F(n): the product of four commuting pure phases collapsed into one,
  // exp(i [T^2 |k|^2 (s_+ - s_-) f(n) + (h_+ - h_-) T]) with
  // h_pm = omega_pm n +- |g|^2 and f(n) = -2(1+2n).
  Complex level_phase(long n) const {
    const double f_n = -2.0 * (1.0 + 2.0 * double(n));
    const double second_order =
        pf.T * pf.T * kappa_norm_sq * (s_plus - s_minus) * f_n;
    const double free_part =
        ((omega_plus - omega_minus) * double(n) + 2.0 * g_abs_sq) * pf.T;
    return std::polar(1.0, second_order + free_part);
  }

  Complex element(long m) const {
    const double md = double(m);
    const Complex kp = pf.kappa_tilde_plus;
    const Complex km = pf.kappa_tilde_minus;

    const double ladder_sq = md * (md - 1.0) + (md + 1.0) * (md + 2.0);
    const Complex bracket_plus = 1.0 - 0.5 * std::norm(kp) * ladder_sq;
    const Complex bracket_minus = 1.0 - 0.5 * std::norm(km) * ladder_sq;

    Complex value = level_phase(m) * bracket_plus * bracket_minus;
    value -= level_phase(m + 2) * std::conj(kp) * km * (md + 1.0) * (md + 2.0);
    if (m >= 2) {
      value -= level_phase(m - 2) * std::conj(km) * kp * md * (md - 1.0);
    }
    value += 0.25 * level_phase(m + 4) * std::conj(kp) * std::conj(kp) * km *
             km * (md + 1.0) * (md + 2.0) * (md + 3.0) * (md + 4.0);
    if (m >= 4) {
      value += 0.25 * level_phase(m - 4) * std::conj(km) * std::conj(km) * kp *
               kp * md * (md - 1.0) * (md - 2.0) * (md - 3.0);
    }
    return value;
  }
};

}  // namespace

PhaseFactors phase_factors(const ModelParams& params, double T) {
  params.validate();
  if (!(T >= 0.0)) {
    throw std::invalid_argument("time separation must be nonnegative");
  }
  const DerivedCouplings d = derived_couplings(params);

  PhaseFactors pf;
  pf.T = T;
  pf.t_tilde_plus = 2.0 * T * d.omega_plus;
  pf.t_tilde_minus = 2.0 * T * d.omega_minus;
  pf.kappa_tilde_plus =
      T * d.kappa * detail::expi_minus_one_over_x(pf.t_tilde_plus);
  pf.kappa_tilde_minus =
      T * d.kappa * detail::expi_minus_one_over_x(pf.t_tilde_minus);
  return pf;
}

Complex phase_factor(long n, const ModelParams& params, double T) {
  if (n < 0) {
    throw std::invalid_argument("Fock level must be nonnegative");
  }
  return QuadraticContext(params, T).level_phase(n);
}

Complex matrix_element_quadratic(long m, const ModelParams& params, double T) {
  if (m < 0) {
    throw std::invalid_argument("Fock level must be nonnegative");
  }
  return QuadraticContext(params, T).element(m);
}

VTrace v_trace_quadratic(const ModelParams& params, double T, double tol) {
  params.validate();
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (!(T >= 0.0)) {
    throw std::invalid_argument("time separation must be nonnegative");
  }
  // V is the identity at T = 0, and at g = 0 both sector evolutions are the
  // same free rotation, so the trace is exactly 1 in either case.
  if (T == 0.0 || params.coupling == Complex(0.0)) {
    return VTrace{1.0, 1, 0.0, ModelTag::QuadraticPerturbative};
  }

  const QuadraticContext ctx(params, T);
  const double growth = 1.0 + std::norm(ctx.pf.kappa_tilde_plus) +
                        std::norm(ctx.pf.kappa_tilde_minus);
  return detail::thermal_trace_sum(
      params, tol, ModelTag::QuadraticPerturbative, growth,
      [&ctx](long m) { return ctx.element(m); });
}

}  // namespace lgcavity
