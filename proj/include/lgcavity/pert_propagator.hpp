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

#ifndef LGCAVITY_PERT_PROPAGATOR_HPP
#define LGCAVITY_PERT_PROPAGATOR_HPP

#include "lgcavity/model.hpp"
#include "lgcavity/vtrace.hpp"

namespace lgcavity {

/// Dimensionless phase quantities of the second-order propagator at time
/// separation T:
///   t_tilde_pm     = 2 T omega_pm
///   kappa_tilde_pm = (T / t_tilde_pm) (exp(i t_tilde_pm) - 1) kappa
/// The kappa_tilde limits at t_tilde -> 0 are i T kappa.
struct PhaseFactors {
  double t_tilde_plus = 0.0;
  double t_tilde_minus = 0.0;
  Complex kappa_tilde_plus = 0.0;
  Complex kappa_tilde_minus = 0.0;
  double T = 0.0;
};

/// T must be >= 0; negative T throws std::invalid_argument.
PhaseFactors phase_factors(const ModelParams& params, double T);

/// Unit-modulus phase factor F(n) of Fock level n:
///
///   F(n) = exp[+i T^2 |kappa|^2 s_+ f(n)] exp(+i h_+ T) exp(-i h_- T)
///          exp[-i T^2 |kappa|^2 s_- f(n)]
///
/// with s_pm = (t_tilde_pm - sin t_tilde_pm)/t_tilde_pm,
/// h_pm = omega_pm n +- |g|^2 and f(n) = -2(1 + 2n). All factors are pure
/// phases, so |F(n)| = 1 exactly.
Complex phase_factor(long n, const ModelParams& params, double T);

/// Diagonal matrix element <m| V(t1,t0) |m> of the quadratic model to
/// second order in kappa: the F(m) term carries the two
/// {1 - (1/2)|kappa_tilde_pm|^2 [m(m-1) + (m+1)(m+2)]} brackets, the
/// F(m +- 2) cross terms carry -kappa_tilde_+^* kappa_tilde_- (m+1)(m+2)
/// and -kappa_tilde_-^* kappa_tilde_+ m(m-1), and the F(m +- 4) terms carry
/// (1/4) kappa_tilde^*2 kappa_tilde^2 quartic ladder factors. Lowering
/// terms vanish for m below their ladder depth.
Complex matrix_element_quadratic(long m, const ModelParams& params, double T);

/// Thermal trace of the second-order quadratic propagator,
///
///   Tr[V rho_P] = (1 - e^{-beta omega}) sum_m e^{-m beta omega} F_cal(m),
///
/// truncated adaptively: terms accumulate until
/// e^{-m beta omega} (1 + |kt_+|^2 + |kt_-|^2) (m+4)^4 < tol * |partial sum|
/// holds for 8 consecutive m (hard cap 20000 terms, beyond which a
/// ConvergenceError carrying the partial result is thrown). Zero
/// temperature returns the vacuum element with terms_used = 1.
VTrace v_trace_quadratic(const ModelParams& params, double T, double tol);

}  // namespace lgcavity

#endif  // LGCAVITY_PERT_PROPAGATOR_HPP
