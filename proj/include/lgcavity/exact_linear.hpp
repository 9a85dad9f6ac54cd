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

#ifndef LGCAVITY_EXACT_LINEAR_HPP
#define LGCAVITY_EXACT_LINEAR_HPP

#include "lgcavity/model.hpp"
#include "lgcavity/vtrace.hpp"

namespace lgcavity {

/// Phase quantities of the exactly solvable linear-coupling model:
/// t_tilde = T omega and g_tilde = (T/t_tilde)(exp(i t_tilde) - 1) g,
/// with the g_tilde -> i T g limit at t_tilde -> 0.
struct LinearPhase {
  Complex g_tilde = 0.0;
  double t_tilde = 0.0;
  double T = 0.0;
};

LinearPhase linear_phase(const ModelParams& params, double T);

/// Laguerre polynomial L_m(x) by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}, forward-stable for x >= 0.
double laguerre(long m, double x);

/// Diagonal matrix element <m| V'(t1,t0) |m> of the linear model:
/// exp(-2|g_tilde|^2) L_m(4|g_tilde|^2). Equals the Kummer form
/// exp(+2|g_tilde|^2) 1F1(1+m; 1; -4|g_tilde|^2) via
/// 1F1(a;b;z) = e^z 1F1(b-a;b;-z). Always real.
double matrix_element_linear(long m, const ModelParams& params, double T);

/// Thermal trace of the exact linear propagator; same sum and truncation
/// structure as v_trace_quadratic with the quadratic matrix element
/// replaced by the Laguerre one. model_tag = LinearExact.
VTrace v_trace_linear(const ModelParams& params, double T, double tol);

/// Closed-form LG_{1,-1} of the linear model at zero temperature for the
/// xz-diagonal observable:
///
///   (1/4) { 2 - sqrt(2)
///           + sqrt(2) cos(T Omega) exp[4|g|^2 (cos(T omega) - 1)/omega^2] }
///
/// The observable argument must be xz_diagonal (a_x = a_z = 1/sqrt(2),
/// a_y = 0) within 1e-12; the formula hard-codes those components.
double lg_closed_form_zero_temperature(const ModelParams& params,
                                       const Observable& obs, double T);

}  // namespace lgcavity

#endif  // LGCAVITY_EXACT_LINEAR_HPP
