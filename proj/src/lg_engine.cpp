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

#include "lgcavity/lg_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "lgcavity/exact_linear.hpp"
#include "lgcavity/pert_propagator.hpp"

namespace lgcavity {

namespace {

Complex rotation(double omega_qubit, double T) {
  return std::polar(1.0, omega_qubit * T);
}

}  // namespace

double expectation_a0(const Observable& obs, const QubitState& rho_q) {
  rho_q.validate();
  return (observable_matrix(obs) * rho_q.rho).trace().real();
}

double expectation_a_t(const Observable& obs, const QubitMoments& moments,
                       const VTrace& v, double omega_qubit, double T) {
  const Complex cross = rotation(omega_qubit, T) * obs.a * moments.m_plus *
                        v.value;
  return 2.0 * cross.real() + obs.a_z * moments.m_z.real();
}

double sandwich(const Observable& obs, const QubitMoments& moments,
                const VTrace& v, double omega_qubit, double T) {
  const Complex cross = rotation(omega_qubit, T) * obs.a * moments.d_plus *
                        v.value;
  return 2.0 * cross.real() + obs.a_z * moments.d_z.real();
}

double corr_two_time(CorrelatorMode mode, const Observable& obs,
                     const QubitMoments& moments, const VTrace& v,
                     double omega_qubit, double T) {
  const Complex phase = rotation(omega_qubit, T);
  switch (mode) {
    case CorrelatorMode::Paper: {
      const Complex cross = phase * obs.a * moments.c_plus * v.value;
      return 2.0 * cross.real() + obs.a_z * moments.c_z.real();
    }
    case CorrelatorMode::Derived: {
      const Complex full = phase * obs.a * moments.c_plus * v.value +
                           std::conj(phase) * std::conj(obs.a) *
                               moments.c_minus * std::conj(v.value) +
                           obs.a_z * moments.c_z;
      return full.real();
    }
  }
  throw std::invalid_argument("unknown correlator mode");
}

double expectation_a1(const Observable& obs, const QubitMoments& moments,
                      const VTrace& v, double omega_qubit, double T) {
  return 0.5 * expectation_a_t(obs, moments, v, omega_qubit, T) +
         0.5 * sandwich(obs, moments, v, omega_qubit, T);
}

double joint_probability(int mu, int nu, CorrelatorMode mode,
                         const Observable& obs, const QubitMoments& moments,
                         const VTrace& v, double omega_qubit, double T) {
  if ((mu != 1 && mu != -1) || (nu != 1 && nu != -1)) {
    throw std::invalid_argument("measurement outcomes must be +1 or -1");
  }
  const double a0 = 2.0 * (obs.a * moments.m_plus).real() +
                    obs.a_z * moments.m_z.real();
  const double a_t = expectation_a_t(obs, moments, v, omega_qubit, T);
  const double corr = corr_two_time(mode, obs, moments, v, omega_qubit, T);
  const double sand = sandwich(obs, moments, v, omega_qubit, T);
  return 0.25 + 0.25 * nu * a0 + 0.125 * mu * a_t + 0.25 * mu * nu * corr +
         0.125 * mu * sand;
}

LGQuad lg_quad_from_trace(CorrelatorMode mode, const Observable& obs,
                          const QubitMoments& moments, const VTrace& v,
                          double omega_qubit, double T) {
  // <A_0> from the state moments alone; identical to Tr[A rho_Q].
  const double a0 = 2.0 * (obs.a * moments.m_plus).real() +
                    obs.a_z * moments.m_z.real();
  const double a1 = expectation_a1(obs, moments, v, omega_qubit, T);
  const double corr = corr_two_time(mode, obs, moments, v, omega_qubit, T);

  LGQuad q;
  q.T = T;
  q.exp_a0 = a0;
  q.exp_a1 = a1;
  q.corr_a0a1 = corr;
  q.lg_pp = 1.0 + a0 + a1 + corr;
  q.lg_pm = 1.0 + a0 - a1 - corr;
  q.lg_mp = 1.0 - a0 + a1 - corr;
  q.lg_mm = 1.0 - a0 - a1 + corr;
  return q;
}

LGQuad lg_quad(CorrelatorMode mode, const VTraceProvider& provider,
               const ModelParams& params, const Observable& obs,
               const QubitState& rho_q, double T, double tol) {
  params.validate();
  obs.validate();
  const QubitMoments moments = qubit_moments(obs, rho_q);
  const VTrace v = provider(params, T, tol);
  return lg_quad_from_trace(mode, obs, moments, v, params.omega_qubit, T);
}

VTraceProvider quadratic_provider() {
  return [](const ModelParams& params, double T, double tol) {
    return v_trace_quadratic(params, T, tol);
  };
}

VTraceProvider linear_provider() {
  return [](const ModelParams& params, double T, double tol) {
    return v_trace_linear(params, T, tol);
  };
}

}  // namespace lgcavity
