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

#ifndef LGCAVITY_LG_ENGINE_HPP
#define LGCAVITY_LG_ENGINE_HPP

#include <functional>

#include "lgcavity/model.hpp"
#include "lgcavity/vtrace.hpp"

namespace lgcavity {

/// Convention used for the two-time correlator <A_0 A_1>.
///
/// `Paper` keeps only the sigma_+ cross term under a symmetric 2 Re{...}
/// collapse, reproducing the printed formula behind the published figures.
/// `Derived` evaluates the full expansion, retaining the independent
/// sigma_- cross term; it is the form validated against the Fock oracle.
/// The two coincide only when Tr[sigma_- A rho_Q] is the conjugate of
/// Tr[sigma_+ A rho_Q], which fails already for the ground state.
enum class CorrelatorMode { Paper, Derived };

/// Pluggable photon-trace source: (params, T, tol) -> VTrace.
/// Implementations must be reentrant and return exactly 1 at T = 0.
using VTraceProvider =
    std::function<VTrace(const ModelParams&, double, double)>;

/// The four two-time LG quantities at one time separation plus the three
/// ingredients they are assembled from:
///   LG_{s0,s1} = 1 + s0 <A_0> + s1 <A_1> + s0 s1 <A_0 A_1>  >= 0.
/// The four values always sum to 4.
struct LGQuad {
  double lg_pp = 0.0;  ///< LG_{+1,+1}
  double lg_pm = 0.0;  ///< LG_{+1,-1}
  double lg_mp = 0.0;  ///< LG_{-1,+1}
  double lg_mm = 0.0;  ///< LG_{-1,-1}
  double T = 0.0;
  double exp_a0 = 0.0;     ///< <A_0>
  double exp_a1 = 0.0;     ///< <A_1>
  double corr_a0a1 = 0.0;  ///< <A_0 A_1>
};

/// <A_0> = Tr[A rho_Q]; provider-independent by definition.
double expectation_a0(const Observable& obs, const QubitState& rho_q);

/// <A(T)>_0 = 2 Re{ e^{i Omega T} a m_+ v } + a_z m_z.
double expectation_a_t(const Observable& obs, const QubitMoments& moments,
                       const VTrace& v, double omega_qubit, double T);

/// <A(0) A(T) A(0)>_0 = 2 Re{ e^{i Omega T} a d_+ v } + a_z d_z.
/// The 2 Re collapse is exact here: (A sigma_- A)^dag = A sigma_+ A.
double sandwich(const Observable& obs, const QubitMoments& moments,
                const VTrace& v, double omega_qubit, double T);

/// <A_0 A_1> under the chosen convention.
/// Paper:   Re[ 2 Re{ e^{i Omega T} a c_+ v } + a_z c_z ]
/// Derived: Re[ e^{i Omega T} a c_+ v + e^{-i Omega T} a* c_- conj(v)
///              + a_z c_z ]
double corr_two_time(CorrelatorMode mode, const Observable& obs,
                     const QubitMoments& moments, const VTrace& v,
                     double omega_qubit, double T);

/// <A_1> = (1/2) <A(T)>_0 + (1/2) <A(0) A(T) A(0)>_0.
double expectation_a1(const Observable& obs, const QubitMoments& moments,
                      const VTrace& v, double omega_qubit, double T);

/// Joint probability of observing mu at t1 and nu at t0:
///
///   P = 1/4 + (1/4) nu <A(0)> + (1/8) mu <A(T)>
///       + (1/4) mu nu <A_0 A_1> + (1/8) mu <A(0) A(T) A(0)>.
///
/// The leading constant is 1/4, not the 3/8 of the printed expansion:
/// expanding Pi_nu Pi_mu(T) Pi_nu with Pi^2 = Pi forces 1/4, and only
/// with 1/4 do the four probabilities sum to one. The LG quantities are
/// insensitive to the constant. mu, nu must be +-1.
double joint_probability(int mu, int nu, CorrelatorMode mode,
                         const Observable& obs, const QubitMoments& moments,
                         const VTrace& v, double omega_qubit, double T);

/// Assembles all four LG values from a precomputed photon trace.
LGQuad lg_quad_from_trace(CorrelatorMode mode, const Observable& obs,
                          const QubitMoments& moments, const VTrace& v,
                          double omega_qubit, double T);

/// Full evaluation at one time separation; calls the provider exactly once.
LGQuad lg_quad(CorrelatorMode mode, const VTraceProvider& provider,
               const ModelParams& params, const Observable& obs,
               const QubitState& rho_q, double T, double tol);

/// Provider backed by v_trace_quadratic.
VTraceProvider quadratic_provider();

/// Provider backed by v_trace_linear.
VTraceProvider linear_provider();

}  // namespace lgcavity

#endif  // LGCAVITY_LG_ENGINE_HPP
