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

#ifndef LGCAVITY_FOCK_ORACLE_HPP
#define LGCAVITY_FOCK_ORACLE_HPP

#include <eigen3/Eigen/Dense>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "lgcavity/lg_engine.hpp"
#include "lgcavity/model.hpp"
#include "lgcavity/vtrace.hpp"

namespace lgcavity {

using MatrixXc = Eigen::MatrixXcd;
using VectorXr = Eigen::VectorXd;

/// Dense ladder operators on Fock levels 0..dim-1.
/// a|m> = sqrt(m)|m-1> exactly; [a, a^dag] = I holds on the first dim-1
/// levels (the last one is corrupted by truncation).
struct TruncatedSpace {
  long dim = 0;
  MatrixXc ladder_down;  ///< a
  MatrixXc ladder_up;    ///< a^dag

  static TruncatedSpace create(long dim);
};

/// Bose-Einstein photon state truncated to the space dimension and
/// renormalized to unit trace. Construction requires the truncated
/// probability mass to be below 1e-12.
struct ThermalPhotonState {
  VectorXr weights;  ///< diagonal entries of rho_P
  double beta = 0.0;
  double weight_truncated = 0.0;

  static ThermalPhotonState create(double beta, double omega_cavity, long dim);
};

enum class CouplingModel { Quadratic, Linear };

struct HamiltonianPair {
  MatrixXc plus;   ///< H_+ = omega a^dag a + X (X = coupling term)
  MatrixXc minus;  ///< H_- = omega a^dag a - X
};

/// Sector Hamiltonians: X = (g a^dag + g* a)^2 for the quadratic model,
/// X = g a^dag + g* a for the linear one.
HamiltonianPair hamiltonians(const ModelParams& params,
                             const TruncatedSpace& space, CouplingModel model);

/// exp(+i H t) via Hermitian eigendecomposition. Unitary up to roundoff.
MatrixXc matrix_exp_unitary(const MatrixXc& hermitian, double t);

/// Smallest power of two holding the thermal state below 1e-12 truncated
/// mass with a 1.5x headroom for coupling-induced level mixing, floored
/// at 64 so zero temperature still leaves room for the displaced and
/// squeezed vacuum.
long default_fock_dim(const ModelParams& params);

/// Tr[exp(+i H_+ T) exp(-i H_- T) rho_P] by dense matrix exponentials.
VTrace v_trace_oracle(const ModelParams& params, double T,
                      const TruncatedSpace& space, CouplingModel model);

/// Joint outcome probabilities p[mu][nu] of observing mu at t1 and nu at
/// t0, by explicit operator products on the joint qubit (x) photon space:
/// U(T) is the block-diagonal exp(-i Omega T/2) exp(-i H_+ T) (+)
/// exp(+i Omega T/2) exp(-i H_- T), projectors are Heisenberg-evolved, and
/// each probability is Tr[Pi_nu(0) Pi_mu(T) Pi_nu(0) rho_0]. Index 0 means
/// outcome +1, index 1 means -1. Values are checked nonnegative within
/// 1e-12 and normalized within 1e-12.
struct JointProbabilities {
  std::array<std::array<double, 2>, 2> p{};

  double sum() const { return p[0][0] + p[0][1] + p[1][0] + p[1][1]; }
};

JointProbabilities joint_probabilities_oracle(const ModelParams& params,
                                              const Observable& obs,
                                              const QubitState& rho_q,
                                              double T,
                                              const TruncatedSpace& space,
                                              CouplingModel model);

/// All four LG quantities assembled from joint_probabilities_oracle.
LGQuad lg_oracle(const ModelParams& params, const Observable& obs,
                 const QubitState& rho_q, double T,
                 const TruncatedSpace& space, CouplingModel model);

/// Precomputed eigensystems of H_+- for one (params, model, dim) point,
/// turning repeated trace evaluations over a T grid into O(dim^2) work.
class OracleContext {
 public:
  /// dim = 0 picks default_fock_dim(params).
  OracleContext(const ModelParams& params, CouplingModel model, long dim = 0);

  Complex v_trace_value(double T) const;
  VTrace v_trace(double T) const;

  /// Dense V(T) = exp(+i H_+ T) exp(-i H_- T); O(dim^3) per call.
  MatrixXc v_operator(double T) const;

  long dim() const { return dim_; }
  const ThermalPhotonState& thermal() const { return thermal_; }

 private:
  long dim_;
  ThermalPhotonState thermal_;
  VectorXr evals_plus_, evals_minus_;
  MatrixXc evecs_plus_, evecs_minus_;
  MatrixXc trace_weight_;  // W .* G, see implementation
};

/// VTraceProvider backed by the Fock oracle, caching one OracleContext per
/// distinct (params, model, dim) key. Copies share the cache; safe to call
/// from any number of threads.
class OracleProvider {
 public:
  explicit OracleProvider(CouplingModel model, long dim = 0);

  VTrace operator()(const ModelParams& params, double T, double tol) const;

 private:
  using Key = std::tuple<double, double, double, double, int, long>;

  struct State {
    CouplingModel model;
    long dim;
    std::mutex mutex;
    std::map<Key, std::shared_ptr<const OracleContext>> cache;
  };

  std::shared_ptr<const OracleContext> context_for(
      const ModelParams& params) const;

  std::shared_ptr<State> state_;
};

}  // namespace lgcavity

#endif  // LGCAVITY_FOCK_ORACLE_HPP
