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

#ifndef LGCAVITY_MODEL_HPP
#define LGCAVITY_MODEL_HPP

#include <eigen3/Eigen/Dense>
#include <complex>

#include "lgcavity/vtrace.hpp"

namespace lgcavity {

using Matrix2c = Eigen::Matrix2cd;

/// Physical constants of one simulation instance, in units with
/// hbar = k_B = 1.
///
/// The Hamiltonian is
///   H = (Omega/2) sigma_z + omega a^dag a + sigma_z (g a^dag + g* a)^2
/// for the quadratic coupling model, or with the photon factor unsquared
/// for the linear reference model. `inv_temperature` is beta; +infinity
/// means zero temperature.
struct ModelParams {
  double omega_qubit = 1.0;    ///< qubit level splitting Omega
  double omega_cavity = 0.1;   ///< cavity mode frequency omega
  Complex coupling = 0.075;    ///< coupling constant g (may be complex)
  double inv_temperature = 10.0;  ///< beta > 0, +inf = zero temperature

  bool zero_temperature() const;

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;
};

/// Coupling combinations shared by the propagator formulas:
/// omega_pm = omega +- 2|g|^2 and kappa = g^2.
///
/// omega_minus may be zero or negative at large coupling; downstream
/// formulas tolerate that.
struct DerivedCouplings {
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  Complex kappa = 0.0;
  double g_abs_sq = 0.0;
};

DerivedCouplings derived_couplings(const ModelParams& params);

/// Measured qubit operator A = a sigma_+ + a* sigma_- + a_z sigma_z with
/// a = a_x + i a_y. Eigenvalues +-1 require |a|^2 + a_z^2 = 1.
struct Observable {
  Complex a = 0.0;
  double a_z = 1.0;

  /// The (sigma_x + sigma_z)/sqrt(2) axis used throughout the sweep
  /// experiments: a_x = a_z = 1/sqrt(2), a_y = 0.
  static Observable xz_diagonal();

  /// Throws std::invalid_argument unless |a|^2 + a_z^2 = 1 within 1e-12.
  void validate() const;
};

/// A in the {|e>, |g>} basis (index 0 = excited). Hermitian, A^2 = I.
Matrix2c observable_matrix(const Observable& obs);

/// Projector (1/2)(I + mu A) onto the eigenvalue-mu subspace of A.
/// mu must be +1 or -1; anything else throws std::invalid_argument.
Matrix2c projector(const Observable& obs, int mu);

/// Qubit density matrix in the {|e>, |g>} basis.
struct QubitState {
  Matrix2c rho;

  static QubitState ground();           ///< |g><g| (the default initial state)
  static QubitState excited();          ///< |e><e|
  static QubitState plus_x();           ///< |+><+|, sigma_x eigenstate
  static QubitState maximally_mixed();  ///< I/2

  /// Hermitian within 1e-12, trace 1 within 1e-12, eigenvalues >= -1e-12.
  void validate() const;
};

/// The seven qubit-space traces entering the two-time correlators.
/// All are plain 2x2 traces against rho_Q; d_z is always real because
/// A sigma_z A is Hermitian.
struct QubitMoments {
  Complex m_plus;   ///< Tr[sigma_+ rho]
  Complex m_z;      ///< Tr[sigma_z rho]
  Complex c_plus;   ///< Tr[sigma_+ A rho]
  Complex c_minus;  ///< Tr[sigma_- A rho]
  Complex c_z;      ///< Tr[sigma_z A rho]
  Complex d_plus;   ///< Tr[A sigma_+ A rho]
  Complex d_z;      ///< Tr[A sigma_z A rho]
};

QubitMoments qubit_moments(const Observable& obs, const QubitState& rho_q);

Matrix2c sigma_x();
Matrix2c sigma_y();
Matrix2c sigma_z();
Matrix2c sigma_plus();
Matrix2c sigma_minus();

}  // namespace lgcavity

#endif  // LGCAVITY_MODEL_HPP
