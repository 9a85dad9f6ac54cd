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

#include "lgcavity/model.hpp"

#include <cmath>
#include <stdexcept>

namespace lgcavity {

namespace {
constexpr double kTol = 1e-12;
}  // namespace

std::string_view to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::QuadraticPerturbative:
      return "quadratic-perturbative";
    case ModelTag::LinearExact:
      return "linear-exact";
    case ModelTag::Oracle:
      return "oracle";
  }
  return "unknown";
}

bool ModelParams::zero_temperature() const {
  return std::isinf(inv_temperature);
}

void ModelParams::validate() const {
  if (!(omega_qubit > 0.0) || !std::isfinite(omega_qubit)) {
    throw std::invalid_argument("omega_qubit must be positive and finite");
  }
  if (!(omega_cavity > 0.0) || !std::isfinite(omega_cavity)) {
    throw std::invalid_argument("omega_cavity must be positive and finite");
  }
  if (!std::isfinite(coupling.real()) || !std::isfinite(coupling.imag())) {
    throw std::invalid_argument("coupling must be finite");
  }
  if (!(inv_temperature > 0.0) || std::isnan(inv_temperature)) {
    throw std::invalid_argument(
        "inv_temperature must be positive (inf = zero temperature)");
  }
}

DerivedCouplings derived_couplings(const ModelParams& params) {
  params.validate();
  DerivedCouplings d;
  d.g_abs_sq = std::norm(params.coupling);
  d.omega_plus = params.omega_cavity + 2.0 * d.g_abs_sq;
  d.omega_minus = params.omega_cavity - 2.0 * d.g_abs_sq;
  d.kappa = params.coupling * params.coupling;
  return d;
}

Observable Observable::xz_diagonal() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return Observable{Complex(inv_sqrt2, 0.0), inv_sqrt2};
}

void Observable::validate() const {
  const double norm = std::norm(a) + a_z * a_z;
  if (std::abs(norm - 1.0) > kTol) {
    throw std::invalid_argument(
        "observable components must satisfy |a|^2 + a_z^2 = 1 within 1e-12");
  }
}

Matrix2c sigma_x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2c sigma_y() {
  Matrix2c m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix2c sigma_z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2c sigma_plus() {
  Matrix2c m;
  m << 0, 1, 0, 0;
  return m;
}

Matrix2c sigma_minus() {
  Matrix2c m;
  m << 0, 0, 1, 0;
  return m;
}

Matrix2c observable_matrix(const Observable& obs) {
  obs.validate();
  Matrix2c m;
  m << obs.a_z, obs.a, std::conj(obs.a), -obs.a_z;
  return m;
}

Matrix2c projector(const Observable& obs, int mu) {
  if (mu != 1 && mu != -1) {
    throw std::invalid_argument("projector sign must be +1 or -1");
  }
  return 0.5 * (Matrix2c::Identity() + double(mu) * observable_matrix(obs));
}

QubitState QubitState::ground() {
  QubitState s;
  s.rho << 0, 0, 0, 1;
  return s;
}

QubitState QubitState::excited() {
  QubitState s;
  s.rho << 1, 0, 0, 0;
  return s;
}

QubitState QubitState::plus_x() {
  QubitState s;
  s.rho << 0.5, 0.5, 0.5, 0.5;
  return s;
}

QubitState QubitState::maximally_mixed() {
  QubitState s;
  s.rho << 0.5, 0, 0, 0.5;
  return s;
}

void QubitState::validate() const {
  if ((rho - rho.adjoint().eval()).cwiseAbs().maxCoeff() > kTol) {
    throw std::invalid_argument("qubit state must be Hermitian within 1e-12");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > kTol) {
    throw std::invalid_argument("qubit state must have unit trace within 1e-12");
  }
  // 2x2 Hermitian eigenvalues: (tr +- sqrt(tr^2 - 4 det)) / 2.
  const double tr = rho.trace().real();
  const double det = rho.determinant().real();
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  const double lambda_min = 0.5 * (tr - disc);
  if (lambda_min < -kTol) {
    throw std::invalid_argument("qubit state must be positive semidefinite");
  }
}

QubitMoments qubit_moments(const Observable& obs, const QubitState& rho_q) {
  rho_q.validate();
  const Matrix2c a_mat = observable_matrix(obs);
  const Matrix2c sp = sigma_plus();
  const Matrix2c sm = sigma_minus();
  const Matrix2c sz = sigma_z();
  const Matrix2c& rho = rho_q.rho;

  QubitMoments m;
  m.m_plus = (sp * rho).trace();
  m.m_z = (sz * rho).trace();
  m.c_plus = (sp * a_mat * rho).trace();
  m.c_minus = (sm * a_mat * rho).trace();
  m.c_z = (sz * a_mat * rho).trace();
  m.d_plus = (a_mat * sp * a_mat * rho).trace();
  m.d_z = (a_mat * sz * a_mat * rho).trace();
  return m;
}

}  // namespace lgcavity
