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

#include "lgcavity/fock_oracle.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lgcavity/errors.hpp"

namespace lgcavity {

namespace {

constexpr double kThermalTailLimit = 1e-12;
// -ln(1e-12): levels needed so the Bose tail q^N drops below the limit.
constexpr double kLogTailLimit = 27.631021115928547;

const Complex kImag(0.0, 1.0);

double trace_product(const MatrixXc& a, const MatrixXc& b) {
  // Tr[a b] without forming the product.
  return a.cwiseProduct(b.transpose()).sum().real();
}

}  // namespace

TruncatedSpace TruncatedSpace::create(long dim) {
  if (dim < 2) {
    throw std::invalid_argument("Fock space needs at least two levels");
  }
  TruncatedSpace space;
  space.dim = dim;
  space.ladder_down = MatrixXc::Zero(dim, dim);
  for (long m = 1; m < dim; ++m) {
    space.ladder_down(m - 1, m) = std::sqrt(double(m));
  }
  space.ladder_up = space.ladder_down.adjoint();
  return space;
}

ThermalPhotonState ThermalPhotonState::create(double beta, double omega_cavity,
                                              long dim) {
  if (!(beta > 0.0) || std::isnan(beta)) {
    throw std::invalid_argument("inverse temperature must be positive");
  }
  if (!(omega_cavity > 0.0)) {
    throw std::invalid_argument("cavity frequency must be positive");
  }
  if (dim < 2) {
    throw std::invalid_argument("Fock space needs at least two levels");
  }

  ThermalPhotonState state;
  state.beta = beta;
  state.weights = VectorXr::Zero(dim);
  if (std::isinf(beta)) {
    state.weights(0) = 1.0;
    state.weight_truncated = 0.0;
    return state;
  }

  const double q = std::exp(-beta * omega_cavity);
  state.weight_truncated = std::pow(q, double(dim));
  if (state.weight_truncated >= kThermalTailLimit) {
    char tail[32];
    std::snprintf(tail, sizeof(tail), "%.3e", state.weight_truncated);
    throw TruncationError("thermal occupation beyond level " +
                          std::to_string(dim - 1) + " is " + tail +
                          "; enlarge the Fock space");
  }
  double weight = 1.0;
  for (long m = 0; m < dim; ++m) {
    state.weights(m) = weight;
    weight *= q;
  }
  state.weights *= (1.0 - q) / (1.0 - state.weight_truncated);
  return state;
}

HamiltonianPair hamiltonians(const ModelParams& params,
                             const TruncatedSpace& space,
                             CouplingModel model) {
  params.validate();
  const long dim = space.dim;

  MatrixXc free_part = MatrixXc::Zero(dim, dim);
  for (long m = 0; m < dim; ++m) {
    free_part(m, m) = params.omega_cavity * double(m);
  }

  MatrixXc coupling_term = params.coupling * space.ladder_up +
                           std::conj(params.coupling) * space.ladder_down;
  if (model == CouplingModel::Quadratic) {
    coupling_term = (coupling_term * coupling_term).eval();
  }

  return HamiltonianPair{free_part + coupling_term, free_part - coupling_term};
}

MatrixXc matrix_exp_unitary(const MatrixXc& hermitian, double t) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition failed");
  }
  const long dim = hermitian.rows();
  Eigen::VectorXcd phases(dim);
  for (long j = 0; j < dim; ++j) {
    phases(j) = std::polar(1.0, solver.eigenvalues()(j) * t);
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

long default_fock_dim(const ModelParams& params) {
  params.validate();
  long thermal_levels = 1;
  if (!params.zero_temperature()) {
    thermal_levels = long(std::ceil(
                         kLogTailLimit /
                         (params.inv_temperature * params.omega_cavity))) +
                     1;
  }
  const long padded = long(std::ceil(1.5 * double(thermal_levels)));
  long dim = 64;
  while (dim < padded) dim *= 2;
  return dim;
}

VTrace v_trace_oracle(const ModelParams& params, double T,
                      const TruncatedSpace& space, CouplingModel model) {
  if (!(T >= 0.0)) {
    throw std::invalid_argument("time separation must be nonnegative");
  }
  const ThermalPhotonState thermal = ThermalPhotonState::create(
      params.inv_temperature, params.omega_cavity, space.dim);
  const HamiltonianPair h = hamiltonians(params, space, model);
  const MatrixXc forward = matrix_exp_unitary(h.plus, T);
  const MatrixXc backward = matrix_exp_unitary(h.minus, -T);
  const MatrixXc v_op = forward * backward;

  Complex value = 0.0;
  for (long m = 0; m < space.dim; ++m) {
    value += thermal.weights(m) * v_op(m, m);
  }
  return VTrace{value, space.dim, thermal.weight_truncated, ModelTag::Oracle};
}

JointProbabilities joint_probabilities_oracle(const ModelParams& params,
                                              const Observable& obs,
                                              const QubitState& rho_q,
                                              double T,
                                              const TruncatedSpace& space,
                                              CouplingModel model) {
  params.validate();
  obs.validate();
  rho_q.validate();
  if (!(T >= 0.0)) {
    throw std::invalid_argument("time separation must be nonnegative");
  }

  const long dim = space.dim;
  const long joint = 2 * dim;
  const ThermalPhotonState thermal = ThermalPhotonState::create(
      params.inv_temperature, params.omega_cavity, dim);
  const HamiltonianPair h = hamiltonians(params, space, model);

  // U(T) = e^{-i Omega T/2} e^{-i H_+ T}  (+)  e^{+i Omega T/2} e^{-i H_- T}
  // on the {|e>, |g>} (x) Fock ordering; sigma_z is conserved, so the
  // evolution never leaves the blocks.
  MatrixXc evolution = MatrixXc::Zero(joint, joint);
  evolution.topLeftCorner(dim, dim) =
      std::polar(1.0, -0.5 * params.omega_qubit * T) *
      matrix_exp_unitary(h.plus, -T);
  evolution.bottomRightCorner(dim, dim) =
      std::polar(1.0, 0.5 * params.omega_qubit * T) *
      matrix_exp_unitary(h.minus, -T);

  const auto embed_qubit = [&](const Matrix2c& op) {
    MatrixXc out = MatrixXc::Zero(joint, joint);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        out.block(i * dim, j * dim, dim, dim) =
            op(i, j) * MatrixXc::Identity(dim, dim);
      }
    }
    return out;
  };

  MatrixXc rho0 = MatrixXc::Zero(joint, joint);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      rho0.block(i * dim, j * dim, dim, dim) =
          rho_q.rho(i, j) * MatrixXc(thermal.weights.asDiagonal());
    }
  }

  const MatrixXc proj_plus_0 = embed_qubit(projector(obs, +1));
  const MatrixXc proj_minus_0 = embed_qubit(projector(obs, -1));
  const MatrixXc proj_plus_t =
      evolution.adjoint() * proj_plus_0 * evolution;

  // p[mu][nu] with mu measured at t1, nu at t0; indices 0 -> +1, 1 -> -1.
  JointProbabilities result;
  const MatrixXc* projectors0[2] = {&proj_plus_0, &proj_minus_0};
  for (int nu = 0; nu < 2; ++nu) {
    const MatrixXc sandwiched =
        (*projectors0[nu]) * rho0 * (*projectors0[nu]);
    const double total = sandwiched.trace().real();
    result.p[0][nu] = trace_product(proj_plus_t, sandwiched);
    result.p[1][nu] = total - result.p[0][nu];
  }

  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) {
      if (result.p[mu][nu] < -1e-12 || result.p[mu][nu] > 1.0 + 1e-12) {
        throw NumericalError("projective probability out of range");
      }
    }
  }
  if (std::abs(result.sum() - 1.0) > 1e-12) {
    throw NumericalError("projective probabilities do not normalize");
  }
  return result;
}

LGQuad lg_oracle(const ModelParams& params, const Observable& obs,
                 const QubitState& rho_q, double T,
                 const TruncatedSpace& space, CouplingModel model) {
  const JointProbabilities probs =
      joint_probabilities_oracle(params, obs, rho_q, T, space, model);

  const double sign[2] = {1.0, -1.0};
  double a0 = 0.0, a1 = 0.0, corr = 0.0;
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) {
      a0 += sign[nu] * probs.p[mu][nu];
      a1 += sign[mu] * probs.p[mu][nu];
      corr += sign[mu] * sign[nu] * probs.p[mu][nu];
    }
  }

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

OracleContext::OracleContext(const ModelParams& params, CouplingModel model,
                             long dim)
    : dim_(dim > 0 ? dim : default_fock_dim(params)),
      thermal_(ThermalPhotonState::create(params.inv_temperature,
                                          params.omega_cavity, dim_)) {
  const TruncatedSpace space = TruncatedSpace::create(dim_);
  const HamiltonianPair h = hamiltonians(params, space, model);

  Eigen::SelfAdjointEigenSolver<MatrixXc> plus(h.plus);
  Eigen::SelfAdjointEigenSolver<MatrixXc> minus(h.minus);
  if (plus.info() != Eigen::Success || minus.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition failed");
  }
  evals_plus_ = plus.eigenvalues();
  evals_minus_ = minus.eigenvalues();
  evecs_plus_ = plus.eigenvectors();
  evecs_minus_ = minus.eigenvectors();

  // Tr[diag(w) U+ D+ U+^dag U- D- U-^dag] = sum_jk p_j W_jk q_k G_kj with
  // W = U+^dag U-, G = U-^dag diag(w) U+; fold W and G^T into one matrix so
  // each trace evaluation is a bilinear form in the phase vectors.
  const MatrixXc w_overlap = evecs_plus_.adjoint() * evecs_minus_;
  const MatrixXc g_overlap = evecs_minus_.adjoint() *
                             thermal_.weights.asDiagonal() * evecs_plus_;
  trace_weight_ = w_overlap.cwiseProduct(g_overlap.transpose());
}

Complex OracleContext::v_trace_value(double T) const {
  Eigen::VectorXcd phase_plus(dim_), phase_minus(dim_);
  for (long j = 0; j < dim_; ++j) {
    phase_plus(j) = std::polar(1.0, evals_plus_(j) * T);
    phase_minus(j) = std::polar(1.0, -evals_minus_(j) * T);
  }
  return phase_plus.transpose() * (trace_weight_ * phase_minus);
}

VTrace OracleContext::v_trace(double T) const {
  return VTrace{v_trace_value(T), dim_, thermal_.weight_truncated,
                ModelTag::Oracle};
}

MatrixXc OracleContext::v_operator(double T) const {
  Eigen::VectorXcd phase_plus(dim_), phase_minus(dim_);
  for (long j = 0; j < dim_; ++j) {
    phase_plus(j) = std::polar(1.0, evals_plus_(j) * T);
    phase_minus(j) = std::polar(1.0, -evals_minus_(j) * T);
  }
  const MatrixXc forward = evecs_plus_ * phase_plus.asDiagonal() *
                           evecs_plus_.adjoint();
  const MatrixXc backward = evecs_minus_ * phase_minus.asDiagonal() *
                            evecs_minus_.adjoint();
  return forward * backward;
}

OracleProvider::OracleProvider(CouplingModel model, long dim)
    : state_(std::make_shared<State>()) {
  state_->model = model;
  state_->dim = dim;
}

std::shared_ptr<const OracleContext> OracleProvider::context_for(
    const ModelParams& params) const {
  const Key key{params.omega_cavity, params.coupling.real(),
                params.coupling.imag(), params.inv_temperature,
                int(state_->model), state_->dim};
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto it = state_->cache.find(key);
  if (it == state_->cache.end()) {
    it = state_->cache
             .emplace(key, std::make_shared<OracleContext>(
                               params, state_->model, state_->dim))
             .first;
  }
  return it->second;
}

VTrace OracleProvider::operator()(const ModelParams& params, double T,
                                  double tol) const {
  params.validate();
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (!(T >= 0.0)) {
    throw std::invalid_argument("time separation must be nonnegative");
  }
  return context_for(params)->v_trace(T);
}

}  // namespace lgcavity
