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

#include "lgcavity/exact_linear.hpp"

#include <cmath>
#include <stdexcept>

#include "lgcavity/math_detail.hpp"
#include "thermal_sum.hpp"

namespace lgcavity {

namespace {

// Iterates exp(log_damp) * L_m(x) for m = 0, 1, 2, ... with power-of-ten
// rescaling of the recurrence state. The damped product is bounded by one
// for log_damp = -x/2, but L_m itself overflows beyond x ~ 1400, so raw
// polynomial values cannot be carried at sweep-scale couplings.
class DampedLaguerreSequence {
 public:
  DampedLaguerreSequence(double x, double log_damp)
      : x_(x), log_damp_(log_damp) {}

  double next() {
    const double out =
        cur_ == 0.0
            ? 0.0
            : std::copysign(
                  std::exp(std::log(std::abs(cur_)) + log_scale_ + log_damp_),
                  cur_);
    const double k = double(degree_);
    const double advanced =
        ((2.0 * k + 1.0 - x_) * cur_ - k * prev_) / (k + 1.0);
    prev_ = cur_;
    cur_ = advanced;
    ++degree_;
    if (std::abs(cur_) > 1e250) {
      prev_ *= 1e-250;
      cur_ *= 1e-250;
      log_scale_ += 250.0 * std::log(10.0);
    }
    return out;
  }

 private:
  double x_;
  double log_damp_;
  long degree_ = 0;
  double prev_ = 0.0;  // L_{m-1}, same scale as cur_
  double cur_ = 1.0;   // L_m
  double log_scale_ = 0.0;
};

}  // namespace

LinearPhase linear_phase(const ModelParams& params, double T) {
  params.validate();
  if (!(T >= 0.0)) {
    throw std::invalid_argument("time separation must be nonnegative");
  }
  LinearPhase lp;
  lp.T = T;
  lp.t_tilde = T * params.omega_cavity;
  lp.g_tilde = T * params.coupling * detail::expi_minus_one_over_x(lp.t_tilde);
  return lp;
}

double laguerre(long m, double x) {
  if (m < 0) {
    throw std::invalid_argument("Laguerre degree must be nonnegative");
  }
  double prev = 1.0;  // L_0
  if (m == 0) return prev;
  double cur = 1.0 - x;  // L_1
  for (long k = 1; k < m; ++k) {
    const double next =
        ((2.0 * k + 1.0 - x) * cur - double(k) * prev) / double(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double matrix_element_linear(long m, const ModelParams& params, double T) {
  if (m < 0) {
    throw std::invalid_argument("Fock level must be nonnegative");
  }
  const LinearPhase lp = linear_phase(params, T);
  const double y = std::norm(lp.g_tilde);
  DampedLaguerreSequence seq(4.0 * y, -2.0 * y);
  double value = 0.0;
  for (long k = 0; k <= m; ++k) value = seq.next();
  return value;
}

VTrace v_trace_linear(const ModelParams& params, double T, double tol) {
  params.validate();
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (!(T >= 0.0)) {
    throw std::invalid_argument("time separation must be nonnegative");
  }
  if (T == 0.0 || params.coupling == Complex(0.0)) {
    return VTrace{1.0, 1, 0.0, ModelTag::LinearExact};
  }

  const LinearPhase lp = linear_phase(params, T);
  const double y = std::norm(lp.g_tilde);

  // Laguerre recurrence carried across consecutive calls; thermal_trace_sum
  // guarantees m = 0, 1, 2, ... in order.
  DampedLaguerreSequence seq(4.0 * y, -2.0 * y);
  auto element = [&seq](long) -> Complex { return seq.next(); };
  // |exp(-2y) L_m(4y)| <= 1 for y >= 0, so the quartic bound needs no extra
  // amplitude factor.
  return detail::thermal_trace_sum(params, tol, ModelTag::LinearExact, 1.0,
                                   element);
}

double lg_closed_form_zero_temperature(const ModelParams& params,
                                       const Observable& obs, double T) {
  params.validate();
  const Observable ref = Observable::xz_diagonal();
  if (std::abs(obs.a - ref.a) > 1e-12 || std::abs(obs.a_z - ref.a_z) > 1e-12) {
    throw std::invalid_argument(
        "closed form is specific to the xz-diagonal observable");
  }
  const double g_sq = std::norm(params.coupling);
  const double omega = params.omega_cavity;
  const double envelope =
      std::exp(4.0 * g_sq * (std::cos(T * omega) - 1.0) / (omega * omega));
  return 0.25 * (2.0 - std::sqrt(2.0) +
                 std::sqrt(2.0) * std::cos(T * params.omega_qubit) * envelope);
}

}  // namespace lgcavity
