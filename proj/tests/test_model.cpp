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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "lgcavity/model.hpp"

using namespace lgcavity;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Observable random_observable(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  Observable obs;
  obs.a_z = uni(rng);
  const double r = std::sqrt(1.0 - obs.a_z * obs.a_z);
  obs.a = std::polar(r, angle(rng));
  return obs;
}

QubitState random_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double x, y, z;
  do {
    x = uni(rng);
    y = uni(rng);
    z = uni(rng);
  } while (x * x + y * y + z * z > 1.0);
  QubitState s;
  s.rho = 0.5 * (Matrix2c::Identity() + x * sigma_x() + y * sigma_y() +
                 z * sigma_z());
  return s;
}

}  // namespace

TEST_CASE("derived couplings") {
  SUBCASE("zero coupling") {
    ModelParams p{1.0, 0.1, 0.0, 10.0};
    const DerivedCouplings d = derived_couplings(p);
    CHECK(d.omega_plus == 0.1);
    CHECK(d.omega_minus == 0.1);
    CHECK(d.kappa == Complex(0.0));
    CHECK(d.g_abs_sq == 0.0);
  }
  SUBCASE("sweep working point") {
    ModelParams p{1.0, 0.1, 0.075, 10.0};
    const DerivedCouplings d = derived_couplings(p);
    CHECK(d.omega_plus == doctest::Approx(0.11125).epsilon(1e-14));
    CHECK(d.omega_minus == doctest::Approx(0.08875).epsilon(1e-14));
    CHECK(d.kappa.real() == doctest::Approx(0.005625).epsilon(1e-14));
    CHECK(d.kappa.imag() == 0.0);
  }
  SUBCASE("pure imaginary coupling") {
    ModelParams p{1.0, 0.1, Complex(0.0, 0.075), 10.0};
    const DerivedCouplings d = derived_couplings(p);
    CHECK(d.kappa.real() == doctest::Approx(-0.005625).epsilon(1e-14));
    CHECK(std::abs(d.kappa.imag()) < 1e-18);
    CHECK(d.omega_plus == doctest::Approx(0.11125).epsilon(1e-14));
  }
  SUBCASE("sum rule is exact") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(0.01, 2.0);
    for (int i = 0; i < 100; ++i) {
      ModelParams p{uni(rng), uni(rng), uni(rng), 5.0};
      const DerivedCouplings d = derived_couplings(p);
      // each shifted frequency rounds once at the omega_plus magnitude
      const double sum = d.omega_plus + d.omega_minus;
      CHECK(std::abs(sum - 2.0 * p.omega_cavity) <=
            4.0 * std::numeric_limits<double>::epsilon() * d.omega_plus);
      CHECK(d.omega_plus - d.omega_minus ==
            doctest::Approx(4.0 * d.g_abs_sq).epsilon(1e-14));
    }
    ModelParams free{1.0, 0.37, 0.0, 5.0};
    const DerivedCouplings d0 = derived_couplings(free);
    CHECK(d0.omega_plus + d0.omega_minus == 2.0 * free.omega_cavity);
  }
  SUBCASE("omega_minus may go negative") {
    ModelParams p{1.0, 0.1, 1.3, 10.0};
    CHECK(derived_couplings(p).omega_minus < 0.0);
  }
}

TEST_CASE("parameter validation") {
  ModelParams good{1.0, 0.1, 0.075, 10.0};
  CHECK_NOTHROW(good.validate());
  good.inv_temperature = std::numeric_limits<double>::infinity();
  CHECK_NOTHROW(good.validate());
  CHECK(good.zero_temperature());

  ModelParams bad = good;
  bad.omega_cavity = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = good;
  bad.omega_qubit = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = good;
  bad.inv_temperature = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = good;
  bad.inv_temperature = std::nan("");
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("observable matrix") {
  SUBCASE("pure sigma_z") {
    const Matrix2c m = observable_matrix(Observable{0.0, 1.0});
    CHECK(m(0, 0) == Complex(1.0));
    CHECK(m(1, 1) == Complex(-1.0));
    CHECK(m(0, 1) == Complex(0.0));
  }
  SUBCASE("pure sigma_x") {
    const Matrix2c m = observable_matrix(Observable{1.0, 0.0});
    CHECK(m(0, 1) == Complex(1.0));
    CHECK(m(1, 0) == Complex(1.0));
    CHECK(m(0, 0) == Complex(0.0));
  }
  SUBCASE("xz diagonal axis has unit eigenvalues") {
    const Matrix2c m = observable_matrix(Observable::xz_diagonal());
    const Matrix2c expected = (sigma_x() + sigma_z()) / std::sqrt(2.0);
    CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-15);
    Eigen::SelfAdjointEigenSolver<Matrix2c> es(m);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(es.eigenvalues()(1) == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("A^2 = I and Hermiticity for random axes") {
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
      const Observable obs = random_observable(rng);
      const Matrix2c m = observable_matrix(obs);
      CHECK((m - m.adjoint().eval()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((m * m - Matrix2c::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("normalization enforced") {
    CHECK_THROWS_AS(observable_matrix(Observable{0.5, 0.5}),
                    std::invalid_argument);
  }
}

TEST_CASE("projectors") {
  SUBCASE("sigma_z projector") {
    const Matrix2c p = projector(Observable{0.0, 1.0}, +1);
    CHECK(p(0, 0) == Complex(1.0));
    CHECK(p(1, 1) == Complex(0.0));
  }
  SUBCASE("xz axis, mu = -1") {
    const Matrix2c p = projector(Observable::xz_diagonal(), -1);
    const Matrix2c expected =
        0.5 * (Matrix2c::Identity() - (sigma_x() + sigma_z()) / std::sqrt(2.0));
    CHECK((p - expected).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("idempotent, Hermitian, complete, orthogonal") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
      const Observable obs = random_observable(rng);
      const Matrix2c plus = projector(obs, +1);
      const Matrix2c minus = projector(obs, -1);
      CHECK((plus * plus - plus).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((plus - plus.adjoint().eval()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((plus + minus - Matrix2c::Identity()).cwiseAbs().maxCoeff() <
            1e-12);
      CHECK((plus * minus).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("invalid sign rejected") {
    CHECK_THROWS_AS(projector(Observable{0.0, 1.0}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(projector(Observable{0.0, 1.0}, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("qubit states") {
  CHECK_NOTHROW(QubitState::ground().validate());
  CHECK_NOTHROW(QubitState::excited().validate());
  CHECK_NOTHROW(QubitState::plus_x().validate());
  CHECK_NOTHROW(QubitState::maximally_mixed().validate());

  QubitState bad;
  bad.rho << 0.5, Complex(0.0, 0.3), Complex(0.0, 0.3), 0.5;  // not Hermitian
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.rho << 0.7, 0.0, 0.0, 0.5;  // trace != 1
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.rho << 1.2, 0.0, 0.0, -0.2;  // negative eigenvalue
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("qubit moments") {
  const Observable xz = Observable::xz_diagonal();
  SUBCASE("ground state basics") {
    std::mt19937 rng(31);
    for (int i = 0; i < 10; ++i) {
      const QubitMoments m =
          qubit_moments(random_observable(rng), QubitState::ground());
      CHECK(std::abs(m.m_plus) < 1e-15);
      CHECK(m.m_z.real() == doctest::Approx(-1.0).epsilon(1e-14));
    }
  }
  SUBCASE("ground state, xz axis") {
    const QubitMoments m = qubit_moments(xz, QubitState::ground());
    CHECK(std::abs(m.c_plus) < 1e-15);
    CHECK(m.c_minus.real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(std::abs(m.c_minus.imag()) < 1e-15);
    CHECK(m.c_z.real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(m.d_plus.real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(m.d_plus.imag()) < 1e-15);
    CHECK(std::abs(m.d_z) < 1e-15);  // |a|^2 - a_z^2 = 0 on this axis
  }
  SUBCASE("agrees with a hand-rolled 2x2 trace oracle") {
    // Independent of Eigen: plain array arithmetic over explicit indices.
    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
      const Observable obs = random_observable(rng);
      const QubitState state = random_state(rng);

      using C = std::complex<double>;
      C a_mat[2][2] = {{C(obs.a_z), obs.a},
                       {std::conj(obs.a), C(-obs.a_z)}};
      C rho[2][2];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rho[i][j] = state.rho(i, j);
      C sp[2][2] = {{C(0), C(1)}, {C(0), C(0)}};
      C sm[2][2] = {{C(0), C(0)}, {C(1), C(0)}};
      C sz[2][2] = {{C(1), C(0)}, {C(0), C(-1)}};

      auto matmul = [](const C lhs[2][2], const C rhs[2][2], C out[2][2]) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            out[i][j] = lhs[i][0] * rhs[0][j] + lhs[i][1] * rhs[1][j];
          }
        }
      };
      auto trace_with_rho = [&](const C op[2][2]) {
        C product[2][2];
        matmul(op, rho, product);
        return product[0][0] + product[1][1];
      };

      C sp_a[2][2], sm_a[2][2], sz_a[2][2];
      matmul(sp, a_mat, sp_a);
      matmul(sm, a_mat, sm_a);
      matmul(sz, a_mat, sz_a);
      C a_sp[2][2], a_sp_a[2][2], a_sz[2][2], a_sz_a[2][2];
      matmul(a_mat, sp, a_sp);
      matmul(a_sp, a_mat, a_sp_a);
      matmul(a_mat, sz, a_sz);
      matmul(a_sz, a_mat, a_sz_a);

      const QubitMoments m = qubit_moments(obs, state);
      CHECK(std::abs(m.m_plus - trace_with_rho(sp)) < 1e-12);
      CHECK(std::abs(m.m_z - trace_with_rho(sz)) < 1e-12);
      CHECK(std::abs(m.c_plus - trace_with_rho(sp_a)) < 1e-12);
      CHECK(std::abs(m.c_minus - trace_with_rho(sm_a)) < 1e-12);
      CHECK(std::abs(m.c_z - trace_with_rho(sz_a)) < 1e-12);
      CHECK(std::abs(m.d_plus - trace_with_rho(a_sp_a)) < 1e-12);
      CHECK(std::abs(m.d_z - trace_with_rho(a_sz_a)) < 1e-12);
      // A sigma_z A is Hermitian, so this trace is real for any state.
      CHECK(std::abs(m.d_z.imag()) < 1e-12);
    }
  }
}
