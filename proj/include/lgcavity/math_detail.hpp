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

#ifndef LGCAVITY_MATH_DETAIL_HPP
#define LGCAVITY_MATH_DETAIL_HPP

#include <cmath>
#include <complex>

namespace lgcavity::detail {

// Below this |x| the limit-safe Taylor branches take over. Both series are
// accurate to well under 1e-12 at the threshold, so the branch switch is
// continuous at that level.
inline constexpr double kSmallAngleThreshold = 1e-4;

/// (exp(i x) - 1) / x, finite at x = 0 (limit i).
inline std::complex<double> expi_minus_one_over_x(double x) {
  if (std::abs(x) < kSmallAngleThreshold) {
    // i * (1 + i x/2 - x^2/6)
    return {-0.5 * x, 1.0 - x * x / 6.0};
  }
  const std::complex<double> num(std::cos(x) - 1.0, std::sin(x));
  return num / x;
}

/// (x - sin x) / x, finite at x = 0 (limit 0).
inline double x_minus_sin_over_x(double x) {
  if (std::abs(x) < kSmallAngleThreshold) {
    const double x2 = x * x;
    return x2 / 6.0 - x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0;
  }
  return (x - std::sin(x)) / x;
}

}  // namespace lgcavity::detail

#endif  // LGCAVITY_MATH_DETAIL_HPP
