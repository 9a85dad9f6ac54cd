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

#include "thermal_sum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lgcavity/errors.hpp"

namespace lgcavity::detail {

namespace {

constexpr long kMaxTerms = 20000;
constexpr int kRequiredConsecutive = 8;

double quartic_bound(long m) {
  const double s = double(m) + 4.0;
  return s * s * s * s;
}

/// Geometric-times-quartic estimate of the dropped tail beyond last_m.
double tail_estimate(double q, double prefactor, long last_m) {
  double tail = 0.0;
  double weight = std::pow(q, double(last_m + 1));
  for (long m = last_m + 1; m < last_m + 1 + kMaxTerms; ++m) {
    const double term = weight * prefactor * quartic_bound(m);
    tail += term;
    if (term < 1e-3 * tail && m > last_m + 8) break;
    weight *= q;
    if (weight == 0.0) break;
  }
  return (1.0 - q) * tail;
}

}  // namespace

VTrace thermal_trace_sum(const ModelParams& params, double tol, ModelTag tag,
                         double growth_prefactor,
                         const std::function<Complex(long)>& element) {
  params.validate();
  if (!(tol > 0.0)) {
    throw std::invalid_argument("thermal-sum tolerance must be positive");
  }

  if (params.zero_temperature()) {
    return VTrace{element(0), 1, 0.0, tag};
  }

  const double q = std::exp(-params.inv_temperature * params.omega_cavity);
  Complex partial = 0.0;
  double weight = 1.0;
  int consecutive = 0;
  long m = 0;
  for (; m < kMaxTerms; ++m) {
    partial += weight * element(m);
    const double bound = weight * growth_prefactor * quartic_bound(m);
    if (bound < tol * std::abs(partial)) {
      if (++consecutive >= kRequiredConsecutive) {
        ++m;
        break;
      }
    } else {
      consecutive = 0;
    }
    weight *= q;
  }

  VTrace result;
  result.value = (1.0 - q) * partial;
  result.terms_used = m;
  result.tail_bound = tail_estimate(q, growth_prefactor, m - 1);
  result.model_tag = tag;

  if (consecutive < kRequiredConsecutive) {
    throw ConvergenceError(
        "thermal sum did not meet tolerance " + std::to_string(tol) +
            " within " + std::to_string(kMaxTerms) + " terms",
        result);
  }
  return result;
}

}  // namespace lgcavity::detail
