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

#ifndef LGCAVITY_VTRACE_HPP
#define LGCAVITY_VTRACE_HPP

#include <complex>
#include <string_view>

namespace lgcavity {

using Complex = std::complex<double>;

/// Which computation produced a photon-trace value.
enum class ModelTag {
  QuadraticPerturbative,  ///< second-order quadratic-coupling series
  LinearExact,            ///< closed-form linear-coupling matrix elements
  Oracle,                 ///< dense truncated-Fock matrix exponentials
};

std::string_view to_string(ModelTag tag);

/// Thermal photon trace Tr[V(t1,t0) rho_P] plus truncation metadata.
///
/// This is the single photon-space quantity every qubit correlator consumes:
/// V = exp(+i H_+ T) exp(-i H_- T) with T = t1 - t0.
struct VTrace {
  Complex value{1.0, 0.0};
  long terms_used = 1;       ///< number of thermal terms summed (oracle: Fock dim)
  double tail_bound = 0.0;   ///< estimated magnitude of the dropped thermal tail
  ModelTag model_tag = ModelTag::QuadraticPerturbative;
};

}  // namespace lgcavity

#endif  // LGCAVITY_VTRACE_HPP
