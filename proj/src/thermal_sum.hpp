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

#ifndef LGCAVITY_SRC_THERMAL_SUM_HPP
#define LGCAVITY_SRC_THERMAL_SUM_HPP

#include <functional>

#include "lgcavity/model.hpp"
#include "lgcavity/vtrace.hpp"

namespace lgcavity::detail {

/// Adaptively truncated Bose-Einstein average of a diagonal matrix element,
///
///   (1 - e^{-beta omega}) sum_{m=0}^{M} e^{-m beta omega} element(m).
///
/// `element` is invoked for m = 0, 1, 2, ... strictly in order, so callers
/// may keep recurrence state inside the callback. `growth_prefactor` scales
/// the (m+4)^4 per-term magnitude bound used by the stopping rule: the sum
/// ends once e^{-m beta omega} * growth_prefactor * (m+4)^4 falls below
/// tol * |partial sum| for 8 consecutive terms. Hard cap 20000 terms;
/// beyond it a ConvergenceError carrying the partial result is thrown.
/// Zero temperature reduces to element(0) with terms_used = 1.
VTrace thermal_trace_sum(const ModelParams& params, double tol, ModelTag tag,
                         double growth_prefactor,
                         const std::function<Complex(long)>& element);

}  // namespace lgcavity::detail

#endif  // LGCAVITY_SRC_THERMAL_SUM_HPP
