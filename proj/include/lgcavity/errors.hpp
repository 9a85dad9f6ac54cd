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

#ifndef LGCAVITY_ERRORS_HPP
#define LGCAVITY_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "lgcavity/vtrace.hpp"

namespace lgcavity {

/// A thermal sum failed to satisfy its tolerance within the hard term cap.
/// Carries the best partial result so callers can inspect or report it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, VTrace partial)
      : std::runtime_error(what), partial_(partial) {}

  const VTrace& partial() const { return partial_; }

 private:
  VTrace partial_;
};

/// A truncated Fock space is too small for the requested thermal state.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dense linear-algebra step failed or produced out-of-contract values.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lgcavity

#endif  // LGCAVITY_ERRORS_HPP
