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

#ifndef LGCAVITY_PARALLEL_HPP
#define LGCAVITY_PARALLEL_HPP

#include <functional>

namespace lgcavity {

/// Worker count: LGCAVITY_THREADS if set and positive, otherwise the
/// hardware concurrency (LGCAVITY_THREADS=0 also means auto).
unsigned worker_count();

/// Runs body(i) for i in [0, n). Iterations must be independent; they are
/// distributed over worker_count() threads when n is large enough.
/// If any iteration throws, the exception from the lowest index is
/// rethrown after all workers finish.
void parallel_for(long n, const std::function<void(long)>& body);

}  // namespace lgcavity

#endif  // LGCAVITY_PARALLEL_HPP
