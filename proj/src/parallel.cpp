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

#include "lgcavity/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lgcavity {

unsigned worker_count() {
  unsigned count = 0;
  if (const char* env = std::getenv("LGCAVITY_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed > 0) count = unsigned(parsed);
  }
  if (count == 0) {
    count = std::thread::hardware_concurrency();
  }
  return count > 0 ? count : 1;
}

void parallel_for(long n, const std::function<void(long)>& body) {
  if (n <= 0) return;
  const unsigned workers = worker_count();
  if (workers <= 1 || n < 4) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }

  std::atomic<long> next{0};
  std::mutex error_mutex;
  long error_index = n;
  std::exception_ptr error;

  auto run = [&] {
    while (true) {
      const long i = next.fetch_add(1);
      if (i >= n) break;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  const unsigned spawned = unsigned(std::min<long>(workers, n));
  pool.reserve(spawned);
  for (unsigned w = 0; w < spawned; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();

  if (error) std::rethrow_exception(error);
}

}  // namespace lgcavity
