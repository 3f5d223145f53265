/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <chrono>
#include <functional>

#include "qgen/error.hpp"

namespace qgen::providers {

struct RetryPolicy {
  int max_retries = 3;
  std::chrono::milliseconds base_delay{500};
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

/// std::this_thread::sleep_for.
Sleeper real_sleeper();

/// Delay before retry number `attempt` (0-based): base_delay * 2^attempt.
std::chrono::milliseconds backoff_delay(const RetryPolicy& policy, int attempt);

/// Calls `op` until it succeeds, retrying only ProviderErrors flagged
/// retryable, at most policy.max_retries times. The last error is rethrown.
template <typename Op>
auto with_retry(const RetryPolicy& policy, const Sleeper& sleep, Op&& op) -> decltype(op()) {
  for (int attempt = 0;; ++attempt) {
    try {
      return op();
    } catch (const ProviderError& e) {
      if (!e.retryable() || attempt >= policy.max_retries) throw;
      sleep(backoff_delay(policy, attempt));
    }
  }
}

}  // namespace qgen::providers
