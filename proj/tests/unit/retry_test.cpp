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

#include <gtest/gtest.h>

#include "qgen/error.hpp"
#include "qgen/providers/retry.hpp"
#include "test_support.hpp"

namespace qgen::providers {
namespace {

TEST(Backoff, Doubles) {
  const RetryPolicy p{3, std::chrono::milliseconds(500)};
  EXPECT_EQ(backoff_delay(p, 0).count(), 500);
  EXPECT_EQ(backoff_delay(p, 1).count(), 1000);
  EXPECT_EQ(backoff_delay(p, 2).count(), 2000);
}

TEST(WithRetry, ThreeRateLimitsThenSuccess) {
  testing::RecordingSleeper rec;
  int calls = 0;
  const int result = with_retry(RetryPolicy{}, rec.sleeper(), [&] {
    if (++calls <= 3) throw ProviderError(429, "slow down", true);
    return 7;
  });
  EXPECT_EQ(result, 7);
  EXPECT_EQ(calls, 4);
  ASSERT_EQ(rec.delays->size(), 3u);
  EXPECT_EQ((*rec.delays)[0].count(), 500);
  EXPECT_EQ((*rec.delays)[1].count(), 1000);
  EXPECT_EQ((*rec.delays)[2].count(), 2000);
}

TEST(WithRetry, GivesUpAfterMaxRetries) {
  testing::RecordingSleeper rec;
  int calls = 0;
  try {
    with_retry(RetryPolicy{}, rec.sleeper(), [&]() -> int {
      ++calls;
      throw ProviderError(503, "down", true);
    });
    FAIL();
  } catch (const ProviderError& e) {
    EXPECT_EQ(e.status(), 503);
  }
  EXPECT_EQ(calls, 4);
  EXPECT_EQ(rec.delays->size(), 3u);
}

TEST(WithRetry, NonRetryableFailsImmediately) {
  testing::RecordingSleeper rec;
  int calls = 0;
  EXPECT_THROW(with_retry(RetryPolicy{}, rec.sleeper(),
                          [&]() -> int {
                            ++calls;
                            throw ProviderError(400, "bad", false);
                          }),
               ProviderError);
  EXPECT_EQ(calls, 1);
  EXPECT_TRUE(rec.delays->empty());
}

}  // namespace
}  // namespace qgen::providers
