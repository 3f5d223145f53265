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

#include "qgen/simd/dot.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace qgen::simd::avx2 {

// Compiled for AVX2 only (no FMA) so mul/add pairs cannot be contracted.
__attribute__((target("avx2"))) double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  // [l0+l1, l0+l1, l2+l3, l2+l3]
  const __m256d pairs = _mm256_hadd_pd(acc, acc);
  const __m128d lo = _mm256_castpd256_pd128(pairs);
  const __m128d hi = _mm256_extractf128_pd(pairs, 1);
  double s = _mm_cvtsd_f64(_mm_add_sd(lo, hi));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace qgen::simd::avx2

#endif
