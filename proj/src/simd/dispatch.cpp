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

#include <atomic>
#include <cstdlib>
#include <string>

#include "qgen/simd/dot.hpp"

namespace qgen::simd {
namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);

// -1 means no override.
std::atomic<int> g_override{-1};

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect() {
  if (const char* env = std::getenv("QGEN_FORCE_SCALAR"); env != nullptr && std::string(env) == "1")
    return Isa::Scalar;
  if (supported(Isa::Avx2)) return Isa::Avx2;
  if (supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

DotFn kernel_for(Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::Avx2:
      return &avx2::dot;
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    case Isa::Neon:
      return &neon::dot;
#endif
    default:
      return &scalar::dot;
  }
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
    if (supported(isa)) out.push_back(isa);
  return out;
}

Isa active_isa() {
  static const Isa detected = detect();
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced >= 0) {
    const auto isa = static_cast<Isa>(forced);
    return supported(isa) ? isa : Isa::Scalar;
  }
  return detected;
}

void set_isa_override(std::optional<Isa> isa) {
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

double dot(std::span<const double> a, std::span<const double> b) {
  return kernel_for(active_isa())(a.data(), b.data(), a.size());
}

double dot_with(Isa isa, std::span<const double> a, std::span<const double> b) {
  return kernel_for(supported(isa) ? isa : Isa::Scalar)(a.data(), b.data(), a.size());
}

void dot_rows(std::span<const double> rows, std::size_t dim, std::span<const double> query,
              std::span<double> out) {
  const DotFn fn = kernel_for(active_isa());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = fn(rows.data() + r * dim, query.data(), dim);
}

}  // namespace qgen::simd
