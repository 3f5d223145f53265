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

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qgen::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Instruction sets usable on this machine; always contains Isa::Scalar.
std::vector<Isa> available_isas();

/// The kernel family used by dot() and dot_rows(): the override if one is set,
/// otherwise the widest available ISA.
Isa active_isa();

/// Pins dispatch to `isa` (or clears the pin with nullopt). Pinning an ISA the
/// CPU does not support falls back to Scalar. Intended for tests and benches.
void set_isa_override(std::optional<Isa> isa);

// All kernels accumulate in four interleaved lanes (lane j takes elements
// i with i % 4 == j over the full blocks), reduce as (l0 + l1) + (l2 + l3),
// then add the tail left to right. Multiplies and adds are never fused, so
// every ISA returns the same bits as the scalar reference.

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
}

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
}
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
}
#endif

/// Dispatching dot product. Spans must have equal length (unchecked).
double dot(std::span<const double> a, std::span<const double> b);

/// Dot of one kernel family, bypassing dispatch. Requires the ISA be available.
double dot_with(Isa isa, std::span<const double> a, std::span<const double> b);

/// out[r] = dot(rows[r * dim .. (r + 1) * dim), query) for every row.
void dot_rows(std::span<const double> rows, std::size_t dim, std::span<const double> query,
              std::span<double> out);

}  // namespace qgen::simd
