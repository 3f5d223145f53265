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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qgen/simd/dot.hpp"

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

void BM_DotRows(benchmark::State& state, qgen::simd::Isa isa) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto dim = static_cast<std::size_t>(state.range(1));
  const auto matrix = random_values(rows * dim, 1);
  const auto query = random_values(dim, 2);
  std::vector<double> out(rows);
  qgen::simd::set_isa_override(isa);
  for (auto _ : state) {
    qgen::simd::dot_rows(matrix, dim, query, out);
    benchmark::DoNotOptimize(out.data());
  }
  qgen::simd::set_isa_override(std::nullopt);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * rows));
}

void register_all() {
  for (auto isa : qgen::simd::available_isas()) {
    const std::string name = "dot_rows/" + std::string(qgen::simd::to_string(isa));
    benchmark::RegisterBenchmark(name.c_str(), BM_DotRows, isa)
        ->Args({1000, 64})
        ->Args({1000, 1536})
        ->Args({10000, 384});
  }
}

}  // namespace

int main(int argc, char** argv) {
  register_all();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
