// Copyright 2026 The Tropical Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "tropical/closure.hpp"
#include "tropical/int_duality.hpp"
#include "tropical/lp_duality.hpp"
#include "tropical/twosided.hpp"

namespace {

using namespace tropical;

Matrix random_matrix(std::size_t rows, std::size_t cols, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = dist(rng);
  return a;
}

Vector random_vector(std::size_t n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

LpInstance random_lp(std::size_t n) {
  return {random_matrix(n, n, -10, 10, 1), random_vector(n, -10, 10, 2),
          random_vector(n, -10, 10, 3)};
}

void BM_MaxCycleMean(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, -10, 10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(max_cycle_mean(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxCycleMean)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_KleeneStar(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, -20, -1, 11);
  for (auto _ : state) benchmark::DoNotOptimize(kleene_star(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KleeneStar)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_Certify(benchmark::State& state) {
  const LpInstance lp = random_lp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify(lp));
}
BENCHMARK(BM_Certify)->RangeMultiplier(4)->Range(8, 512);

void BM_DualIntegerGeneral(benchmark::State& state) {
  const LpInstance lp = random_lp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_dual_integer_general(lp));
}
BENCHMARK(BM_DualIntegerGeneral)->RangeMultiplier(2)->Range(4, 128);

void BM_Tslp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TwoSidedInstance inst{random_matrix(n, n, -20, -1, 5), random_vector(n, -5, 5, 6),
                              random_vector(n, -5, 5, 8)};
  for (auto _ : state) benchmark::DoNotOptimize(solve_tslp(inst));
}
BENCHMARK(BM_Tslp)->RangeMultiplier(2)->Range(8, 256);

}  // namespace

BENCHMARK_MAIN();
