// Copyright 2026 The gcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "gcf/divisors.hpp"
#include "gcf/factor.hpp"
#include "gcf/nilpotent.hpp"
#include "gcf/polytype.hpp"
#include "gcf/simtype.hpp"
#include "gcf/text.hpp"

using namespace gcf;

namespace {

Poly random_monic(const Field& F, int n, std::mt19937_64& rng) {
  std::vector<FieldElem> c(static_cast<std::size_t>(n) + 1, F.one());
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = FieldElem(static_cast<std::uint32_t>(rng() % F.order()));
  return Poly(F, c);
}

Matrix random_matrix(const Field& F, std::size_t n, std::mt19937_64& rng) {
  Matrix a = Matrix::square(F, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = FieldElem(static_cast<std::uint32_t>(rng() % F.order()));
  return a;
}

void BM_Factor(benchmark::State& state) {
  const Field F = Field::prime(static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<Poly> polys;
  for (int i = 0; i < 16; ++i) polys.push_back(random_monic(F, static_cast<int>(state.range(1)), rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor(polys[k++ % polys.size()]));
}
BENCHMARK(BM_Factor)->Args({2, 16})->Args({2, 64})->Args({3, 32})->Args({101, 32});

void BM_SimtypeOfGcf(benchmark::State& state) {
  const Field F = Field::prime(3);
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const Poly f = random_monic(F, n, rng);
  const Poly g = random_monic(F, n - 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(simtype_of_gcf(f, g));
}
BENCHMARK(BM_SimtypeOfGcf)->Arg(8)->Arg(16)->Arg(32);

void BM_InvariantFactors(benchmark::State& state) {
  const Field F = Field::prime(2);
  std::mt19937_64 rng(3);
  const Matrix a = random_matrix(F, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(a));
}
BENCHMARK(BM_InvariantFactors)->Arg(8)->Arg(16)->Arg(32);

void BM_BruteForceCounterexample(benchmark::State& state) {
  const Matrix a = counterexample_matrix(Field::prime(static_cast<std::uint32_t>(state.range(0))));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(a, {kDefaultSearchBudget, threads}));
}
BENCHMARK(BM_BruteForceCounterexample)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_NilpotentDecide(benchmark::State& state) {
  const Field F = Field::prime(2);
  const NilpotentProfile prof = NilpotentProfile::from_blocks({1, 3, 5, 7, 9});
  for (auto _ : state) benchmark::DoNotOptimize(nilpotent_decide(F, prof));
}
BENCHMARK(BM_NilpotentDecide);

}  // namespace

BENCHMARK_MAIN();
