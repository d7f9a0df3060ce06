/*
 * Copyright 2026 The troplin authors
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

#include "troplin/determinant.hpp"
#include "troplin/solver.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace troplin;

namespace {

Matrix random_matrix(Flavor f, std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(1, 99);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, Scalar::finite(Rational(num(rng), num(rng))));
    return m;
}

void BM_det_enumeration(benchmark::State& state) {
    const Matrix m = random_matrix(Flavor::MaxPlus, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(det_eps(m));
}
BENCHMARK(BM_det_enumeration)->DenseRange(4, 8);

void BM_det_assignment(benchmark::State& state) {
    const Matrix m = random_matrix(Flavor::MaxPlus, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(det_eps_assignment(m));
}
BENCHMARK(BM_det_assignment)->DenseRange(4, 8)->Arg(16)->Arg(32);

void BM_pseudo_inverse(benchmark::State& state) {
    const Matrix m = random_matrix(Flavor::MaxTimes, static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(pseudo_inverse(m));
}
BENCHMARK(BM_pseudo_inverse)->DenseRange(3, 7);

void BM_solve_normalization(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_matrix(Flavor::MinTimes, n, 3);
    Vector x0(Flavor::MinTimes, n);
    for (std::size_t i = 0; i < n; ++i) x0.set(i, Scalar::finite(Rational(i + 1, 2)));
    const Vector b = mat_vec_mul(m, x0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_normalization(m, b));
}
BENCHMARK(BM_solve_normalization)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
