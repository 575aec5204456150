/*
 * Copyright 2026 The idemcomm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "idemcomm/kernels.hpp"
#include "idemcomm/shift_lab.hpp"
#include "idemcomm/sqrtm.hpp"
#include "support/generators.hpp"

using namespace idemcomm;

namespace {

Matrix upper_triangular_input(Index n) {
    testing::Rng rng(static_cast<std::uint64_t>(n));
    Matrix t = testing::random_matrix(n, rng).triangularView<Eigen::Upper>();
    for (Index i = 0; i < n; ++i) t(i, i) += 3.0;
    return t;
}

void BM_TriangularSqrtSerial(benchmark::State& state) {
    const Matrix t = upper_triangular_input(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::sqrt_upper_triangular_serial(t, kPrincipalBranch));
    }
    state.SetComplexityN(state.range(0));
}

void BM_TriangularSqrtParallel(benchmark::State& state) {
    const Matrix t = upper_triangular_input(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::sqrt_upper_triangular_parallel(t, kPrincipalBranch));
    }
    state.counters["threads"] = omp_get_max_threads();
    state.SetComplexityN(state.range(0));
}

void BM_PrimarySqrt(benchmark::State& state) {
    testing::Rng rng(7);
    const Matrix m = testing::random_diagonalizable_off_cut(state.range(0), rng);
    const auto kernel = state.range(1) == 0 ? SqrtKernel::Serial : SqrtKernel::Parallel;
    for (auto _ : state) {
        benchmark::DoNotOptimize(primary_sqrt(m, kPrincipalBranch, {}, kernel));
    }
}

void BM_DenmanBeavers(benchmark::State& state) {
    testing::Rng rng(7);
    const Matrix m = testing::random_diagonalizable_off_cut(state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(primary_sqrt_denman_beavers(m));
}

const std::vector<Index> kDims = {8, 16, 32, 64};
const std::vector<Complex> kMus = {0.3, 0.45, 0.5, 0.6};

void BM_SweepSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(shift_lab::mu_sweep_serial(kDims, kMus, shift_lab::ShiftDirection::Forward));
    }
}

void BM_SweepParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(shift_lab::mu_sweep(kDims, kMus, shift_lab::ShiftDirection::Forward));
    }
    state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_TriangularSqrtSerial)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_TriangularSqrtParallel)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_PrimarySqrt)->ArgsProduct({{32, 128}, {0, 1}});
BENCHMARK(BM_DenmanBeavers)->Arg(32)->Arg(128);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
