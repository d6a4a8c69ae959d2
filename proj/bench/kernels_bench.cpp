// Copyright 2026 The Scramble Authors
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

#include "scramble/clifford.hpp"
#include "scramble/kernels.hpp"
#include "scramble/rng.hpp"

namespace {

using scramble::Matrix;
using scramble::kernels::Exec;

Matrix unitary(int n) {
    scramble::Rng rng(1234);
    return scramble::haar_unitary(Eigen::Index{1} << n, rng);
}

void transfer_reference(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix u = unitary(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scramble::kernels::qubit_transfer_matrix_reference(u, n));
    }
}

template <Exec E>
void transfer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix u = unitary(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scramble::kernels::qubit_transfer_matrix(u, n, E));
    }
}

void scan_reference(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto t = scramble::kernels::qubit_transfer_matrix(unitary(n), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scramble::kernels::otoc_magic_scan_reference(t));
    }
}

template <Exec E>
void scan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto t = scramble::kernels::qubit_transfer_matrix(unitary(n), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scramble::kernels::otoc_magic_scan(t, E));
    }
}

}  // namespace

BENCHMARK(transfer_reference)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(transfer<Exec::kSerial>)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(transfer<Exec::kParallel>)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_reference)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<Exec::kSerial>)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<Exec::kParallel>)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
