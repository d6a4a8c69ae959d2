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

// Data-parallel inner loops. Every kernel has a serial reference that follows
// the defining formula directly and a fast path that is OpenMP-parallel over
// an outer index with a deterministic, index-ordered reduction. The reference
// paths exist for tests and benchmarks.

#ifndef SCRAMBLE_KERNELS_HPP
#define SCRAMBLE_KERNELS_HPP

#include <cstdint>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "scramble/pauli.hpp"
#include "scramble/types.hpp"

namespace scramble::kernels {

using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class Exec { kSerial, kParallel };

/// Number of OpenMP workers the parallel kernels will use (1 without OpenMP).
int worker_count();
void set_worker_count(int workers);

/// Calls fn(i) for i in [0, count), spread over the OpenMP workers for
/// kParallel. The first exception thrown by any task is rethrown afterwards.
template <typename Fn>
void parallel_for(std::size_t count, Exec exec, Fn&& fn) {
    std::exception_ptr failure;
    const bool threaded = exec == Exec::kParallel && worker_count() > 1;
    const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) if (threaded)
    for (long long i = 0; i < total; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(scramble_parallel_for)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// In-place unnormalized Walsh-Hadamard transform; size must be a power of 2.
void fwht(std::span<double> values);
void fwht(std::span<Complex> values);

/// c_a = tr(P_a^dag O) / d^n for every key a by summing the defining trace.
/// Cost O(n d^{3n}).
std::vector<Complex> pauli_coefficients_reference(const Matrix& o, int n, int d);

/// Qubit-only c_a via one Walsh-Hadamard transform per X mask. Cost O(n 4^n).
std::vector<Complex> pauli_coefficients_qubit(const Matrix& o, int n);

/// Left-multiplies u by the generalized Pauli p in O(d^{2n}).
Matrix apply_pauli_left(const Matrix& u, const PauliOp& p);

/// Left-multiplies u by the Hermitian qubit Pauli with the given key.
Matrix apply_hermitian_pauli_left(const Matrix& u, int n, std::uint64_t key);

/// R(a, c) = tr(P_c U^dag P_a U) / 2^n for Hermitian qubit Paulis: row a holds
/// the real expansion of U^dag P_a U. The reference builds every Pauli densely
/// and sums the defining traces.
RealMatrix qubit_transfer_matrix_reference(const Matrix& u, int n);
RealMatrix qubit_transfer_matrix(const Matrix& u, int n, Exec exec = Exec::kParallel);

/// T(a, b) = sum_c R(a, c)^2 f(c, b) with f = +-1 the commutation sign. The
/// reference sums over c directly (O(64^n)).
RealMatrix otoc_table_reference(const RealMatrix& transfer);

/// Same table via a Walsh-Hadamard transform of each squared row.
RealMatrix otoc_table(const RealMatrix& transfer, Exec exec = Exec::kParallel);

struct OtocScan {
    double value = 0.0;  // max over (a, b) of 1 - |T(a, b)|
    std::uint64_t a = 0;
    std::uint64_t b = 0;
};

/// Maximum of 1 - |T(a, b)| without materializing T. Ties resolve to the
/// first (a, b) in row-major key order.
OtocScan otoc_magic_scan_reference(const RealMatrix& transfer);
OtocScan otoc_magic_scan(const RealMatrix& transfer, Exec exec = Exec::kParallel);

/// Produces U^dag P U for the phase-free Pauli with the given key. Must be
/// safe to call concurrently.
using Conjugator = std::function<Matrix(std::uint64_t key)>;

/// Expansion coefficients <P_c, U^dag P_a U> (phase-free P_a, P_c) for each
/// basis key a; column j corresponds to basis[j] and row c to key c.
Matrix pauli_images_reference(const Conjugator& conjugated, int n, int d,
                              std::span<const std::uint64_t> basis);
Matrix pauli_images(const Conjugator& conjugated, int n, int d, std::span<const std::uint64_t> basis,
                    Exec exec = Exec::kParallel);

}  // namespace scramble::kernels

#endif  // SCRAMBLE_KERNELS_HPP
