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

#include "scramble/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scramble/pauli.hpp"

namespace scramble::kernels {

namespace {

using Index = Eigen::Index;

bool use_threads(Exec exec) { return exec == Exec::kParallel && worker_count() > 1; }

// Spreads state-index bits (site i at bit n - i) into the X positions of a
// Pauli key (site i at bit 2(i - 1)).
std::vector<std::uint64_t> x_spread_table(int n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::uint64_t> table(dim);
    for (std::size_t mask = 0; mask < dim; ++mask) {
        std::uint64_t key = 0;
        for (int i = 1; i <= n; ++i) {
            if (mask & (std::size_t{1} << (n - i))) {
                key |= std::uint64_t{1} << (2 * (i - 1));
            }
        }
        table[mask] = key;
    }
    return table;
}

template <typename T>
void fwht_impl(std::span<T> values) {
    const std::size_t size = values.size();
    if (size & (size - 1)) {
        throw Error("Walsh-Hadamard transform length must be a power of two");
    }
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * half) {
            for (std::size_t j = block; j < block + half; ++j) {
                const T u = values[j];
                const T v = values[j + half];
                values[j] = u + v;
                values[j + half] = u - v;
            }
        }
    }
}

// Digits of j in base d, site 1 most significant.
void digits_of(std::size_t j, int n, int d, std::vector<int>& out) {
    for (int i = n - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(j % static_cast<std::size_t>(d));
        j /= static_cast<std::size_t>(d);
    }
}

}  // namespace

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_worker_count(int workers) {
#ifdef _OPENMP
    if (workers > 0) {
        omp_set_num_threads(workers);
    }
#else
    (void)workers;
#endif
}

void fwht(std::span<double> values) { fwht_impl(values); }
void fwht(std::span<Complex> values) { fwht_impl(values); }

std::vector<Complex> pauli_coefficients_reference(const Matrix& o, int n, int d) {
    const std::size_t dim = ipow(static_cast<std::size_t>(d), n);
    const std::size_t keys = dim * dim;
    std::vector<Complex> out(keys);
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (std::uint64_t key = 0; key < keys; ++key) {
        const auto a = SymplecticVector::from_key(n, d, key);
        Complex acc = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            digits_of(j, n, d, digits);
            int exponent = 0;
            std::size_t target = 0;
            for (int i = 0; i < n; ++i) {
                const int digit = digits[static_cast<std::size_t>(i)];
                exponent += 2 * a.site(i).t * digit;
                target = target * static_cast<std::size_t>(d) + static_cast<std::size_t>((digit + a.site(i).s) % d);
            }
            // <j| P^dag O |j> = conj(P_{target, j}) O_{target, j}
            acc += std::conj(root_of_unity_2d(exponent, d)) * o(static_cast<Index>(target), static_cast<Index>(j));
        }
        out[key] = acc / static_cast<double>(dim);
    }
    return out;
}

std::vector<Complex> pauli_coefficients_qubit(const Matrix& o, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const auto spread = x_spread_table(n);
    std::vector<Complex> out(dim * dim);
    std::vector<Complex> column(dim);
    const double scale = 1.0 / static_cast<double>(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        // tr((X^x Z^z)^dag O) = sum_j (-1)^{j.z} O_{j^x, j}
        for (std::size_t j = 0; j < dim; ++j) {
            column[j] = o(static_cast<Index>(j ^ x), static_cast<Index>(j));
        }
        fwht(std::span<Complex>(column));
        for (std::size_t z = 0; z < dim; ++z) {
            out[spread[x] | (spread[z] << 1)] = column[z] * scale;
        }
    }
    return out;
}

Matrix apply_pauli_left(const Matrix& u, const PauliOp& p) {
    const int n = p.n();
    const int d = p.d();
    Matrix out(u.rows(), u.cols());
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (Index j = 0; j < u.rows(); ++j) {
        digits_of(static_cast<std::size_t>(j), n, d, digits);
        int exponent = p.phase();
        std::size_t target = 0;
        for (int i = 0; i < n; ++i) {
            const int digit = digits[static_cast<std::size_t>(i)];
            exponent += 2 * p.site(i).t * digit;
            target = target * static_cast<std::size_t>(d) + static_cast<std::size_t>((digit + p.site(i).s) % d);
        }
        out.row(static_cast<Index>(target)) = root_of_unity_2d(exponent, d) * u.row(j);
    }
    return out;
}

Matrix apply_hermitian_pauli_left(const Matrix& u, int n, std::uint64_t key) {
    const auto m = qubit::masks_of_key(n, key);
    const int ys = __builtin_popcountll(m.x & m.z);
    static const Complex kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex phase = kIPow[ys % 4];
    Matrix out(u.rows(), u.cols());
    for (Index k = 0; k < u.rows(); ++k) {
        const auto j = static_cast<std::uint64_t>(k) ^ m.x;
        const double sign = (__builtin_popcountll(j & m.z) & 1) ? -1.0 : 1.0;
        out.row(k) = (phase * sign) * u.row(static_cast<Index>(j));
    }
    return out;
}

RealMatrix qubit_transfer_matrix_reference(const Matrix& u, int n) {
    const auto keys = std::size_t{1} << (2 * n);
    RealMatrix out(static_cast<Index>(keys), static_cast<Index>(keys));
    std::vector<Matrix> paulis;
    paulis.reserve(keys);
    for (std::uint64_t key = 0; key < keys; ++key) {
        paulis.push_back(hermitian_qubit_pauli(SymplecticVector::from_key(n, 2, key)));
    }
    const double scale = 1.0 / static_cast<double>(std::size_t{1} << n);
    for (std::uint64_t a = 0; a < keys; ++a) {
        const Matrix q = u.adjoint() * paulis[a] * u;
        for (std::uint64_t c = 0; c < keys; ++c) {
            out(static_cast<Index>(a), static_cast<Index>(c)) = (paulis[c] * q).trace().real() * scale;
        }
    }
    return out;
}

RealMatrix qubit_transfer_matrix(const Matrix& u, int n, Exec exec) {
    const auto keys = static_cast<std::int64_t>(std::size_t{1} << (2 * n));
    RealMatrix out(keys, keys);
    const Matrix u_dag = u.adjoint();
#pragma omp parallel for schedule(dynamic) if (use_threads(exec))
    for (std::int64_t a = 0; a < keys; ++a) {
        const Matrix q = u_dag * apply_hermitian_pauli_left(u, n, static_cast<std::uint64_t>(a));
        const auto coeffs = pauli_coefficients_qubit(q, n);
        for (std::int64_t c = 0; c < keys; ++c) {
            // Hermitian basis element i^y X^x Z^z: alpha_c = (-i)^y c_{x,z}.
            const auto ck = static_cast<std::uint64_t>(c);
            const int ys = __builtin_popcountll(ck & (ck >> 1) & 0x5555555555555555ULL) % 4;
            const Complex v = coeffs[static_cast<std::size_t>(c)];
            double alpha = 0.0;
            switch (ys) {
                case 0: alpha = v.real(); break;
                case 1: alpha = v.imag(); break;
                case 2: alpha = -v.real(); break;
                default: alpha = -v.imag(); break;
            }
            out(a, c) = alpha;
        }
    }
    return out;
}

RealMatrix otoc_table_reference(const RealMatrix& transfer) {
    const Index keys = transfer.rows();
    RealMatrix out(keys, keys);
    for (Index a = 0; a < keys; ++a) {
        for (Index b = 0; b < keys; ++b) {
            double acc = 0.0;
            for (Index c = 0; c < keys; ++c) {
                const double alpha = transfer(a, c);
                acc += alpha * alpha *
                       qubit::commutation_sign(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(b));
            }
            out(a, b) = acc;
        }
    }
    return out;
}

namespace {

void otoc_row(const RealMatrix& transfer, Index a, std::vector<double>& scratch, double* row_out) {
    const Index keys = transfer.cols();
    for (Index c = 0; c < keys; ++c) {
        const double alpha = transfer(a, c);
        scratch[static_cast<std::size_t>(c)] = alpha * alpha;
    }
    fwht(std::span<double>(scratch));
    for (Index b = 0; b < keys; ++b) {
        row_out[b] = scratch[qubit::swap_xz(static_cast<std::uint64_t>(b))];
    }
}

}  // namespace

RealMatrix otoc_table(const RealMatrix& transfer, Exec exec) {
    const Index keys = transfer.rows();
    RealMatrix out(keys, keys);
#pragma omp parallel if (use_threads(exec))
    {
        std::vector<double> scratch(static_cast<std::size_t>(keys));
#pragma omp for schedule(static)
        for (Index a = 0; a < keys; ++a) {
            otoc_row(transfer, a, scratch, out.row(a).data());
        }
    }
    return out;
}

OtocScan otoc_magic_scan_reference(const RealMatrix& transfer) {
    const RealMatrix table = otoc_table_reference(transfer);
    OtocScan best{-1.0, 0, 0};
    for (Index a = 0; a < table.rows(); ++a) {
        for (Index b = 0; b < table.cols(); ++b) {
            const double value = 1.0 - std::abs(table(a, b));
            if (value > best.value) {
                best = {value, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)};
            }
        }
    }
    return best;
}

OtocScan otoc_magic_scan(const RealMatrix& transfer, Exec exec) {
    const Index keys = transfer.rows();
    std::vector<OtocScan> per_row(static_cast<std::size_t>(keys));
#pragma omp parallel if (use_threads(exec))
    {
        std::vector<double> scratch(static_cast<std::size_t>(keys));
        std::vector<double> row(static_cast<std::size_t>(keys));
#pragma omp for schedule(static)
        for (Index a = 0; a < keys; ++a) {
            otoc_row(transfer, a, scratch, row.data());
            OtocScan best{-1.0, static_cast<std::uint64_t>(a), 0};
            for (Index b = 0; b < keys; ++b) {
                const double value = 1.0 - std::abs(row[static_cast<std::size_t>(b)]);
                if (value > best.value) {
                    best.value = value;
                    best.b = static_cast<std::uint64_t>(b);
                }
            }
            per_row[static_cast<std::size_t>(a)] = best;
        }
    }
    OtocScan best{-1.0, 0, 0};
    for (const auto& r : per_row) {
        if (r.value > best.value) {
            best = r;
        }
    }
    return best;
}

Matrix pauli_images_reference(const Conjugator& conjugated, int n, int d, std::span<const std::uint64_t> basis) {
    const std::size_t keys = ipow(static_cast<std::size_t>(d), 2 * n);
    Matrix out(static_cast<Index>(keys), static_cast<Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto coeffs = pauli_coefficients_reference(conjugated(basis[j]), n, d);
        for (std::size_t c = 0; c < keys; ++c) {
            out(static_cast<Index>(c), static_cast<Index>(j)) = coeffs[c];
        }
    }
    return out;
}

Matrix pauli_images(const Conjugator& conjugated, int n, int d, std::span<const std::uint64_t> basis, Exec exec) {
    const std::size_t keys = ipow(static_cast<std::size_t>(d), 2 * n);
    Matrix out(static_cast<Index>(keys), static_cast<Index>(basis.size()));
    const auto count = static_cast<std::int64_t>(basis.size());
#pragma omp parallel for schedule(dynamic) if (use_threads(exec))
    for (std::int64_t j = 0; j < count; ++j) {
        const Matrix image = conjugated(basis[static_cast<std::size_t>(j)]);
        const auto coeffs = d == 2 ? pauli_coefficients_qubit(image, n) : pauli_coefficients_reference(image, n, d);
        for (std::size_t c = 0; c < keys; ++c) {
            out(static_cast<Index>(c), j) = coeffs[c];
        }
    }
    return out;
}

}  // namespace scramble::kernels
