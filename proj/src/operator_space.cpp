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

#include "scramble/operator_space.hpp"

#include <cmath>

#include "scramble/kernels.hpp"

namespace scramble {

DenseOperator::DenseOperator(int n, int d, Matrix entries) : n_(n), d_(d), entries_(std::move(entries)) {
    if (n < 1 || d < 2) {
        throw Error("DenseOperator requires n >= 1 and d >= 2");
    }
    const auto dim = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), n));
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw DimensionMismatch("DenseOperator entries must be " + std::to_string(dim) + "x" + std::to_string(dim) +
                                ", got " + std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
    }
}

DenseOperator DenseOperator::identity(int n, int d) {
    require_dense(n, d);
    const auto dim = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), n));
    return DenseOperator(n, d, Matrix::Identity(dim, dim));
}

DenseOperator DenseOperator::from_pauli(const PauliOp& p) { return DenseOperator(p.n(), p.d(), to_dense(p)); }

bool DenseOperator::is_unitary(double tol) const {
    const bool default_tol = tol == tol::kConstruction;
    if (default_tol && unitary_) {
        return *unitary_;
    }
    const Matrix gram = entries_.adjoint() * entries_;
    const double err = (gram - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
    const bool ok = err <= tol;
    if (default_tol) {
        unitary_ = ok;
    }
    return ok;
}

bool DenseOperator::is_hermitian(double tol) const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

const DenseOperator& DenseOperator::require_unitary(double tol) const {
    if (!is_unitary(tol)) {
        throw NumericalError("operator is not unitary within " + std::to_string(tol));
    }
    return *this;
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(n_, d_, entries_.adjoint()); }

DenseOperator DenseOperator::operator*(const DenseOperator& other) const {
    if (n_ != other.n_ || d_ != other.d_) {
        throw DimensionMismatch("operator product requires matching n and d");
    }
    return DenseOperator(n_, d_, entries_ * other.entries_);
}

DenseOperator DenseOperator::scaled(Complex factor) const { return DenseOperator(n_, d_, entries_ * factor); }

double PauliSpectrum::total() const {
    double sum = 0.0;
    for (double p : probs) {
        sum += p;
    }
    return sum;
}

Complex hs_inner(const DenseOperator& o1, const DenseOperator& o2) {
    if (o1.n() != o2.n() || o1.d() != o2.d()) {
        throw DimensionMismatch("hs_inner requires matching n and d");
    }
    // tr(A^dag B) = sum_ij conj(A_ij) B_ij
    return o1.matrix().conjugate().cwiseProduct(o2.matrix()).sum() / static_cast<double>(o1.dim());
}

double hs_norm(const DenseOperator& o) { return std::sqrt(std::max(0.0, hs_inner(o, o).real())); }

void require_normalized(const DenseOperator& o) {
    const double norm = hs_norm(o);
    if (std::abs(norm - 1.0) > tol::kConstruction) {
        throw NumericalError("operator must have unit normalized Hilbert-Schmidt norm, got " + std::to_string(norm));
    }
}

std::vector<Complex> pauli_coefficients(const DenseOperator& o) {
    require_dense(o.n(), o.d());
    if (o.d() == 2) {
        return kernels::pauli_coefficients_qubit(o.matrix(), o.n());
    }
    return kernels::pauli_coefficients_reference(o.matrix(), o.n(), o.d());
}

PauliSpectrum pauli_spectrum(const DenseOperator& o) {
    require_normalized(o);
    const auto coeffs = pauli_coefficients(o);
    PauliSpectrum out{o.n(), o.d(), std::vector<double>(coeffs.size())};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out.probs[k] = std::norm(coeffs[k]);
    }
    return out;
}

std::vector<double> hermitian_coefficients(const DenseOperator& o) {
    if (o.d() != 2) {
        throw Error("hermitian_coefficients requires qubits");
    }
    const auto coeffs = pauli_coefficients(o);
    std::vector<double> out(coeffs.size());
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
        const int ys = __builtin_popcountll(c & (c >> 1) & 0x5555555555555555ULL) % 4;
        // (-i)^ys * coeff
        Complex alpha = coeffs[c];
        for (int k = 0; k < ys; ++k) {
            alpha *= Complex(0, -1);
        }
        if (std::abs(alpha.imag()) > tol::kConstruction) {
            throw NumericalError("operator is not Hermitian: coefficient " + std::to_string(c) + " has imaginary part " +
                                 std::to_string(alpha.imag()));
        }
        out[c] = alpha.real();
    }
    return out;
}

std::vector<int> key_weights(int n, int d) {
    const std::size_t keys = ipow(static_cast<std::size_t>(d), 2 * n);
    std::vector<int> out(keys);
    if (d == 2) {
        for (std::size_t k = 0; k < keys; ++k) {
            out[k] = qubit::key_weight(k);
        }
        return out;
    }
    for (std::size_t k = 0; k < keys; ++k) {
        out[k] = SymplecticVector::from_key(n, d, k).weight();
    }
    return out;
}

double avg_pauli_weight(const PauliSpectrum& spectrum) {
    const auto weights = key_weights(spectrum.n, spectrum.d);
    double w = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        w += weights[k] * spectrum.probs[k];
    }
    return w;
}

double avg_pauli_weight(const DenseOperator& o) { return avg_pauli_weight(pauli_spectrum(o)); }

double qfe(const PauliSpectrum& spectrum) {
    double h = 0.0;
    for (double p : spectrum.probs) {
        if (p > 0.0) {
            h -= p * std::log(p);
        }
    }
    return std::max(0.0, h);
}

double qfe(const DenseOperator& o) { return qfe(pauli_spectrum(o)); }

DenseOperator conjugate(const DenseOperator& u, const DenseOperator& o) {
    if (u.n() != o.n() || u.d() != o.d()) {
        throw DimensionMismatch("conjugate requires matching n and d");
    }
    u.require_unitary();
    return DenseOperator(o.n(), o.d(), u.matrix().adjoint() * o.matrix() * u.matrix());
}

}  // namespace scramble
