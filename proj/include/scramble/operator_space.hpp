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

#ifndef SCRAMBLE_OPERATOR_SPACE_HPP
#define SCRAMBLE_OPERATOR_SPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "scramble/pauli.hpp"
#include "scramble/types.hpp"

namespace scramble {

/// Square complex matrix on a d^n dimensional Hilbert space.
class DenseOperator {
   public:
    DenseOperator() = default;
    DenseOperator(int n, int d, Matrix entries);

    static DenseOperator identity(int n, int d = 2);
    static DenseOperator from_pauli(const PauliOp& p);

    int n() const { return n_; }
    int d() const { return d_; }
    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix& matrix() const { return entries_; }

    /// ||U^dag U - I||_max <= tol. Cached for the default tolerance.
    bool is_unitary(double tol = tol::kConstruction) const;
    bool is_hermitian(double tol = tol::kConstruction) const;

    /// Throws NumericalError when is_unitary(tol) fails.
    const DenseOperator& require_unitary(double tol = tol::kConstruction) const;

    DenseOperator adjoint() const;
    DenseOperator operator*(const DenseOperator& other) const;
    DenseOperator scaled(Complex factor) const;

   private:
    int n_ = 0;
    int d_ = 2;
    Matrix entries_;
    mutable std::optional<bool> unitary_;
};

/// Pauli spectrum p_a = |tr(O P_a)|^2 / d^{2n}, stored densely by key.
struct PauliSpectrum {
    int n = 0;
    int d = 2;
    std::vector<double> probs;

    double total() const;
    double operator[](std::uint64_t key) const { return probs[static_cast<std::size_t>(key)]; }
};

/// tr(o1^dag o2) / d^n.
Complex hs_inner(const DenseOperator& o1, const DenseOperator& o2);
double hs_norm(const DenseOperator& o);

/// Throws NumericalError unless ||o||_2 = 1 +- 1e-9.
void require_normalized(const DenseOperator& o);

/// Pauli spectrum of a normalized operator.
PauliSpectrum pauli_spectrum(const DenseOperator& o);

/// Complex expansion coefficients c_a = <P_a, O> over all keys. No
/// normalization requirement.
std::vector<Complex> pauli_coefficients(const DenseOperator& o);

/// Real coefficients of a Hermitian qubit operator in the basis of
/// hermitian_qubit_pauli: alpha_c = tr(O P_c) / 2^n. Imaginary parts above
/// 1e-9 raise NumericalError.
std::vector<double> hermitian_coefficients(const DenseOperator& o);

/// Average Pauli weight W(O) = sum_a |a| p_a.
double avg_pauli_weight(const DenseOperator& o);
double avg_pauli_weight(const PauliSpectrum& spectrum);

/// Shannon entropy (natural log) of the Pauli spectrum.
double qfe(const DenseOperator& o);
double qfe(const PauliSpectrum& spectrum);

/// u^dag o u.
DenseOperator conjugate(const DenseOperator& u, const DenseOperator& o);

/// Weight of each key for the given (n, d), in key order.
std::vector<int> key_weights(int n, int d);

}  // namespace scramble

#endif  // SCRAMBLE_OPERATOR_SPACE_HPP
