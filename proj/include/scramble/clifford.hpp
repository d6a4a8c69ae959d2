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

#ifndef SCRAMBLE_CLIFFORD_HPP
#define SCRAMBLE_CLIFFORD_HPP

#include <optional>
#include <span>
#include <vector>

#include "scramble/operator_space.hpp"
#include "scramble/pauli.hpp"
#include "scramble/rng.hpp"

namespace scramble {

/// n-qubit Clifford unitary U stored by its Heisenberg action on generators:
/// x_image(i) = U^dag X_i U and z_image(i) = U^dag Z_i U, each a Hermitian
/// Pauli with sign +-1. Generator indices are 0-based (site i + 1).
class CliffordTableau {
   public:
    CliffordTableau() = default;

    static CliffordTableau identity(int n);

    /// Validates Hermiticity, signs and the symplectic commutation relations.
    static CliffordTableau from_images(std::vector<PauliOp> x_images, std::vector<PauliOp> z_images);

    int n() const { return static_cast<int>(x_images_.size()); }
    const PauliOp& x_image(int i) const { return x_images_[static_cast<std::size_t>(i)]; }
    const PauliOp& z_image(int i) const { return z_images_[static_cast<std::size_t>(i)]; }
    const std::vector<PauliOp>& x_images() const { return x_images_; }
    const std::vector<PauliOp>& z_images() const { return z_images_; }

    /// U^dag p U, exact in sign. O(n^2).
    PauliOp conjugate(const PauliOp& p) const;

    /// Tableau of next * this (this circuit applied first).
    CliffordTableau then(const CliffordTableau& next) const;

    /// Places a k-qubit tableau on the given 1-based sites of an n-qubit register.
    CliffordTableau embedded(int n, std::span<const int> sites) const;

    bool operator==(const CliffordTableau&) const = default;

   private:
    std::vector<PauliOp> x_images_;
    std::vector<PauliOp> z_images_;
};

/// +1 or -1 for a signed Hermitian qubit Pauli; throws for non-Hermitian phases.
int hermitian_sign(const PauliOp& p);

/// Signed Hermitian qubit Pauli sign * hermitian_pauli_op(v).
PauliOp signed_hermitian(const SymplecticVector& v, int sign);

/// Uniformly random n-qubit Clifford (modulo global phase).
///
/// Builds a uniformly random symplectic basis by symplectic Gram-Schmidt: each
/// X image is a uniform nonzero vector of the symplectic complement of the
/// pairs chosen so far, each Z image a uniform vector of that complement with
/// unit symplectic product against it. Signs are independent fair bits.
CliffordTableau random_clifford(int n, Rng& rng);

PauliOp tableau_conjugate(const CliffordTableau& t, const PauliOp& p);

/// Dense unitary realizing t, with global phase fixed so the first entry of
/// the first column above 1e-9 in modulus is real and positive.
DenseOperator tableau_to_dense(const CliffordTableau& t);

struct CliffordCheck {
    bool is_clifford = false;
    /// First generator whose image is not a single Pauli.
    std::optional<PauliOp> witness;
    /// Tableau read off the images, when is_clifford holds.
    std::optional<CliffordTableau> tableau;
};

/// True iff for every generator g the Pauli spectrum of u^dag g u has a key
/// with probability >= 1 - tol.
CliffordCheck is_clifford(const DenseOperator& u, double tol = tol::kConstruction);

/// Swap network plus single-qudit unitaries: U = Perm * (L_1 ⊗ ... ⊗ L_n),
/// where Perm moves the content of site i to site perm[i] (0-based).
struct NonEntanglingUnitary {
    int n = 0;
    int d = 2;
    std::vector<int> perm;
    std::vector<Matrix> locals;

    DenseOperator to_dense() const;
};

/// Haar-random dim x dim unitary (QR of a complex Ginibre matrix with the
/// diagonal phase fix).
Matrix haar_unitary(Eigen::Index dim, Rng& rng);

NonEntanglingUnitary random_nonentangling(int n, int d, Rng& rng);

/// Dense operator of a site permutation on n qudits.
Matrix permutation_operator(int n, int d, std::span<const int> perm);

}  // namespace scramble

#endif  // SCRAMBLE_CLIFFORD_HPP
