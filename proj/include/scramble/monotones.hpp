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

#ifndef SCRAMBLE_MONOTONES_HPP
#define SCRAMBLE_MONOTONES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scramble/circuit.hpp"
#include "scramble/clifford.hpp"
#include "scramble/kernels.hpp"
#include "scramble/operator_space.hpp"
#include "scramble/rng.hpp"

namespace scramble {

class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

enum class Method { kExact, kSampled, kCliffordCertificate };

std::string to_string(Method method);

struct MonotoneReport {
    std::string measure;
    double value = 0.0;
    Method method = Method::kExact;

    /// OTOC magic: maximizing Pauli pair (P_a conjugated, P_b fixed).
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness_pair;
    /// Pauli growth: maximizing eigenvector in the weight-1 basis.
    std::vector<std::uint64_t> witness_basis;
    std::vector<Complex> witness_vector;
    /// Pauli-restricted growth and magic entropy: maximizing weight-1 key.
    std::optional<std::uint64_t> witness_key;
    std::optional<CliffordTableau> certificate;

    std::size_t samples_used = 0;
    std::optional<std::uint64_t> seed;
    std::map<std::string, double> diagnostics;
};

// --- OTOC -------------------------------------------------------------------

/// <U^dag P_a U P_b U^dag P_a U P_b> for arbitrary operators pa, pb.
Complex otoc_complex(const DenseOperator& u, const DenseOperator& pa, const DenseOperator& pb);

/// Qubit OTOC with Hermitian Paulis; real in [-1, 1]. Throws NumericalError if
/// the imaginary part exceeds 1e-6.
double otoc(const DenseOperator& u, const SymplecticVector& a, const SymplecticVector& b);

/// OTOC from the real Hermitian expansion alpha of U^dag P_a U:
/// sum_c alpha_c^2 f(c, b), f = +-1 the commutation sign.
double otoc_fast(std::span<const double> alpha, std::uint64_t b);

/// Exactly +-1: the commutation sign of U^dag P_a U with P_b.
int otoc_clifford(const CliffordTableau& t, const SymplecticVector& a, const SymplecticVector& b);

// --- OTOC magic ---------------------------------------------------------------

struct OtocMagicOptions {
    int max_qubits = 5;
    kernels::Exec exec = kernels::Exec::kParallel;
    /// Spectrum-mass tolerance of the Clifford fast path. Kept far below the
    /// 1e-9 is_clifford default so a near-Clifford U never reports 0 with an
    /// error above 1e-12.
    double clifford_tol = 1e-13;
};

/// max over all Pauli pairs of 1 - |OTOC|, including identities.
MonotoneReport otoc_magic_exact(const DenseOperator& u, const OtocMagicOptions& options = {});
MonotoneReport otoc_magic_exact(const CliffordTableau& t);

/// max of 1 - |OTOC| over k uniform random pairs; a lower bound on the exact
/// value. When k covers all 16^n pairs the pairs are enumerated instead.
MonotoneReport otoc_magic_sampled(const DenseOperator& u, std::size_t k, Rng& rng);

/// 1 - |cos 2 eps|.
double phase_gate_magic(double eps);

// --- Pauli growth -------------------------------------------------------------

/// M_ab = sum_c |c| conj(<P_c, U^dag P_a U>) <P_c, U^dag P_b U> over the
/// weight-1 basis a, b in key order.
struct GrowthMatrix {
    int n = 0;
    int d = 2;
    std::vector<std::uint64_t> basis;
    Matrix entries;
    /// Column j: expansion of U^dag P_{basis[j]} U over all keys.
    Matrix images;
};

struct GrowthOptions {
    int max_qubits = 10;
    kernels::Exec exec = kernels::Exec::kParallel;
};

GrowthMatrix growth_matrix(const DenseOperator& u, const GrowthOptions& options = {});
GrowthMatrix growth_matrix(const Circuit& circuit, const GrowthOptions& options = {});

/// lambda_max(M) - 1 with the eigenvector as witness.
MonotoneReport pauli_growth(const GrowthMatrix& m);
MonotoneReport pauli_growth(const DenseOperator& u, const GrowthOptions& options = {});

/// max over weight-1 Paulis P_a of W(U^dag P_a U) - 1.
MonotoneReport pauli_growth_pauli(const GrowthMatrix& m);
MonotoneReport pauli_growth_pauli(const DenseOperator& u, const GrowthOptions& options = {});

/// max over weight-1 Paulis of the Pauli-spectrum entropy of U^dag P_a U.
/// Diagnostics carry growth_plus_one = G + 1 and ratio = M / (G + 1).
MonotoneReport magic_entropy(const GrowthMatrix& m);
MonotoneReport magic_entropy(const DenseOperator& u, const GrowthOptions& options = {});

/// W(U^dag O U) - 1 for O = sum_j c_j P_{basis[j]} computed by dense
/// conjugation, independent of the growth matrix.
double weight_growth_of(const DenseOperator& u, std::span<const std::uint64_t> basis, std::span<const Complex> coeffs);

}  // namespace scramble

#endif  // SCRAMBLE_MONOTONES_HPP
