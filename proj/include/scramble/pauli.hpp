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

#ifndef SCRAMBLE_PAULI_HPP
#define SCRAMBLE_PAULI_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scramble/types.hpp"

namespace scramble {

/// Exponents (s, t) of X^s Z^t on one site, both in [0, d).
struct SiteExponent {
    int s = 0;
    int t = 0;

    bool is_identity() const { return s == 0 && t == 0; }
    auto operator<=>(const SiteExponent&) const = default;
};

/// Phase-free content of a generalized Pauli operator: ⊗_i X^{s_i} Z^{t_i}.
///
/// Integer key encoding (stable, used in files and for enumeration order):
/// little-endian mixed radix with (s, t) interleaved per site,
///
///     key = sum_i (s_i + d * t_i) * d^(2 (i - 1)),    sites i = 1..n.
///
/// For qubits this places X_i at bit 2(i-1) and Z_i at bit 2(i-1)+1.
class SymplecticVector {
   public:
    SymplecticVector() = default;
    SymplecticVector(int n, int d);
    SymplecticVector(int d, std::vector<SiteExponent> sites);

    static SymplecticVector from_key(int n, int d, std::uint64_t key);

    std::uint64_t key() const;
    int n() const { return static_cast<int>(sites_.size()); }
    int d() const { return d_; }
    const std::vector<SiteExponent>& sites() const { return sites_; }
    const SiteExponent& site(int i) const { return sites_[static_cast<std::size_t>(i)]; }

    /// Number of non-identity sites.
    int weight() const;

    bool operator==(const SymplecticVector&) const = default;

   private:
    int d_ = 2;
    std::vector<SiteExponent> sites_;
};

/// Generalized n-qudit Pauli operator e^{i pi k / d} ⊗_i X^{s_i} Z^{t_i}.
///
/// Exponents are reduced mod d and the phase exponent k mod 2d, so products
/// are exact. X|j> = |j+1 mod d>, Z|j> = w^j |j> with w = e^{2 pi i / d}.
class PauliOp {
   public:
    PauliOp() = default;
    explicit PauliOp(SymplecticVector v, int phase = 0);
    PauliOp(int n, int d);

    /// Single-site X^s Z^t at 1-based site index.
    static PauliOp single(int n, int d, int site, int s, int t);

    int n() const { return vec_.n(); }
    int d() const { return vec_.d(); }
    int phase() const { return phase_; }
    const SymplecticVector& vec() const { return vec_; }
    const SiteExponent& site(int i) const { return vec_.site(i); }

    PauliOp with_phase(int phase) const;

    bool operator==(const PauliOp&) const = default;

    /// Text form, e.g. "X1 Z3" or "-Y2" for qubits and "X1^2 Z1^1" for qudits.
    ///
    /// Qubit sites with s = t = 1 print as Y = iXZ and the phase is adjusted to
    /// match; a leading "+", "-", "i", "-i" carries any remaining phase. Qudit
    /// phases print as a leading "w^k" token meaning e^{i pi k / d}.
    std::string str() const;
    static PauliOp parse(std::string_view text, int n, int d);

   private:
    SymplecticVector vec_;
    int phase_ = 0;
};

int weight(const PauliOp& p);

/// e^{i pi m / d}; exact on the real and imaginary axes.
Complex root_of_unity_2d(int m, int d);

/// Exact product p * q with the phase tracked modulo 2d.
PauliOp multiply(const PauliOp& p, const PauliOp& q);

/// Exponent m in [0, d) with P_a P_b = w^m P_b P_a, w = e^{2 pi i / d}.
///
/// Convention (fixed by the dense matrices, ZX = w XZ):
///     m = sum_i (t_i s'_i - s_i t'_i) mod d.
int commutation_exponent(const SymplecticVector& a, const SymplecticVector& b);

/// The root of unity w^m from commutation_exponent; exactly +-1 for qubits.
Complex commutation_phase(const SymplecticVector& a, const SymplecticVector& b);

/// d^n x d^n matrix. Site 1 is the leftmost (most significant) tensor factor.
Matrix to_dense(const PauliOp& p);

/// Keys of all d^{2n} vectors in ascending key order, optionally restricted to
/// one weight.
std::vector<SymplecticVector> enumerate_paulis(int n, int d,
                                               std::optional<int> weight_filter = std::nullopt);

/// Hermitian qubit Pauli with Y = iXZ per site: i^{sum_i s_i t_i} X^s Z^t.
Matrix hermitian_qubit_pauli(const SymplecticVector& a);

/// PauliOp equal to hermitian_qubit_pauli(a).
PauliOp hermitian_pauli_op(const SymplecticVector& a);

namespace qubit {

/// State-index masks of a qubit Pauli key. Site i maps to bit (n - i).
struct Masks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
};

Masks masks_of_key(int n, std::uint64_t key);

/// Swap the X and Z bits of every site; popcount(c & swap_xz(b)) is the
/// symplectic product of keys c and b.
std::uint64_t swap_xz(std::uint64_t key);

/// (-1)^{symplectic product} of two qubit keys.
inline int commutation_sign(std::uint64_t a, std::uint64_t b) {
    return (__builtin_popcountll(a & swap_xz(b)) & 1) ? -1 : 1;
}

inline int key_weight(std::uint64_t key) {
    std::uint64_t occupied = (key | (key >> 1)) & 0x5555555555555555ULL;
    return __builtin_popcountll(occupied);
}

}  // namespace qubit

}  // namespace scramble

#endif  // SCRAMBLE_PAULI_HPP
