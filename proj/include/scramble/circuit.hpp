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

#ifndef SCRAMBLE_CIRCUIT_HPP
#define SCRAMBLE_CIRCUIT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scramble/clifford.hpp"
#include "scramble/operator_space.hpp"

namespace scramble {

struct Gate {
    enum class Kind { kNamed, kPhase, kTableau, kMatrix };

    Kind kind = Kind::kNamed;
    std::string name;        // H, S, T, X, Y, Z, CNOT, CZ, SWAP, PHASE, TABLEAU, MATRIX
    std::vector<int> sites;  // 1-based; sites[0] is the most significant local qudit
    double eps = 0.0;        // PHASE only
    std::optional<CliffordTableau> tableau;
    Matrix matrix;           // MATRIX only
    int layer = -1;          // brickwork layer, -1 when unassigned

    static Gate named(std::string name, std::vector<int> sites, int layer = -1);
    static Gate phase(double eps, int site, int layer = -1);
    static Gate clifford(CliffordTableau tableau, std::vector<int> sites, int layer = -1);
    static Gate raw(Matrix matrix, std::vector<int> sites, int layer = -1);

    /// d^k x d^k matrix on the gate's own sites.
    Matrix local_matrix(int d = 2) const;

    /// Local tableau when the gate is Clifford, read off exactly for named and
    /// tableau gates and from the matrix otherwise.
    std::optional<CliffordTableau> local_tableau() const;
};

/// diag(1, e^{i eps}).
Matrix phase_gate(double eps);

/// Ordered gate list; the unitary is U = g_m ... g_2 g_1.
class Circuit {
   public:
    Circuit() = default;
    Circuit(int n, int d = 2);

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<Gate>& gates() const { return gates_; }

    /// Validates site ranges, gate shapes, unitarity (1e-9) and disjointness of
    /// gates sharing a layer index.
    void append(Gate gate);

    DenseOperator to_dense() const;

    /// Composite tableau when every gate is Clifford.
    std::optional<CliffordTableau> to_tableau() const;

    /// U^dag o U applied gate by gate, O(d^{2n} * d^k) per gate.
    Matrix heisenberg(const Matrix& o) const;

    std::size_t count(std::string_view name) const;

   private:
    int n_ = 0;
    int d_ = 2;
    std::vector<Gate> gates_;
};

/// Left-multiplies m by the gate g acting on the given 1-based sites.
void apply_local_left(Matrix& m, const Matrix& g, std::span<const int> sites, int n, int d);

/// Right-multiplies m by the gate g acting on the given 1-based sites.
void apply_local_right(Matrix& m, const Matrix& g, std::span<const int> sites, int n, int d);

}  // namespace scramble

#endif  // SCRAMBLE_CIRCUIT_HPP
