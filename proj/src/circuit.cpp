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

#include "scramble/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace scramble {

namespace {

using Index = Eigen::Index;

// Tolerance for reading a tableau off a raw or phase gate matrix.
constexpr double kLocalCliffordTol = 1e-14;

Matrix named_matrix(const std::string& name) {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i(0, 1);
    Matrix m;
    if (name == "H") {
        m.resize(2, 2);
        m << r, r, r, -r;
    } else if (name == "S") {
        m = phase_gate(std::numbers::pi / 2);
        m(1, 1) = i;
    } else if (name == "T") {
        m = phase_gate(std::numbers::pi / 4);
    } else if (name == "X") {
        m.resize(2, 2);
        m << 0, 1, 1, 0;
    } else if (name == "Y") {
        m.resize(2, 2);
        m << 0, -i, i, 0;
    } else if (name == "Z") {
        m.resize(2, 2);
        m << 1, 0, 0, -1;
    } else if (name == "CNOT") {
        m = Matrix::Zero(4, 4);
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    } else if (name == "CZ") {
        m = Matrix::Identity(4, 4);
        m(3, 3) = -1;
    } else if (name == "SWAP") {
        m = Matrix::Zero(4, 4);
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    } else {
        throw Error("unknown gate name '" + name + "'");
    }
    return m;
}

int named_arity(const std::string& name) {
    if (name == "CNOT" || name == "CZ" || name == "SWAP") {
        return 2;
    }
    named_matrix(name);
    return 1;
}

// Enumerates the full-register indices touched by a local gate. For every
// assignment of the non-gate sites, `offsets[l]` added to `base` gives the
// index where the gate's local basis state l lives.
struct LocalLayout {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> bases;
};

LocalLayout local_layout(std::span<const int> sites, int n, int d) {
    const std::size_t dim = ipow(static_cast<std::size_t>(d), n);
    const auto k = static_cast<int>(sites.size());
    const std::size_t local_dim = ipow(static_cast<std::size_t>(d), k);
    std::vector<std::size_t> stride(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        stride[static_cast<std::size_t>(j)] = ipow(static_cast<std::size_t>(d), n - sites[static_cast<std::size_t>(j)]);
    }
    LocalLayout layout;
    layout.offsets.resize(local_dim);
    for (std::size_t l = 0; l < local_dim; ++l) {
        std::size_t rest = l;
        std::size_t offset = 0;
        for (int j = k - 1; j >= 0; --j) {
            offset += (rest % static_cast<std::size_t>(d)) * stride[static_cast<std::size_t>(j)];
            rest /= static_cast<std::size_t>(d);
        }
        layout.offsets[l] = offset;
    }
    for (std::size_t base = 0; base < dim; ++base) {
        bool clear = true;
        for (int j = 0; j < k && clear; ++j) {
            clear = (base / stride[static_cast<std::size_t>(j)]) % static_cast<std::size_t>(d) == 0;
        }
        if (clear) {
            layout.bases.push_back(base);
        }
    }
    return layout;
}

}  // namespace

Matrix phase_gate(double eps) {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, eps);
    return m;
}

Gate Gate::named(std::string name, std::vector<int> sites, int layer) {
    if (name == "PHASE") {
        throw Error("PHASE gates need an eps parameter");
    }
    if (static_cast<int>(sites.size()) != named_arity(name)) {
        throw Error("gate " + name + " acts on " + std::to_string(named_arity(name)) + " sites, got " +
                    std::to_string(sites.size()));
    }
    Gate g;
    g.kind = Kind::kNamed;
    g.name = std::move(name);
    g.sites = std::move(sites);
    g.layer = layer;
    return g;
}

Gate Gate::phase(double eps, int site, int layer) {
    Gate g;
    g.kind = Kind::kPhase;
    g.name = "PHASE";
    g.sites = {site};
    g.eps = eps;
    g.layer = layer;
    return g;
}

Gate Gate::clifford(CliffordTableau tableau, std::vector<int> sites, int layer) {
    if (static_cast<int>(sites.size()) != tableau.n()) {
        throw Error("tableau gate on " + std::to_string(tableau.n()) + " qubits given " +
                    std::to_string(sites.size()) + " sites");
    }
    Gate g;
    g.kind = Kind::kTableau;
    g.name = "TABLEAU";
    g.sites = std::move(sites);
    g.tableau = std::move(tableau);
    g.layer = layer;
    return g;
}

Gate Gate::raw(Matrix matrix, std::vector<int> sites, int layer) {
    Gate g;
    g.kind = Kind::kMatrix;
    g.name = "MATRIX";
    g.sites = std::move(sites);
    g.matrix = std::move(matrix);
    g.layer = layer;
    return g;
}

Matrix Gate::local_matrix(int d) const {
    switch (kind) {
        case Kind::kNamed:
            return named_matrix(name);
        case Kind::kPhase:
            return phase_gate(eps);
        case Kind::kTableau:
            return tableau_to_dense(*tableau).matrix();
        case Kind::kMatrix:
            break;
    }
    (void)d;
    return matrix;
}

std::optional<CliffordTableau> Gate::local_tableau() const {
    if (kind == Kind::kTableau) {
        return tableau;
    }
    if (kind == Kind::kNamed && name == "T") {
        return std::nullopt;
    }
    const Matrix m = local_matrix();
    const int k = static_cast<int>(sites.size());
    if (m.rows() != static_cast<Index>(std::size_t{1} << k)) {
        return std::nullopt;
    }
    auto check = is_clifford(DenseOperator(k, 2, m), kLocalCliffordTol);
    return check.tableau;
}

Circuit::Circuit(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 2) {
        throw Error("circuit requires n >= 1 and d >= 2");
    }
}

void Circuit::append(Gate gate) {
    const std::string where = "gate " + std::to_string(gates_.size()) + " (" + gate.name + ")";
    if (gate.sites.empty()) {
        throw Error(where + ": no sites");
    }
    std::set<int> seen;
    for (int s : gate.sites) {
        if (s < 1 || s > n_) {
            throw Error(where + ": site " + std::to_string(s) + " outside [1, " + std::to_string(n_) + "]");
        }
        if (!seen.insert(s).second) {
            throw Error(where + ": repeated site " + std::to_string(s));
        }
    }
    if (gate.kind != Gate::Kind::kMatrix && d_ != 2) {
        throw Error(where + ": named, phase and tableau gates require qubits");
    }
    if (gate.kind == Gate::Kind::kMatrix) {
        const auto local_dim = static_cast<Index>(ipow(static_cast<std::size_t>(d_), static_cast<int>(gate.sites.size())));
        if (gate.matrix.rows() != local_dim || gate.matrix.cols() != local_dim) {
            throw Error(where + ": matrix must be " + std::to_string(local_dim) + "x" + std::to_string(local_dim));
        }
        const double err =
            (gate.matrix.adjoint() * gate.matrix - Matrix::Identity(local_dim, local_dim)).cwiseAbs().maxCoeff();
        if (err > tol::kConstruction) {
            throw Error(where + ": matrix is not unitary (deviation " + std::to_string(err) + ")");
        }
    }
    if (gate.layer >= 0) {
        for (const auto& other : gates_) {
            if (other.layer != gate.layer) {
                continue;
            }
            for (int s : other.sites) {
                if (seen.count(s)) {
                    throw Error(where + ": overlaps another gate in layer " + std::to_string(gate.layer) +
                                " on site " + std::to_string(s));
                }
            }
        }
    }
    gates_.push_back(std::move(gate));
}

DenseOperator Circuit::to_dense() const {
    require_dense(n_, d_);
    DenseOperator out = DenseOperator::identity(n_, d_);
    Matrix u = out.matrix();
    for (const auto& g : gates_) {
        apply_local_left(u, g.local_matrix(d_), g.sites, n_, d_);
    }
    return DenseOperator(n_, d_, std::move(u));
}

std::optional<CliffordTableau> Circuit::to_tableau() const {
    if (d_ != 2) {
        return std::nullopt;
    }
    CliffordTableau acc = CliffordTableau::identity(n_);
    for (const auto& g : gates_) {
        auto local = g.local_tableau();
        if (!local) {
            return std::nullopt;
        }
        acc = acc.then(local->embedded(n_, g.sites));
    }
    return acc;
}

Matrix Circuit::heisenberg(const Matrix& o) const {
    Matrix out = o;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        const Matrix g = it->local_matrix(d_);
        apply_local_left(out, g.adjoint(), it->sites, n_, d_);
        apply_local_right(out, g, it->sites, n_, d_);
    }
    return out;
}

std::size_t Circuit::count(std::string_view name) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [&](const Gate& g) { return g.name == name; }));
}

void apply_local_left(Matrix& m, const Matrix& g, std::span<const int> sites, int n, int d) {
    const auto layout = local_layout(sites, n, d);
    const auto local_dim = static_cast<Index>(layout.offsets.size());
    Matrix gathered(local_dim, m.cols());
    for (std::size_t base : layout.bases) {
        for (Index l = 0; l < local_dim; ++l) {
            gathered.row(l) = m.row(static_cast<Index>(base + layout.offsets[static_cast<std::size_t>(l)]));
        }
        const Matrix mixed = g * gathered;
        for (Index l = 0; l < local_dim; ++l) {
            m.row(static_cast<Index>(base + layout.offsets[static_cast<std::size_t>(l)])) = mixed.row(l);
        }
    }
}

void apply_local_right(Matrix& m, const Matrix& g, std::span<const int> sites, int n, int d) {
    const auto layout = local_layout(sites, n, d);
    const auto local_dim = static_cast<Index>(layout.offsets.size());
    Matrix gathered(m.rows(), local_dim);
    for (std::size_t base : layout.bases) {
        for (Index l = 0; l < local_dim; ++l) {
            gathered.col(l) = m.col(static_cast<Index>(base + layout.offsets[static_cast<std::size_t>(l)]));
        }
        const Matrix mixed = gathered * g;
        for (Index l = 0; l < local_dim; ++l) {
            m.col(static_cast<Index>(base + layout.offsets[static_cast<std::size_t>(l)])) = mixed.col(l);
        }
    }
}

}  // namespace scramble
