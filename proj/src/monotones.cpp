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

#include "scramble/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace scramble {

namespace {

using Index = Eigen::Index;

void require_qubits(const DenseOperator& u, std::string_view what) {
    if (u.d() != 2) {
        throw Error(std::string(what) + " is defined for qubits only");
    }
}

std::vector<double> hermitian_row(const DenseOperator& u, std::uint64_t a) {
    const Matrix q = u.matrix().adjoint() * kernels::apply_hermitian_pauli_left(u.matrix(), u.n(), a);
    return hermitian_coefficients(DenseOperator(u.n(), 2, q));
}

// Rotates v so its first entry above 1e-9 in modulus is real positive.
void canonical_phase(Vector& v) {
    for (Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-9) {
            v *= std::conj(v(i)) / std::abs(v(i));
            return;
        }
    }
}

double clamp_growth(double g, std::string_view what) {
    if (g < -tol::kConstruction) {
        throw NumericalError(std::string(what) + " came out negative (" + std::to_string(g) +
                             "); the growth matrix is inconsistent");
    }
    return std::max(0.0, g);
}

}  // namespace

std::string to_string(Method method) {
    switch (method) {
        case Method::kExact:
            return "exact";
        case Method::kSampled:
            return "sampled";
        case Method::kCliffordCertificate:
            return "clifford-certificate";
    }
    return "unknown";
}

// --- OTOC -------------------------------------------------------------------

Complex otoc_complex(const DenseOperator& u, const DenseOperator& pa, const DenseOperator& pb) {
    if (u.n() != pa.n() || u.n() != pb.n() || u.d() != pa.d() || u.d() != pb.d()) {
        throw DimensionMismatch("otoc operands must share n and d");
    }
    u.require_unitary();
    const Matrix q = u.matrix().adjoint() * pa.matrix() * u.matrix();
    const Matrix qp = q * pb.matrix();
    return (qp * qp).trace() / static_cast<double>(u.dim());
}

double otoc(const DenseOperator& u, const SymplecticVector& a, const SymplecticVector& b) {
    require_qubits(u, "otoc");
    const Complex value = otoc_complex(u, DenseOperator(u.n(), 2, hermitian_qubit_pauli(a)),
                                       DenseOperator(u.n(), 2, hermitian_qubit_pauli(b)));
    if (std::abs(value.imag()) > 1e-6) {
        throw NumericalError("OTOC has imaginary part " + std::to_string(value.imag()) +
                             "; Pauli phase conventions are inconsistent");
    }
    return value.real();
}

double otoc_fast(std::span<const double> alpha, std::uint64_t b) {
    double norm = 0.0;
    double acc = 0.0;
    for (std::size_t c = 0; c < alpha.size(); ++c) {
        const double w = alpha[c] * alpha[c];
        norm += w;
        acc += w * qubit::commutation_sign(c, b);
    }
    if (std::abs(norm - 1.0) > tol::kConstruction) {
        throw NumericalError("otoc_fast needs a unit-norm expansion, got squared norm " + std::to_string(norm));
    }
    return acc;
}

int otoc_clifford(const CliffordTableau& t, const SymplecticVector& a, const SymplecticVector& b) {
    const PauliOp image = t.conjugate(hermitian_pauli_op(a));
    return commutation_exponent(image.vec(), b) == 0 ? 1 : -1;
}

// --- OTOC magic ---------------------------------------------------------------

double phase_gate_magic(double eps) { return 1.0 - std::abs(std::cos(2.0 * eps)); }

MonotoneReport otoc_magic_exact(const CliffordTableau& t) {
    MonotoneReport r;
    r.measure = "otoc-magic";
    r.value = 0.0;
    r.method = Method::kCliffordCertificate;
    r.witness_pair = std::make_pair(std::uint64_t{0}, std::uint64_t{0});
    r.certificate = t;
    return r;
}

MonotoneReport otoc_magic_exact(const DenseOperator& u, const OtocMagicOptions& options) {
    require_qubits(u, "OTOC magic");
    if (u.n() > options.max_qubits) {
        throw BudgetExceeded("exact OTOC magic enumerates 16^n pairs; n = " + std::to_string(u.n()) +
                             " exceeds the budget of " + std::to_string(options.max_qubits) +
                             " qubits, use the sampled variant");
    }
    u.require_unitary();
    if (auto check = is_clifford(u, options.clifford_tol); check.is_clifford) {
        return otoc_magic_exact(*check.tableau);
    }
    const auto transfer = kernels::qubit_transfer_matrix(u.matrix(), u.n(), options.exec);
    const auto scan = kernels::otoc_magic_scan(transfer, options.exec);
    MonotoneReport r;
    r.measure = "otoc-magic";
    r.value = std::clamp(scan.value, 0.0, 1.0);
    r.method = Method::kExact;
    r.witness_pair = std::make_pair(scan.a, scan.b);
    r.samples_used = static_cast<std::size_t>(transfer.rows() * transfer.cols());
    return r;
}

MonotoneReport otoc_magic_sampled(const DenseOperator& u, std::size_t k, Rng& rng) {
    require_qubits(u, "OTOC magic");
    u.require_unitary();
    const int n = u.n();
    const std::uint64_t keys = std::uint64_t{1} << (2 * n);
    const double total = static_cast<double>(keys) * static_cast<double>(keys);
    if (auto check = is_clifford(u, OtocMagicOptions{}.clifford_tol); check.is_clifford) {
        auto r = otoc_magic_exact(*check.tableau);
        r.method = Method::kSampled;
        r.samples_used = k;
        return r;
    }
    if (static_cast<double>(k) >= total) {
        auto r = otoc_magic_exact(u, OtocMagicOptions{.max_qubits = n});
        r.method = Method::kSampled;
        r.samples_used = static_cast<std::size_t>(total);
        return r;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, keys - 1);
    std::unordered_map<std::uint64_t, std::vector<double>> rows;
    MonotoneReport r;
    r.measure = "otoc-magic";
    r.method = Method::kSampled;
    r.value = -1.0;
    for (std::size_t s = 0; s < k; ++s) {
        const std::uint64_t a = pick(rng);
        const std::uint64_t b = pick(rng);
        auto it = rows.find(a);
        if (it == rows.end()) {
            it = rows.emplace(a, hermitian_row(u, a)).first;
        }
        const double value = 1.0 - std::abs(otoc_fast(it->second, b));
        if (value > r.value) {
            r.value = value;
            r.witness_pair = std::make_pair(a, b);
        }
    }
    r.value = std::clamp(r.value, 0.0, 1.0);
    r.samples_used = k;
    return r;
}

// --- Pauli growth -------------------------------------------------------------

namespace {

GrowthMatrix assemble_growth(int n, int d, const kernels::Conjugator& conjugator, const GrowthOptions& options) {
    if (n > options.max_qubits) {
        throw BudgetExceeded("growth matrix for n = " + std::to_string(n) + " exceeds the budget of " +
                             std::to_string(options.max_qubits) + " qudits");
    }
    require_dense(n, d);
    GrowthMatrix g;
    g.n = n;
    g.d = d;
    for (const auto& v : enumerate_paulis(n, d, 1)) {
        g.basis.push_back(v.key());
    }
    g.images = kernels::pauli_images(conjugator, n, d, g.basis, options.exec);
    const auto weights = key_weights(n, d);
    const auto size = static_cast<Index>(g.basis.size());
    g.entries = Matrix::Zero(size, size);
    for (Index a = 0; a < size; ++a) {
        for (Index b = a; b < size; ++b) {
            Complex acc = 0.0;
            for (Index c = 0; c < g.images.rows(); ++c) {
                const int w = weights[static_cast<std::size_t>(c)];
                if (w != 0) {
                    acc += static_cast<double>(w) * std::conj(g.images(c, a)) * g.images(c, b);
                }
            }
            g.entries(a, b) = acc;
            g.entries(b, a) = std::conj(acc);
        }
        g.entries(a, a) = g.entries(a, a).real();
    }
    return g;
}

}  // namespace

GrowthMatrix growth_matrix(const DenseOperator& u, const GrowthOptions& options) {
    u.require_unitary();
    const int n = u.n();
    const int d = u.d();
    const Matrix& m = u.matrix();
    const Matrix m_dag = m.adjoint();
    kernels::Conjugator conj = [&](std::uint64_t key) -> Matrix {
        const PauliOp p(SymplecticVector::from_key(n, d, key));
        return m_dag * kernels::apply_pauli_left(m, p);
    };
    return assemble_growth(n, d, conj, options);
}

GrowthMatrix growth_matrix(const Circuit& circuit, const GrowthOptions& options) {
    const int n = circuit.n();
    const int d = circuit.d();
    kernels::Conjugator conj = [&](std::uint64_t key) -> Matrix {
        return circuit.heisenberg(to_dense(PauliOp(SymplecticVector::from_key(n, d, key))));
    };
    return assemble_growth(n, d, conj, options);
}

MonotoneReport pauli_growth(const GrowthMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver failed on the growth matrix");
    }
    const Index top = solver.eigenvalues().size() - 1;
    const double lambda = solver.eigenvalues()(top);
    Vector v = solver.eigenvectors().col(top);
    const double residual = (m.entries * v - lambda * v).norm();
    const double scale = std::max(1.0, m.entries.norm());
    if (residual > 1e-9 * scale) {
        throw NumericalError("growth eigenvector residual " + std::to_string(residual) + " too large");
    }
    canonical_phase(v);
    MonotoneReport r;
    r.measure = "pauli-growth";
    r.value = clamp_growth(lambda - 1.0, "Pauli growth");
    r.method = Method::kExact;
    r.witness_basis = m.basis;
    r.witness_vector.assign(v.data(), v.data() + v.size());
    r.diagnostics["lambda_min"] = solver.eigenvalues()(0);
    r.diagnostics["lambda_max"] = lambda;
    return r;
}

MonotoneReport pauli_growth(const DenseOperator& u, const GrowthOptions& options) {
    return pauli_growth(growth_matrix(u, options));
}

MonotoneReport pauli_growth_pauli(const GrowthMatrix& m) {
    MonotoneReport r;
    r.measure = "pauli-growth-pauli";
    r.method = Method::kExact;
    double best = -1.0;
    for (Index a = 0; a < m.entries.rows(); ++a) {
        const double w = m.entries(a, a).real();
        if (w > best) {
            best = w;
            r.witness_key = m.basis[static_cast<std::size_t>(a)];
        }
    }
    r.value = clamp_growth(best - 1.0, "Pauli-restricted growth");
    return r;
}

MonotoneReport pauli_growth_pauli(const DenseOperator& u, const GrowthOptions& options) {
    return pauli_growth_pauli(growth_matrix(u, options));
}

MonotoneReport magic_entropy(const GrowthMatrix& m) {
    MonotoneReport r;
    r.measure = "magic-entropy";
    r.method = Method::kExact;
    double best = -1.0;
    for (Index a = 0; a < m.images.cols(); ++a) {
        PauliSpectrum spectrum{m.n, m.d, std::vector<double>(static_cast<std::size_t>(m.images.rows()))};
        for (Index c = 0; c < m.images.rows(); ++c) {
            spectrum.probs[static_cast<std::size_t>(c)] = std::norm(m.images(c, a));
        }
        const double h = qfe(spectrum);
        if (h > best) {
            best = h;
            r.witness_key = m.basis[static_cast<std::size_t>(a)];
        }
    }
    r.value = best;
    const double g_plus_one = pauli_growth(m).value + 1.0;
    r.diagnostics["growth_plus_one"] = g_plus_one;
    r.diagnostics["ratio"] = best / g_plus_one;
    return r;
}

MonotoneReport magic_entropy(const DenseOperator& u, const GrowthOptions& options) {
    return magic_entropy(growth_matrix(u, options));
}

double weight_growth_of(const DenseOperator& u, std::span<const std::uint64_t> basis, std::span<const Complex> coeffs) {
    if (basis.size() != coeffs.size()) {
        throw DimensionMismatch("one coefficient per basis element required");
    }
    Matrix o = Matrix::Zero(u.dim(), u.dim());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        o += coeffs[j] * to_dense(PauliOp(SymplecticVector::from_key(u.n(), u.d(), basis[j])));
    }
    return avg_pauli_weight(conjugate(u, DenseOperator(u.n(), u.d(), std::move(o)))) - 1.0;
}

}  // namespace scramble
