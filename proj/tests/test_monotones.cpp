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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "scramble/monotones.hpp"

namespace scramble {
namespace {

using kernels::Exec;

DenseOperator named(const std::string& name, std::vector<int> sites, int n) {
    Circuit c(n);
    c.append(Gate::named(name, std::move(sites)));
    return c.to_dense();
}

DenseOperator phase(double eps) { return DenseOperator(1, 2, phase_gate(eps)); }

DenseOperator haar(int n, std::mt19937_64& rng) {
    return DenseOperator(n, 2, oracle::haar(static_cast<Eigen::Index>(1) << n, rng));
}

SymplecticVector sv(const std::string& text, int n) { return PauliOp::parse(text, n, 2).vec(); }

TEST(Otoc, Examples) {
    const auto id = DenseOperator::identity(2);
    EXPECT_NEAR(otoc(id, sv("X1", 2), sv("Z2", 2)), 1.0, 1e-15);
    EXPECT_NEAR(otoc(id, sv("X1", 2), sv("Z1", 2)), -1.0, 1e-15);
}

TEST(Otoc, CliffordValuesMatchTableauSign) {
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3;
        const auto t = random_clifford(n, rng);
        const auto u = tableau_to_dense(t);
        for (const auto& a : enumerate_paulis(n, 2)) {
            for (const auto& b : enumerate_paulis(n, 2)) {
                EXPECT_NEAR(otoc(u, a, b), otoc_clifford(t, a, b), 1e-12);
            }
        }
    }
}

TEST(Otoc, MatchesDenseOracle) {
    std::mt19937_64 rng(2);
    const auto u = haar(3, rng);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = SymplecticVector::from_key(3, 2, rng() % 64);
        const auto b = SymplecticVector::from_key(3, 2, rng() % 64);
        EXPECT_NEAR(otoc(u, a, b),
                    oracle::otoc(u.matrix(), oracle::hermitian(oracle::decode(3, 2, a.key())),
                                 oracle::hermitian(oracle::decode(3, 2, b.key()))),
                    1e-12);
    }
}

TEST(OtocFast, Examples) {
    std::vector<double> point(4, 0.0);
    point[SymplecticVector(2, {{1, 0}}).key()] = 1.0;
    EXPECT_EQ(otoc_fast(point, SymplecticVector(2, {{0, 1}}).key()), -1.0);
    std::vector<double> xy(4, 0.0);
    xy[SymplecticVector(2, {{1, 0}}).key()] = 1.0 / std::sqrt(2.0);
    xy[SymplecticVector(2, {{1, 1}}).key()] = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(otoc_fast(xy, SymplecticVector(2, {{0, 1}}).key()), -1.0, 1e-15);
    std::vector<double> bad(4, 0.5);
    bad[0] = 1.0;
    EXPECT_THROW(otoc_fast(bad, 0), NumericalError);
}

TEST(OtocFast, AgreesWithDenseOnRandomPairs) {
    std::mt19937_64 rng(3);
    const auto u = haar(3, rng);
    const auto transfer = kernels::qubit_transfer_matrix(u.matrix(), 3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t a = rng() % 64;
        const std::uint64_t b = rng() % 64;
        const std::vector<double> alpha(transfer.row(static_cast<Eigen::Index>(a)).data(),
                                        transfer.row(static_cast<Eigen::Index>(a)).data() + 64);
        EXPECT_NEAR(otoc_fast(alpha, b), otoc(u, SymplecticVector::from_key(3, 2, a), SymplecticVector::from_key(3, 2, b)),
                    1e-9);
    }
}

TEST(OtocMagicExact, Examples) {
    Rng rng(4);
    const auto c = otoc_magic_exact(tableau_to_dense(random_clifford(2, rng)));
    EXPECT_EQ(c.value, 0.0);
    EXPECT_EQ(c.method, Method::kCliffordCertificate);
    EXPECT_TRUE(c.certificate.has_value());
    EXPECT_NEAR(otoc_magic_exact(phase(std::numbers::pi / 4)).value, 1.0, 1e-12);
    EXPECT_NEAR(otoc_magic_exact(phase(std::numbers::pi / 8)).value, 1.0 - std::cos(std::numbers::pi / 4), 1e-12);
}

TEST(OtocMagicExact, WitnessAchievesValue) {
    std::mt19937_64 rng(5);
    const auto u = haar(2, rng);
    const auto r = otoc_magic_exact(u);
    ASSERT_TRUE(r.witness_pair.has_value());
    const double at_witness = 1.0 - std::abs(otoc(u, SymplecticVector::from_key(2, 2, r.witness_pair->first),
                                                   SymplecticVector::from_key(2, 2, r.witness_pair->second)));
    EXPECT_NEAR(at_witness, r.value, 1e-12);
}

TEST(OtocMagicExact, MatchesBruteForce) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 2;
        const auto u = haar(n, rng);
        EXPECT_NEAR(otoc_magic_exact(u).value, oracle::otoc_magic(u.matrix(), n), 1e-12);
    }
}

TEST(OtocMagicExact, BudgetAndQubitChecks) {
    EXPECT_THROW(otoc_magic_exact(DenseOperator::identity(6)), BudgetExceeded);
    EXPECT_THROW(otoc_magic_exact(DenseOperator::identity(1, 3)), Error);
    EXPECT_THROW(otoc_magic_exact(DenseOperator::identity(1).scaled(2.0)), NumericalError);
}

TEST(OtocMagicExact, CertificateFromTableauOverload) {
    const auto r = otoc_magic_exact(CliffordTableau::identity(3));
    EXPECT_EQ(r.value, 0.0);
    EXPECT_EQ(r.method, Method::kCliffordCertificate);
}

TEST(OtocMagicSampled, Examples) {
    Rng rng(7);
    const auto t = phase(std::numbers::pi / 4);
    EXPECT_NEAR(otoc_magic_sampled(t, 16, rng).value, 1.0, 1e-12);
    const auto c = tableau_to_dense(random_clifford(3, rng));
    EXPECT_EQ(otoc_magic_sampled(c, 10, rng).value, 0.0);
    std::mt19937_64 g(7);
    const auto u = haar(2, g);
    EXPECT_NEAR(otoc_magic_sampled(u, 256, rng).value, otoc_magic_exact(u).value, 1e-12);
}

TEST(OtocMagicSampled, NeverExceedsExact) {
    std::mt19937_64 g(8);
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = haar(3, g);
        const auto sampled = otoc_magic_sampled(u, 50, rng);
        EXPECT_LE(sampled.value, otoc_magic_exact(u).value + 1e-9);
        EXPECT_EQ(sampled.method, Method::kSampled);
        EXPECT_EQ(sampled.samples_used, 50U);
    }
}

TEST(PhaseGateMagic, ClosedForm) {
    EXPECT_NEAR(phase_gate_magic(std::numbers::pi / 2), 0.0, 1e-15);
    EXPECT_NEAR(phase_gate_magic(std::numbers::pi / 4), 1.0, 1e-15);
    EXPECT_NEAR(phase_gate_magic(std::numbers::pi / 8), 1.0 - std::sqrt(2.0) / 2.0, 1e-15);
}

TEST(GrowthMatrix, Examples) {
    const auto id = growth_matrix(DenseOperator::identity(2));
    EXPECT_LT((id.entries - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-12);

    const auto swap = growth_matrix(named("SWAP", {1, 2}, 2));
    Eigen::SelfAdjointEigenSolver<Matrix> es(swap.entries);
    EXPECT_LT((es.eigenvalues().array() - 1.0).abs().maxCoeff(), 1e-12);

    const auto cnot = growth_matrix(named("CNOT", {1, 2}, 2));
    Eigen::SelfAdjointEigenSolver<Matrix> ec(cnot.entries);
    EXPECT_NEAR(ec.eigenvalues().maxCoeff(), 2.0, 1e-12);
}

TEST(GrowthMatrix, InvariantsAndDiagonalOracle) {
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 3; ++n) {
        const auto u = haar(n, rng);
        const auto m = growth_matrix(u);
        EXPECT_EQ(m.basis.size(), static_cast<std::size_t>(3 * n));
        EXPECT_LT((m.entries - m.entries.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        Eigen::SelfAdjointEigenSolver<Matrix> es(m.entries);
        EXPECT_GE(es.eigenvalues().minCoeff(), 1.0 - 1e-9);
        EXPECT_LE(es.eigenvalues().maxCoeff(), n + 1e-9);
        for (std::size_t a = 0; a < m.basis.size(); ++a) {
            const Matrix p = oracle::pauli(2, oracle::decode(n, 2, m.basis[a]));
            const Matrix q = u.matrix().adjoint() * p * u.matrix();
            EXPECT_NEAR(m.entries(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)).real(),
                        oracle::avg_weight(q, n, 2), 1e-10);
        }
    }
}

TEST(GrowthMatrix, QuditsSupported) {
    std::mt19937_64 rng(10);
    const DenseOperator u(2, 3, oracle::haar(9, rng));
    const auto m = growth_matrix(u);
    EXPECT_EQ(m.basis.size(), 16U);
    const auto g = pauli_growth(m);
    EXPECT_GE(g.value, 0.0);
    EXPECT_LE(g.value, 1.0 + 1e-9);
}

TEST(GrowthMatrix, CircuitOverloadMatchesDense) {
    std::mt19937_64 rng(11);
    Circuit c(3);
    c.append(Gate::raw(oracle::haar(4, rng), {1, 2}));
    c.append(Gate::named("T", {3}));
    c.append(Gate::named("CNOT", {3, 2}));
    const auto a = growth_matrix(c);
    const auto b = growth_matrix(c.to_dense());
    EXPECT_LT((a.entries - b.entries).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(GrowthMatrix, Budget) {
    EXPECT_THROW(growth_matrix(DenseOperator::identity(3), GrowthOptions{.max_qubits = 2}), BudgetExceeded);
}

TEST(PauliGrowth, Examples) {
    Rng rng(12);
    EXPECT_NEAR(pauli_growth(random_nonentangling(3, 2, rng).to_dense()).value, 0.0, 1e-9);
    EXPECT_NEAR(pauli_growth(named("CNOT", {1, 2}, 2)).value, 1.0, 1e-12);
    EXPECT_NEAR(pauli_growth(named("T", {1}, 2)).value, 0.0, 1e-9);
}

TEST(PauliGrowth, WitnessAttainsValue) {
    std::mt19937_64 rng(13);
    const auto u = haar(3, rng);
    const auto r = pauli_growth(u);
    EXPECT_NEAR(weight_growth_of(u, r.witness_basis, r.witness_vector), r.value, 1e-9);
}

TEST(PauliGrowthPauli, Examples) {
    EXPECT_NEAR(pauli_growth_pauli(named("CNOT", {1, 2}, 2)).value, 1.0, 1e-12);
    Circuit c(2);
    c.append(Gate::named("H", {1}));
    c.append(Gate::named("H", {2}));
    c.append(Gate::named("SWAP", {1, 2}));
    EXPECT_NEAR(pauli_growth_pauli(c.to_dense()).value, 0.0, 1e-12);
}

TEST(PauliGrowthPauli, DominatedByGrowth) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = growth_matrix(haar(1 + trial % 3, rng));
        EXPECT_LE(pauli_growth_pauli(m).value, pauli_growth(m).value + 1e-9);
    }
}

TEST(MagicEntropy, Examples) {
    Rng rng(15);
    EXPECT_NEAR(magic_entropy(tableau_to_dense(random_clifford(3, rng))).value, 0.0, 1e-9);
    EXPECT_NEAR(magic_entropy(named("T", {1}, 2)).value, std::log(2.0), 1e-12);
    const auto id = magic_entropy(DenseOperator::identity(2));
    EXPECT_NEAR(id.value, 0.0, 1e-12);
    EXPECT_NEAR(id.diagnostics.at("growth_plus_one"), 1.0, 1e-12);
    EXPECT_TRUE(id.diagnostics.count("ratio"));
}

TEST(Kernels, TransferMatrixReferenceAgreement) {
    std::mt19937_64 rng(16);
    for (int n = 1; n <= 3; ++n) {
        const Matrix u = oracle::haar(static_cast<Eigen::Index>(1) << n, rng);
        const auto ref = kernels::qubit_transfer_matrix_reference(u, n);
        EXPECT_LT((kernels::qubit_transfer_matrix(u, n, Exec::kSerial) - ref).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((kernels::qubit_transfer_matrix(u, n, Exec::kParallel) - ref).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Kernels, OtocTableAndScanAgreement) {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n) {
        const Matrix u = oracle::haar(static_cast<Eigen::Index>(1) << n, rng);
        const auto transfer = kernels::qubit_transfer_matrix(u, n);
        const auto ref = kernels::otoc_table_reference(transfer);
        EXPECT_LT((kernels::otoc_table(transfer, Exec::kSerial) - ref).cwiseAbs().maxCoeff(), 1e-12);
        const auto scan_ref = kernels::otoc_magic_scan_reference(transfer);
        for (Exec e : {Exec::kSerial, Exec::kParallel}) {
            const auto scan = kernels::otoc_magic_scan(transfer, e);
            EXPECT_NEAR(scan.value, scan_ref.value, 1e-12);
        }
    }
}

TEST(Kernels, PauliImagesSerialParallelIdentical) {
    std::mt19937_64 rng(18);
    const Matrix u = oracle::haar(8, rng);
    const kernels::Conjugator conj = [&](std::uint64_t key) -> Matrix {
        return u.adjoint() * kernels::apply_pauli_left(u, PauliOp(SymplecticVector::from_key(3, 2, key)));
    };
    std::vector<std::uint64_t> basis;
    for (const auto& v : enumerate_paulis(3, 2, 1)) {
        basis.push_back(v.key());
    }
    const Matrix ref = kernels::pauli_images_reference(conj, 3, 2, basis);
    const Matrix serial = kernels::pauli_images(conj, 3, 2, basis, Exec::kSerial);
    const Matrix parallel = kernels::pauli_images(conj, 3, 2, basis, Exec::kParallel);
    EXPECT_LT((serial - ref).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(serial, parallel);
}

TEST(Kernels, ApplyPauliLeftMatchesDense) {
    std::mt19937_64 rng(19);
    const Matrix u = oracle::haar(9, rng);
    for (const auto& v : enumerate_paulis(2, 3)) {
        const PauliOp p(v, 1);
        EXPECT_LT((kernels::apply_pauli_left(u, p) - to_dense(p) * u).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Kernels, WorkerCountDoesNotChangeResults) {
    std::mt19937_64 rng(20);
    const auto u = haar(3, rng);
    const int saved = kernels::worker_count();
    kernels::set_worker_count(1);
    const auto one = otoc_magic_exact(u);
    kernels::set_worker_count(4);
    const auto four = otoc_magic_exact(u);
    kernels::set_worker_count(saved);
    EXPECT_EQ(one.value, four.value);
    EXPECT_EQ(one.witness_pair, four.witness_pair);
}

}  // namespace
}  // namespace scramble
