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

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "scramble/circuit.hpp"

namespace scramble {
namespace {

TEST(Circuit, OrderIsRightToLeftProduct) {
    Circuit c(2);
    c.append(Gate::named("H", {1}));
    c.append(Gate::named("CNOT", {1, 2}));
    const double r = 1.0 / std::sqrt(2.0);
    Matrix h(2, 2);
    h << r, r, r, -r;
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    const Matrix expected = cnot * oracle::kron(h, Matrix::Identity(2, 2));
    EXPECT_LT((c.to_dense().matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Circuit, SiteOrderOfTwoQubitGates) {
    // CNOT with control on site 2 and target on site 1.
    Circuit c(2);
    c.append(Gate::named("CNOT", {2, 1}));
    const Matrix u = c.to_dense().matrix();
    EXPECT_NEAR(std::abs(u(3, 1)), 1.0, 1e-15);  // |01> -> |11>
    EXPECT_NEAR(std::abs(u(2, 2)), 1.0, 1e-15);
}

TEST(Circuit, EmptyIsIdentity) {
    EXPECT_EQ(Circuit(3).to_dense().matrix(), Matrix::Identity(8, 8));
}

TEST(Circuit, RejectsBadSitesAndOverlap) {
    Circuit c(2);
    EXPECT_THROW(c.append(Gate::named("H", {3})), Error);
    EXPECT_THROW(c.append(Gate::named("CNOT", {1, 1})), Error);
    EXPECT_THROW(c.append(Gate::named("CNOT", {1})), Error);
    EXPECT_THROW(c.append(Gate::named("FOO", {1})), Error);
    c.append(Gate::named("H", {1}, 0));
    EXPECT_THROW(c.append(Gate::named("CNOT", {1, 2}, 0)), Error);
    c.append(Gate::named("CNOT", {1, 2}, 1));
}

TEST(Circuit, RawMatrixAcceptedAndNonUnitaryRejected) {
    std::mt19937_64 rng(1);
    const Matrix g = oracle::haar(4, rng);
    Circuit c(3);
    c.append(Gate::raw(g, {2, 3}));
    EXPECT_LT((c.to_dense().matrix() - oracle::kron(Matrix::Identity(2, 2), g)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(c.append(Gate::raw(2.0 * g, {1, 2})), Error);
    EXPECT_THROW(c.append(Gate::raw(g, {1})), Error);
}

TEST(Circuit, QuditMatrixGates) {
    std::mt19937_64 rng(2);
    const Matrix g = oracle::haar(3, rng);
    Circuit c(2, 3);
    c.append(Gate::raw(g, {2}));
    EXPECT_LT((c.to_dense().matrix() - oracle::kron(Matrix::Identity(3, 3), g)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(c.append(Gate::named("H", {1})), Error);
}

TEST(Circuit, PhaseGateMatrix) {
    const Matrix t = phase_gate(std::numbers::pi / 4);
    EXPECT_NEAR(std::abs(t(1, 1) - std::polar(1.0, std::numbers::pi / 4)), 0.0, 1e-15);
    EXPECT_EQ(t(0, 0), Complex(1.0));
}

TEST(Circuit, HeisenbergMatchesDense) {
    std::mt19937_64 rng(3);
    Rng lib(3);
    Circuit c(3);
    c.append(Gate::named("H", {2}));
    c.append(Gate::phase(0.37, 1));
    c.append(Gate::raw(oracle::haar(4, rng), {3, 1}));
    c.append(Gate::clifford(random_clifford(2, lib), {2, 3}));
    const Matrix u = c.to_dense().matrix();
    const Matrix o = oracle::haar(8, rng);
    EXPECT_LT((c.heisenberg(o) - u.adjoint() * o * u).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Circuit, TableauOnlyForCliffordCircuits) {
    Circuit c(2);
    c.append(Gate::named("H", {1}));
    c.append(Gate::named("S", {2}));
    c.append(Gate::named("CZ", {1, 2}));
    c.append(Gate::named("SWAP", {1, 2}));
    c.append(Gate::phase(std::numbers::pi, 1));
    const auto t = c.to_tableau();
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(oracle::equal_up_to_phase(tableau_to_dense(*t).matrix(), c.to_dense().matrix(), 1e-12));
    c.append(Gate::named("T", {1}));
    EXPECT_FALSE(c.to_tableau().has_value());
}

TEST(Circuit, CountsGatesByName) {
    Circuit c(2);
    c.append(Gate::named("H", {1}));
    c.append(Gate::named("H", {2}));
    c.append(Gate::phase(0.1, 1));
    EXPECT_EQ(c.count("H"), 2U);
    EXPECT_EQ(c.count("PHASE"), 1U);
}

}  // namespace
}  // namespace scramble
