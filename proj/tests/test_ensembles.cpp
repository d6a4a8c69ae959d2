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
#include <sstream>

#include "oracles.hpp"
#include "scramble/ensembles.hpp"
#include "scramble/io.hpp"

namespace scramble {
namespace {

EnsembleSpec spec_at(double eps, std::uint64_t seed = 11, std::size_t samples = 12) {
    EnsembleSpec s;
    s.eps = eps;
    s.seed = seed;
    s.samples = samples;
    return s;
}

TEST(Brickwork, GateCountsAndLayers) {
    const auto sample = build_brickwork(spec_at(0.3), 0);
    const auto& c = sample.circuit;
    EXPECT_EQ(c.n(), 4);
    EXPECT_EQ(c.count("TABLEAU"), 12U);
    EXPECT_EQ(c.count("PHASE"), 4U);
    EXPECT_EQ(c.gates().size(), 16U);
    std::vector<int> phase_sites;
    for (const auto& g : c.gates()) {
        if (g.kind == Gate::Kind::kPhase) {
            phase_sites.push_back(g.sites[0]);
            EXPECT_DOUBLE_EQ(g.eps, 0.3);
        } else {
            EXPECT_EQ(g.sites.size(), 2U);
            EXPECT_EQ(g.sites[1], g.sites[0] + 1);
        }
    }
    EXPECT_EQ(phase_sites, (std::vector<int>{4, 3, 2, 1}));
    EXPECT_FALSE(sample.tableau.has_value());
}

TEST(Brickwork, CliffordAtZeroEps) {
    for (double eps : {0.0, std::numbers::pi / 2}) {
        const auto sample = build_brickwork(spec_at(eps), 3);
        ASSERT_TRUE(sample.tableau.has_value());
        EXPECT_TRUE(oracle::equal_up_to_phase(tableau_to_dense(*sample.tableau).matrix(),
                                              sample.circuit.to_dense().matrix(), 1e-10));
    }
}

TEST(Brickwork, Deterministic) {
    const auto a = build_brickwork(spec_at(0.2), 5);
    const auto b = build_brickwork(spec_at(0.2), 5);
    const auto c = build_brickwork(spec_at(0.2), 6);
    EXPECT_EQ(a.seed, b.seed);
    EXPECT_EQ(a.circuit.to_dense().matrix(), b.circuit.to_dense().matrix());
    EXPECT_NE(a.seed, c.seed);
}

TEST(Brickwork, RejectsBadShapes) {
    EnsembleSpec odd = spec_at(0.1);
    odd.n = 3;
    EXPECT_THROW(build_brickwork(odd, 0), Error);
    odd.allow_odd = true;
    EXPECT_NO_THROW(build_brickwork(odd, 0));
    EnsembleSpec small = spec_at(0.1);
    small.n = 1;
    EXPECT_THROW(build_brickwork(small, 0), Error);
    EnsembleSpec flat = spec_at(0.1);
    flat.layers = 0;
    EXPECT_THROW(build_brickwork(flat, 0), Error);
}

TEST(Fluctuations, CliffordEnsembleIdentity) {
    const auto r = estimate_fluctuations(spec_at(0.0, 21, 30));
    EXPECT_EQ(r.clifford_samples, 30U);
    for (double v : r.otocs) {
        EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
    }
    EXPECT_NEAR(r.delta * r.delta + r.mean_otoc * r.mean_otoc, 1.0, 1e-12);
}

TEST(Fluctuations, SingleSampleHasNoSpread) {
    const auto r = estimate_fluctuations(spec_at(0.4, 3, 1));
    EXPECT_EQ(r.delta, 0.0);
    EXPECT_EQ(r.otocs.size(), 1U);
}

TEST(Fluctuations, MagicReducesSpread) {
    const auto clifford = estimate_fluctuations(spec_at(0.0, 8, 40));
    const auto magic = estimate_fluctuations(spec_at(std::numbers::pi / 4, 8, 40));
    EXPECT_LT(magic.delta, clifford.delta);
}

TEST(Fluctuations, DenseOtocMatchesCircuit) {
    const auto spec = spec_at(0.5, 4, 3);
    const auto r = estimate_fluctuations(spec);
    const auto pa = PauliOp::parse("X1", 4, 2);
    const auto pb = PauliOp::parse("Z4", 4, 2);
    for (std::size_t i = 0; i < spec.samples; ++i) {
        const auto u = build_brickwork(spec, i).circuit.to_dense();
        EXPECT_NEAR(r.otocs[i], oracle::otoc(u.matrix(), to_dense(pa), to_dense(pb)), 1e-10);
    }
}

TEST(MeanAndDeviation, Population) {
    const std::vector<double> v{1.0, -1.0, 1.0, -1.0};
    const auto [m, d] = mean_and_deviation(v);
    EXPECT_EQ(m, 0.0);
    EXPECT_EQ(d, 1.0);
}

TEST(Theorem1, RowsHold) {
    for (double eps : {0.0, 0.3, std::numbers::pi / 4}) {
        const auto row = theorem1_check(spec_at(eps, 17, 10));
        EXPECT_TRUE(row.holds) << eps;
        EXPECT_NEAR(row.slack, row.mean_om - row.bound, 1e-15);
        EXPECT_NEAR(row.one_minus_delta, 1.0 - row.delta, 1e-15);
    }
}

TEST(Theorem1, CliffordRowIsTight) {
    const auto row = theorem1_check(spec_at(0.0, 17, 10));
    EXPECT_EQ(row.mean_om, 0.0);
    EXPECT_NEAR(row.bound, 1.0 - row.delta - std::abs(row.mean_otoc), 1e-15);
}

TEST(Spearman, Examples) {
    const std::vector<double> x{1, 2, 3, 4};
    EXPECT_NEAR(spearman(x, std::vector<double>{10, 20, 30, 40}), 1.0, 1e-15);
    EXPECT_NEAR(spearman(x, std::vector<double>{4, 3, 2, 1}), -1.0, 1e-15);
    EXPECT_EQ(spearman(x, std::vector<double>{5, 5, 5, 5}), 0.0);
    EXPECT_NEAR(spearman(std::vector<double>{1, 2, 2, 3}, std::vector<double>{1, 2, 2, 3}), 1.0, 1e-15);
}

TEST(Linspace, Endpoints) {
    const auto g = linspace(0.0, 1.0, 5);
    ASSERT_EQ(g.size(), 5U);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_EQ(linspace(2.0, 3.0, 1), std::vector<double>{2.0});
}

TEST(Fig3, CsvDeterministicAcrossExec) {
    const auto grid = linspace(0.0, std::numbers::pi / 4, 3);
    const auto tmpl = spec_at(0.0, 99, 6);
    std::ostringstream a;
    std::ostringstream b;
    io::write_fig3_csv(a, fig3_sweep(grid, tmpl, std::nullopt, std::nullopt, kernels::Exec::kSerial));
    io::write_fig3_csv(b, fig3_sweep(grid, tmpl, std::nullopt, std::nullopt, kernels::Exec::kParallel));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().rfind("eps,mean_om,one_minus_delta,mean_otoc,mean_abs_otoc,holds", 0), 0U);
}

}  // namespace
}  // namespace scramble
