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
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "scramble/harness.hpp"
#include "scramble/io.hpp"

namespace scramble {
namespace {

using io::Json;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_section(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::string data;
    while (std::getline(in, line)) {
        if (!line.starts_with("#")) {
            data += line + "\n";
        }
    }
    return data;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

TEST(ParseCircuit, PhaseGateIsT) {
    const auto c = io::parse_circuit(Json::parse(R"({"n":1,"gates":[{"name":"PHASE","sites":[1],"params":{"eps":0.7853981633974483}}]})"));
    Circuit t(1);
    t.append(Gate::named("T", {1}));
    EXPECT_LT((c.to_dense().matrix() - t.to_dense().matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ParseCircuit, EmptyIsIdentity) {
    const auto c = io::parse_circuit(Json::parse(R"({"n":2,"gates":[]})"));
    EXPECT_EQ(c.to_dense().matrix(), Matrix::Identity(4, 4));
}

TEST(ParseCircuit, RawMatrix) {
    const auto j = Json::parse(R"({"n":2,"gates":[{"name":"MATRIX","sites":[1,2],"matrix":[
        [[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]],
        [[0,0],[0,0],[0,0],[1,0]],[[0,0],[0,0],[1,0],[0,0]]]}]})");
    Circuit cnot(2);
    cnot.append(Gate::named("CNOT", {1, 2}));
    EXPECT_EQ(io::parse_circuit(j).to_dense().matrix(), cnot.to_dense().matrix());
}

TEST(ParseCircuit, ErrorsNameTheGate) {
    const auto j = Json::parse(R"({"n":2,"gates":[{"name":"H","sites":[1]},{"name":"FOO","sites":[1]}]})");
    try {
        io::parse_circuit(j);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("gate 1"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("FOO"), std::string::npos);
    }
    EXPECT_THROW(io::parse_circuit(Json::parse(R"({"n":2,"gates":[{"name":"H","sites":[3]}]})")), Error);
}

TEST(ParseCircuit, RoundTrip) {
    Rng rng(1);
    Circuit c(3);
    c.append(Gate::named("H", {2}));
    c.append(Gate::phase(0.3, 1));
    c.append(Gate::clifford(random_clifford(2, rng), {1, 3}));
    const auto back = io::parse_circuit(io::circuit_to_json(c));
    EXPECT_LT((back.to_dense().matrix() - c.to_dense().matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Json, TableauRoundTrip) {
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto t = random_clifford(1 + trial % 4, rng);
        EXPECT_EQ(io::tableau_from_json(io::tableau_to_json(t)), t);
    }
}

TEST(Json, OperatorRoundTrip) {
    std::mt19937_64 rng(3);
    const DenseOperator u(2, 2, oracle::haar(4, rng));
    const auto back = io::operator_from_json(Json::parse(io::operator_to_json(u).dump()));
    EXPECT_EQ(back.matrix(), u.matrix());
}

TEST(FormatDouble, RoundTrips) {
    for (double v : {0.1, std::numbers::pi, -1e-300, 1.0 / 3.0}) {
        EXPECT_EQ(std::stod(io::format_double(v)), v);
    }
}

TEST(Harness, PhaseMagicSweepMatchesClosedForm) {
    const auto r = invoke({"phase-magic-sweep", "--points", "64"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream in(data_section(r.out));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "eps,om_exact,closed_form,abs_error");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const double err = std::stod(line.substr(line.rfind(',') + 1));
        EXPECT_LE(err, 1e-12);
    }
    EXPECT_EQ(rows, 64);
}

TEST(Harness, MonotoneOnCnot) {
    const auto path = write_temp("cnot.json", R"({"n":2,"gates":[{"name":"CNOT","sites":[1,2]}]})");
    const auto r = invoke({"monotone", "--circuit", path, "--measure", "pauli-growth"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_NEAR(j["result"]["value"].get<double>(), 1.0, 1e-12);
    EXPECT_TRUE(j.contains("metadata"));
}

TEST(Harness, VerifyPhaseSuite) {
    const auto r = invoke({"verify", "--suite", "phase"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST(Harness, ExitCodes) {
    EXPECT_EQ(invoke({"monotone"}).code, kExitUsage);
    EXPECT_EQ(invoke({"no-such-command"}).code, kExitUsage);
    const auto path = write_temp("bad.json", R"({"n":1,"gates":[{"name":"FOO","sites":[1]}]})");
    const auto r = invoke({"monotone", "--circuit", path, "--measure", "otoc-magic"});
    EXPECT_EQ(r.code, kExitFailure);
    EXPECT_NE(r.err.find("gate 0"), std::string::npos);
}

TEST(Harness, DataSectionReproducible) {
    const std::vector<std::string> base{"--seed", "5", "fluctuations", "--samples", "5", "--eps-grid", "0:0.785:3"};
    const auto a = invoke(base);
    auto with_workers = base;
    with_workers.insert(with_workers.begin(), {"--workers", "1"});
    const auto b = invoke(with_workers);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_EQ(data_section(a.out), data_section(b.out));
    EXPECT_FALSE(data_section(a.out).empty());
}

TEST(Harness, CliffordSampleDeterministic) {
    const auto a = invoke({"--seed", "9", "clifford-sample", "--n", "3", "--count", "4"});
    const auto b = invoke({"--seed", "9", "clifford-sample", "--n", "3", "--count", "4"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(Json::parse(a.out)["result"], Json::parse(b.out)["result"]);
}

}  // namespace
}  // namespace scramble
