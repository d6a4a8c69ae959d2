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


#include "scramble/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "scramble/ensembles.hpp"
#include "scramble/hayden_preskill.hpp"
#include "scramble/io.hpp"
#include "scramble/monotones.hpp"

namespace scramble {

namespace {

using io::Json;

struct Options {
    std::uint64_t seed = 0;
    int workers = 0;
    std::size_t dense_cap = 0;
    std::string out_path;

    // monotone
    std::string circuit_path;
    std::string measure = "otoc-magic";
    bool exact = false;
    std::size_t samples = 0;

    // fluctuations
    int n = 4;
    int layers = 4;
    std::size_t ensemble_samples = 50;
    std::string eps_grid = "0:0.7853981633974483:21";
    std::string pa = "X1";
    std::string pb;
    std::string layout = "staggered";

    // hp-bounds
    std::string ensemble;
    std::vector<int> a{1};
    std::vector<int> d;
    bool growth_bound = false;

    // clifford-sample
    std::size_t count = 1;

    // phase-magic-sweep
    std::size_t points = 64;
    bool hierarchy = false;

    // verify
    std::string suite = "all";
};

class Emitter {
   public:
    Emitter(const Options& options, std::ostream& fallback, std::uint64_t config_hash)
        : options_(options), fallback_(fallback), config_hash_(config_hash), start_(std::chrono::steady_clock::now()) {}

    io::Metadata metadata() const {
        return io::Metadata{SCRAMBLE_VERSION, options_.seed, config_hash_,
                            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count()};
    }

    void csv(const std::string& body) const {
        std::ostringstream text;
        io::write_csv_metadata(text, metadata());
        text << body;
        write(text.str());
    }

    void json(Json result) const {
        Json doc{{"metadata", io::metadata_to_json(metadata())}, {"result", std::move(result)}};
        write(doc.dump(2) + "\n");
    }

   private:
    void write(const std::string& text) const {
        if (options_.out_path.empty()) {
            fallback_ << text;
            return;
        }
        std::ofstream file(options_.out_path, std::ios::binary);
        if (!file) {
            throw Error("cannot write '" + options_.out_path + "'");
        }
        file << text;
    }

    const Options& options_;
    std::ostream& fallback_;
    std::uint64_t config_hash_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream in(spec);
    for (std::string part; std::getline(in, part, ':');) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw CLI::ValidationError("--eps-grid", "expected lo:hi:points, got '" + spec + "'");
    }
    return linspace(std::stod(parts[0]), std::stod(parts[1]), std::stoul(parts[2]));
}

EnsembleSpec parse_ensemble(const std::string& text, std::uint64_t seed, std::size_t& index) {
    EnsembleSpec spec;
    spec.seed = seed;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError("--ensemble", "expected key=value, got '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "n") {
            spec.n = std::stoi(value);
        } else if (key == "l") {
            spec.layers = std::stoi(value);
        } else if (key == "eps") {
            spec.eps = std::stod(value);
        } else if (key == "index") {
            index = std::stoul(value);
        } else {
            throw CLI::ValidationError("--ensemble", "unknown key '" + key + "'");
        }
    }
    return spec;
}

BrickLayout parse_layout(const std::string& name) {
    if (name == "staggered") {
        return BrickLayout::kStaggered;
    }
    if (name == "alternating") {
        return BrickLayout::kAlternating;
    }
    throw CLI::ValidationError("--layout", "expected staggered or alternating");
}

int cmd_monotone(const Options& o, const Emitter& emit) {
    const Circuit circuit = io::load_circuit(o.circuit_path);
    MonotoneReport r;
    if (o.measure == "otoc-magic") {
        const DenseOperator u = circuit.to_dense();
        if (o.samples > 0 && !o.exact) {
            Rng rng = make_stream(o.seed, "monotone-samples", 0);
            r = otoc_magic_sampled(u, o.samples, rng);
            r.seed = o.seed;
        } else {
            r = otoc_magic_exact(u);
        }
    } else {
        if (o.samples > 0) {
            throw CLI::ValidationError("--samples", "only otoc-magic has a sampled variant");
        }
        const GrowthMatrix m = growth_matrix(circuit);
        if (o.measure == "pauli-growth") {
            r = pauli_growth(m);
        } else if (o.measure == "pauli-growth-pauli") {
            r = pauli_growth_pauli(m);
        } else {
            r = magic_entropy(m);
        }
    }
    emit.json(io::report_to_json(r, circuit.n(), circuit.d()));
    return kExitOk;
}

int cmd_fluctuations(const Options& o, const Emitter& emit) {
    EnsembleSpec spec;
    spec.n = o.n;
    spec.layers = o.layers;
    spec.samples = o.ensemble_samples;
    spec.seed = o.seed;
    spec.layout = parse_layout(o.layout);
    const auto grid = parse_grid(o.eps_grid);
    const PauliOp pa = PauliOp::parse(o.pa, o.n, 2);
    const PauliOp pb = PauliOp::parse(o.pb.empty() ? "Z" + std::to_string(o.n) : o.pb, o.n, 2);
    const auto rows = fig3_sweep(grid, spec, pa, pb);
    std::ostringstream body;
    io::write_fig3_csv(body, rows);
    emit.csv(body.str());
    return kExitOk;
}

int cmd_hp_bounds(const Options& o, const Emitter& emit) {
    DenseOperator u;
    Json source;
    if (!o.circuit_path.empty()) {
        u = io::load_circuit(o.circuit_path).to_dense();
        source = {{"circuit", o.circuit_path}};
    } else {
        std::size_t index = 0;
        const EnsembleSpec spec = parse_ensemble(o.ensemble, o.seed, index);
        const auto sample = build_brickwork(spec, index);
        u = sample.circuit.to_dense();
        source = {{"ensemble", o.ensemble}, {"sample_seed", sample.seed}};
    }
    SubsystemSplit split{u.n(), o.a, o.d.empty() ? std::vector<int>{u.n()} : o.d};
    HpOptions hp;
    hp.seed = o.seed;
    Json result = io::hp_report_to_json(theorem2_check(u, split, hp));
    result["source"] = source;
    result["A"] = split.a;
    result["D"] = split.d;
    if (o.growth_bound) {
        result["growth_bound"] = io::theorem3_to_json(theorem3_report(u));
        Json rows = Json::array();
        for (const auto& row : otoc_weight_diagnostic(u)) {
            rows.push_back({{"pd", hermitian_pauli_op(SymplecticVector::from_key(u.n(), 2, row.pd)).str()},
                            {"avg_otoc", row.avg_otoc},
                            {"avg_otoc_all_sites", row.avg_otoc_all_sites},
                            {"weight_form", row.weight_form},
                            {"growth_form", row.growth_form}});
        }
        result["otoc_weight_diagnostic"] = rows;
    }
    emit.json(result);
    return kExitOk;
}

int cmd_clifford_sample(const Options& o, const Emitter& emit) {
    Json tableaux = Json::array();
    for (std::size_t i = 0; i < o.count; ++i) {
        Rng rng = make_stream(o.seed, "clifford-sample", i);
        tableaux.push_back(io::tableau_to_json(random_clifford(o.n, rng)));
    }
    emit.json(Json{{"n", o.n}, {"tableaux", tableaux}});
    return kExitOk;
}

int cmd_phase_magic_sweep(const Options& o, const Emitter& emit) {
    std::ostringstream body;
    auto row = [&](double eps) {
        const double exact = otoc_magic_exact(DenseOperator(1, 2, phase_gate(eps))).value;
        const double closed = phase_gate_magic(eps);
        body << io::format_double(eps) << ',' << io::format_double(exact) << ',' << io::format_double(closed) << ','
             << io::format_double(std::abs(exact - closed)) << '\n';
    };
    if (o.hierarchy) {
        body << "k,eps,om_exact,closed_form,abs_error\n";
        for (int k = 1; k <= 7; ++k) {
            body << k << ',';
            row(std::numbers::pi / std::pow(2.0, k - 1));
        }
    } else {
        body << "eps,om_exact,closed_form,abs_error\n";
        for (std::size_t i = 0; i < o.points; ++i) {
            row(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(o.points));
        }
    }
    emit.csv(body.str());
    return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

SuiteResult verify_phase() {
    SuiteResult r{"phase-closed-form", true, {}};
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double eps = 2.0 * std::numbers::pi * i / 64.0;
        worst = std::max(worst, std::abs(otoc_magic_exact(DenseOperator(1, 2, phase_gate(eps))).value -
                                         phase_gate_magic(eps)));
    }
    r.pass = worst <= tol::kAssertion;
    r.detail = "max |O_M - (1 - |cos 2eps|)| = " + io::format_double(worst);
    return r;
}

SuiteResult verify_fluctuation(std::uint64_t seed) {
    SuiteResult r{"fluctuation-bound", true, {}};
    EnsembleSpec spec;
    spec.seed = seed;
    const auto grid = linspace(0.0, std::numbers::pi / 4, 21);
    double worst = 1e300;
    for (const auto& row : fig3_sweep(grid, spec)) {
        worst = std::min(worst, row.slack);
        r.pass = r.pass && row.holds;
    }
    r.detail = "21 rows, min slack = " + io::format_double(worst);
    return r;
}

SuiteResult verify_decoding(std::uint64_t seed) {
    SuiteResult r{"decoding-bound", true, {}};
    const SubsystemSplit split{4, {1}, {4}};
    std::size_t checked = 0;
    double worst_tight = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        EnsembleSpec spec;
        spec.seed = seed;
        spec.eps = std::numbers::pi / 4 * static_cast<double>(i % 5) / 4.0;
        spec.stream = 1000 + i % 5;
        const auto sample = build_brickwork(spec, i);
        const auto rep = theorem2_check(sample.circuit.to_dense(), split);
        r.pass = r.pass && rep.theorem2_holds;
        if (!rep.vacuous) {
            ++checked;
        }
        if (sample.tableau && rep.theorem2_rhs && rep.fidelity) {
            worst_tight = std::max(worst_tight, std::abs(*rep.theorem2_rhs - *rep.fidelity));
        }
    }
    r.pass = r.pass && worst_tight <= tol::kConstruction;
    r.detail = std::to_string(checked) + " non-vacuous of 100, Clifford tightness gap " + io::format_double(worst_tight);
    return r;
}

SuiteResult verify_nonidentity(std::uint64_t seed) {
    SuiteResult r{"nonidentity-average", true, {}};
    const SubsystemSplit split{4, {1, 2}, {4}};
    double worst = 0.0;
    for (std::size_t i = 0; i < 50; ++i) {
        EnsembleSpec spec;
        spec.seed = seed;
        spec.eps = 0.1 * static_cast<double>(i % 8);
        spec.stream = 2000 + i % 8;
        const auto avg = avg_otoc_subsystems(build_brickwork(spec, i).circuit.to_dense(), split);
        worst = std::max(worst, std::abs(avg.mean_otoc_nonidentity - nonidentity_average(avg.mean_otoc, split.d_a())));
    }
    r.pass = worst <= tol::kAssertion;
    r.detail = "50 circuits, max deviation " + io::format_double(worst);
    return r;
}

int cmd_verify(const Options& o, const Emitter& emit, std::ostream& err) {
    std::vector<SuiteResult> results;
    const bool all = o.suite == "all";
    if (all || o.suite == "phase") {
        results.push_back(verify_phase());
    }
    if (all || o.suite == "fluctuation") {
        results.push_back(verify_fluctuation(o.seed));
    }
    if (all || o.suite == "decoding") {
        results.push_back(verify_decoding(o.seed));
    }
    if (all || o.suite == "nonidentity") {
        results.push_back(verify_nonidentity(o.seed));
    }
    if (results.empty()) {
        throw CLI::ValidationError("--suite", "unknown suite '" + o.suite + "'");
    }
    bool pass = true;
    Json rows = Json::array();
    for (const auto& s : results) {
        err << (s.pass ? "PASS " : "FAIL ") << s.name << ": " << s.detail << '\n';
        rows.push_back({{"suite", s.name}, {"pass", s.pass}, {"detail", s.detail}});
        pass = pass && s.pass;
    }
    emit.json(Json{{"pass", pass}, {"suites", rows}});
    return pass ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scrambling resource monotones and bound checks"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
    app.add_option("--workers", o.workers, "OpenMP worker count (0 keeps the runtime default)");
    app.add_option("--dense-cap", o.dense_cap, "Largest dense Hilbert-space dimension");
    app.add_option("--out", o.out_path, "Output file (stdout when omitted)");
    app.fallthrough();

    auto* monotone = app.add_subcommand("monotone", "Evaluate one monotone on a circuit file");
    monotone->add_option("--circuit", o.circuit_path)->required()->check(CLI::ExistingFile);
    monotone->add_option("--measure", o.measure, "Monotone to evaluate")
        ->check(CLI::IsMember({"otoc-magic", "pauli-growth", "pauli-growth-pauli", "magic-entropy"}));
    auto* exact = monotone->add_flag("--exact", o.exact, "Exhaustive OTOC magic");
    monotone->add_option("--samples", o.samples, "Random Pauli pairs for sampled OTOC magic")->excludes(exact);

    auto* fluct = app.add_subcommand("fluctuations", "OTOC fluctuation sweep over eps");
    fluct->add_option("--n", o.n, "Qubits")->check(CLI::Range(2, 10));
    fluct->add_option("--layers", o.layers, "Brickwork layers")->check(CLI::PositiveNumber);
    fluct->add_option("--samples", o.ensemble_samples, "Circuits per grid point")->check(CLI::PositiveNumber);
    fluct->add_option("--eps-grid", o.eps_grid, "lo:hi:points");
    fluct->add_option("--pa", o.pa, "Conjugated Pauli, e.g. X1");
    fluct->add_option("--pb", o.pb, "Fixed Pauli, e.g. Z4");
    fluct->add_option("--layout", o.layout, "Brick placement")->check(CLI::IsMember({"staggered", "alternating"}));

    auto* hp = app.add_subcommand("hp-bounds", "Decoding fidelity and its bounds");
    auto* hp_circuit = hp->add_option("--circuit", o.circuit_path)->check(CLI::ExistingFile);
    auto* hp_ensemble = hp->add_option("--ensemble", o.ensemble, "n=4,l=4,eps=E[,index=K]");
    hp_circuit->excludes(hp_ensemble);
    hp->add_option("--A", o.a, "Input qubits, comma separated")->delimiter(',');
    hp->add_option("--D", o.d, "Radiation qubits, comma separated")->delimiter(',');
    hp->add_flag("--growth-bound", o.growth_bound, "Add the D = {n} growth bound and OTOC-weight diagnostic");

    auto* sample = app.add_subcommand("clifford-sample", "Uniform random Clifford tableaux");
    sample->add_option("--n", o.n)->required()->check(CLI::Range(1, 32));
    sample->add_option("--count", o.count, "Tableaux to draw")->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("phase-magic-sweep", "OTOC magic of the phase gate");
    sweep->add_option("--points", o.points, "Grid points over [0, 2 pi)")->check(CLI::PositiveNumber);
    sweep->add_flag("--hierarchy", o.hierarchy, "Clifford-hierarchy angles pi / 2^(k-1), k = 1..7");

    auto* verify = app.add_subcommand("verify", "Check every theorem-backed inequality");
    verify->add_option("--suite", o.suite, "Suite to run")
        ->check(CLI::IsMember({"all", "phase", "fluctuation", "decoding", "nonidentity"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (hp->parsed() && o.circuit_path.empty() && o.ensemble.empty()) {
            throw CLI::RequiredError("--circuit or --ensemble");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (o.workers > 0) {
        kernels::set_worker_count(o.workers);
    }
    if (o.dense_cap > 0) {
        set_dense_cap(o.dense_cap);
    }
    std::string config = app.config_to_str(true, false);
    // Output location and worker count never change the data.
    std::stringstream filtered;
    std::stringstream lines(config);
    for (std::string line; std::getline(lines, line);) {
        if (line.rfind("out=", 0) != 0 && line.rfind("workers=", 0) != 0) {
            filtered << line << '\n';
        }
    }
    const Emitter emit(o, out, tag_hash(filtered.str()));

    try {
        if (monotone->parsed()) {
            return cmd_monotone(o, emit);
        }
        if (fluct->parsed()) {
            return cmd_fluctuations(o, emit);
        }
        if (hp->parsed()) {
            return cmd_hp_bounds(o, emit);
        }
        if (sample->parsed()) {
            return cmd_clifford_sample(o, emit);
        }
        if (sweep->parsed()) {
            return cmd_phase_magic_sweep(o, emit);
        }
        return cmd_verify(o, emit, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, std::cout, std::cerr);
}

}  // namespace scramble
