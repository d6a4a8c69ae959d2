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


#include "scramble/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace scramble::io {

namespace {

using Index = Eigen::Index;

Complex complex_of(const Json& pair) {
    if (pair.is_number()) {
        return {pair.get<double>(), 0.0};
    }
    if (!pair.is_array() || pair.size() != 2) {
        throw Error("complex entries must be [re, im] pairs");
    }
    return {pair[0].get<double>(), pair[1].get<double>()};
}

// Accepts a flat row-major list of dim^2 pairs or dim rows of dim pairs.
Matrix matrix_of(const Json& j, Index dim) {
    if (!j.is_array() || j.empty()) {
        throw Error("matrix must be a nonempty array");
    }
    Matrix m(dim, dim);
    const bool flat = j.size() == static_cast<std::size_t>(dim * dim) && j[0].is_array() && j[0].size() == 2 &&
                      j[0][0].is_number();
    for (Index r = 0; r < dim; ++r) {
        if (!flat && (j.size() != static_cast<std::size_t>(dim) || j[static_cast<std::size_t>(r)].size() !=
                                                                        static_cast<std::size_t>(dim))) {
            throw Error("matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
        }
        for (Index c = 0; c < dim; ++c) {
            m(r, c) = flat ? complex_of(j[static_cast<std::size_t>(r * dim + c)])
                           : complex_of(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

std::string signed_text(const PauliOp& p) {
    std::string s = p.str();
    return (s.front() == '-') ? s : "+" + s;
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

Json operator_to_json(const DenseOperator& op) {
    Json entries = Json::array();
    for (Index r = 0; r < op.dim(); ++r) {
        for (Index c = 0; c < op.dim(); ++c) {
            entries.push_back({op.matrix()(r, c).real(), op.matrix()(r, c).imag()});
        }
    }
    return Json{{"n", op.n()}, {"d", op.d()}, {"entries", entries}};
}

DenseOperator operator_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    const int d = j.value("d", 2);
    require_dense(n, d);
    const auto dim = static_cast<Index>(ipow(static_cast<std::size_t>(d), n));
    return DenseOperator(n, d, matrix_of(j.at("entries"), dim));
}

Json tableau_to_json(const CliffordTableau& t) {
    Json xs = Json::array();
    Json zs = Json::array();
    for (int i = 0; i < t.n(); ++i) {
        xs.push_back(signed_text(t.x_image(i)));
        zs.push_back(signed_text(t.z_image(i)));
    }
    return Json{{"n", t.n()}, {"x_images", xs}, {"z_images", zs}};
}

CliffordTableau tableau_from_json(const Json& j) {
    const auto& xs = j.at("x_images");
    const auto& zs = j.at("z_images");
    const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(xs.size());
    if (xs.size() != static_cast<std::size_t>(n) || zs.size() != static_cast<std::size_t>(n)) {
        throw Error("tableau needs n X images and n Z images");
    }
    std::vector<PauliOp> x_images;
    std::vector<PauliOp> z_images;
    for (int i = 0; i < n; ++i) {
        x_images.push_back(PauliOp::parse(xs[static_cast<std::size_t>(i)].get<std::string>(), n, 2));
        z_images.push_back(PauliOp::parse(zs[static_cast<std::size_t>(i)].get<std::string>(), n, 2));
    }
    return CliffordTableau::from_images(std::move(x_images), std::move(z_images));
}

Circuit parse_circuit(const Json& j) {
    if (!j.is_object()) {
        throw Error("circuit document must be a JSON object");
    }
    Circuit circuit(j.at("n").get<int>(), j.value("d", 2));
    if (!j.contains("gates")) {
        return circuit;
    }
    std::size_t position = 0;
    for (const auto& g : j.at("gates")) {
        const std::string where = "gate " + std::to_string(position);
        try {
            const std::string name = g.at("name").get<std::string>();
            const auto sites = g.at("sites").get<std::vector<int>>();
            const int layer = g.value("layer", -1);
            if (name == "PHASE") {
                if (sites.size() != 1) {
                    throw Error("PHASE acts on one site");
                }
                circuit.append(Gate::phase(g.at("params").at("eps").get<double>(), sites[0], layer));
            } else if (name == "TABLEAU") {
                circuit.append(Gate::clifford(tableau_from_json(g.at("tableau")), sites, layer));
            } else if (name == "MATRIX" || g.contains("matrix")) {
                const auto dim = static_cast<Index>(
                    ipow(static_cast<std::size_t>(circuit.d()), static_cast<int>(sites.size())));
                circuit.append(Gate::raw(matrix_of(g.at("matrix"), dim), sites, layer));
            } else {
                circuit.append(Gate::named(name, sites, layer));
            }
        } catch (const Json::exception& e) {
            throw Error(where + ": " + e.what());
        } catch (const Error& e) {
            throw Error(where + ": " + e.what());
        }
        ++position;
    }
    return circuit;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open circuit file '" + path + "'");
    }
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw Error("circuit file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_circuit(j);
}

Json circuit_to_json(const Circuit& c) {
    Json gates = Json::array();
    for (const auto& g : c.gates()) {
        Json entry{{"name", g.name}, {"sites", g.sites}};
        if (g.layer >= 0) {
            entry["layer"] = g.layer;
        }
        switch (g.kind) {
            case Gate::Kind::kPhase:
                entry["params"] = Json{{"eps", g.eps}};
                break;
            case Gate::Kind::kTableau:
                entry["tableau"] = tableau_to_json(*g.tableau);
                break;
            case Gate::Kind::kMatrix: {
                const int k = static_cast<int>(g.sites.size());
                entry["matrix"] = operator_to_json(DenseOperator(k, c.d(), g.matrix))["entries"];
                break;
            }
            case Gate::Kind::kNamed:
                break;
        }
        gates.push_back(std::move(entry));
    }
    return Json{{"n", c.n()}, {"d", c.d()}, {"gates", gates}};
}

Json report_to_json(const MonotoneReport& r, int n, int d) {
    Json j{{"measure", r.measure}, {"value", r.value}, {"method", to_string(r.method)}, {"samples_used", r.samples_used}};
    if (r.seed) {
        j["seed"] = *r.seed;
    }
    if (r.witness_pair) {
        j["witness"] = {{"pa", hermitian_pauli_op(SymplecticVector::from_key(n, d, r.witness_pair->first)).str()},
                        {"pb", hermitian_pauli_op(SymplecticVector::from_key(n, d, r.witness_pair->second)).str()}};
    }
    if (!r.witness_vector.empty()) {
        Json basis = Json::array();
        Json coeffs = Json::array();
        for (std::size_t i = 0; i < r.witness_basis.size(); ++i) {
            basis.push_back(PauliOp(SymplecticVector::from_key(n, d, r.witness_basis[i])).str());
            coeffs.push_back({r.witness_vector[i].real(), r.witness_vector[i].imag()});
        }
        j["witness"] = {{"basis", basis}, {"coefficients", coeffs}};
    }
    if (r.witness_key) {
        j["witness"] = {{"pauli", PauliOp(SymplecticVector::from_key(n, d, *r.witness_key)).str()}};
    }
    if (r.certificate) {
        j["certificate"] = tableau_to_json(*r.certificate);
    }
    if (!r.diagnostics.empty()) {
        j["diagnostics"] = r.diagnostics;
    }
    return j;
}

Json hp_report_to_json(const HpReport& r) {
    Json j{{"d_a", r.d_a},
           {"mean_otoc", r.mean_otoc},
           {"mean_abs_otoc", r.mean_abs_otoc},
           {"eta", r.eta},
           {"om", r.om},
           {"om_method", to_string(r.om_method)},
           {"vacuous", r.vacuous},
           {"theorem2_holds", r.theorem2_holds},
           {"rhs_is_estimate", r.rhs_is_estimate}};
    j["fidelity"] = r.fidelity ? Json(*r.fidelity) : Json("undefined: mean OTOC <= 0");
    j["theorem2_rhs"] = r.theorem2_rhs ? Json(*r.theorem2_rhs) : Json(nullptr);
    return j;
}

Json theorem3_to_json(const Theorem3Report& r) {
    return Json{{"n", r.n},          {"growth", r.growth}, {"lhs", r.lhs},
                {"rhs", r.rhs},      {"holds", r.holds},   {"inverse_fidelity", r.inverse_fidelity},
                {"regime", "asymptotic in n; diagnostic only"}};
}

void write_spectrum_csv(std::ostream& out, const PauliSpectrum& spectrum) {
    out << "key,probability\n";
    for (std::size_t k = 0; k < spectrum.probs.size(); ++k) {
        if (spectrum.probs[k] > 0.0) {
            out << PauliOp(SymplecticVector::from_key(spectrum.n, spectrum.d, k)).str() << ','
                << format_double(spectrum.probs[k]) << '\n';
        }
    }
}

void write_fig3_csv(std::ostream& out, const std::vector<Theorem1Row>& rows) {
    out << "eps,mean_om,one_minus_delta,mean_otoc,mean_abs_otoc,holds\n";
    for (const auto& r : rows) {
        out << format_double(r.eps) << ',' << format_double(r.mean_om) << ',' << format_double(r.one_minus_delta) << ','
            << format_double(r.mean_otoc) << ',' << format_double(r.mean_abs_otoc) << ',' << (r.holds ? "true" : "false")
            << '\n';
    }
}

void write_csv_metadata(std::ostream& out, const Metadata& m) {
    out << "# version: " << m.version << '\n'
        << "# seed: " << m.seed << '\n'
        << "# config_hash: " << m.config_hash << '\n'
        << "# wall_time_s: " << format_double(m.wall_time_s) << '\n';
}

Json metadata_to_json(const Metadata& m) {
    return Json{{"version", m.version}, {"seed", m.seed}, {"config_hash", m.config_hash}, {"wall_time_s", m.wall_time_s}};
}

}  // namespace scramble::io
