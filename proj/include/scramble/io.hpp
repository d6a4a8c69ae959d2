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


#ifndef SCRAMBLE_IO_HPP
#define SCRAMBLE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "scramble/circuit.hpp"
#include "scramble/clifford.hpp"
#include "scramble/ensembles.hpp"
#include "scramble/hayden_preskill.hpp"
#include "scramble/monotones.hpp"

namespace scramble::io {

using Json = nlohmann::json;

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

/// {"n", "d", "entries": row-major [re, im] pairs}.
Json operator_to_json(const DenseOperator& op);
DenseOperator operator_from_json(const Json& j);

/// {"n", "x_images": [...], "z_images": [...]} with signed text Paulis.
Json tableau_to_json(const CliffordTableau& t);
CliffordTableau tableau_from_json(const Json& j);

/// Circuit document {n, d?, gates: [{name, sites, params?, matrix?, tableau?,
/// layer?}, ...]}. Errors name the offending gate position.
Circuit parse_circuit(const Json& j);
Circuit load_circuit(const std::string& path);
Json circuit_to_json(const Circuit& c);

Json report_to_json(const MonotoneReport& r, int n, int d);
Json hp_report_to_json(const HpReport& r);
Json theorem3_to_json(const Theorem3Report& r);

/// key (text Pauli), probability; one row per key with nonzero mass.
void write_spectrum_csv(std::ostream& out, const PauliSpectrum& spectrum);

/// eps, mean_om, one_minus_delta, mean_otoc, mean_abs_otoc, holds.
void write_fig3_csv(std::ostream& out, const std::vector<Theorem1Row>& rows);

/// Provenance for every artifact. Emitted as leading '#' lines in CSV and as
/// a "metadata" object in JSON.
struct Metadata {
    std::string version;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;
    double wall_time_s = 0.0;
};

void write_csv_metadata(std::ostream& out, const Metadata& m);
Json metadata_to_json(const Metadata& m);

}  // namespace scramble::io

#endif  // SCRAMBLE_IO_HPP
