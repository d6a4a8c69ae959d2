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


#ifndef SCRAMBLE_HAYDEN_PRESKILL_HPP
#define SCRAMBLE_HAYDEN_PRESKILL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "scramble/kernels.hpp"
#include "scramble/monotones.hpp"

namespace scramble {

/// Alice's input A and the late radiation D, as 1-based qubit indices.
struct SubsystemSplit {
    int n = 0;
    std::vector<int> a;
    std::vector<int> d;

    /// Throws unless both sets are nonempty, in range, duplicate-free and disjoint.
    void validate() const;
    std::size_t d_a() const { return std::size_t{1} << a.size(); }
};

/// Keys of all 4^|sites| qubit Paulis supported on the given sites, ascending.
std::vector<std::uint64_t> subsystem_keys(int n, const std::vector<int>& sites);

/// Uniform averages over Hermitian Pauli pairs (P_A, P_D) of OTOC(U; P_A, P_D),
/// with P_A the conjugated operator.
struct SubsystemOtoc {
    double mean_otoc = 0.0;
    double mean_abs_otoc = 0.0;
    /// Direct average over P_A != I (all P_D).
    double mean_otoc_nonidentity = 0.0;
    /// values(i, j) for the i-th key on A and j-th key on D.
    kernels::RealMatrix values;
};

SubsystemOtoc avg_otoc_subsystems(const DenseOperator& u, const SubsystemSplit& split,
                                  kernels::Exec exec = kernels::Exec::kParallel);
SubsystemOtoc avg_otoc_subsystems_reference(const DenseOperator& u, const SubsystemSplit& split);
SubsystemOtoc avg_otoc_subsystems(const CliffordTableau& t, const SubsystemSplit& split);

/// 1 / (d_A^2 mean_otoc); empty when mean_otoc <= 0.
std::optional<double> decoding_fidelity(double mean_otoc, std::size_t d_a);
std::optional<double> decoding_fidelity(const DenseOperator& u, const SubsystemSplit& split);

/// (d_A^2 mean_all - 1) / (d_A^2 - 1).
double nonidentity_average(double mean_all, std::size_t d_a);

struct HpOptions {
    /// Exact OTOC magic up to this many qubits, sampled above.
    int max_exact_qubits = 5;
    std::size_t om_samples = 4096;
    std::uint64_t seed = 0;
    kernels::Exec exec = kernels::Exec::kParallel;
};

struct HpReport {
    std::size_t d_a = 2;
    double mean_otoc = 0.0;
    double mean_abs_otoc = 0.0;
    double eta = 0.0;
    std::optional<double> fidelity;
    double om = 0.0;
    Method om_method = Method::kExact;
    /// 1 / (d_A^2 (1 - O_M - eta)) when positive denominator.
    std::optional<double> theorem2_rhs;
    bool vacuous = false;
    bool theorem2_holds = true;
    /// Set when O_M is a sampled lower bound, which makes rhs an upper estimate.
    bool rhs_is_estimate = false;
};

HpReport theorem2_check(const DenseOperator& u, const SubsystemSplit& split, const HpOptions& options = {});

/// D = {n}; A ranges over the single qubits 1..n-1. Holds only asymptotically.
struct Theorem3Report {
    int n = 0;
    double growth = 0.0;
    /// mean over A of 1/F = d_A^2 mean_otoc (defined even when F is not).
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    std::vector<double> inverse_fidelity;
};

Theorem3Report theorem3_report(const DenseOperator& u, kernels::Exec exec = kernels::Exec::kParallel);

/// Relation between the subsystem-averaged OTOC and the weight of U^dag P_D U,
/// D = {n}, P_D in {X, Y, Z}. P_D is the conjugated operator.
struct OtocWeightRow {
    std::uint64_t pd = 0;
    /// avg over A in 1..n-1 and P_A != I of OTOC(U; P_D, P_A).
    double avg_otoc = 0.0;
    /// Same average with A ranging over all n qubits; equals weight_form exactly.
    double avg_otoc_all_sites = 0.0;
    /// 1 - 4 W(U^dag P_D U) / (3n).
    double weight_form = 0.0;
    /// 1 - 4 (G + 1) / (3n).
    double growth_form = 0.0;
};

std::vector<OtocWeightRow> otoc_weight_diagnostic(const DenseOperator& u,
                                                  kernels::Exec exec = kernels::Exec::kParallel);

}  // namespace scramble

#endif  // SCRAMBLE_HAYDEN_PRESKILL_HPP
