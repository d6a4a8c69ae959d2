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


#include "scramble/hayden_preskill.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scramble {

namespace {

using Index = Eigen::Index;

std::vector<double> hermitian_row(const DenseOperator& u, std::uint64_t key) {
    const Matrix q = u.matrix().adjoint() * kernels::apply_hermitian_pauli_left(u.matrix(), u.n(), key);
    return hermitian_coefficients(DenseOperator(u.n(), 2, q));
}

SubsystemOtoc summarize(kernels::RealMatrix values) {
    SubsystemOtoc out;
    double sum = 0.0;
    double abs_sum = 0.0;
    double rest = 0.0;
    for (Index i = 0; i < values.rows(); ++i) {
        for (Index j = 0; j < values.cols(); ++j) {
            sum += values(i, j);
            abs_sum += std::abs(values(i, j));
            if (i > 0) {
                rest += values(i, j);
            }
        }
    }
    const auto count = static_cast<double>(values.size());
    out.mean_otoc = sum / count;
    out.mean_abs_otoc = abs_sum / count;
    out.mean_otoc_nonidentity = rest / static_cast<double>((values.rows() - 1) * values.cols());
    out.values = std::move(values);
    return out;
}

void require_split(const DenseOperator& u, const SubsystemSplit& split) {
    split.validate();
    if (u.d() != 2 || u.n() != split.n) {
        throw DimensionMismatch("subsystem split and unitary disagree on the qubit count");
    }
}

}  // namespace

void SubsystemSplit::validate() const {
    if (a.empty() || d.empty()) {
        throw Error("subsystems A and D must be nonempty");
    }
    std::set<int> seen;
    for (int s : a) {
        if (s < 1 || s > n || !seen.insert(s).second) {
            throw Error("bad or repeated site " + std::to_string(s) + " in A");
        }
    }
    for (int s : d) {
        if (s < 1 || s > n) {
            throw Error("site " + std::to_string(s) + " in D outside [1, " + std::to_string(n) + "]");
        }
        if (!seen.insert(s).second) {
            throw Error("site " + std::to_string(s) + " appears twice or in both A and D");
        }
    }
}

std::vector<std::uint64_t> subsystem_keys(int n, const std::vector<int>& sites) {
    const std::size_t count = std::size_t{1} << (2 * sites.size());
    std::vector<std::uint64_t> keys(count);
    for (std::size_t local = 0; local < count; ++local) {
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < sites.size(); ++j) {
            const std::uint64_t pair = (local >> (2 * j)) & 3U;
            if (sites[j] < 1 || sites[j] > n) {
                throw Error("site outside register");
            }
            key |= pair << (2 * (sites[j] - 1));
        }
        keys[local] = key;
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

SubsystemOtoc avg_otoc_subsystems(const DenseOperator& u, const SubsystemSplit& split, kernels::Exec exec) {
    require_split(u, split);
    u.require_unitary();
    const auto keys_a = subsystem_keys(split.n, split.a);
    const auto keys_d = subsystem_keys(split.n, split.d);
    kernels::RealMatrix values(static_cast<Index>(keys_a.size()), static_cast<Index>(keys_d.size()));
    kernels::parallel_for(keys_a.size(), exec, [&](std::size_t i) {
        const auto alpha = hermitian_row(u, keys_a[i]);
        for (std::size_t j = 0; j < keys_d.size(); ++j) {
            values(static_cast<Index>(i), static_cast<Index>(j)) = otoc_fast(alpha, keys_d[j]);
        }
    });
    return summarize(std::move(values));
}

SubsystemOtoc avg_otoc_subsystems_reference(const DenseOperator& u, const SubsystemSplit& split) {
    require_split(u, split);
    const auto keys_a = subsystem_keys(split.n, split.a);
    const auto keys_d = subsystem_keys(split.n, split.d);
    kernels::RealMatrix values(static_cast<Index>(keys_a.size()), static_cast<Index>(keys_d.size()));
    for (std::size_t i = 0; i < keys_a.size(); ++i) {
        for (std::size_t j = 0; j < keys_d.size(); ++j) {
            values(static_cast<Index>(i), static_cast<Index>(j)) =
                otoc(u, SymplecticVector::from_key(split.n, 2, keys_a[i]),
                     SymplecticVector::from_key(split.n, 2, keys_d[j]));
        }
    }
    return summarize(std::move(values));
}

SubsystemOtoc avg_otoc_subsystems(const CliffordTableau& t, const SubsystemSplit& split) {
    split.validate();
    if (t.n() != split.n) {
        throw DimensionMismatch("subsystem split and tableau disagree on the qubit count");
    }
    const auto keys_a = subsystem_keys(split.n, split.a);
    const auto keys_d = subsystem_keys(split.n, split.d);
    kernels::RealMatrix values(static_cast<Index>(keys_a.size()), static_cast<Index>(keys_d.size()));
    for (std::size_t i = 0; i < keys_a.size(); ++i) {
        const std::uint64_t image = t.conjugate(hermitian_pauli_op(SymplecticVector::from_key(split.n, 2, keys_a[i])))
                                        .vec()
                                        .key();
        for (std::size_t j = 0; j < keys_d.size(); ++j) {
            values(static_cast<Index>(i), static_cast<Index>(j)) = qubit::commutation_sign(image, keys_d[j]);
        }
    }
    return summarize(std::move(values));
}

std::optional<double> decoding_fidelity(double mean_otoc, std::size_t d_a) {
    if (mean_otoc <= 0.0) {
        return std::nullopt;
    }
    const double da2 = static_cast<double>(d_a * d_a);
    return 1.0 / (da2 * mean_otoc);
}

std::optional<double> decoding_fidelity(const DenseOperator& u, const SubsystemSplit& split) {
    return decoding_fidelity(avg_otoc_subsystems(u, split).mean_otoc, split.d_a());
}

double nonidentity_average(double mean_all, std::size_t d_a) {
    if (d_a < 2) {
        throw Error("d_A must be at least 2");
    }
    const double da2 = static_cast<double>(d_a * d_a);
    return (da2 * mean_all - 1.0) / (da2 - 1.0);
}

HpReport theorem2_check(const DenseOperator& u, const SubsystemSplit& split, const HpOptions& options) {
    const auto avg = avg_otoc_subsystems(u, split, options.exec);
    HpReport r;
    r.d_a = split.d_a();
    r.mean_otoc = avg.mean_otoc;
    r.mean_abs_otoc = avg.mean_abs_otoc;
    r.eta = avg.mean_abs_otoc - avg.mean_otoc;
    r.fidelity = decoding_fidelity(avg.mean_otoc, r.d_a);
    if (u.n() <= options.max_exact_qubits) {
        const auto om = otoc_magic_exact(u, OtocMagicOptions{.max_qubits = options.max_exact_qubits, .exec = options.exec});
        r.om = om.value;
        r.om_method = om.method;
    } else {
        Rng rng = make_stream(options.seed, "hp-otoc-magic", 0);
        r.om = otoc_magic_sampled(u, options.om_samples, rng).value;
        r.om_method = Method::kSampled;
        r.rhs_is_estimate = true;
    }
    const double denominator = 1.0 - r.om - r.eta;
    if (denominator > 0.0) {
        const double da2 = static_cast<double>(r.d_a * r.d_a);
        r.theorem2_rhs = 1.0 / (da2 * denominator);
        r.theorem2_holds = !r.fidelity || *r.fidelity <= *r.theorem2_rhs + tol::kConstruction;
    } else {
        r.vacuous = true;
    }
    return r;
}

Theorem3Report theorem3_report(const DenseOperator& u, kernels::Exec exec) {
    const int n = u.n();
    if (u.d() != 2 || n < 2) {
        throw Error("growth-bound layout needs at least two qubits");
    }
    Theorem3Report r;
    r.n = n;
    r.growth = pauli_growth(u, GrowthOptions{.max_qubits = n, .exec = exec}).value;
    double sum = 0.0;
    for (int a = 1; a < n; ++a) {
        const SubsystemSplit split{n, {a}, {n}};
        const double inverse = 4.0 * avg_otoc_subsystems(u, split, exec).mean_otoc;
        r.inverse_fidelity.push_back(inverse);
        sum += inverse;
    }
    r.lhs = sum / static_cast<double>(n - 1);
    r.rhs = 3.0 * (1.0 - 4.0 / (3.0 * n) * (r.growth + 1.0)) + 1.0;
    r.holds = r.lhs >= r.rhs - tol::kConstruction;
    return r;
}

std::vector<OtocWeightRow> otoc_weight_diagnostic(const DenseOperator& u, kernels::Exec exec) {
    const int n = u.n();
    if (u.d() != 2 || n < 2) {
        throw Error("OTOC-weight diagnostic needs at least two qubits");
    }
    const double growth = pauli_growth(u, GrowthOptions{.max_qubits = n, .exec = exec}).value;
    const std::uint64_t shift = 2 * static_cast<std::uint64_t>(n - 1);
    std::vector<OtocWeightRow> rows;
    for (std::uint64_t local : {1ULL, 3ULL, 2ULL}) {
        OtocWeightRow row;
        row.pd = local << shift;
        const auto alpha = hermitian_row(u, row.pd);
        double weight = 0.0;
        for (std::size_t c = 0; c < alpha.size(); ++c) {
            weight += alpha[c] * alpha[c] * qubit::key_weight(c);
        }
        std::vector<double> per_site(static_cast<std::size_t>(n), 0.0);
        kernels::parallel_for(static_cast<std::size_t>(n), exec, [&](std::size_t j) {
            double acc = 0.0;
            for (std::uint64_t p : {1ULL, 2ULL, 3ULL}) {
                acc += otoc_fast(alpha, p << (2 * j));
            }
            per_site[j] = acc / 3.0;
        });
        double others = 0.0;
        double all = 0.0;
        for (int j = 0; j < n; ++j) {
            all += per_site[static_cast<std::size_t>(j)];
            if (j != n - 1) {
                others += per_site[static_cast<std::size_t>(j)];
            }
        }
        row.avg_otoc = others / static_cast<double>(n - 1);
        row.avg_otoc_all_sites = all / static_cast<double>(n);
        row.weight_form = 1.0 - 4.0 * weight / (3.0 * n);
        row.growth_form = 1.0 - 4.0 * (growth + 1.0) / (3.0 * n);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace scramble
