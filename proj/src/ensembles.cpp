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


#include "scramble/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scramble {

namespace {

std::uint64_t sample_seed(const EnsembleSpec& spec, std::size_t index) {
    const std::uint64_t grid = derive_seed(spec.seed, tag_hash("brickwork"), spec.stream);
    return derive_seed(grid, tag_hash("sample"), index);
}

struct SampleValues {
    double otoc = 0.0;
    double om = 0.0;
    bool clifford = false;
};

SampleValues evaluate(const BrickworkSample& sample, const PauliOp& pa, const PauliOp& pb, bool with_om) {
    SampleValues out;
    if (sample.tableau) {
        out.otoc = otoc_clifford(*sample.tableau, pa.vec(), pb.vec());
        out.clifford = true;
        return out;
    }
    const DenseOperator u = sample.circuit.to_dense();
    const int n = u.n();
    const Matrix q = u.matrix().adjoint() * kernels::apply_hermitian_pauli_left(u.matrix(), n, pa.vec().key());
    const auto alpha = hermitian_coefficients(DenseOperator(n, 2, q));
    out.otoc = otoc_fast(alpha, pb.vec().key());
    if (with_om) {
        out.om = otoc_magic_exact(u, OtocMagicOptions{.max_qubits = n, .exec = kernels::Exec::kSerial}).value;
    }
    return out;
}

std::vector<double> ranks(std::span<const double> v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) {
            ++j;
        }
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            r[order[k]] = avg;
        }
        i = j + 1;
    }
    return r;
}

}  // namespace

BrickworkSample build_brickwork(const EnsembleSpec& spec, std::size_t sample_index) {
    if (spec.n < 2 || spec.layers < 1) {
        throw Error("brickwork needs n >= 2 and at least one layer");
    }
    if (spec.n % 2 != 0 && !spec.allow_odd) {
        throw Error("brickwork tiling needs even n, got " + std::to_string(spec.n) +
                    "; set allow_odd to leave the last wire idle");
    }
    BrickworkSample out;
    out.seed = sample_seed(spec, sample_index);
    Rng rng(out.seed);
    Circuit circuit(spec.n, 2);
    auto bricks = [&](int first, int layer) {
        for (; first + 1 <= spec.n; first += 2) {
            circuit.append(Gate::clifford(random_clifford(2, rng), {first, first + 1}, layer));
        }
    };
    for (int j = 1; j <= spec.layers; ++j) {
        const int cycle = (j - 1) % spec.n;
        if (spec.layout == BrickLayout::kStaggered) {
            circuit.append(Gate::phase(spec.eps, spec.n - cycle, 3 * j - 3));
            bricks(2, 3 * j - 2);
            bricks(1, 3 * j - 1);
        } else {
            circuit.append(Gate::phase(spec.eps, cycle + 1, 3 * j - 3));
            bricks(j % 2 == 1 ? 1 : 2, 3 * j - 2);
        }
    }
    out.tableau = circuit.to_tableau();
    out.circuit = std::move(circuit);
    return out;
}

std::pair<double, double> mean_and_deviation(std::span<const double> values) {
    if (values.empty()) {
        throw Error("statistics of an empty sample");
    }
    const double count = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / count;
    double sq = 0.0;
    for (double v : values) {
        sq += (v - mean) * (v - mean);
    }
    return {mean, std::sqrt(sq / count)};
}

FluctuationRecord estimate_fluctuations(const EnsembleSpec& spec, const PauliOp& pa, const PauliOp& pb,
                                        const FluctuationOptions& options) {
    if (spec.samples < 1) {
        throw Error("ensemble needs at least one sample");
    }
    if (pa.n() != spec.n || pb.n() != spec.n || pa.d() != 2 || pb.d() != 2) {
        throw DimensionMismatch("OTOC Paulis must act on the ensemble's n qubits");
    }
    hermitian_sign(pa);
    hermitian_sign(pb);

    std::vector<SampleValues> values(spec.samples);
    std::vector<std::uint64_t> seeds(spec.samples);
    kernels::parallel_for(spec.samples, options.exec, [&](std::size_t i) {
        const auto sample = build_brickwork(spec, i);
        seeds[i] = sample.seed;
        values[i] = evaluate(sample, pa, pb, options.with_otoc_magic);
    });

    FluctuationRecord r;
    r.eps = spec.eps;
    r.seeds = std::move(seeds);
    double abs_sum = 0.0;
    double om_sum = 0.0;
    for (const auto& v : values) {
        r.otocs.push_back(v.otoc);
        r.otoc_magics.push_back(v.om);
        abs_sum += std::abs(v.otoc);
        om_sum += v.om;
        r.clifford_samples += v.clifford ? 1 : 0;
    }
    const auto [mean, dev] = mean_and_deviation(r.otocs);
    const double count = static_cast<double>(values.size());
    r.mean_otoc = mean;
    r.delta = dev;
    r.mean_abs_otoc = abs_sum / count;
    if (options.with_otoc_magic) {
        r.mean_otoc_magic = om_sum / count;
    } else {
        r.otoc_magics.clear();
    }
    return r;
}

FluctuationRecord estimate_fluctuations(const EnsembleSpec& spec, const FluctuationOptions& options) {
    return estimate_fluctuations(spec, PauliOp::single(spec.n, 2, 1, 1, 0), PauliOp::single(spec.n, 2, spec.n, 0, 1),
                                 options);
}

Theorem1Row theorem1_check(const EnsembleSpec& spec, const PauliOp& pa, const PauliOp& pb, kernels::Exec exec) {
    const auto rec = estimate_fluctuations(spec, pa, pb, FluctuationOptions{.with_otoc_magic = true, .exec = exec});
    Theorem1Row row;
    row.eps = spec.eps;
    row.mean_om = *rec.mean_otoc_magic;
    row.delta = rec.delta;
    row.one_minus_delta = 1.0 - rec.delta;
    row.mean_otoc = rec.mean_otoc;
    row.mean_abs_otoc = rec.mean_abs_otoc;
    row.bound = 1.0 - rec.delta - std::abs(rec.mean_otoc);
    row.slack = row.mean_om - row.bound;
    row.holds = row.slack >= -kBoundSlack;
    return row;
}

Theorem1Row theorem1_check(const EnsembleSpec& spec, kernels::Exec exec) {
    return theorem1_check(spec, PauliOp::single(spec.n, 2, 1, 1, 0), PauliOp::single(spec.n, 2, spec.n, 0, 1), exec);
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    std::vector<double> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        out[i] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return out;
}

std::vector<Theorem1Row> fig3_sweep(std::span<const double> eps_grid, const EnsembleSpec& spec_template,
                                    std::optional<PauliOp> pa, std::optional<PauliOp> pb, kernels::Exec exec) {
    const int n = spec_template.n;
    const PauliOp a = pa.value_or(PauliOp::single(n, 2, 1, 1, 0));
    const PauliOp b = pb.value_or(PauliOp::single(n, 2, n, 0, 1));
    std::vector<Theorem1Row> rows;
    rows.reserve(eps_grid.size());
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        EnsembleSpec spec = spec_template;
        spec.eps = eps_grid[i];
        spec.stream = i;
        rows.push_back(theorem1_check(spec, a, b, exec));
    }
    return rows;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error("spearman needs two equal-length samples of size >= 2");
    }
    const auto rx = ranks(x);
    const auto ry = ranks(y);
    const auto [mx, sx] = mean_and_deviation(rx);
    const auto [my, sy] = mean_and_deviation(ry);
    if (sx == 0.0 || sy == 0.0) {
        return 0.0;
    }
    double cov = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        cov += (rx[i] - mx) * (ry[i] - my);
    }
    return cov / static_cast<double>(rx.size()) / (sx * sy);
}

}  // namespace scramble
