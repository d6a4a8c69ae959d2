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


#ifndef SCRAMBLE_ENSEMBLES_HPP
#define SCRAMBLE_ENSEMBLES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scramble/circuit.hpp"
#include "scramble/kernels.hpp"
#include "scramble/monotones.hpp"

namespace scramble {

/// Where the bricks and phase gates of one layer go.
enum class BrickLayout {
    /// Layer j: U_eps on wire n - ((j - 1) mod n), then bricks on (2,3), (4,5),
    /// ..., then bricks on (1,2), (3,4), .... Wire 1 is the top wire.
    kStaggered,
    /// Layer j: U_eps on wire ((j - 1) mod n) + 1, then bricks on (1,2), (3,4),
    /// ... for odd j and on (2,3), (4,5), ... for even j.
    kAlternating,
};

/// Brickwork ensemble: `layers` layers of uniform two-qubit Cliffords with one
/// phase gate U_eps per layer.
struct EnsembleSpec {
    int n = 4;
    int layers = 4;
    double eps = 0.0;
    std::uint64_t seed = 0;
    std::size_t samples = 50;
    /// Separates the Clifford draws of different grid points sharing a seed.
    std::uint64_t stream = 0;
    /// Odd n is rejected unless set; the last wire then idles in odd layers.
    bool allow_odd = false;
    BrickLayout layout = BrickLayout::kStaggered;
};

/// One ensemble member. `tableau` is present when every gate is Clifford.
struct BrickworkSample {
    Circuit circuit;
    std::optional<CliffordTableau> tableau;
    std::uint64_t seed = 0;
};

/// Gates are drawn from one stream per (seed, stream, sample_index) in circuit
/// order.
BrickworkSample build_brickwork(const EnsembleSpec& spec, std::size_t sample_index);

struct FluctuationRecord {
    double eps = 0.0;
    double delta = 0.0;
    double mean_otoc = 0.0;
    double mean_abs_otoc = 0.0;
    std::optional<double> mean_otoc_magic;
    std::vector<double> otocs;
    std::vector<double> otoc_magics;
    std::vector<std::uint64_t> seeds;
    /// Samples evaluated through tableaux.
    std::size_t clifford_samples = 0;
};

struct FluctuationOptions {
    bool with_otoc_magic = false;
    kernels::Exec exec = kernels::Exec::kParallel;
};

/// Ensemble statistics of OTOC(U; pa, pb); delta uses 1/N normalization.
FluctuationRecord estimate_fluctuations(const EnsembleSpec& spec, const PauliOp& pa, const PauliOp& pb,
                                        const FluctuationOptions& options = {});
/// pa = X_1, pb = Z_n.
FluctuationRecord estimate_fluctuations(const EnsembleSpec& spec, const FluctuationOptions& options = {});

/// Population mean and standard deviation.
std::pair<double, double> mean_and_deviation(std::span<const double> values);

struct Theorem1Row {
    double eps = 0.0;
    double mean_om = 0.0;
    double delta = 0.0;
    double one_minus_delta = 0.0;
    double mean_otoc = 0.0;
    double mean_abs_otoc = 0.0;
    /// 1 - delta - |mean OTOC|.
    double bound = 0.0;
    /// mean_om - bound.
    double slack = 0.0;
    bool holds = false;
};

inline constexpr double kBoundSlack = 1e-9;

Theorem1Row theorem1_check(const EnsembleSpec& spec, const PauliOp& pa, const PauliOp& pb,
                           kernels::Exec exec = kernels::Exec::kParallel);
Theorem1Row theorem1_check(const EnsembleSpec& spec, kernels::Exec exec = kernels::Exec::kParallel);

/// `points` evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t points);

/// One theorem1_check per grid value; grid point i uses stream i.
std::vector<Theorem1Row> fig3_sweep(std::span<const double> eps_grid, const EnsembleSpec& spec_template,
                                    std::optional<PauliOp> pa = std::nullopt,
                                    std::optional<PauliOp> pb = std::nullopt,
                                    kernels::Exec exec = kernels::Exec::kParallel);

/// Spearman rank correlation with average ranks for ties. Returns 0 when
/// either input is constant.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace scramble

#endif  // SCRAMBLE_ENSEMBLES_HPP
