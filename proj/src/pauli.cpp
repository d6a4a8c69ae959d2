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

#include "scramble/pauli.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace scramble {

namespace {

int mod(int value, int m) {
    int r = value % m;
    return r < 0 ? r + m : r;
}

void require_same_shape(int n1, int d1, int n2, int d2) {
    if (n1 != n2 || d1 != d2) {
        throw DimensionMismatch("Pauli operands differ in qudit count or local dimension (" +
                                std::to_string(n1) + "," + std::to_string(d1) + ") vs (" +
                                std::to_string(n2) + "," + std::to_string(d2) + ")");
    }
}

}  // namespace

/// e^{i pi m / d}, exact for the real and imaginary axes.
Complex root_of_unity_2d(int m, int d) {
    m = mod(m, 2 * d);
    if (m % d == 0) {
        return (m / d) % 2 == 0 ? Complex(1, 0) : Complex(-1, 0);
    }
    if (d % 2 == 0 && m % (d / 2) == 0) {
        return (m / (d / 2)) % 4 == 1 ? Complex(0, 1) : Complex(0, -1);
    }
    return std::polar(1.0, std::numbers::pi * m / d);
}

// ---------------------------------------------------------------------------
// SymplecticVector

SymplecticVector::SymplecticVector(int n, int d) : d_(d), sites_(static_cast<std::size_t>(n)) {
    if (n < 1 || d < 2) {
        throw Error("SymplecticVector requires n >= 1 and d >= 2");
    }
}

SymplecticVector::SymplecticVector(int d, std::vector<SiteExponent> sites)
    : d_(d), sites_(std::move(sites)) {
    if (sites_.empty() || d < 2) {
        throw Error("SymplecticVector requires n >= 1 and d >= 2");
    }
    for (auto& e : sites_) {
        e.s = mod(e.s, d_);
        e.t = mod(e.t, d_);
    }
}

SymplecticVector SymplecticVector::from_key(int n, int d, std::uint64_t key) {
    SymplecticVector v(n, d);
    auto base = static_cast<std::uint64_t>(d);
    for (auto& e : v.sites_) {
        e.s = static_cast<int>(key % base);
        key /= base;
        e.t = static_cast<int>(key % base);
        key /= base;
    }
    if (key != 0) {
        throw Error("Pauli key out of range for n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
    return v;
}

std::uint64_t SymplecticVector::key() const {
    std::uint64_t key = 0;
    auto base = static_cast<std::uint64_t>(d_);
    for (auto it = sites_.rbegin(); it != sites_.rend(); ++it) {
        key = key * base + static_cast<std::uint64_t>(it->t);
        key = key * base + static_cast<std::uint64_t>(it->s);
    }
    return key;
}

int SymplecticVector::weight() const {
    int w = 0;
    for (const auto& e : sites_) {
        w += e.is_identity() ? 0 : 1;
    }
    return w;
}

// ---------------------------------------------------------------------------
// PauliOp

PauliOp::PauliOp(SymplecticVector v, int phase) : vec_(std::move(v)), phase_(mod(phase, 2 * vec_.d())) {}

PauliOp::PauliOp(int n, int d) : vec_(n, d) {}

PauliOp PauliOp::single(int n, int d, int site, int s, int t) {
    if (site < 1 || site > n) {
        throw Error("site index " + std::to_string(site) + " outside [1, " + std::to_string(n) + "]");
    }
    std::vector<SiteExponent> sites(static_cast<std::size_t>(n));
    sites[static_cast<std::size_t>(site - 1)] = {s, t};
    return PauliOp(SymplecticVector(d, std::move(sites)));
}

PauliOp PauliOp::with_phase(int phase) const { return PauliOp(vec_, phase); }

int weight(const PauliOp& p) { return p.vec().weight(); }

PauliOp multiply(const PauliOp& p, const PauliOp& q) {
    require_same_shape(p.n(), p.d(), q.n(), q.d());
    const int d = p.d();
    // X^s Z^t X^s' Z^t' = w^{t s'} X^{s+s'} Z^{t+t'}, and w = e^{i pi 2 / d}.
    int phase = p.phase() + q.phase();
    std::vector<SiteExponent> sites(static_cast<std::size_t>(p.n()));
    for (int i = 0; i < p.n(); ++i) {
        const auto& a = p.site(i);
        const auto& b = q.site(i);
        phase += 2 * mod(a.t * b.s, d);
        sites[static_cast<std::size_t>(i)] = {a.s + b.s, a.t + b.t};
    }
    return PauliOp(SymplecticVector(d, std::move(sites)), phase);
}

int commutation_exponent(const SymplecticVector& a, const SymplecticVector& b) {
    require_same_shape(a.n(), a.d(), b.n(), b.d());
    int m = 0;
    for (int i = 0; i < a.n(); ++i) {
        m += a.site(i).t * b.site(i).s - a.site(i).s * b.site(i).t;
        m = mod(m, a.d());
    }
    return m;
}

Complex commutation_phase(const SymplecticVector& a, const SymplecticVector& b) {
    return root_of_unity_2d(2 * commutation_exponent(a, b), a.d());
}

Matrix to_dense(const PauliOp& p) {
    const int n = p.n();
    const int d = p.d();
    require_dense(n, d);
    const std::size_t dim = ipow(static_cast<std::size_t>(d), n);
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < dim; ++j) {
        // Site 1 is the most significant digit.
        std::size_t rest = j;
        for (int i = n - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(d));
            rest /= static_cast<std::size_t>(d);
        }
        int exponent = p.phase();
        std::size_t target = 0;
        for (int i = 0; i < n; ++i) {
            const auto& e = p.site(i);
            const int digit = digits[static_cast<std::size_t>(i)];
            exponent += 2 * e.t * digit;
            target = target * static_cast<std::size_t>(d) + static_cast<std::size_t>(mod(digit + e.s, d));
        }
        out(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(j)) = root_of_unity_2d(exponent, d);
    }
    return out;
}

std::vector<SymplecticVector> enumerate_paulis(int n, int d, std::optional<int> weight_filter) {
    if (n < 1 || d < 2) {
        throw Error("enumerate_paulis requires n >= 1 and d >= 2");
    }
    const std::size_t total = ipow(static_cast<std::size_t>(d), 2 * n);
    std::vector<SymplecticVector> out;
    if (!weight_filter) {
        out.reserve(total);
    }
    for (std::uint64_t key = 0; key < total; ++key) {
        auto v = SymplecticVector::from_key(n, d, key);
        if (!weight_filter || v.weight() == *weight_filter) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

PauliOp hermitian_pauli_op(const SymplecticVector& a) {
    if (a.d() != 2) {
        throw Error("hermitian_qubit_pauli requires d = 2");
    }
    int ys = 0;
    for (const auto& e : a.sites()) {
        ys += e.s * e.t;
    }
    return PauliOp(a, ys);
}

Matrix hermitian_qubit_pauli(const SymplecticVector& a) { return to_dense(hermitian_pauli_op(a)); }

// ---------------------------------------------------------------------------
// Text form

std::string PauliOp::str() const {
    const int d = this->d();
    std::ostringstream body;
    int phase = phase_;
    bool first = true;
    for (int i = 0; i < n(); ++i) {
        const auto& e = site(i);
        if (e.is_identity()) {
            continue;
        }
        const int label = i + 1;
        auto emit = [&](char letter, int exponent) {
            if (!first) {
                body << ' ';
            }
            first = false;
            body << letter << label;
            if (d != 2) {
                body << '^' << exponent;
            }
        };
        if (d == 2 && e.s == 1 && e.t == 1) {
            emit('Y', 1);
            phase -= 1;
            continue;
        }
        if (e.s != 0) {
            emit('X', e.s);
        }
        if (e.t != 0) {
            emit('Z', e.t);
        }
    }
    if (first) {
        body << 'I';
    }
    phase = mod(phase, 2 * d);
    std::string prefix;
    if (d == 2) {
        static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
        prefix = kPrefix[phase];
    } else if (phase != 0) {
        prefix = "w^" + std::to_string(phase) + " ";
    }
    return prefix + body.str();
}

namespace {

int parse_int(std::string_view text, std::string_view context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error("malformed integer '" + std::string(text) + "' in Pauli text '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

PauliOp PauliOp::parse(std::string_view text, int n, int d) {
    PauliOp result(n, d);
    int phase = 0;
    std::istringstream in{std::string(text)};
    std::string token;
    bool first = true;
    while (in >> token) {
        std::string_view tok = token;
        if (first && tok.starts_with("w^")) {
            phase += parse_int(tok.substr(2), text);
            first = false;
            continue;
        }
        if (first) {
            if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) {
                phase += tok[0] == '-' ? d : 0;
                tok.remove_prefix(1);
            }
            if (!tok.empty() && tok[0] == 'i') {
                if (d % 2 != 0) {
                    throw Error("imaginary phase prefix requires even d in '" + std::string(text) + "'");
                }
                phase += d / 2;
                tok.remove_prefix(1);
            }
        }
        first = false;
        if (tok == "I") {
            continue;
        }
        if (tok.size() < 2) {
            throw Error("malformed Pauli term '" + std::string(tok) + "' in '" + std::string(text) + "'");
        }
        const char letter = tok[0];
        auto caret = tok.find('^');
        int site = parse_int(tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
        int exponent = caret == std::string_view::npos ? 1 : parse_int(tok.substr(caret + 1), text);
        if (site < 1 || site > n) {
            throw Error("site index " + std::to_string(site) + " outside [1, " + std::to_string(n) + "] in '" +
                        std::string(text) + "'");
        }
        PauliOp term;
        switch (letter) {
            case 'X':
                term = single(n, d, site, exponent, 0);
                break;
            case 'Z':
                term = single(n, d, site, 0, exponent);
                break;
            case 'Y':
                if (d != 2 || exponent != 1) {
                    throw Error("Y terms are only defined for qubits: '" + std::string(text) + "'");
                }
                term = single(n, d, site, 1, 1).with_phase(1);
                break;
            default:
                throw Error("unknown Pauli letter '" + std::string(1, letter) + "' in '" + std::string(text) + "'");
        }
        result = multiply(result, term);
    }
    if (first) {
        throw Error("empty Pauli text");
    }
    return result.with_phase(result.phase() + phase);
}

// ---------------------------------------------------------------------------
// Qubit bit tricks

namespace qubit {

Masks masks_of_key(int n, std::uint64_t key) {
    Masks m;
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (n - i);
        if (key & (std::uint64_t{1} << (2 * (i - 1)))) {
            m.x |= bit;
        }
        if (key & (std::uint64_t{1} << (2 * (i - 1) + 1))) {
            m.z |= bit;
        }
    }
    return m;
}

std::uint64_t swap_xz(std::uint64_t key) {
    constexpr std::uint64_t kEven = 0x5555555555555555ULL;
    return ((key & kEven) << 1) | ((key >> 1) & kEven);
}

}  // namespace qubit

}  // namespace scramble
