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

#include "scramble/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scramble {

namespace {

using Index = Eigen::Index;

// Binary symplectic vector, interleaved (x_1, z_1, x_2, z_2, ...).
using Bits = std::vector<std::uint8_t>;

int symplectic(const Bits& a, const Bits& b) {
    int acc = 0;
    for (std::size_t i = 0; i < a.size(); i += 2) {
        acc ^= (a[i] & b[i + 1]) ^ (a[i + 1] & b[i]);
    }
    return acc;
}

void add_into(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] ^= b[i];
    }
}

bool is_zero(const Bits& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint8_t v) { return v == 0; });
}

Bits random_bits(std::size_t size, Rng& rng) {
    Bits out(size);
    for (auto& b : out) {
        b = static_cast<std::uint8_t>(rng() & 1U);
    }
    return out;
}

SymplecticVector to_vector(const Bits& bits) {
    std::vector<SiteExponent> sites(bits.size() / 2);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        sites[i] = {bits[2 * i], bits[2 * i + 1]};
    }
    return SymplecticVector(2, std::move(sites));
}

// Applies a qubit PauliOp to a state vector.
Vector apply_pauli(const PauliOp& p, const Vector& psi) {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    const int n = p.n();
    for (int i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
        if (p.site(i).s) x |= bit;
        if (p.site(i).t) z |= bit;
    }
    const Complex phase = root_of_unity_2d(p.phase(), 2);
    Vector out(psi.size());
    for (Index j = 0; j < psi.size(); ++j) {
        const auto ju = static_cast<std::uint64_t>(j);
        const double sign = (__builtin_popcountll(ju & z) & 1) ? -1.0 : 1.0;
        out(static_cast<Index>(ju ^ x)) = phase * sign * psi(j);
    }
    return out;
}

}  // namespace

int hermitian_sign(const PauliOp& p) {
    if (p.d() != 2) {
        throw Error("hermitian_sign requires qubits");
    }
    int ys = 0;
    for (const auto& e : p.vec().sites()) {
        ys += e.s * e.t;
    }
    const int rel = ((p.phase() - ys) % 4 + 4) % 4;
    if (rel == 0) return 1;
    if (rel == 2) return -1;
    throw Error("Pauli '" + p.str() + "' is not Hermitian");
}

PauliOp signed_hermitian(const SymplecticVector& v, int sign) {
    const auto h = hermitian_pauli_op(v);
    return h.with_phase(h.phase() + (sign < 0 ? 2 : 0));
}

CliffordTableau CliffordTableau::identity(int n) {
    if (n < 1) {
        throw Error("Clifford tableau requires n >= 1");
    }
    CliffordTableau t;
    for (int i = 1; i <= n; ++i) {
        t.x_images_.push_back(PauliOp::single(n, 2, i, 1, 0));
        t.z_images_.push_back(PauliOp::single(n, 2, i, 0, 1));
    }
    return t;
}

CliffordTableau CliffordTableau::from_images(std::vector<PauliOp> x_images, std::vector<PauliOp> z_images) {
    if (x_images.empty() || x_images.size() != z_images.size()) {
        throw Error("tableau needs one X image and one Z image per qubit");
    }
    const int n = static_cast<int>(x_images.size());
    std::vector<const PauliOp*> all;
    for (int i = 0; i < n; ++i) {
        for (const PauliOp* p : {&x_images[static_cast<std::size_t>(i)], &z_images[static_cast<std::size_t>(i)]}) {
            if (p->n() != n || p->d() != 2) {
                throw DimensionMismatch("tableau image has wrong shape: " + p->str());
            }
            hermitian_sign(*p);
            all.push_back(p);
        }
    }
    // Generators in order X_1, Z_1, X_2, Z_2, ...: only (X_i, Z_i) anticommute.
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            const int expected = (a / 2 == b / 2) ? 1 : 0;
            if (commutation_exponent(all[a]->vec(), all[b]->vec()) != expected) {
                throw Error("tableau images violate the symplectic commutation relations");
            }
        }
    }
    CliffordTableau t;
    t.x_images_ = std::move(x_images);
    t.z_images_ = std::move(z_images);
    return t;
}

PauliOp CliffordTableau::conjugate(const PauliOp& p) const {
    if (p.d() != 2) {
        throw Error("tableau conjugation requires qubit Paulis");
    }
    if (p.n() != n()) {
        throw DimensionMismatch("Pauli has " + std::to_string(p.n()) + " qubits, tableau has " + std::to_string(n()));
    }
    PauliOp out = PauliOp(n(), 2).with_phase(p.phase());
    for (int i = 0; i < n(); ++i) {
        if (p.site(i).s) {
            out = multiply(out, x_image(i));
        }
        if (p.site(i).t) {
            out = multiply(out, z_image(i));
        }
    }
    return out;
}

CliffordTableau CliffordTableau::then(const CliffordTableau& next) const {
    if (next.n() != n()) {
        throw DimensionMismatch("tableau composition requires equal qubit counts");
    }
    CliffordTableau t;
    for (int i = 0; i < n(); ++i) {
        t.x_images_.push_back(conjugate(next.x_image(i)));
        t.z_images_.push_back(conjugate(next.z_image(i)));
    }
    return t;
}

CliffordTableau CliffordTableau::embedded(int n_total, std::span<const int> sites) const {
    if (static_cast<int>(sites.size()) != n()) {
        throw DimensionMismatch("embedding needs one site per tableau qubit");
    }
    auto lift = [&](const PauliOp& local) {
        std::vector<SiteExponent> global(static_cast<std::size_t>(n_total));
        for (int j = 0; j < n(); ++j) {
            const int site = sites[static_cast<std::size_t>(j)];
            if (site < 1 || site > n_total) {
                throw Error("embedding site " + std::to_string(site) + " outside [1, " + std::to_string(n_total) + "]");
            }
            global[static_cast<std::size_t>(site - 1)] = local.site(j);
        }
        return PauliOp(SymplecticVector(2, std::move(global)), local.phase());
    };
    CliffordTableau t = identity(n_total);
    for (int j = 0; j < n(); ++j) {
        const auto site = static_cast<std::size_t>(sites[static_cast<std::size_t>(j)] - 1);
        t.x_images_[site] = lift(x_image(j));
        t.z_images_[site] = lift(z_image(j));
    }
    return t;
}

CliffordTableau random_clifford(int n, Rng& rng) {
    if (n < 1) {
        throw Error("random_clifford requires n >= 1");
    }
    const auto size = static_cast<std::size_t>(2 * n);
    std::vector<std::pair<Bits, Bits>> pairs;
    auto project = [&](Bits u) {
        for (const auto& [v, w] : pairs) {
            const int uw = symplectic(u, w);
            const int uv = symplectic(u, v);
            if (uw) add_into(u, v);
            if (uv) add_into(u, w);
        }
        return u;
    };
    for (int k = 0; k < n; ++k) {
        Bits v;
        do {
            v = project(random_bits(size, rng));
        } while (is_zero(v));
        Bits w;
        do {
            w = project(random_bits(size, rng));
        } while (symplectic(v, w) != 1);
        pairs.emplace_back(std::move(v), std::move(w));
    }
    std::vector<PauliOp> xs;
    std::vector<PauliOp> zs;
    for (const auto& [v, w] : pairs) {
        xs.push_back(signed_hermitian(to_vector(v), (rng() & 1U) ? -1 : 1));
        zs.push_back(signed_hermitian(to_vector(w), (rng() & 1U) ? -1 : 1));
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

PauliOp tableau_conjugate(const CliffordTableau& t, const PauliOp& p) { return t.conjugate(p); }

DenseOperator tableau_to_dense(const CliffordTableau& t) {
    const int n = t.n();
    require_dense(n, 2);
    const auto dim = static_cast<Index>(std::size_t{1} << n);
    // V = U^dag satisfies V X_i V^dag = x_image(i), V Z_i V^dag = z_image(i),
    // so V|0> is the joint +1 eigenvector of the Z images.
    auto project = [&](Vector psi) {
        for (int i = 0; i < n; ++i) {
            psi = 0.5 * (psi + apply_pauli(t.z_image(i), psi));
        }
        return psi;
    };
    Vector ground;
    double best = -1.0;
    for (Index k = 0; k < dim; ++k) {
        Vector psi = Vector::Zero(dim);
        psi(k) = 1.0;
        psi = project(psi);
        const double norm = psi.norm();
        if (norm > best + 1e-12) {
            best = norm;
            ground = psi;
        }
        if (best > 0.5) {
            break;
        }
    }
    ground /= ground.norm();
    Matrix v(dim, dim);
    for (Index x = 0; x < dim; ++x) {
        Vector col = ground;
        for (int i = 0; i < n; ++i) {
            if (static_cast<std::uint64_t>(x) & (std::uint64_t{1} << (n - 1 - i))) {
                col = apply_pauli(t.x_image(i), col);
            }
        }
        v.col(x) = col;
    }
    Matrix u = v.adjoint();
    for (Index r = 0; r < dim; ++r) {
        if (std::abs(u(r, 0)) > 1e-9) {
            u *= std::conj(u(r, 0)) / std::abs(u(r, 0));
            break;
        }
    }
    return DenseOperator(n, 2, std::move(u));
}

CliffordCheck is_clifford(const DenseOperator& u, double tol) {
    if (u.d() != 2) {
        throw Error("is_clifford requires qubits");
    }
    const int n = u.n();
    CliffordCheck out;
    std::vector<PauliOp> xs;
    std::vector<PauliOp> zs;
    for (int i = 1; i <= n; ++i) {
        for (int which = 0; which < 2; ++which) {
            const PauliOp g = which == 0 ? PauliOp::single(n, 2, i, 1, 0) : PauliOp::single(n, 2, i, 0, 1);
            const auto alpha = hermitian_coefficients(conjugate(u, DenseOperator::from_pauli(g)));
            const auto it = std::max_element(alpha.begin(), alpha.end(),
                                             [](double a, double b) { return std::abs(a) < std::abs(b); });
            if ((*it) * (*it) < 1.0 - tol) {
                out.witness = g;
                return out;
            }
            const auto key = static_cast<std::uint64_t>(it - alpha.begin());
            auto image = signed_hermitian(SymplecticVector::from_key(n, 2, key), *it < 0 ? -1 : 1);
            (which == 0 ? xs : zs).push_back(std::move(image));
        }
    }
    out.is_clifford = true;
    out.tableau = CliffordTableau::from_images(std::move(xs), std::move(zs));
    return out;
}

Matrix haar_unitary(Index dim, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(dim, dim);
    for (Index c = 0; c < dim; ++c) {
        for (Index r = 0; r < dim; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index k = 0; k < dim; ++k) {
        const Complex diag = r(k, k);
        q.col(k) *= diag / std::abs(diag);
    }
    return q;
}

NonEntanglingUnitary random_nonentangling(int n, int d, Rng& rng) {
    if (n < 1 || d < 2) {
        throw Error("random_nonentangling requires n >= 1 and d >= 2");
    }
    NonEntanglingUnitary out;
    out.n = n;
    out.d = d;
    out.perm.resize(static_cast<std::size_t>(n));
    std::iota(out.perm.begin(), out.perm.end(), 0);
    // Fisher-Yates with explicit draws keeps the permutation portable.
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(out.perm[static_cast<std::size_t>(i)], out.perm[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < n; ++i) {
        out.locals.push_back(haar_unitary(d, rng));
    }
    return out;
}

Matrix permutation_operator(int n, int d, std::span<const int> perm) {
    require_dense(n, d);
    const auto dim = static_cast<Index>(ipow(static_cast<std::size_t>(d), n));
    Matrix out = Matrix::Zero(dim, dim);
    std::vector<int> digits(static_cast<std::size_t>(n));
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (Index j = 0; j < dim; ++j) {
        auto rest = static_cast<std::size_t>(j);
        for (int i = n - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(d));
            rest /= static_cast<std::size_t>(d);
        }
        for (int i = 0; i < n; ++i) {
            moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = digits[static_cast<std::size_t>(i)];
        }
        std::size_t target = 0;
        for (int i = 0; i < n; ++i) {
            target = target * static_cast<std::size_t>(d) + static_cast<std::size_t>(moved[static_cast<std::size_t>(i)]);
        }
        out(static_cast<Index>(target), j) = 1.0;
    }
    return out;
}

DenseOperator NonEntanglingUnitary::to_dense() const {
    require_dense(n, d);
    if (static_cast<int>(locals.size()) != n || static_cast<int>(perm.size()) != n) {
        throw DimensionMismatch("non-entangling unitary needs n locals and an n-site permutation");
    }
    Matrix product = locals.front();
    for (std::size_t i = 1; i < locals.size(); ++i) {
        Matrix next(product.rows() * locals[i].rows(), product.cols() * locals[i].cols());
        for (Index r = 0; r < product.rows(); ++r) {
            for (Index c = 0; c < product.cols(); ++c) {
                next.block(r * locals[i].rows(), c * locals[i].cols(), locals[i].rows(), locals[i].cols()) =
                    product(r, c) * locals[i];
            }
        }
        product = std::move(next);
    }
    return DenseOperator(n, d, permutation_operator(n, d, perm) * product);
}

}  // namespace scramble
