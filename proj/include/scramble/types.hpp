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

#ifndef SCRAMBLE_TYPES_HPP
#define SCRAMBLE_TYPES_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace scramble {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class SizeCapExceeded : public Error {
   public:
    using Error::Error;
};

class NumericalError : public Error {
   public:
    using Error::Error;
};

namespace tol {
// Construction-time checks (unitarity, normalization).
inline constexpr double kConstruction = 1e-9;
// Equality after exact algebra.
inline constexpr double kAssertion = 1e-12;
}  // namespace tol

/// Largest admissible Hilbert-space dimension for dense kernels. Defaults to
/// 1024 and can be overridden by SCRAMBLE_DENSE_CAP or set_dense_cap().
std::size_t dense_cap();
void set_dense_cap(std::size_t cap);

/// d^n with overflow detection; throws SizeCapExceeded on overflow.
std::size_t ipow(std::size_t base, int exponent);

/// Throws SizeCapExceeded when d^n exceeds dense_cap().
void require_dense(int n, int d);

}  // namespace scramble

#endif  // SCRAMBLE_TYPES_HPP
