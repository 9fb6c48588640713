// Copyright 2026 The superselect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Scalar types, numeric tolerances and error types shared by every module.
 */
#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace superselect {

using complex_t = std::complex<double>;
using cvector_t = Eigen::VectorXcd;
using cmatrix_t = Eigen::MatrixXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr complex_t imag_unit{0.0, 1.0};

/// Numeric tolerances used throughout the library. Sized for double
/// precision at dimensions up to 64.
namespace tol {
/// Hermiticity and commutator checks.
inline constexpr double hermitian = 1e-10;
/// An amplitude below this magnitude does not count as support.
inline constexpr double zero = 1e-12;
/// Bound for matrix elements that must vanish identically.
inline constexpr double theorem = 1e-12;
/// Smallest admissible eigenvalue of a density operator is -psd.
inline constexpr double psd = 1e-10;
/// Inputs that must be normalized are rejected beyond this norm deviation.
inline constexpr double norm = 1e-8;
/// Ensemble weights must sum to one within this.
inline constexpr double weight_sum = 1e-10;
} // namespace tol

/// A documented precondition of an operation does not hold.
class precondition_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to reach its accuracy target.
class convergence_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw precondition_error(msg);
    }
}

/// Largest entry magnitude; 0 for an empty matrix.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline cmatrix_t commutator(const cmatrix_t &a, const cmatrix_t &b) {
    return a * b - b * a;
}

} // namespace superselect
