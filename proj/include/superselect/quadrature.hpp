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
 * Generalized Laguerre polynomials and half-line quadrature.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/exp_sinh.hpp>

#include "common.hpp"

namespace superselect {

/// L^alpha_k(x) by the three-term recurrence
///   (j+1) L_{j+1} = (2j + 1 + alpha - x) L_j - (j + alpha) L_{j-1}.
inline double laguerre(int k, double alpha, double x) {
    require(k >= 0, "laguerre: degree must be non-negative");
    require(alpha > -1.0, "laguerre: alpha must exceed -1");
    if (k == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int j = 1; j < k; ++j) {
        const double next =
            ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// d/dx L^alpha_k(x) = -L^{alpha+1}_{k-1}(x).
inline double laguerre_derivative(int k, double alpha, double x) {
    require(k >= 0, "laguerre_derivative: degree must be non-negative");
    return k == 0 ? 0.0 : -laguerre(k - 1, alpha + 1.0, x);
}

/// Nodes and weights of the N-point Gauss-Laguerre rule
///   int_0^inf e^{-u} g(u) du ~ sum_i w_i g(u_i).
/// Weights are kept as logarithms: the largest nodes have weights far below
/// the double range.
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> log_weights;
};

namespace detail {

/// L_N(x) and L_{N-1}(x) (alpha = 0) as values times exp(log_scale).
/// Extended precision: the weights at the smallest nodes are sensitive to
/// roundoff in the recurrence.
struct ScaledLaguerre {
    long double value;
    long double previous;
    long double log_scale;
};

inline ScaledLaguerre scaled_laguerre(int n, long double x) {
    long double prev = 0.0L;
    long double cur = 1.0L;
    long double log_scale = 0.0L;
    for (int j = 0; j < n; ++j) {
        const long double next = ((2.0L * j + 1.0L - x) * cur - j * prev) / (j + 1.0L);
        prev = cur;
        cur = next;
        if (std::fabs(cur) > 1e150L) {
            cur *= 1e-150L;
            prev *= 1e-150L;
            log_scale += 150.0L * std::log(10.0L);
        }
    }
    return {cur, prev, log_scale};
}

inline GaussLaguerreRule build_gauss_laguerre(int n) {
    // Golub-Welsch eigenvalues seed the nodes; Newton on L_N polishes them.
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) {
        diag(i) = 2.0 * i + 1.0;
        if (i + 1 < n) {
            sub(i) = i + 1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    require(es.info() == Eigen::Success,
            "gauss_laguerre: tridiagonal eigen-solve failed");

    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.log_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        long double x = es.eigenvalues()(i);
        for (int it = 0; it < 10; ++it) {
            const auto l = scaled_laguerre(n, x);
            // x L_N' = N (L_N - L_{N-1}); the ratio is scale free.
            const long double step = x * l.value / (n * (l.value - l.previous));
            x -= step;
            if (std::fabs(step) <= 4.0L * std::numeric_limits<long double>::epsilon() * x) {
                break;
            }
        }
        // w_i = x_i / (N L_{N-1}(x_i))^2
        const auto l = scaled_laguerre(n, x);
        rule.nodes[i] = static_cast<double>(x);
        rule.log_weights[i] = static_cast<double>(
            std::log(x) - 2.0L * std::log(static_cast<long double>(n)) -
            2.0L * (std::log(std::fabs(l.previous)) + l.log_scale));
    }
    return rule;
}

} // namespace detail

/// Cached N-point rule. Safe to call concurrently.
inline const GaussLaguerreRule &gauss_laguerre(int n) {
    require(n >= 1, "gauss_laguerre: need at least one node");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussLaguerreRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<GaussLaguerreRule>(detail::build_gauss_laguerre(n));
    }
    return *slot;
}

struct QuadratureOptions {
    enum class Scheme { gauss_laguerre, adaptive };
    Scheme scheme = Scheme::gauss_laguerre;
    /// Gauss-Laguerre node count.
    int nodes = 200;
    /// Accuracy target; a result whose error estimate exceeds it is rejected.
    double tolerance = 1e-10;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    QuadratureOptions::Scheme scheme_used = QuadratureOptions::Scheme::gauss_laguerre;
};

namespace detail {

/// (1/scale) sum_i w_i e^{u_i} f(u_i / scale).
template <typename F>
double gauss_laguerre_sum(const F &f, double scale, int nodes) {
    const auto &rule = gauss_laguerre(nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double fx = f(u / scale);
        if (fx != 0.0) {
            acc += std::exp(rule.log_weights[i] + u) * fx;
        }
    }
    return acc / scale;
}

template <typename F>
QuadratureResult adaptive_halfline(const F &f, double tolerance) {
    // exp_sinh wants a relative target; asking for 1e-12 keeps the absolute
    // error well under typical tolerances for O(1) integrals.
    boost::math::quadrature::exp_sinh<double> integrator;
    double err = 0.0;
    double l1 = 0.0;
    const double v = integrator.integrate(
        f, 0.0, std::numeric_limits<double>::infinity(),
        std::min(1e-12, tolerance), &err, &l1);
    return {v, err, QuadratureOptions::Scheme::adaptive};
}

} // namespace detail

/// int_0^inf f(x) dx for integrands decaying like exp(-scale * x). The
/// Gauss-Laguerre estimate is cross-checked against a half-size rule; if
/// they disagree beyond the tolerance the adaptive scheme takes over, and
/// if that also misses the target a convergence_error is thrown.
template <typename F>
QuadratureResult integrate_halfline(const F &f, double scale,
                                    const QuadratureOptions &q = {}) {
    require(scale > 0.0, "integrate_halfline: scale must be positive");
    require(q.tolerance > 0.0, "integrate_halfline: tolerance must be positive");
    if (q.scheme == QuadratureOptions::Scheme::gauss_laguerre) {
        require(q.nodes >= 2, "integrate_halfline: need at least two nodes");
        const double full = detail::gauss_laguerre_sum(f, scale, q.nodes);
        const double half = detail::gauss_laguerre_sum(f, scale, q.nodes / 2);
        const double err = std::abs(full - half);
        if (err <= q.tolerance) {
            return {full, err, QuadratureOptions::Scheme::gauss_laguerre};
        }
    }
    auto r = detail::adaptive_halfline(f, q.tolerance);
    if (!(r.error_estimate <= q.tolerance)) {
        throw convergence_error("integrate_halfline: error estimate " +
                                std::to_string(r.error_estimate) +
                                " exceeds tolerance " +
                                std::to_string(q.tolerance));
    }
    return r;
}

} // namespace superselect
