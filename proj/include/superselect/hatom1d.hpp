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
 * The one-dimensional hydrogen atom H = p^2/2 - 1/|x| in atomic units.
 *
 * Bound states come in degenerate pairs confined to either side of the
 * origin. Since x = 0 is an impenetrable barrier the two sides never mix,
 * and the even/odd recombinations of a pair are linearly dependent (their
 * Wronskian vanishes): the side of the origin is a superselection variable.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "quadrature.hpp"
#include "state_space.hpp"

namespace superselect::hatom1d {

enum class Side { right, left };

inline const char *to_string(Side s) {
    return s == Side::right ? "right" : "left";
}

/// E_n = -1/(2 n^2) hartree.
inline double energy(int n) {
    require(n >= 1, "energy: n must be at least 1");
    return -0.5 / (static_cast<double>(n) * n);
}

namespace detail {

/// log of the amplitude prefactor of psi_n, Laguerre scale included.
///
/// The printed normalization sqrt(4 / (n^5 (n!)^2)) belongs to the
/// n!-scaled Laguerre convention; with the modern L^1_{n-1} of laguerre()
/// the factor n! is restored here so that <psi|psi> = 1.
inline double log_prefactor(int n) {
    const double dn = n;
    const double log_fact = std::lgamma(dn + 1.0);
    const double log_norm = 0.5 * (std::log(4.0) - 5.0 * std::log(dn) - 2.0 * log_fact);
    return log_norm + log_fact;
}

inline double sign_right(int n) { return (n - 1) % 2 == 0 ? 1.0 : -1.0; }

/// Beyond |x| = tail_cutoff * n the exponential has flushed every level to
/// zero; returning 0 there keeps polynomial overflow out of the product.
inline constexpr double tail_cutoff = 2000.0;

/// Right-branch value at x > 0.
inline double right_value(int n, double x) {
    const double dn = n;
    if (x > tail_cutoff * dn) {
        return 0.0;
    }
    const double z = 2.0 * x / dn;
    return sign_right(n) * x * laguerre(n - 1, 1.0, z) *
           std::exp(log_prefactor(n) - x / dn);
}

/// Right-branch derivative at x > 0.
inline double right_derivative(int n, double x) {
    const double dn = n;
    if (x > tail_cutoff * dn) {
        return 0.0;
    }
    const double z = 2.0 * x / dn;
    const double l = laguerre(n - 1, 1.0, z);
    const double dl = laguerre_derivative(n - 1, 1.0, z);
    return sign_right(n) * std::exp(log_prefactor(n) - x / dn) *
           (l + x * (2.0 / dn) * dl - (x / dn) * l);
}

} // namespace detail

/// psi^n_+(x) (right) vanishes for x <= 0; psi^n_-(x) (left) vanishes for
/// x >= 0 and equals (-1)^n x L^1_{n-1}(-2x/n) e^{x/n} (normalized) for x < 0,
/// which is psi^n_+(-x).
inline double psi(int n, Side side, double x) {
    require(n >= 1, "psi: n must be at least 1");
    if (side == Side::right) {
        return x > 0.0 ? detail::right_value(n, x) : 0.0;
    }
    if (x < 0.0) {
        // (-1)^n * x with x = -y gives (-1)^{n-1} y
        const double dn = n;
        if (-x > detail::tail_cutoff * dn) {
            return 0.0;
        }
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        return sign * x * laguerre(n - 1, 1.0, -2.0 * x / dn) *
               std::exp(detail::log_prefactor(n) + x / dn);
    }
    return 0.0;
}

/// d psi / dx; zero off the support. At x = 0 the one-sided derivative is
/// not defined and 0 is returned.
inline double psi_derivative(int n, Side side, double x) {
    require(n >= 1, "psi_derivative: n must be at least 1");
    if (side == Side::right) {
        return x > 0.0 ? detail::right_derivative(n, x) : 0.0;
    }
    return x < 0.0 ? -detail::right_derivative(n, -x) : 0.0;
}

struct Wavefunction1D {
    int n = 1;
    Side side = Side::right;

    [[nodiscard]] double operator()(double x) const { return psi(n, side, x); }
    [[nodiscard]] double derivative(double x) const {
        return psi_derivative(n, side, x);
    }
};

/// (psi_+ + parity * psi_-)/sqrt2 with parity = +1 (even) or -1 (odd).
struct ParityState {
    int n = 1;
    int parity = 1;

    [[nodiscard]] double operator()(double x) const {
        return (psi(n, Side::right, x) + parity * psi(n, Side::left, x)) /
               std::sqrt(2.0);
    }
    [[nodiscard]] double derivative(double x) const {
        return (psi_derivative(n, Side::right, x) +
                parity * psi_derivative(n, Side::left, x)) /
               std::sqrt(2.0);
    }
};

struct ParityPair {
    ParityState even;
    ParityState odd;
};

inline ParityPair parity_states(int n) {
    require(n >= 1, "parity_states: n must be at least 1");
    return {{n, 1}, {n, -1}};
}

/// int_{-inf}^{inf} f(x) dx split at the origin, each half by
/// integrate_halfline with the given decay scale.
template <typename F>
double integrate_line(const F &f, double scale, const QuadratureOptions &q) {
    const double right = integrate_halfline(f, scale, q).value;
    const double left =
        integrate_halfline([&](double y) { return f(-y); }, scale, q).value;
    return right + left;
}

/// <a|b> over the whole line. Functions on opposite sides give exactly 0.
inline double overlap(const Wavefunction1D &a, const Wavefunction1D &b,
                      const QuadratureOptions &q = {}) {
    require(a.n >= 1 && b.n >= 1, "overlap: n must be at least 1");
    const double scale = 1.0 / a.n + 1.0 / b.n;
    return integrate_line([&](double x) { return a(x) * b(x); }, scale, q);
}

inline double overlap(int n, int n2, Side side, const QuadratureOptions &q = {}) {
    return overlap(Wavefunction1D{n, side}, Wavefunction1D{n2, side}, q);
}

/// <phi|phi> for a parity recombination.
inline double norm_squared(const ParityState &phi,
                           const QuadratureOptions &q = {}) {
    return integrate_line([&](double x) { return phi(x) * phi(x); },
                          2.0 / phi.n, q);
}

/// Finite-difference step used by the eigen-residual check.
inline constexpr double fd_step = 1e-4;
/// Derivative-based checks stay this far from the singularity.
inline constexpr double singularity_floor = 1e-3;

/// (-1/2 f'' - f/|x|)(x) with f'' from the five-point central stencil.
template <typename F>
double apply_hamiltonian(const F &f, double x, double h = fd_step) {
    require(std::abs(x) - 2.0 * h > 0.0,
            "apply_hamiltonian: stencil crosses the singularity");
    const double d2 = (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) +
                       16.0 * f(x - h) - f(x - 2.0 * h)) /
                      (12.0 * h * h);
    return -0.5 * d2 - f(x) / std::abs(x);
}

/// |(H - E_n) psi_n| at distance x >= 1e-3 from the origin on `side`.
inline double residual(int n, double x, Side side) {
    require(n >= 1, "residual: n must be at least 1");
    require(x >= singularity_floor, "residual: x too close to the singularity");
    const double point = side == Side::right ? x : -x;
    const Wavefunction1D wf{n, side};
    return std::abs(apply_hamiltonian(wf, point) - energy(n) * wf(point));
}

/// phi_e phi_o' - phi_o phi_e' with analytic derivatives.
inline double wronskian(int n, double x) {
    require(std::abs(x) >= singularity_floor,
            "wronskian: x too close to the singularity");
    const auto [even, odd] = parity_states(n);
    return even(x) * odd.derivative(x) - odd(x) * even.derivative(x);
}

/// `points` abscissae split evenly over [-hi, -lo] and [lo, hi].
inline std::vector<double> symmetric_grid(int points, double lo, double hi) {
    require(points >= 4 && lo > 0.0 && hi > lo, "symmetric_grid: bad range");
    const int half = points / 2;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) {
        xs.push_back(lo + (hi - lo) * i / (half - 1));
    }
    // Left half mirrors the right, so the grid is exactly symmetric.
    std::vector<double> out;
    out.reserve(xs.size() * 2);
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
        out.push_back(-*it);
    }
    out.insert(out.end(), xs.begin(), xs.end());
    return out;
}

inline double max_abs_wronskian(int n, int points = 4000, double lo = 1e-3,
                                double hi = 20.0) {
    double worst = 0.0;
    for (double x : symmetric_grid(points, lo, hi)) {
        worst = std::max(worst, std::abs(wronskian(n, x)));
    }
    return worst;
}

struct SolverConfig {
    double x_max = 120.0;
    int grid_points = 200000;
    std::pair<double, double> energy_bracket{-1.0, 1.0};
    /// Bisection stops once the energy bracket is narrower than this.
    double tolerance = 1e-12;
    int max_iterations = 200;

    void validate() const {
        require(std::isfinite(x_max) && x_max > 0.0, "SolverConfig: x_max must be positive");
        require(grid_points >= 1000, "SolverConfig: grid_points must be at least 1000");
        require(tolerance > 0.0, "SolverConfig: tolerance must be positive");
        require(energy_bracket.first < energy_bracket.second,
                "SolverConfig: energy bracket is empty");
        require(max_iterations > 0, "SolverConfig: max_iterations must be positive");
    }
};

namespace detail {

/// Sign changes of the Numerov solution of psi'' = 2(-1/x - E) psi on
/// (0, x_max] with psi(0) = 0 and psi ~ x - x^2 near the origin.
inline int count_nodes(double e, const SolverConfig &cfg) {
    const int n = cfg.grid_points;
    const double h = cfg.x_max / n;
    const double c = h * h / 12.0;
    auto f = [e](double x) { return 2.0 * (-1.0 / x - e); };

    // Numerov works with t_i = (1 - c f_i) y_i. At x = 0, f y -> psi''(0) = -2.
    double y_prev = 0.0;
    double t_prev = -c * -2.0;
    double y = h - h * h;
    double t = (1.0 - c * f(h)) * y;
    int nodes = 0;
    double last_sign = 1.0;
    for (int i = 1; i < n; ++i) {
        const double x = i * h;
        const double t_next = 2.0 * t - t_prev + 12.0 * c * f(x) * y;
        const double y_next = t_next / (1.0 - c * f(x + h));
        if (y_next != 0.0) {
            const double s = y_next > 0.0 ? 1.0 : -1.0;
            if (s != last_sign) {
                ++nodes;
                last_sign = s;
            }
        }
        t_prev = t;
        t = t_next;
        y_prev = y;
        y = y_next;
        if (std::abs(y) > 1e200) {
            y *= 1e-200;
            y_prev *= 1e-200;
            t *= 1e-200;
            t_prev *= 1e-200;
        }
    }
    return nodes;
}

} // namespace detail

/// k-th Dirichlet eigenvalue of -psi''/2 - psi/x on (0, x_max], by Numerov
/// shooting and bisection on the node count. Independent of the analytic
/// eigenfunctions.
inline double solve_halfline(const SolverConfig &cfg, int k) {
    cfg.validate();
    require(k >= 1, "solve_halfline: k must be at least 1");
    double lo = cfg.energy_bracket.first;
    double hi = cfg.energy_bracket.second;
    if (detail::count_nodes(lo, cfg) >= k || detail::count_nodes(hi, cfg) < k) {
        throw convergence_error("solve_halfline: bracket does not contain "
                                "eigenvalue " + std::to_string(k));
    }
    for (int it = 0; it < cfg.max_iterations; ++it) {
        if (hi - lo <= cfg.tolerance) {
            return 0.5 * (lo + hi);
        }
        const double mid = 0.5 * (lo + hi);
        if (detail::count_nodes(mid, cfg) >= k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    throw convergence_error("solve_halfline: no convergence within " +
                            std::to_string(cfg.max_iterations) + " iterations");
}

/// Box large enough for level n: the default 120 bohr for n <= 4, growing as
/// 5 n^2 beyond, with the grid step held at the default.
inline SolverConfig solver_config_for(int n) {
    SolverConfig cfg;
    const double x_max = std::max(cfg.x_max, 5.0 * n * n);
    cfg.grid_points = static_cast<int>(std::lround(cfg.grid_points * x_max / cfg.x_max));
    cfg.x_max = x_max;
    return cfg;
}

struct DegeneratePair {
    int n = 0;
    double energy_right = 0.0;
    double energy_left = 0.0;
    /// psi_+ vanishes on x <= 0 and psi_- on x >= 0 at every sampled point.
    bool disjoint_support = false;
    double cross_overlap = 0.0;
    double max_wronskian = 0.0;
    /// The parity recombinations pass the Wronskian independence test.
    bool parity_states_independent = true;
};

struct DegeneracyReport {
    std::vector<DegeneratePair> pairs;
};

/// Evidence that each level n <= nmax is a degenerate right/left pair which
/// cannot be recombined into independent parity states.
inline DegeneracyReport degeneracy_report(int nmax,
                                          const QuadratureOptions &q = {}) {
    require(nmax >= 1, "degeneracy_report: nmax must be at least 1");
    DegeneracyReport report;
    const auto grid = symmetric_grid(4000, singularity_floor, 20.0);
    for (int n = 1; n <= nmax; ++n) {
        DegeneratePair p;
        p.n = n;
        // Both sides solve the same equation mirrored, so share E_n.
        p.energy_right = energy(n);
        p.energy_left = energy(n);
        p.disjoint_support = psi(n, Side::right, 0.0) == 0.0 &&
                             psi(n, Side::left, 0.0) == 0.0;
        for (double x : grid) {
            if ((x <= 0.0 && psi(n, Side::right, x) != 0.0) ||
                (x >= 0.0 && psi(n, Side::left, x) != 0.0)) {
                p.disjoint_support = false;
            }
        }
        p.cross_overlap =
            overlap(Wavefunction1D{n, Side::right}, Wavefunction1D{n, Side::left}, q);
        p.max_wronskian = max_abs_wronskian(n);
        p.parity_states_independent = p.max_wronskian > tol::hermitian;
        report.pairs.push_back(p);
    }
    return report;
}

// Bridge to the sector-graded state space: sides become sectors and the
// eigenfunctions psi^n_+-, n <= nmax, become the basis.

inline const SectorLabel right_sector{"right"};
inline const SectorLabel left_sector{"left"};

inline BasisId basis_id(int n, Side side) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "n=%03d", n);
    return {side == Side::right ? right_sector : left_sector, buf};
}

inline SpacePtr side_space(int nmax) {
    require(nmax >= 1, "side_space: nmax must be at least 1");
    std::vector<BasisId> basis;
    for (int n = 1; n <= nmax; ++n) {
        basis.push_back(basis_id(n, Side::right));
        basis.push_back(basis_id(n, Side::left));
    }
    return Space::make(std::move(basis));
}

/// Multiplication operator by f(x) in the side_space basis, with entries
/// <psi_a|f|psi_b> by quadrature. f should grow at most polynomially.
inline Observable position_observable(const SpacePtr &space,
                                      const std::function<double(double)> &f,
                                      const QuadratureOptions &q = {}) {
    const auto dim = static_cast<Eigen::Index>(space->dim());
    std::vector<Wavefunction1D> wfs;
    for (const auto &b : space->basis()) {
        int n = 0;
        require(std::sscanf(b.tag.c_str(), "n=%d", &n) == 1,
                "position_observable: not a side_space basis");
        wfs.push_back({n, b.sector == right_sector ? Side::right : Side::left});
    }
    cmatrix_t m = cmatrix_t::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = i; j < dim; ++j) {
            const auto &a = wfs[static_cast<std::size_t>(i)];
            const auto &b = wfs[static_cast<std::size_t>(j)];
            const double scale = 1.0 / a.n + 1.0 / b.n;
            const double v = integrate_line(
                [&](double x) { return a(x) * f(x) * b(x); }, scale, q);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return {space, std::move(m)};
}

} // namespace superselect::hatom1d
