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

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "superselect/hatom1d.hpp"

namespace ss = superselect;
namespace h1 = superselect::hatom1d;
using h1::Side;

namespace {

/// Coefficients c_i of the right-side eigenfunction written as
/// psi_n(x) = sum_i c_i x^{i+1} e^{-x/n}, built from the explicit Laguerre
/// sum and the normalization sqrt(4 / n^5).
std::vector<long double> series_coefficients(int n) {
    std::vector<long double> c;
    const long double norm = std::sqrt(4.0L / std::pow(static_cast<long double>(n), 5));
    const long double sign = (n - 1) % 2 == 0 ? 1.0L : -1.0L;
    const int k = n - 1;
    for (int i = 0; i <= k; ++i) {
        // C(k+1, k-i) / i! * (2/n)^i with alternating sign; n! cancels the
        // 1/n! the old-style normalization carries.
        const long double binom = std::exp(std::lgamma(k + 2.0L) - std::lgamma(k - i + 1.0L) -
                                           std::lgamma(i + 2.0L));
        const long double term = binom / std::tgamma(i + 1.0L) *
                                 std::pow(2.0L / n, static_cast<long double>(i));
        c.push_back(sign * norm * (i % 2 == 0 ? term : -term));
    }
    return c;
}

/// int_0^inf psi_n psi_m dx from the series and int x^p e^{-bx} = p!/b^{p+1}.
double series_overlap(int n, int m) {
    const auto a = series_coefficients(n);
    const auto b = series_coefficients(m);
    const long double beta = 1.0L / n + 1.0L / m;
    long double s = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const int p = static_cast<int>(i + j + 2);
            s += a[i] * b[j] * std::exp(std::lgamma(p + 1.0L) - (p + 1) * std::log(beta));
        }
    }
    return static_cast<double>(s);
}

double series_psi(int n, double x) {
    const auto c = series_coefficients(n);
    long double s = 0.0L;
    for (std::size_t i = 0; i < c.size(); ++i) {
        s += c[i] * std::pow(static_cast<long double>(x), static_cast<long double>(i + 1));
    }
    return static_cast<double>(s * std::exp(-static_cast<long double>(x) / n));
}

double kronrod_overlap(int n, int m) {
    auto f = [&](double x) { return h1::psi(n, Side::right, x) * h1::psi(m, Side::right, x); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, std::numeric_limits<double>::infinity(), 20, 1e-13);
}

} // namespace

TEST(Hatom1D, Energy) {
    EXPECT_DOUBLE_EQ(h1::energy(1), -0.5);
    EXPECT_DOUBLE_EQ(h1::energy(2), -0.125);
    EXPECT_DOUBLE_EQ(h1::energy(5), -0.02);
    EXPECT_THROW(h1::energy(0), ss::precondition_error);
}

TEST(Hatom1D, GroundStateClosedForm) {
    for (double x : {1e-3, 0.5, 1.0, 3.0, 10.0}) {
        EXPECT_NEAR(h1::psi(1, Side::right, x), 2.0 * x * std::exp(-x), 1e-15);
    }
}

TEST(Hatom1D, FirstExcitedClosedForm) {
    for (double x : {0.1, 1.0, 2.0, 5.0}) {
        const double ref = -x * (2.0 - x) * std::exp(-x / 2.0) / (2.0 * std::sqrt(2.0));
        EXPECT_NEAR(h1::psi(2, Side::right, x), ref, 1e-15);
    }
}

TEST(Hatom1D, MatchesSeriesOracle) {
    for (int n = 1; n <= 8; ++n) {
        for (double x : {0.05, 0.5, 2.0, 7.0, 20.0, 45.0}) {
            const double ref = series_psi(n, x);
            EXPECT_NEAR(h1::psi(n, Side::right, x), ref, 1e-12 * std::max(1.0, std::abs(ref)))
                << "n=" << n << " x=" << x;
        }
    }
}

TEST(Hatom1D, SupportAndMirror) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(h1::psi(n, Side::right, 0.0), 0.0);
        EXPECT_EQ(h1::psi(n, Side::left, 0.0), 0.0);
        EXPECT_EQ(h1::psi(n, Side::right, -1.0), 0.0);
        EXPECT_EQ(h1::psi(n, Side::left, 1.0), 0.0);
        for (double x : {0.3, 1.7, 9.0}) {
            EXPECT_NEAR(h1::psi(n, Side::left, -x), h1::psi(n, Side::right, x), 1e-14);
            EXPECT_NEAR(h1::psi_derivative(n, Side::left, -x),
                        -h1::psi_derivative(n, Side::right, x), 1e-14);
        }
    }
}

TEST(Hatom1D, FarTailIsZeroNotNaN) {
    EXPECT_EQ(h1::psi(3, Side::right, 1e6), 0.0);
    EXPECT_EQ(h1::psi(3, Side::left, -1e6), 0.0);
    EXPECT_EQ(h1::psi_derivative(3, Side::right, 1e6), 0.0);
}

TEST(Hatom1D, DerivativeMatchesFiniteDifference) {
    const double h = 1e-6;
    for (int n = 1; n <= 5; ++n) {
        for (double x : {0.2, 1.0, 4.0, 12.0}) {
            const double fd =
                (h1::psi(n, Side::right, x + h) - h1::psi(n, Side::right, x - h)) / (2.0 * h);
            EXPECT_NEAR(h1::psi_derivative(n, Side::right, x), fd, 1e-8);
        }
    }
}

TEST(Hatom1D, OverlapsAgreeWithClosedFormMoments) {
    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m <= 6; ++m) {
            const double ref = series_overlap(n, m);
            EXPECT_NEAR(ref, n == m ? 1.0 : 0.0, 1e-12) << n << "," << m;
            EXPECT_NEAR(h1::overlap(n, m, Side::right), ref, 1e-10) << n << "," << m;
            EXPECT_NEAR(h1::overlap(n, m, Side::left), ref, 1e-10) << n << "," << m;
        }
    }
}

TEST(Hatom1D, OverlapsAgreeWithKronrodOracle) {
    for (int n = 1; n <= 10; ++n) {
        for (int m = n; m <= 10; ++m) {
            EXPECT_NEAR(h1::overlap(n, m, Side::right), kronrod_overlap(n, m), 1e-9)
                << n << "," << m;
        }
    }
}

TEST(Hatom1D, OppositeSidesDoNotOverlap) {
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(h1::overlap(h1::Wavefunction1D{n, Side::right},
                              h1::Wavefunction1D{n, Side::left}),
                  0.0);
    }
}

TEST(Hatom1D, ResidualIsSmall) {
    for (int n = 1; n <= 8; ++n) {
        for (double x : {1e-3, 0.01, 0.5, 3.0, 15.0, 50.0}) {
            EXPECT_LE(h1::residual(n, x, Side::right), 1e-5) << n << " " << x;
            EXPECT_LE(h1::residual(n, x, Side::left), 1e-5) << n << " " << x;
        }
    }
    EXPECT_THROW(h1::residual(1, 1e-4, Side::right), ss::precondition_error);
}

TEST(Hatom1D, ResidualDetectsWrongEnergy) {
    // psi_2 is not an eigenfunction at E_1.
    const h1::Wavefunction1D wf{2, Side::right};
    const double x = 1.0;
    EXPECT_GT(std::abs(h1::apply_hamiltonian(wf, x) - h1::energy(1) * wf(x)), 1e-2);
}

TEST(Hatom1D, ParityStatesHaveVanishingWronskian) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_LE(h1::max_abs_wronskian(n), 1e-10);
        const auto [even, odd] = h1::parity_states(n);
        EXPECT_NEAR(h1::norm_squared(even), 1.0, 1e-10);
        EXPECT_NEAR(h1::norm_squared(odd), 1.0, 1e-10);
        EXPECT_NEAR(even(-0.7), even(0.7), 1e-15);
        EXPECT_NEAR(odd(-0.7), -odd(0.7), 1e-15);
    }
}

TEST(Hatom1D, WronskianOfIndependentFunctionsIsNonzero) {
    // psi_1 and psi_2 on the same side are independent.
    const double x = 1.0;
    const double w = h1::psi(1, Side::right, x) * h1::psi_derivative(2, Side::right, x) -
                     h1::psi(2, Side::right, x) * h1::psi_derivative(1, Side::right, x);
    EXPECT_GT(std::abs(w), 1e-3);
}

TEST(Hatom1D, SymmetricGrid) {
    const auto g = h1::symmetric_grid(4000, 1e-3, 20.0);
    ASSERT_EQ(g.size(), 4000u);
    EXPECT_DOUBLE_EQ(g.front(), -20.0);
    EXPECT_DOUBLE_EQ(g.back(), 20.0);
    EXPECT_EQ(g[1999], -1e-3);
    EXPECT_EQ(g[2000], 1e-3);
}

TEST(Solver, ReproducesLowLevels) {
    const h1::SolverConfig cfg;
    EXPECT_NEAR(h1::solve_halfline(cfg, 1), -0.5, 1e-6);
    EXPECT_NEAR(h1::solve_halfline(cfg, 2), -0.125, 1e-6);
    EXPECT_NEAR(h1::solve_halfline(h1::solver_config_for(5), 5), -0.02, 1e-6);
}

TEST(Solver, GridConvergence) {
    h1::SolverConfig coarse;
    h1::SolverConfig fine = coarse;
    fine.grid_points *= 2;
    for (int k = 1; k <= 3; ++k) {
        EXPECT_LE(std::abs(h1::solve_halfline(coarse, k) - h1::solve_halfline(fine, k)), 1e-7);
    }
}

TEST(Solver, BadBracketThrows) {
    h1::SolverConfig cfg;
    cfg.energy_bracket = {-0.4, -0.3};
    EXPECT_THROW(h1::solve_halfline(cfg, 1), ss::convergence_error);
    cfg.energy_bracket = {0.5, 0.1};
    EXPECT_THROW(h1::solve_halfline(cfg, 1), ss::precondition_error);
}

TEST(Solver, ConfigScalesWithLevel) {
    EXPECT_DOUBLE_EQ(h1::solver_config_for(2).x_max, 120.0);
    EXPECT_DOUBLE_EQ(h1::solver_config_for(8).x_max, 320.0);
}

TEST(Degeneracy, ReportShowsSideSuperselection) {
    const auto r = h1::degeneracy_report(3);
    ASSERT_EQ(r.pairs.size(), 3u);
    for (const auto &p : r.pairs) {
        EXPECT_EQ(p.energy_left, p.energy_right);
        EXPECT_TRUE(p.disjoint_support);
        EXPECT_EQ(p.cross_overlap, 0.0);
        EXPECT_LE(p.max_wronskian, 1e-10);
        EXPECT_FALSE(p.parity_states_independent);
    }
}

TEST(SectorBridge, SidesAreSectors) {
    const auto space = h1::side_space(3);
    EXPECT_EQ(space->dim(), 6u);
    EXPECT_EQ(space->sectors().size(), 2u);
    // Any function of x that is finite at the origin cannot connect the sides.
    const auto x2 = h1::position_observable(space, [](double x) { return x * x; });
    EXPECT_TRUE(x2.sector_compatible());
    const auto i = space->index_of(h1::basis_id(1, Side::right));
    EXPECT_NEAR(x2.matrix()(i, i).real(), 3.0, 1e-10);
}
