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

#include <gtest/gtest.h>

#include "superselect/exchange.hpp"

namespace ss = superselect;
namespace ex = superselect::exchange;
using ex::TwoParticleState;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TwoParticleState sym01() {
    return kInvSqrt2 * (TwoParticleState::product(2, 0, 1) + TwoParticleState::product(2, 1, 0));
}
TwoParticleState anti01() {
    return kInvSqrt2 * (TwoParticleState::product(2, 0, 1) - TwoParticleState::product(2, 1, 0));
}
} // namespace

TEST(Exchange, SwapExchangesSlots) {
    const auto s = ex::swap(TwoParticleState::product(3, 0, 2));
    EXPECT_EQ(s.at(2, 0), ss::complex_t(1.0));
    EXPECT_EQ(s.at(0, 2), ss::complex_t(0.0));
}

TEST(Exchange, SwapIsAnInvolution) {
    ss::Rng rng(4);
    for (int d = 2; d <= 4; ++d) {
        const auto s = ex::random_exchange_state(d, +1, rng) + ex::random_exchange_state(d, -1, rng);
        EXPECT_EQ(ex::distance(ex::swap(ex::swap(s)), s), 0.0);
        const ss::cmatrix_t p = ex::swap_matrix(d);
        EXPECT_EQ(ss::max_abs(ss::cmatrix_t(p * p) - ss::cmatrix_t::Identity(d * d, d * d)), 0.0);
    }
}

TEST(Exchange, ProjectorsSplitTheSpace) {
    ss::Rng rng(8);
    const int d = 3;
    ss::cvector_t a(d * d);
    for (int i = 0; i < d * d; ++i) {
        a(i) = ss::uniform_complex(rng);
    }
    const TwoParticleState s(d, a);
    const auto plus = ex::project_exchange(s, +1);
    const auto minus = ex::project_exchange(s, -1);
    EXPECT_TRUE(ex::is_symmetric(plus));
    EXPECT_TRUE(ex::is_antisymmetric(minus));
    EXPECT_LE(ex::distance(plus + minus, s), 1e-15);
    EXPECT_LE(ex::distance(ex::project_exchange(plus, +1), plus), 1e-15);
    EXPECT_LE(std::abs(ex::inner(plus, minus)), 1e-15);
    EXPECT_THROW(ex::project_exchange(s, 0), ss::precondition_error);
}

TEST(Exchange, SwapSpectrumDimensions) {
    for (int d = 2; d <= 4; ++d) {
        Eigen::SelfAdjointEigenSolver<ss::cmatrix_t> es(ex::swap_matrix(d));
        int plus = 0;
        int minus = 0;
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            const double ev = es.eigenvalues()(i);
            plus += std::abs(ev - 1.0) < 1e-12 ? 1 : 0;
            minus += std::abs(ev + 1.0) < 1e-12 ? 1 : 0;
        }
        EXPECT_EQ(plus, d * (d + 1) / 2);
        EXPECT_EQ(minus, d * (d - 1) / 2);
    }
}

TEST(Exchange, RandomObservableCommutesWithSwap) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto o = ex::random_exchange_observable(seed, 3);
        EXPECT_TRUE(ex::commutes_with_swap(o, 3));
        EXPECT_LE(ss::max_abs(ss::cmatrix_t(o.matrix() - o.matrix().adjoint())), 1e-15);
    }
    EXPECT_THROW(ex::random_exchange_observable(0, 1), ss::precondition_error);
}

TEST(Exchange, CrossElementVanishes) {
    ss::Rng rng(21);
    for (int d = 2; d <= 4; ++d) {
        for (int t = 0; t < 30; ++t) {
            const auto o = ex::random_exchange_observable(rng(), d);
            const auto sym = ex::random_exchange_state(d, +1, rng);
            const auto anti = ex::random_exchange_state(d, -1, rng);
            EXPECT_LE(std::abs(ex::exchange_cross_element(o, sym, anti)), 1e-12);
        }
    }
}

TEST(Exchange, CrossElementPreconditions) {
    const auto o = ex::random_exchange_observable(1, 2);
    EXPECT_THROW(ex::exchange_cross_element(o, anti01(), anti01()), ss::precondition_error);
    EXPECT_THROW(ex::exchange_cross_element(o, sym01(), sym01()), ss::precondition_error);
    EXPECT_THROW(ex::exchange_cross_element(o, 2.0 * sym01(), anti01()), ss::precondition_error);
    // A generic Hermitian matrix does not commute with P.
    ss::Rng rng(3);
    const ss::Observable h(ex::two_particle_space(2), ss::random_hermitian(4, rng));
    EXPECT_THROW(ex::exchange_cross_element(h, sym01(), anti01()), ss::precondition_error);
}

TEST(Exchange, FlipDistances) {
    const auto half = ex::exchange_superposition_flip(kInvSqrt2, kInvSqrt2, sym01(), anti01());
    EXPECT_NEAR(half.distance, std::sqrt(2.0), 1e-15);
    const auto pure_sym = ex::exchange_superposition_flip(1.0, 0.0, sym01(), anti01());
    EXPECT_EQ(pure_sym.distance, 0.0);
    const auto pure_anti = ex::exchange_superposition_flip(0.0, 1.0, sym01(), anti01());
    EXPECT_NEAR(pure_anti.distance, 2.0, 1e-15);
}

TEST(Exchange, TwoParticleSpaceMatchesLayout) {
    const auto space = ex::two_particle_space(3);
    EXPECT_EQ(space->dim(), 9u);
    EXPECT_EQ(space->basis(5).tag, "1,2");
    EXPECT_THROW(ex::two_particle_space(11), ss::precondition_error);
    EXPECT_EQ(ss::max_abs(ss::cmatrix_t(ex::swap_observable(3).matrix() - ex::swap_matrix(3))), 0.0);
}
