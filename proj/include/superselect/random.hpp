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
 * Seeded generators for states, observables and density operators used by
 * the property checks.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "state_space.hpp"

namespace superselect {

using Rng = std::mt19937_64;

/// Deterministically derives a stream seed from a base seed and a name, so
/// independent suites do not share random streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL + h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline complex_t uniform_complex(Rng &rng) {
    const double re = uniform(rng, -1.0, 1.0);
    const double im = uniform(rng, -1.0, 1.0);
    return {re, im};
}

/// Dense Hermitian (A + A^dagger)/2 with Re, Im of A uniform on [-1, 1].
inline cmatrix_t random_hermitian(Eigen::Index n, Rng &rng) {
    cmatrix_t a(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            a(i, j) = uniform_complex(rng);
        }
    }
    return (a + a.adjoint()) / 2.0;
}

/// Keeps only the entries of m that couple basis elements of one sector.
inline cmatrix_t block_restrict(const Space &space, const cmatrix_t &m) {
    cmatrix_t out = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (space.sector_of(static_cast<std::size_t>(i)) !=
                space.sector_of(static_cast<std::size_t>(j))) {
                out(i, j) = 0.0;
            }
        }
    }
    return out;
}

inline Observable random_compatible_observable(const SpacePtr &space,
                                               Rng &rng) {
    const auto n = static_cast<Eigen::Index>(space->dim());
    return {space, block_restrict(*space, random_hermitian(n, rng))};
}

inline std::vector<Observable>
random_compatible_observables(const SpacePtr &space, std::size_t count,
                              Rng &rng) {
    std::vector<Observable> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(random_compatible_observable(space, rng));
    }
    return out;
}

/// Normalized random vector with support on every basis element.
inline StateVector random_state(const SpacePtr &space, Rng &rng) {
    cvector_t a(static_cast<Eigen::Index>(space->dim()));
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        a(i) = uniform_complex(rng);
    }
    a.normalize();
    return {space, std::move(a)};
}

/// Normalized random vector supported in sector g only.
inline StateVector random_sector_state(const SpacePtr &space,
                                       const SectorLabel &g, Rng &rng) {
    cvector_t a = cvector_t::Zero(static_cast<Eigen::Index>(space->dim()));
    for (auto i : space->indices_in(g)) {
        a(static_cast<Eigen::Index>(i)) = uniform_complex(rng);
    }
    a.normalize();
    return {space, std::move(a)};
}

/// Mixture of `members` random states with random weights.
inline DensityOperator random_density(const SpacePtr &space, Rng &rng,
                                      std::size_t members = 3) {
    std::vector<double> w(members);
    double total = 0.0;
    for (auto &x : w) {
        x = uniform(rng, 0.1, 1.0);
        total += x;
    }
    std::vector<Ensemble::Member> mix;
    for (std::size_t k = 0; k < members; ++k) {
        mix.push_back({w[k] / total, random_state(space, rng)});
    }
    return to_density(Ensemble(std::move(mix)));
}

/// Random phase per sector, uniform on [-pi, pi).
inline SectorPhases random_phases(const Space &space, Rng &rng) {
    SectorPhases out;
    for (const auto &g : space.sectors()) {
        out[g] = uniform(rng, -pi, pi);
    }
    return out;
}

} // namespace superselect
