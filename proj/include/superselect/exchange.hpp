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
 * Two-particle exchange: the swap operator P, the projectors (1 +- P)/2 and
 * the statement that no permutation-invariant observable connects the
 * symmetric and antisymmetric subspaces.
 *
 * Two-particle amplitudes over a single-particle tag set {0..d-1} are stored
 * row-major: slot (i, j) lives at index i*d + j.
 */
#pragma once

#include <cstdint>
#include <string>

#include "random.hpp"
#include "state_space.hpp"

namespace superselect::exchange {

class TwoParticleState {
  public:
    TwoParticleState(int d, cvector_t amplitudes)
        : d_(d), amps_(std::move(amplitudes)) {
        require(d >= 1, "TwoParticleState: d must be positive");
        require(amps_.size() == static_cast<Eigen::Index>(d) * d,
                "TwoParticleState: expected d*d amplitudes");
        require(amps_.allFinite(), "TwoParticleState: non-finite amplitude");
    }

    static TwoParticleState zero(int d) {
        return {d, cvector_t::Zero(static_cast<Eigen::Index>(d) * d)};
    }

    /// |i, j>: particle 1 in tag i, particle 2 in tag j.
    static TwoParticleState product(int d, int i, int j) {
        require(i >= 0 && i < d && j >= 0 && j < d,
                "TwoParticleState: tag out of range");
        auto s = zero(d);
        s.amps_(static_cast<Eigen::Index>(i) * d + j) = 1.0;
        return s;
    }

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const cvector_t &amplitudes() const { return amps_; }
    [[nodiscard]] complex_t at(int i, int j) const {
        return amps_(static_cast<Eigen::Index>(i) * d_ + j);
    }
    [[nodiscard]] double norm() const { return amps_.norm(); }

    friend TwoParticleState operator+(const TwoParticleState &a,
                                      const TwoParticleState &b) {
        require(a.d_ == b.d_, "TwoParticleState: dimension mismatch");
        return {a.d_, a.amps_ + b.amps_};
    }
    friend TwoParticleState operator-(const TwoParticleState &a,
                                      const TwoParticleState &b) {
        require(a.d_ == b.d_, "TwoParticleState: dimension mismatch");
        return {a.d_, a.amps_ - b.amps_};
    }
    friend TwoParticleState operator*(complex_t c, const TwoParticleState &s) {
        return {s.d_, c * s.amps_};
    }

  private:
    int d_;
    cvector_t amps_;
};

inline double distance(const TwoParticleState &a, const TwoParticleState &b) {
    return (a - b).norm();
}

inline complex_t inner(const TwoParticleState &a, const TwoParticleState &b) {
    require(a.d() == b.d(), "inner: dimension mismatch");
    return a.amplitudes().dot(b.amplitudes());
}

/// P|i, j> = |j, i>.
inline TwoParticleState swap(const TwoParticleState &s) {
    const int d = s.d();
    cvector_t out(s.amplitudes().size());
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out(static_cast<Eigen::Index>(j) * d + i) = s.at(i, j);
        }
    }
    return {d, std::move(out)};
}

/// (1 + sign*P)/2 applied to s.
inline TwoParticleState project_exchange(const TwoParticleState &s,
                                         int sign) {
    require(sign == 1 || sign == -1, "project_exchange: sign must be +1 or -1");
    const auto p = swap(s);
    return {s.d(), (s.amplitudes() + static_cast<double>(sign) *
                                         p.amplitudes()) /
                       2.0};
}

/// d*d permutation matrix of P in the product basis.
inline cmatrix_t swap_matrix(int d) {
    const auto n = static_cast<Eigen::Index>(d) * d;
    cmatrix_t m = cmatrix_t::Zero(n, n);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            m(static_cast<Eigen::Index>(j) * d + i,
              static_cast<Eigen::Index>(i) * d + j) = 1.0;
        }
    }
    return m;
}

/// Product basis {|i,j>} as a single-sector Space with tags "i,j". The
/// ordering of tags matches the row-major amplitude layout for d <= 10.
inline SpacePtr two_particle_space(int d) {
    require(d >= 1 && d <= 10, "two_particle_space: d must be in [1, 10]");
    std::vector<BasisId> basis;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            basis.push_back(
                {SectorLabel("pair"), std::to_string(i) + "," + std::to_string(j)});
        }
    }
    return Space::make(std::move(basis));
}

inline Observable swap_observable(int d) {
    return {two_particle_space(d), swap_matrix(d)};
}

/// Hermitian, permutation-invariant observable: B = (A + PAP)/2 for a seeded
/// random A, then (B + B^dagger)/2.
inline Observable random_exchange_observable(std::uint64_t seed, int d) {
    require(d >= 2, "random_exchange_observable: d must be at least 2");
    Rng rng(seed);
    const auto n = static_cast<Eigen::Index>(d) * d;
    cmatrix_t a(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            a(i, j) = uniform_complex(rng);
        }
    }
    const cmatrix_t p = swap_matrix(d);
    const cmatrix_t b = (a + p * a * p) / 2.0;
    return {two_particle_space(d), (b + b.adjoint()) / 2.0};
}

inline bool commutes_with_swap(const Observable &o, int d) {
    return max_abs(commutator(o.matrix(), swap_matrix(d))) <= tol::theorem;
}

inline bool is_symmetric(const TwoParticleState &s) {
    return max_abs(cvector_t(swap(s).amplitudes() - s.amplitudes())) <=
           tol::theorem;
}

inline bool is_antisymmetric(const TwoParticleState &s) {
    return max_abs(cvector_t(swap(s).amplitudes() + s.amplitudes())) <=
           tol::theorem;
}

/// <anti|O|sym> for a P-commuting O. Vanishes: O P = P O sends the P = +1
/// eigenspace into itself, which is orthogonal to the P = -1 eigenspace.
inline complex_t exchange_cross_element(const Observable &o,
                                        const TwoParticleState &sym,
                                        const TwoParticleState &anti) {
    require(sym.d() == anti.d(), "exchange_cross_element: dimension mismatch");
    const int d = sym.d();
    require(o.matrix().rows() == static_cast<Eigen::Index>(d) * d,
            "exchange_cross_element: observable dimension mismatch");
    require(commutes_with_swap(o, d),
            "exchange_cross_element: observable does not commute with P");
    require(is_symmetric(sym), "exchange_cross_element: sym is not symmetric");
    require(is_antisymmetric(anti),
            "exchange_cross_element: anti is not antisymmetric");
    require(std::abs(sym.norm() - 1.0) <= tol::norm &&
                std::abs(anti.norm() - 1.0) <= tol::norm,
            "exchange_cross_element: states must be normalized");
    return anti.amplitudes().dot(o.matrix() * sym.amplitudes());
}

struct FlipResult {
    TwoParticleState original;
    TwoParticleState flipped;
    double distance;
};

/// Swaps a_plus|sym> + a_minus|anti>; the result a_plus|sym> - a_minus|anti>
/// sits at distance 2|a_minus| from the input.
inline FlipResult exchange_superposition_flip(complex_t a_plus,
                                              complex_t a_minus,
                                              const TwoParticleState &sym,
                                              const TwoParticleState &anti) {
    require(sym.d() == anti.d(),
            "exchange_superposition_flip: dimension mismatch");
    require(std::abs(sym.norm() - 1.0) <= tol::norm &&
                std::abs(anti.norm() - 1.0) <= tol::norm,
            "exchange_superposition_flip: basis states must be normalized");
    require(std::abs(inner(sym, anti)) <= tol::norm,
            "exchange_superposition_flip: basis pair is not orthogonal");
    auto original = a_plus * sym + a_minus * anti;
    auto flipped = swap(original);
    const double dist = distance(original, flipped);
    return {std::move(original), std::move(flipped), dist};
}

/// Normalized random state in the symmetric (sign = +1) or antisymmetric
/// (sign = -1) subspace.
inline TwoParticleState random_exchange_state(int d, int sign, Rng &rng) {
    cvector_t a(static_cast<Eigen::Index>(d) * d);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        a(i) = uniform_complex(rng);
    }
    auto s = project_exchange(TwoParticleState(d, std::move(a)), sign);
    return (1.0 / s.norm()) * s;
}

} // namespace superselect::exchange
