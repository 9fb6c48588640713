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
 * Spin-1/2 states and the univalence rule.
 *
 * A rotation by 2*pi acts on a spin-s state as the phase (-1)^(2s): bosonic
 * components are unchanged, fermionic components flip sign. For a vector
 * that mixes the two, R(2*pi) yields a different vector although nothing
 * physical changed, which is only consistent if no observable can see the
 * relative phase.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "random.hpp"
#include "state_space.hpp"

namespace superselect::spin {

/// Spin in units of hbar, stored as twice its value so half-integers are
/// exact.
class SpinSpecies {
  public:
    explicit SpinSpecies(int twice_spin) : twice_spin_(twice_spin) {
        require(twice_spin >= 0, "SpinSpecies: spin must be non-negative");
    }

    static SpinSpecies boson(int spin) { return SpinSpecies(2 * spin); }
    static SpinSpecies half(int twice_spin) { return SpinSpecies(twice_spin); }

    [[nodiscard]] int twice_spin() const { return twice_spin_; }
    [[nodiscard]] double spin() const { return twice_spin_ / 2.0; }
    /// Half-integer spin.
    [[nodiscard]] bool is_fermion() const { return twice_spin_ % 2 == 1; }
    /// Phase picked up under a rotation by 2*pi: (-1)^(2s).
    [[nodiscard]] double rotation_2pi_phase() const {
        return is_fermion() ? -1.0 : 1.0;
    }

  private:
    int twice_spin_;
};

inline const SectorLabel spin_half_sector{"spin-1/2"};
inline const BasisId up{spin_half_sector, "+"};
inline const BasisId down{spin_half_sector, "-"};

/// Single-sector space {|+>, |->}.
inline const SpacePtr &spin_half_space() {
    static const SpacePtr space = Space::make({up, down});
    return space;
}

enum class Direction { plus_z, minus_z, plus_x, minus_x, plus_y, minus_y };

/// |+z> = |+>, |x> = (|-> + |+>)/sqrt2, |y> = (e^{-i pi/4}|+> +
/// e^{i pi/4}|->)/sqrt2. The minus directions are the orthogonal partners.
inline StateVector make_spin_state(Direction d) {
    const double r = 1.0 / std::sqrt(2.0);
    const complex_t em = std::exp(-imag_unit * (pi / 4.0));
    const complex_t ep = std::exp(imag_unit * (pi / 4.0));
    cvector_t a(2);
    switch (d) {
    case Direction::plus_z:
        a << 1.0, 0.0;
        break;
    case Direction::minus_z:
        a << 0.0, 1.0;
        break;
    case Direction::plus_x:
        a << r, r;
        break;
    case Direction::minus_x:
        a << r, -r;
        break;
    case Direction::plus_y:
        a << r * em, r * ep;
        break;
    case Direction::minus_y:
        a << r * em, -r * ep;
        break;
    }
    return {spin_half_space(), std::move(a)};
}

inline Observable sigma_x() {
    cmatrix_t m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return {spin_half_space(), std::move(m)};
}

inline Observable sigma_y() {
    cmatrix_t m(2, 2);
    m << 0.0, -imag_unit, imag_unit, 0.0;
    return {spin_half_space(), std::move(m)};
}

inline Observable sigma_z() {
    cmatrix_t m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return {spin_half_space(), std::move(m)};
}

using SpeciesMap = std::map<SectorLabel, SpinSpecies>;

/// R(2*pi): each sector component times (-1)^(2s) of its species.
inline StateVector rotate_2pi(const StateVector &v,
                              const SpeciesMap &species) {
    const auto &space = *v.space();
    cvector_t out = v.amplitudes();
    for (const auto &g : sectors_of(v)) {
        auto it = species.find(g);
        require(it != species.end(),
                "rotate_2pi: no species for populated sector " + g.id());
        for (auto i : space.indices_in(g)) {
            out(static_cast<Eigen::Index>(i)) *= it->second.rotation_2pi_phase();
        }
    }
    return {v.space(), std::move(out)};
}

inline const SectorLabel boson_sector{"boson"};
inline const SectorLabel fermion_sector{"fermion"};
inline const BasisId photon{boson_sector, "photon"};
inline const BasisId electron{fermion_sector, "electron"};

/// Two-sector space {|photon>, |electron>}.
inline const SpacePtr &photon_electron_space() {
    static const SpacePtr space = Space::make({photon, electron});
    return space;
}

inline const SpeciesMap &photon_electron_species() {
    static const SpeciesMap m{{boson_sector, SpinSpecies::boson(1)},
                              {fermion_sector, SpinSpecies::half(1)}};
    return m;
}

enum class Verdict { physical_single_sector, forbidden_as_coherent, inconclusive };

inline const char *to_string(Verdict v) {
    switch (v) {
    case Verdict::physical_single_sector:
        return "physical (single sector)";
    case Verdict::forbidden_as_coherent:
        return "forbidden-as-coherent";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

struct UnivalenceReport {
    /// ||Psi - R(2pi) Psi||
    double distance = 0.0;
    /// max over the observable family of |<O>_Psi - <O>_R(2pi)Psi|
    double max_expectation_diff = 0.0;
    /// R(2pi) Psi equals Psi up to one overall phase.
    bool global_phase_only = false;
    Verdict verdict = Verdict::inconclusive;
};

/// Distance above which two vectors count as genuinely different.
inline constexpr double distinct_threshold = 0.1;

/// Applies R(2pi) to a_p|photon> + a_e|electron> and compares the result
/// with the original under `observables` seeded sector-compatible
/// observables.
inline UnivalenceReport univalence_report(complex_t a_p, complex_t a_e,
                                          std::uint64_t seed = 0,
                                          std::size_t observables = 50) {
    require(std::abs(std::norm(a_p) + std::norm(a_e) - 1.0) <= tol::norm,
            "univalence_report: |a_p|^2 + |a_e|^2 must be 1");
    const auto &space = photon_electron_space();
    const auto psi =
        superpose({a_p, a_e}, {StateVector::basis(space, photon),
                               StateVector::basis(space, electron)});
    const auto rotated = rotate_2pi(psi, photon_electron_species());

    Rng rng(derive_seed(seed, "univalence"));
    const auto obs = random_compatible_observables(space, observables, rng);

    UnivalenceReport r;
    r.distance = distance(psi, rotated);
    r.max_expectation_diff = max_expectation_difference(psi, rotated, obs);
    r.global_phase_only =
        std::abs(std::abs(inner(psi, rotated)) - 1.0) <= tol::theorem;
    if (psi.is_physical()) {
        r.verdict = Verdict::physical_single_sector;
    } else if (r.distance > distinct_threshold &&
               r.max_expectation_diff <= tol::theorem) {
        r.verdict = Verdict::forbidden_as_coherent;
    }
    return r;
}

} // namespace superselect::spin
