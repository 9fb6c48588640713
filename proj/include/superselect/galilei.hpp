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
 * Galilean phases and the mass and particle-number rules.
 *
 * The loop U_I = U_{-v} U_{-r} U_v U_r is the identity on the Galilei group
 * but acts on a particle of mass m as the phase exp(i m v.r). Only the net
 * phase is modelled, acting on mass-labeled amplitudes. Atomic units.
 */
#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "state_space.hpp"

namespace superselect::galilei {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

struct GalileiParams {
    Vec3 v{};   ///< boost velocity
    Vec3 r{};   ///< displacement
    double t{}; ///< time

    GalileiParams() = default;
    GalileiParams(Vec3 velocity, Vec3 displacement, double time = 0.0)
        : v(velocity), r(displacement), t(time) {
        for (int k = 0; k < 3; ++k) {
            require(std::isfinite(v[k]) && std::isfinite(r[k]),
                    "GalileiParams: non-finite component");
        }
        require(std::isfinite(t), "GalileiParams: non-finite time");
    }

    [[nodiscard]] double v_dot_r() const { return dot(v, r); }
};

/// exp(i m v.r), the net phase of U_I on a particle of mass m.
inline complex_t ui_phase(double m, const GalileiParams &p) {
    require(m > 0.0, "ui_phase: mass must be positive");
    return std::exp(imag_unit * (m * p.v_dot_r()));
}

/// exp(i n m v.r) on an n-particle state of identical particles of mass m.
inline complex_t particle_number_phase(int n, double m,
                                       const GalileiParams &p) {
    require(n >= 0, "particle_number_phase: n must be non-negative");
    require(m > 0.0, "particle_number_phase: mass must be positive");
    const double angle = m * p.v_dot_r();
    return std::exp(imag_unit * (static_cast<double>(n) * angle));
}

class MassLabeledState {
  public:
    struct Component {
        double mass;
        complex_t amplitude;
        SectorLabel sector;
    };

    explicit MassLabeledState(std::vector<Component> components)
        : components_(std::move(components)) {
        for (std::size_t i = 0; i < components_.size(); ++i) {
            const auto &c = components_[i];
            require(std::isfinite(c.mass) && c.mass > 0.0,
                    "MassLabeledState: masses must be positive");
            require(std::isfinite(c.amplitude.real()) &&
                        std::isfinite(c.amplitude.imag()),
                    "MassLabeledState: non-finite amplitude");
            for (std::size_t j = 0; j < i; ++j) {
                const auto &o = components_[j];
                require((o.mass == c.mass) == (o.sector == c.sector),
                        "MassLabeledState: sectors must correspond one to one "
                        "with masses");
            }
        }
    }

    /// One component per (mass, amplitude), sector named after the mass.
    static MassLabeledState
    from_masses(const std::vector<std::pair<double, complex_t>> &parts) {
        std::vector<Component> c;
        for (const auto &[m, a] : parts) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "m=%.17g", m);
            c.push_back({m, a, SectorLabel(buf)});
        }
        return MassLabeledState(std::move(c));
    }

    [[nodiscard]] const std::vector<Component> &components() const {
        return components_;
    }

    [[nodiscard]] double norm() const {
        double s = 0.0;
        for (const auto &c : components_) {
            s += std::norm(c.amplitude);
        }
        return std::sqrt(s);
    }

    /// Basis of the bridged state space: one element per component, tagged
    /// by component index (zero-padded so tag order is index order).
    [[nodiscard]] SpacePtr space() const {
        std::vector<BasisId> basis;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            basis.push_back({components_[i].sector, tag(i)});
        }
        return Space::make(std::move(basis));
    }

    /// Same amplitudes as a StateVector over space().
    [[nodiscard]] StateVector to_state_vector(const SpacePtr &space) const {
        cvector_t a(static_cast<Eigen::Index>(space->dim()));
        for (std::size_t i = 0; i < components_.size(); ++i) {
            a(static_cast<Eigen::Index>(
                space->index_of({components_[i].sector, tag(i)}))) =
                components_[i].amplitude;
        }
        return {space, std::move(a)};
    }

    [[nodiscard]] StateVector to_state_vector() const {
        return to_state_vector(space());
    }

  private:
    static std::string tag(std::size_t i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%06zu", i);
        return buf;
    }

    std::vector<Component> components_;
};

/// Each component times ui_phase(mass, p).
inline MassLabeledState apply_ui(const MassLabeledState &s,
                                 const GalileiParams &p) {
    auto parts = s.components();
    for (auto &c : parts) {
        c.amplitude *= ui_phase(c.mass, p);
    }
    return MassLabeledState(std::move(parts));
}

/// |<s|U_I s>|^2 = |sum_j |a_j|^2 exp(i m_j v.r)|^2.
inline double ui_overlap(const MassLabeledState &s, const GalileiParams &p) {
    require(std::abs(s.norm() - 1.0) <= tol::norm,
            "ui_overlap: state is not normalized");
    complex_t acc = 0.0;
    for (const auto &c : s.components()) {
        acc += std::norm(c.amplitude) * ui_phase(c.mass, p);
    }
    return std::norm(acc);
}

} // namespace superselect::galilei
