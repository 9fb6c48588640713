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
 * Sector-graded finite-dimensional Hilbert spaces.
 *
 * A Space is a finite basis of (sector, tag) pairs. Sectors are the
 * eigenvalues of a classical superselection variable; the tag carries every
 * other quantum number. State vectors may span several sectors: such vectors
 * are representable so that the theorems about them can be checked, but
 * they report is_physical() == false.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "common.hpp"

namespace superselect {

/// Discrete eigenvalue tag of a superselection variable. Compared exactly.
class SectorLabel {
  public:
    SectorLabel() = default;
    explicit SectorLabel(std::string id) : id_(std::move(id)) {}
    SectorLabel(const char *id) : id_(id) {}

    [[nodiscard]] const std::string &id() const { return id_; }

    friend auto operator<=>(const SectorLabel &, const SectorLabel &) = default;
    friend bool operator==(const SectorLabel &, const SectorLabel &) = default;

  private:
    std::string id_;
};

struct BasisId {
    SectorLabel sector;
    std::string tag;

    friend auto operator<=>(const BasisId &, const BasisId &) = default;
    friend bool operator==(const BasisId &, const BasisId &) = default;
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// Immutable labeled basis. Basis elements are ordered by (sector, tag) so
/// that matrix layouts are reproducible.
class Space {
  public:
    static SpacePtr make(std::vector<BasisId> basis) {
        std::sort(basis.begin(), basis.end());
        require(std::adjacent_find(basis.begin(), basis.end()) == basis.end(),
                "Space: duplicate (sector, tag) pair");
        return SpacePtr(new Space(std::move(basis)));
    }

    /// Convenience: list of sectors, each with its within-sector tags.
    static SpacePtr from_sectors(
        const std::vector<std::pair<std::string, std::vector<std::string>>>
            &sectors) {
        std::vector<BasisId> basis;
        for (const auto &[label, tags] : sectors) {
            for (const auto &tag : tags) {
                basis.push_back({SectorLabel(label), tag});
            }
        }
        return make(std::move(basis));
    }

    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const BasisId &basis(std::size_t i) const {
        return basis_.at(i);
    }
    [[nodiscard]] const std::vector<BasisId> &basis() const { return basis_; }
    [[nodiscard]] const std::vector<SectorLabel> &sectors() const {
        return sectors_;
    }

    [[nodiscard]] bool contains(const BasisId &id) const {
        return std::binary_search(basis_.begin(), basis_.end(), id);
    }

    [[nodiscard]] std::size_t index_of(const BasisId &id) const {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), id);
        require(it != basis_.end() && *it == id,
                "Space: unknown basis id " + id.sector.id() + "/" + id.tag);
        return static_cast<std::size_t>(it - basis_.begin());
    }

    [[nodiscard]] bool has_sector(const SectorLabel &g) const {
        return std::binary_search(sectors_.begin(), sectors_.end(), g);
    }

    [[nodiscard]] const SectorLabel &sector_of(std::size_t i) const {
        return basis_.at(i).sector;
    }

    /// Basis indices belonging to sector g, ascending.
    [[nodiscard]] std::vector<std::size_t>
    indices_in(const SectorLabel &g) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i].sector == g) {
                out.push_back(i);
            }
        }
        return out;
    }

    /// Two spaces are interchangeable when their ordered bases coincide.
    [[nodiscard]] bool same_as(const Space &other) const {
        return this == &other || basis_ == other.basis_;
    }

  private:
    explicit Space(std::vector<BasisId> basis) : basis_(std::move(basis)) {
        for (const auto &b : basis_) {
            if (sectors_.empty() || sectors_.back() != b.sector) {
                sectors_.push_back(b.sector);
            }
        }
    }

    std::vector<BasisId> basis_;
    std::vector<SectorLabel> sectors_;
};

inline void require_same_space(const Space &a, const Space &b,
                               const char *op) {
    require(a.same_as(b), std::string(op) + ": mismatched spaces");
}

/// Complex amplitudes over a labeled basis.
class StateVector {
  public:
    StateVector(SpacePtr space, cvector_t amplitudes)
        : space_(std::move(space)), amps_(std::move(amplitudes)) {
        require(space_ != nullptr, "StateVector: null space");
        require(static_cast<std::size_t>(amps_.size()) == space_->dim(),
                "StateVector: amplitude count does not match space");
        require(amps_.allFinite(), "StateVector: non-finite amplitude");
    }

    static StateVector zero(SpacePtr space) {
        const auto n = static_cast<Eigen::Index>(space->dim());
        return {std::move(space), cvector_t::Zero(n)};
    }

    static StateVector basis(SpacePtr space, const BasisId &id) {
        auto v = zero(space);
        v.amps_(static_cast<Eigen::Index>(space->index_of(id))) = 1.0;
        return v;
    }

    [[nodiscard]] const SpacePtr &space() const { return space_; }
    [[nodiscard]] const cvector_t &amplitudes() const { return amps_; }
    [[nodiscard]] complex_t amplitude(const BasisId &id) const {
        return amps_(static_cast<Eigen::Index>(space_->index_of(id)));
    }
    [[nodiscard]] double norm() const { return amps_.norm(); }

    [[nodiscard]] bool is_physical() const;

  private:
    SpacePtr space_;
    cvector_t amps_;
};

/// Vector 2-norm of a - b.
inline double distance(const StateVector &a, const StateVector &b) {
    require_same_space(*a.space(), *b.space(), "distance");
    return (a.amplitudes() - b.amplitudes()).norm();
}

inline void require_normalized(const StateVector &v, const char *op) {
    require(std::abs(v.norm() - 1.0) <= tol::norm,
            std::string(op) + ": state is not normalized");
}

/// Real-weighted mixture of normalized states.
class Ensemble {
  public:
    struct Member {
        double weight;
        StateVector state;
    };

    explicit Ensemble(std::vector<Member> members)
        : members_(std::move(members)) {
        require(!members_.empty(), "Ensemble: no members");
        double total = 0.0;
        for (const auto &m : members_) {
            require(std::isfinite(m.weight) && m.weight >= 0.0,
                    "Ensemble: weights must be finite and non-negative");
            require_same_space(*members_.front().state.space(),
                               *m.state.space(), "Ensemble");
            require_normalized(m.state, "Ensemble");
            total += m.weight;
        }
        require(std::abs(total - 1.0) <= tol::weight_sum,
                "Ensemble: weights do not sum to 1");
    }

    [[nodiscard]] const std::vector<Member> &members() const {
        return members_;
    }
    [[nodiscard]] const SpacePtr &space() const {
        return members_.front().state.space();
    }

  private:
    std::vector<Member> members_;
};

/// True when every entry coupling basis elements of different sectors
/// vanishes within tol::hermitian.
inline bool is_block_diagonal(const Space &space, const cmatrix_t &m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (space.sector_of(static_cast<std::size_t>(i)) !=
                    space.sector_of(static_cast<std::size_t>(j)) &&
                std::abs(m(i, j)) > tol::hermitian) {
                return false;
            }
        }
    }
    return true;
}

/// Hermitian matrix over a labeled basis.
class Observable {
  public:
    Observable(SpacePtr space, cmatrix_t matrix)
        : space_(std::move(space)), m_(std::move(matrix)) {
        require(space_ != nullptr, "Observable: null space");
        const auto n = static_cast<Eigen::Index>(space_->dim());
        require(m_.rows() == n && m_.cols() == n,
                "Observable: matrix does not match space dimension");
        require(m_.allFinite(), "Observable: non-finite entry");
        require(max_abs(m_ - m_.adjoint()) <= tol::hermitian,
                "Observable: matrix is not Hermitian");
        compatible_ = is_block_diagonal(*space_, m_);
    }

    static Observable identity(SpacePtr space) {
        const auto n = static_cast<Eigen::Index>(space->dim());
        return {std::move(space), cmatrix_t::Identity(n, n)};
    }

    [[nodiscard]] const SpacePtr &space() const { return space_; }
    [[nodiscard]] const cmatrix_t &matrix() const { return m_; }
    [[nodiscard]] bool sector_compatible() const { return compatible_; }

  private:
    SpacePtr space_;
    cmatrix_t m_;
    bool compatible_ = false;
};

/// Hermitian, unit-trace, positive semidefinite matrix over a labeled basis.
class DensityOperator {
  public:
    DensityOperator(SpacePtr space, cmatrix_t matrix)
        : space_(std::move(space)), m_(std::move(matrix)) {
        require(space_ != nullptr, "DensityOperator: null space");
        const auto n = static_cast<Eigen::Index>(space_->dim());
        require(m_.rows() == n && m_.cols() == n,
                "DensityOperator: matrix does not match space dimension");
        require(max_abs(m_ - m_.adjoint()) <= tol::hermitian,
                "DensityOperator: matrix is not Hermitian");
        require(std::abs(m_.trace() - 1.0) <= tol::hermitian,
                "DensityOperator: trace is not 1");
        Eigen::SelfAdjointEigenSolver<cmatrix_t> es(m_,
                                                    Eigen::EigenvaluesOnly);
        require(es.eigenvalues().minCoeff() >= -tol::psd,
                "DensityOperator: matrix is not positive semidefinite");
    }

    [[nodiscard]] const SpacePtr &space() const { return space_; }
    [[nodiscard]] const cmatrix_t &matrix() const { return m_; }
    [[nodiscard]] double trace() const { return m_.trace().real(); }

  private:
    SpacePtr space_;
    cmatrix_t m_;
};

/// Sectors on which v has support above tol::zero.
inline std::set<SectorLabel> sectors_of(const StateVector &v) {
    std::set<SectorLabel> out;
    const auto &space = *v.space();
    for (std::size_t i = 0; i < space.dim(); ++i) {
        if (std::abs(v.amplitudes()(static_cast<Eigen::Index>(i))) >
            tol::zero) {
            out.insert(space.sector_of(i));
        }
    }
    return out;
}

inline bool StateVector::is_physical() const {
    return sectors_of(*this).size() <= 1;
}

/// Amplitude-wise linear combination sum_k coeffs[k] * states[k]. The result
/// may span several sectors.
inline StateVector superpose(std::span<const complex_t> coeffs,
                             std::span<const StateVector> states) {
    require(!states.empty(), "superpose: empty input");
    require(coeffs.size() == states.size(),
            "superpose: coefficient and state counts differ");
    auto out = StateVector::zero(states.front().space());
    cvector_t acc = out.amplitudes();
    for (std::size_t k = 0; k < states.size(); ++k) {
        require_same_space(*states.front().space(), *states[k].space(),
                           "superpose");
        acc += coeffs[k] * states[k].amplitudes();
    }
    return {states.front().space(), std::move(acc)};
}

inline StateVector superpose(std::initializer_list<complex_t> coeffs,
                             std::initializer_list<StateVector> states) {
    return superpose(std::span<const complex_t>(coeffs.begin(), coeffs.size()),
                     std::span<const StateVector>(states.begin(),
                                                  states.size()));
}

/// <a|b>, conjugate-linear in a.
inline complex_t inner(const StateVector &a, const StateVector &b) {
    require_same_space(*a.space(), *b.space(), "inner");
    return a.amplitudes().dot(b.amplitudes());
}

/// Component of v in sector g; every other amplitude is zeroed.
inline StateVector project_sector(const StateVector &v, const SectorLabel &g) {
    const auto &space = *v.space();
    require(space.has_sector(g), "project_sector: unknown sector " + g.id());
    cvector_t out = cvector_t::Zero(v.amplitudes().size());
    for (auto i : space.indices_in(g)) {
        const auto k = static_cast<Eigen::Index>(i);
        out(k) = v.amplitudes()(k);
    }
    return {v.space(), std::move(out)};
}

/// <a|O|b> without any sector preconditions.
inline complex_t matrix_element(const Observable &o, const StateVector &a,
                                const StateVector &b) {
    require_same_space(*o.space(), *a.space(), "matrix_element");
    require_same_space(*o.space(), *b.space(), "matrix_element");
    return a.amplitudes().dot(o.matrix() * b.amplitudes());
}

/// <v|O|v> for a normalized v. The imaginary part is roundoff for a
/// Hermitian O and is dropped.
inline double expectation(const Observable &o, const StateVector &v) {
    require_normalized(v, "expectation");
    return matrix_element(o, v, v).real();
}

/// sum_k w_k <psi_k|O|psi_k>. No cross terms between members.
inline double ensemble_average(const Observable &o, const Ensemble &e) {
    double acc = 0.0;
    for (const auto &m : e.members()) {
        acc += m.weight * expectation(o, m.state);
    }
    return acc;
}

/// trace(rho O).
inline double expectation(const Observable &o, const DensityOperator &rho) {
    require_same_space(*o.space(), *rho.space(), "expectation");
    return (rho.matrix() * o.matrix()).trace().real();
}

inline DensityOperator to_density(const Ensemble &e) {
    const auto n = static_cast<Eigen::Index>(e.space()->dim());
    cmatrix_t rho = cmatrix_t::Zero(n, n);
    for (const auto &m : e.members()) {
        const auto &a = m.state.amplitudes();
        rho += m.weight * (a * a.adjoint());
    }
    return {e.space(), std::move(rho)};
}

/// Zeroes every block of rho that couples distinct sectors.
inline DensityOperator decohere(const DensityOperator &rho) {
    const auto &space = *rho.space();
    cmatrix_t out = rho.matrix();
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            if (space.sector_of(static_cast<std::size_t>(i)) !=
                space.sector_of(static_cast<std::size_t>(j))) {
                out(i, j) = 0.0;
            }
        }
    }
    return {rho.space(), std::move(out)};
}

/// True iff g commutes with every observable and is not a multiple of the
/// identity.
inline bool is_csv(const Observable &g,
                   std::span<const Observable> observables) {
    for (const auto &o : observables) {
        require_same_space(*g.space(), *o.space(), "is_csv");
        if (max_abs(commutator(g.matrix(), o.matrix())) > tol::hermitian) {
            return false;
        }
    }
    const auto &m = g.matrix();
    const auto n = m.rows();
    const complex_t scale = n > 0 ? m.trace() / static_cast<double>(n) : 0.0;
    return max_abs(m - scale * cmatrix_t::Identity(n, n)) > tol::hermitian;
}

/// <a|O|b> for physical a, b in different sectors and a sector-compatible O.
/// Such elements vanish: no observable connects two sectors.
inline complex_t cross_sector_element(const Observable &o,
                                      const StateVector &a,
                                      const StateVector &b) {
    require(a.is_physical() && b.is_physical(),
            "cross_sector_element: states must be physical");
    require(o.sector_compatible(),
            "cross_sector_element: observable is not sector-compatible");
    const auto sa = sectors_of(a);
    const auto sb = sectors_of(b);
    require(sa.empty() || sb.empty() || *sa.begin() != *sb.begin(),
            "cross_sector_element: states share a sector");
    return matrix_element(o, a, b);
}

using SectorPhases = std::map<SectorLabel, double>;

/// Multiplies each sector component by exp(i * phase). Sectors without an
/// entry keep phase 0.
inline StateVector rephase_sectors(const StateVector &v,
                                   const SectorPhases &phases) {
    const auto &space = *v.space();
    cvector_t out = v.amplitudes();
    for (std::size_t i = 0; i < space.dim(); ++i) {
        auto it = phases.find(space.sector_of(i));
        if (it != phases.end()) {
            out(static_cast<Eigen::Index>(i)) *=
                std::exp(imag_unit * it->second);
        }
    }
    return {v.space(), std::move(out)};
}

/// max_O |<u|O|u> - <u2|O|u2>|.
inline double max_expectation_difference(const StateVector &u,
                                         const StateVector &u2,
                                         std::span<const Observable> obs) {
    double worst = 0.0;
    for (const auto &o : obs) {
        worst = std::max(worst,
                         std::abs(expectation(o, u) - expectation(o, u2)));
    }
    return worst;
}

/// True iff no sector-compatible observable in obs separates u from u2 by
/// more than tolerance.
inline bool indistinguishable(const StateVector &u, const StateVector &u2,
                              std::span<const Observable> obs,
                              double tolerance) {
    for (const auto &o : obs) {
        require(o.sector_compatible(),
                "indistinguishable: observable is not sector-compatible");
    }
    return max_expectation_difference(u, u2, obs) <= tolerance;
}

} // namespace superselect
