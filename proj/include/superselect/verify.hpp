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
 * Invariant suites behind `superselect verify` and the narrative demos behind
 * `superselect demo`.
 *
 * Every suite draws randomness from derive_seed(cfg.seed, suite name), so
 * suites are independent and may run concurrently; the merged record list
 * is sorted before it is returned.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "exchange.hpp"
#include "galilei.hpp"
#include "hatom1d.hpp"
#include "random.hpp"
#include "report.hpp"
#include "spin.hpp"
#include "state_space.hpp"

namespace superselect::verify {

using report::CheckRecord;
using report::Parameters;
using report::Recorder;

struct RunConfig {
    int nmax = 6;
    std::uint64_t seed = 0;
    report::ToleranceOverrides tolerances;
    enum class Format { text, json };
    Format format = Format::text;
};

inline const std::vector<std::string> &targets() {
    static const std::vector<std::string> t{"all",     "state-core", "spin",
                                            "exchange", "galilei",   "hatom"};
    return t;
}

inline const std::vector<std::string> &demos() {
    static const std::vector<std::string> d{"univalence", "exchange", "mass",
                                            "particle-number", "phase-freedom"};
    return d;
}

namespace detail {

/// Three sectors of dimensions 3, 2 and 1.
inline SpacePtr graded_space() {
    return Space::from_sectors({{"g1", {"a", "b", "c"}}, {"g2", {"a", "b"}}, {"g3", {"a"}}});
}

inline Parameters trials(std::size_t n) {
    return report::param("trials", static_cast<long long>(n));
}

} // namespace detail

inline std::vector<CheckRecord> run_state_core(const RunConfig &cfg) {
    Recorder rec("state-core", cfg.tolerances);
    Rng rng(derive_seed(cfg.seed, "state-core"));
    const auto space = detail::graded_space();
    const auto &sectors = space->sectors();

    {
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const auto v = random_state(space, rng);
            cvector_t sum = cvector_t::Zero(v.amplitudes().size());
            for (const auto &g : sectors) {
                sum += project_sector(v, g).amplitudes();
            }
            worst = std::max(worst, max_abs(cvector_t(sum - v.amplitudes())));
        }
        rec.at_most("direct_sum_reconstruction", detail::trials(50), worst, 0.0);
    }

    {
        // <v|O|v> for v = c1|i> + c2|j> equals the diagonal parts plus the two
        // interference terms, for a dense (not sector-compatible) O.
        double worst = 0.0;
        const auto n = static_cast<Eigen::Index>(space->dim());
        for (int t = 0; t < 50; ++t) {
            const cmatrix_t m = random_hermitian(n, rng);
            const Observable o(space, m);
            std::uniform_int_distribution<std::size_t> pick(0, space->dim() - 1);
            const auto i = pick(rng);
            auto j = pick(rng);
            while (j == i) {
                j = pick(rng);
            }
            complex_t c1 = uniform_complex(rng);
            complex_t c2 = uniform_complex(rng);
            const double s = std::sqrt(std::norm(c1) + std::norm(c2));
            c1 /= s;
            c2 /= s;
            const auto v = superpose({c1, c2}, {StateVector::basis(space, space->basis(i)),
                                                StateVector::basis(space, space->basis(j))});
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            const double diag = std::norm(c1) * m(ii, ii).real() + std::norm(c2) * m(jj, jj).real();
            const double cross = (std::conj(c1) * c2 * m(ii, jj) + std::conj(c2) * c1 * m(jj, ii)).real();
            worst = std::max(worst, std::abs(expectation(o, v) - diag - cross));
        }
        rec.at_most("interference_terms", detail::trials(50), worst, tol::theorem);
    }

    {
        double worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            const auto o = random_compatible_observable(space, rng);
            const auto ga = sectors[static_cast<std::size_t>(t) % sectors.size()];
            const auto gb = sectors[static_cast<std::size_t>(t + 1) % sectors.size()];
            const auto a = random_sector_state(space, ga, rng);
            const auto b = random_sector_state(space, gb, rng);
            worst = std::max(worst, std::abs(cross_sector_element(o, a, b)));
        }
        rec.at_most("no_transition", detail::trials(200), worst, tol::theorem);
    }

    {
        double worst_diff = 0.0;
        double min_best_distance = std::numeric_limits<double>::infinity();
        for (int t = 0; t < 50; ++t) {
            const auto v = random_state(space, rng);
            const auto obs = random_compatible_observables(space, 50, rng);
            const auto phases = random_phases(*space, rng);
            const auto w = rephase_sectors(v, phases);
            worst_diff = std::max(worst_diff, max_expectation_difference(v, w, obs));
            // A phase of pi on the heaviest sector moves the vector by twice
            // that sector's norm.
            double best = distance(v, w);
            for (const auto &g : sectors) {
                best = std::max(best, distance(v, rephase_sectors(v, {{g, pi}})));
            }
            min_best_distance = std::min(min_best_distance, best);
        }
        rec.at_most("phase_freedom_expectations", detail::trials(50), worst_diff,
                    tol::theorem);
        rec.above("phase_freedom_distinct_vector", detail::trials(50),
                  min_best_distance, 0.1);
    }

    {
        double worst = 0.0;
        double worst_trace = 0.0;
        for (int t = 0; t < 50; ++t) {
            const auto rho = random_density(space, rng);
            const auto dec = decohere(rho);
            worst_trace = std::max(worst_trace, std::abs(dec.trace() - 1.0));
            for (int k = 0; k < 20; ++k) {
                const auto o = random_compatible_observable(space, rng);
                worst = std::max(worst, std::abs(expectation(o, rho) - expectation(o, dec)));
            }
        }
        rec.at_most("decoherence_equivalence", detail::trials(1000), worst, tol::theorem);
        rec.at_most("decoherence_trace", detail::trials(50), worst_trace, tol::theorem);
    }

    {
        // A mixture of |+>, |->: exactly the weighted diagonal.
        double worst = 0.0;
        const auto plus = spin::make_spin_state(spin::Direction::plus_z);
        const auto minus = spin::make_spin_state(spin::Direction::minus_z);
        for (int t = 0; t < 50; ++t) {
            const cmatrix_t m = random_hermitian(2, rng);
            const Observable o(spin::spin_half_space(), m);
            const double wp = uniform(rng, 0.0, 1.0);
            const Ensemble e({{wp, plus}, {1.0 - wp, minus}});
            const double expected = wp * m(0, 0).real() + (1.0 - wp) * m(1, 1).real();
            worst = std::max(worst, std::abs(ensemble_average(o, e) - expected));
        }
        rec.at_most("ensemble_no_cross_terms", detail::trials(50), worst, 0.0);
    }

    {
        double worst = 0.0;
        const auto n = static_cast<Eigen::Index>(space->dim());
        for (int t = 0; t < 50; ++t) {
            const double w = uniform(rng, 0.0, 1.0);
            const Ensemble e({{w, random_state(space, rng)}, {1.0 - w, random_state(space, rng)}});
            const Observable o(space, random_hermitian(n, rng));
            worst = std::max(worst, std::abs(ensemble_average(o, e) - expectation(o, to_density(e))));
        }
        rec.at_most("density_matches_ensemble", detail::trials(50), worst, tol::theorem);
    }

    {
        // Sector parity commutes with every compatible observable; the
        // identity and sigma_x (against sigma_z) are not superselection
        // variables.
        cmatrix_t parity = cmatrix_t::Zero(static_cast<Eigen::Index>(space->dim()),
                                           static_cast<Eigen::Index>(space->dim()));
        for (std::size_t i = 0; i < space->dim(); ++i) {
            parity(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
                space->sector_of(i) == sectors.front() ? 1.0 : -1.0;
        }
        const auto obs = random_compatible_observables(space, 20, rng);
        const std::array<Observable, 1> sz{spin::sigma_z()};
        int wrong = 0;
        wrong += is_csv(Observable(space, parity), obs) ? 0 : 1;
        wrong += is_csv(Observable::identity(space), obs) ? 1 : 0;
        wrong += is_csv(spin::sigma_x(), sz) ? 1 : 0;
        rec.at_most("csv_classification", {}, wrong, 0.0);
    }
    return rec.take();
}

inline std::vector<CheckRecord> run_spin(const RunConfig &cfg) {
    Recorder rec("spin", cfg.tolerances);
    Rng rng(derive_seed(cfg.seed, "spin"));
    using spin::SpinSpecies;
    // Sectors for spins 0, 1/2, 1, 3/2, two internal states each.
    const auto space = Space::from_sectors({{"s0", {"a", "b"}},
                                    {"s1/2", {"a", "b"}},
                                    {"s1", {"a", "b"}},
                                    {"s3/2", {"a", "b"}}});
    const spin::SpeciesMap species{{"s0", SpinSpecies(0)},
                                   {"s1/2", SpinSpecies(1)},
                                   {"s1", SpinSpecies(2)},
                                   {"s3/2", SpinSpecies(3)}};

    double involution = 0.0;
    double commute = 0.0;
    for (int t = 0; t < 50; ++t) {
        const auto v = random_state(space, rng);
        const auto r = spin::rotate_2pi(v, species);
        involution = std::max(involution, distance(spin::rotate_2pi(r, species), v));
        for (const auto &g : space->sectors()) {
            commute = std::max(commute, distance(spin::rotate_2pi(project_sector(v, g), species),
                                                 project_sector(r, g)));
        }
    }
    rec.at_most("rotate_2pi_involution", detail::trials(50), involution, 0.0);
    rec.at_most("rotate_2pi_commutes_with_projection", detail::trials(50), commute, 0.0);

    double single = 0.0;
    for (int t = 0; t < 50; ++t) {
        const auto &g = space->sectors()[static_cast<std::size_t>(t) % space->sectors().size()];
        const auto v = random_sector_state(space, g, rng);
        const auto obs = random_compatible_observables(space, 50, rng);
        single = std::max(single, max_expectation_difference(v, spin::rotate_2pi(v, species), obs));
    }
    rec.at_most("single_sector_indistinguishable", detail::trials(50), single, tol::theorem);

    double min_distance = std::numeric_limits<double>::infinity();
    double two_sector_diff = 0.0;
    const auto &pe = spin::photon_electron_space();
    for (int t = 0; t < 50; ++t) {
        // |a_e| drawn from [0.1, sqrt(0.99)] so both magnitudes are >= 0.1
        const double ae = uniform(rng, 0.1, std::sqrt(0.99));
        const double ap = std::sqrt(1.0 - ae * ae);
        const auto v = superpose({ap * std::exp(imag_unit * uniform(rng, -pi, pi)),
                                  ae * std::exp(imag_unit * uniform(rng, -pi, pi))},
                                 {StateVector::basis(pe, spin::photon),
                                  StateVector::basis(pe, spin::electron)});
        const auto r = spin::rotate_2pi(v, spin::photon_electron_species());
        const auto obs = random_compatible_observables(pe, 50, rng);
        min_distance = std::min(min_distance, distance(v, r));
        two_sector_diff = std::max(two_sector_diff, max_expectation_difference(v, r, obs));
    }
    rec.at_least("two_sector_distance", detail::trials(50), min_distance, 0.2);
    rec.at_most("two_sector_expectations", detail::trials(50), two_sector_diff, tol::theorem);

    const double h = 1.0 / std::sqrt(2.0);
    const auto u = spin::univalence_report(h, h, cfg.seed, 50);
    rec.at_most("univalence_distance", {{"a_e", "1/sqrt2"}, {"a_p", "1/sqrt2"}},
                std::abs(u.distance - std::sqrt(2.0)), tol::theorem);
    rec.at_most("univalence_expectation_diff", {{"a_e", "1/sqrt2"}, {"a_p", "1/sqrt2"}},
                u.max_expectation_diff, tol::theorem);
    return rec.take();
}

inline std::vector<CheckRecord> run_exchange(const RunConfig &cfg) {
    Recorder rec("exchange", cfg.tolerances);
    Rng rng(derive_seed(cfg.seed, "exchange"));
    using namespace exchange;
    for (int d = 2; d <= 4; ++d) {
        const auto p = report::param("d", d);
        const cmatrix_t sw = swap_matrix(d);
        Eigen::SelfAdjointEigenSolver<cmatrix_t> es(sw, Eigen::EigenvaluesOnly);
        double spectral = 0.0;
        int plus = 0;
        int minus = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double l = es.eigenvalues()(i);
            spectral = std::max(spectral, std::min(std::abs(l - 1.0), std::abs(l + 1.0)));
            (l > 0 ? plus : minus) += 1;
        }
        rec.at_most("swap_spectrum", p, spectral, tol::theorem);
        rec.at_most("grading_dimensions", p,
                    std::abs(plus - d * (d + 1) / 2) + std::abs(minus - d * (d - 1) / 2), 0.0);

        const auto n = static_cast<Eigen::Index>(d) * d;
        const cmatrix_t id = cmatrix_t::Identity(n, n);
        const cmatrix_t pp = (id + sw) / 2.0;
        const cmatrix_t pm = (id - sw) / 2.0;
        const double algebra = std::max({max_abs(cmatrix_t(pp * pm)), max_abs(cmatrix_t(pp * pp - pp)),
                                         max_abs(cmatrix_t(pm * pm - pm)), max_abs(cmatrix_t(pp + pm - id))});
        rec.at_most("projector_algebra", p, algebra, tol::theorem);

        double cross = 0.0;
        for (int t = 0; t < 100; ++t) {
            const auto o = random_exchange_observable(rng(), d);
            const auto sym = random_exchange_state(d, +1, rng);
            const auto anti = random_exchange_state(d, -1, rng);
            cross = std::max(cross, std::abs(exchange_cross_element(o, sym, anti)));
        }
        rec.at_most("cross_element", {{"d", std::to_string(d)}, {"trials", "100"}}, cross,
                    tol::theorem);
    }

    const double h = 1.0 / std::sqrt(2.0);
    const auto sym = random_exchange_state(3, +1, rng);
    const auto anti = random_exchange_state(3, -1, rng);
    const auto flip = exchange_superposition_flip(h, h, sym, anti);
    rec.at_most("flip_distance", {{"a_minus", "1/sqrt2"}, {"d", "3"}},
                std::abs(flip.distance - std::sqrt(2.0)), tol::theorem);
    return rec.take();
}

inline std::vector<CheckRecord> run_galilei(const RunConfig &cfg) {
    Recorder rec("galilei", cfg.tolerances);
    Rng rng(derive_seed(cfg.seed, "galilei"));
    using namespace galilei;
    auto random_params = [&rng] {
        return GalileiParams({uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)},
                             {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)},
                             uniform(rng, 0, 1));
    };
    auto normalized = [](std::vector<MassLabeledState::Component> c) {
        double s = 0.0;
        for (const auto &x : c) {
            s += std::norm(x.amplitude);
        }
        for (auto &x : c) {
            x.amplitude /= std::sqrt(s);
        }
        return MassLabeledState(std::move(c));
    };

    {
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            std::vector<MassLabeledState::Component> c;
            for (int k = 0; k < 4; ++k) {
                c.push_back({1.0 + k, uniform_complex(rng), SectorLabel("m" + std::to_string(k))});
            }
            const auto s = normalized(std::move(c));
            worst = std::max(worst, std::abs(apply_ui(s, random_params()).norm() - s.norm()));
        }
        rec.at_most("unitarity", detail::trials(50), worst, tol::theorem);
    }

    {
        // Definite mass, three internal states: U_I is a global phase.
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const double m = uniform(rng, 0.5, 3.0);
            std::vector<MassLabeledState::Component> c;
            for (int k = 0; k < 3; ++k) {
                c.push_back({m, uniform_complex(rng), SectorLabel("m")});
            }
            const auto s = normalized(std::move(c));
            const auto space = s.space();
            const auto obs = random_compatible_observables(space, 50, rng);
            worst = std::max(worst, max_expectation_difference(
                                        s.to_state_vector(space),
                                        apply_ui(s, random_params()).to_state_vector(space), obs));
        }
        rec.at_most("mass_sector_safety", detail::trials(50), worst, tol::theorem);
    }

    {
        // (m1 - m2) v.r = pi with both weights >= 0.1.
        double min_distance = std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const double m1 = uniform(rng, 1.5, 4.0);
            const double m2 = uniform(rng, 0.2, 1.4);
            const double w1 = uniform(rng, 0.1, 0.9);
            const std::vector<MassLabeledState::Component> c{
                {m1, std::sqrt(w1) * std::exp(imag_unit * uniform(rng, -pi, pi)), SectorLabel("m1")},
                {m1, 0.0, SectorLabel("m1")},
                {m2, std::sqrt(1.0 - w1) * std::exp(imag_unit * uniform(rng, -pi, pi)), SectorLabel("m2")},
                {m2, 0.0, SectorLabel("m2")}};
            const MassLabeledState s(c);
            const GalileiParams p({1.0, 0.0, 0.0}, {pi / (m1 - m2), 0.0, 0.0});
            const auto space = s.space();
            const auto a = s.to_state_vector(space);
            const auto b = apply_ui(s, p).to_state_vector(space);
            min_distance = std::min(min_distance, distance(a, b));
            worst = std::max(worst, max_expectation_difference(
                                        a, b, random_compatible_observables(space, 50, rng)));
        }
        rec.at_least("mass_rule_distance", detail::trials(50), min_distance, 0.5);
        rec.at_most("mass_rule_expectations", detail::trials(50), worst, tol::theorem);
    }

    {
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            std::vector<MassLabeledState::Component> c;
            for (int k = 0; k < 3; ++k) {
                c.push_back({0.5 + k, uniform_complex(rng), SectorLabel("m" + std::to_string(k))});
            }
            const auto s = normalized(std::move(c));
            const auto p1 = random_params();
            const auto p2 = random_params();
            const auto twice = apply_ui(apply_ui(s, p1), p2);
            for (std::size_t k = 0; k < s.components().size(); ++k) {
                const auto &ck = s.components()[k];
                const complex_t expected =
                    ck.amplitude * std::exp(imag_unit * (ck.mass * (p1.v_dot_r() + p2.v_dot_r())));
                worst = std::max(worst, std::abs(twice.components()[k].amplitude - expected));
            }
        }
        rec.at_most("composition", detail::trials(50), worst, tol::theorem);
    }

    {
        const double h = 1.0 / std::sqrt(2.0);
        const auto s = MassLabeledState::from_masses({{2.0, h}, {1.0, h}});
        rec.at_most("ui_overlap", {{"phase", "pi"}},
                    ui_overlap(s, GalileiParams({1.0, 0.0, 0.0}, {pi, 0.0, 0.0})), tol::theorem);
        rec.at_most("ui_overlap", {{"phase", "2pi"}},
                    std::abs(ui_overlap(s, GalileiParams({1.0, 0.0, 0.0}, {2.0 * pi, 0.0, 0.0})) - 1.0),
                    tol::theorem);
    }

    {
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const int n = std::uniform_int_distribution<int>(1, 20)(rng);
            const double m = uniform(rng, 0.1, 5.0);
            const auto p = random_params();
            worst = std::max(worst, std::abs(particle_number_phase(n, m, p) - ui_phase(n * m, p)));
        }
        rec.at_most("particle_number_consistency", detail::trials(50), worst, tol::theorem);
    }
    return rec.take();
}

inline std::vector<CheckRecord> run_hatom(const RunConfig &cfg) {
    Recorder rec("hatom", cfg.tolerances);
    Rng rng(derive_seed(cfg.seed, "hatom"));
    using namespace hatom1d;
    const int nmax = cfg.nmax;
    const std::array<Side, 2> sides{Side::right, Side::left};

    for (int n = 1; n <= nmax; ++n) {
        const auto p = report::param("n", n);
        rec.at_most("boundary", p,
                    std::abs(psi(n, Side::right, 0.0)) + std::abs(psi(n, Side::left, 0.0)), 0.0);

        double norm_err = 0.0;
        double orth = 0.0;
        for (auto side : sides) {
            norm_err = std::max(norm_err, std::abs(overlap(n, n, side) - 1.0));
            for (int m = 1; m <= nmax; ++m) {
                if (m != n) {
                    orth = std::max(orth, std::abs(overlap(n, m, side)));
                }
            }
        }
        rec.at_most("normalization", p, norm_err, 1e-8);
        if (nmax > 1) {
            rec.at_most("orthogonality", p, orth, 1e-8);
        }

        double res = 0.0;
        for (int i = 0; i <= 500; ++i) {
            const double x = singularity_floor + (50.0 - singularity_floor) * i / 500.0;
            for (auto side : sides) {
                res = std::max(res, residual(n, x, side));
            }
        }
        rec.at_most("residual", p, res, 1e-5);

        const auto scfg = solver_config_for(n);
        const double e = solve_halfline(scfg, n);
        rec.at_most("spectrum", p, std::abs(e - energy(n)), 1e-6);
        auto fine = scfg;
        fine.grid_points *= 2;
        rec.at_most("spectrum_grid_convergence", p, std::abs(solve_halfline(fine, n) - e), 1e-7);

        rec.at_most("wronskian", p, max_abs_wronskian(n), 1e-10);

        const auto [even, odd] = parity_states(n);
        double sym = 0.0;
        for (double x : symmetric_grid(400, singularity_floor, 20.0)) {
            sym = std::max({sym, std::abs(even(-x) - even(x)), std::abs(odd(-x) + odd(x))});
        }
        rec.at_most("parity_symmetry", p, sym, 1e-12);
        rec.at_most("parity_norm", p,
                    std::max(std::abs(norm_squared(even) - 1.0), std::abs(norm_squared(odd) - 1.0)),
                    1e-8);
        rec.at_most("cross_side_overlap", p,
                    std::abs(overlap(Wavefunction1D{n, Side::right}, Wavefunction1D{n, Side::left})),
                    0.0);
    }

    {
        // (H - E)(a psi_1 + b psi_2) = a (E_1 - E) psi_1 + b (E_2 - E) psi_2
        // for the discretized H: superposition survives the dynamics.
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            const double a = uniform(rng, -1, 1);
            const double b = uniform(rng, -1, 1);
            const double e = uniform(rng, -0.5, 0.0);
            const auto side = t % 2 == 0 ? Side::right : Side::left;
            const Wavefunction1D w1{1 + t % 3, side};
            const Wavefunction1D w2{2 + t % 4, side};
            auto combo = [&](double x) { return a * w1(x) + b * w2(x); };
            for (int i = 0; i <= 100; ++i) {
                const double r = 0.01 + 30.0 * i / 100.0;
                const double x = side == Side::right ? r : -r;
                const double lhs = apply_hamiltonian(combo, x) - e * combo(x);
                const double rhs = a * (energy(w1.n) - e) * w1(x) + b * (energy(w2.n) - e) * w2(x);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        rec.at_most("superposition_linearity", detail::trials(20), worst, 1e-5);
    }

    {
        const int nb = std::min(nmax, 3);
        const auto space = side_space(nb);
        std::vector<Observable> obs;
        obs.push_back(position_observable(space, [](double x) { return x; }));
        obs.push_back(position_observable(space, [](double x) { return x * x; }));
        obs.push_back(position_observable(space, [](double x) { return std::abs(x * x * x); }));
        double cross = 0.0;
        for (const auto &o : obs) {
            cross = std::max(cross, max_abs(cmatrix_t(o.matrix() - block_restrict(*space, o.matrix()))));
        }
        rec.at_most("sector_bridge_position_observables", report::param("nmax", nb), cross, 0.0);

        for (int k = 0; k < 20; ++k) {
            obs.push_back(random_compatible_observable(space, rng));
        }
        double worst = 0.0;
        for (int n = 1; n <= nb; ++n) {
            const double h = 1.0 / std::sqrt(2.0);
            const auto u = superpose({h, h}, {StateVector::basis(space, basis_id(n, Side::right)),
                                              StateVector::basis(space, basis_id(n, Side::left))});
            for (int t = 0; t < 10; ++t) {
                const auto u2 = rephase_sectors(u, {{left_sector, uniform(rng, -pi, pi)}});
                worst = std::max(worst, max_expectation_difference(u, u2, obs));
            }
        }
        rec.at_most("sector_bridge_relative_phase", report::param("nmax", nb), worst, tol::theorem);
    }
    return rec.take();
}

/// Runs the named target's suites concurrently; returns sorted records.
/// Returns nullopt for an unknown target.
inline std::optional<std::vector<CheckRecord>> run_verify(const std::string &target,
                                                          const RunConfig &cfg) {
    using Suite = std::vector<CheckRecord> (*)(const RunConfig &);
    const std::vector<std::pair<std::string, Suite>> suites{{"state-core", run_state_core},
                                                            {"spin", run_spin},
                                                            {"exchange", run_exchange},
                                                            {"galilei", run_galilei},
                                                            {"hatom", run_hatom}};
    require(cfg.nmax >= 1, "run_verify: nmax must be at least 1");
    std::vector<std::future<std::vector<CheckRecord>>> jobs;
    for (const auto &[name, fn] : suites) {
        if (target == "all" || target == name) {
            jobs.push_back(std::async(std::launch::async, fn, std::cref(cfg)));
        }
    }
    if (jobs.empty()) {
        return std::nullopt;
    }
    std::vector<CheckRecord> out;
    for (auto &j : jobs) {
        auto part = j.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    report::sort_records(out);
    return out;
}

using DemoLines = std::vector<std::pair<std::string, std::string>>;

namespace detail {

inline std::string num(double x) { return report::format_number(x); }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace detail

/// Narrative quantities for one demo. Returns nullopt for an unknown name.
inline std::optional<DemoLines> run_demo(const std::string &name, std::uint64_t seed) {
    using detail::num;
    const double h = 1.0 / std::sqrt(2.0);
    DemoLines out;
    if (name == "univalence") {
        const auto r = spin::univalence_report(h, h, seed, 50);
        out = {{"state", "(|photon> + |electron>)/sqrt2"},
               {"distance", num(r.distance)},
               {"max_expectation_diff", num(r.max_expectation_diff)},
               {"global_phase_only", detail::yes_no(r.global_phase_only)},
               {"verdict", spin::to_string(r.verdict)}};
    } else if (name == "exchange") {
        Rng rng(derive_seed(seed, "demo-exchange"));
        const auto sym = exchange::random_exchange_state(3, +1, rng);
        const auto anti = exchange::random_exchange_state(3, -1, rng);
        const auto flip = exchange::exchange_superposition_flip(h, h, sym, anti);
        double cross = 0.0;
        for (int t = 0; t < 100; ++t) {
            cross = std::max(cross, std::abs(exchange::exchange_cross_element(
                                        exchange::random_exchange_observable(rng(), 3), sym, anti)));
        }
        out = {{"state", "(|sym> + |anti>)/sqrt2, d=3"},
               {"distance", num(flip.distance)},
               {"max_cross_element", num(cross)},
               {"verdict", flip.distance > spin::distinct_threshold && cross <= tol::theorem
                               ? "forbidden-as-coherent"
                               : "inconclusive"}};
    } else if (name == "mass") {
        const auto s = galilei::MassLabeledState::from_masses({{2.0, h}, {1.0, h}});
        const galilei::GalileiParams p({1.0, 0.0, 0.0}, {pi, 0.0, 0.0});
        const auto space = s.space();
        Rng rng(derive_seed(seed, "demo-mass"));
        const auto a = s.to_state_vector(space);
        const auto b = galilei::apply_ui(s, p).to_state_vector(space);
        const double diff =
            max_expectation_difference(a, b, random_compatible_observables(space, 50, rng));
        const double d = distance(a, b);
        out = {{"state", "(|m=2> + |m=1>)/sqrt2"},
               {"phase_difference", "(m1-m2) v.r = pi"},
               {"ui_overlap", num(galilei::ui_overlap(s, p))},
               {"distance", num(d)},
               {"max_expectation_diff", num(diff)},
               {"verdict", d > spin::distinct_threshold && diff <= tol::theorem
                               ? "forbidden-as-coherent"
                               : "inconclusive"}};
    } else if (name == "particle-number") {
        const galilei::GalileiParams p({1.0, 0.0, 0.0}, {pi / 3.0, 0.0, 0.0});
        const auto s = galilei::MassLabeledState::from_masses({{3.0, h}, {11.0, h}});
        const auto p3 = galilei::particle_number_phase(3, 1.0, p);
        const auto p11 = galilei::particle_number_phase(11, 1.0, p);
        out = {{"state", "(|n=3> + |n=11>)/sqrt2, m=1, v.r=pi/3"},
               {"phase_n3", num(std::arg(p3))},
               {"phase_n11", num(std::arg(p11))},
               {"relative_phase", num(std::arg(p11 / p3))},
               {"ui_overlap", num(galilei::ui_overlap(s, p))},
               {"distance", num(distance(s.to_state_vector(), galilei::apply_ui(s, p).to_state_vector()))}};
    } else if (name == "phase-freedom") {
        Rng rng(derive_seed(seed, "demo-phase-freedom"));
        const auto space = detail::graded_space();
        const auto v = random_state(space, rng);
        const auto phases = random_phases(*space, rng);
        const auto w = rephase_sectors(v, phases);
        const auto obs = random_compatible_observables(space, 50, rng);
        out = {{"sectors", "g1(3) g2(2) g3(1)"},
               {"phase_g1", num(phases.at("g1"))},
               {"phase_g2", num(phases.at("g2"))},
               {"phase_g3", num(phases.at("g3"))},
               {"distance", num(distance(v, w))},
               {"max_expectation_diff", num(max_expectation_difference(v, w, obs))},
               {"indistinguishable", detail::yes_no(indistinguishable(v, w, obs, tol::theorem))}};
    } else {
        return std::nullopt;
    }
    return out;
}

} // namespace superselect::verify
