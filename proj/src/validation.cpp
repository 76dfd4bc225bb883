#include "spinpair/validation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinpair/oracle.hpp"
#include "spinpair/quantifiers.hpp"
#include "spinpair/random_states.hpp"
#include "spinpair/reconstruction.hpp"
#include "spinpair/spin_system.hpp"
#include "spinpair/thermal_state.hpp"
#include "spinpair/witness.hpp"

namespace spinpair {

namespace {

// Shared (tau, omega_sigma, omega_delta) grid for every oracle comparison:
// 20 x 20 points per detuning, three detunings including a strongly
// heteronuclear one.
constexpr int kGridN = 20;
constexpr double kTauMin = 0.05;
constexpr double kTauMax = 5.0;
constexpr double kSigmaMin = 0.0;
constexpr double kSigmaMax = 6.0;
constexpr double kDeltas[3] = {0.0, 1.0, 2.5};

template <typename Fn>
double max_over_grid(Fn&& fn) {
    double worst = 0.0;
    for (double delta : kDeltas) {
        for (int i = 0; i < kGridN; ++i) {
            const double tau = kTauMin + (kTauMax - kTauMin) * i / (kGridN - 1.0);
            for (int k = 0; k < kGridN; ++k) {
                const double sigma = kSigmaMin + (kSigmaMax - kSigmaMin) * k / (kGridN - 1.0);
                const SpinParams p = SpinParams::from_ratios(sigma, delta, tau);
                worst = std::max(worst, fn(p));
            }
        }
    }
    return worst;
}

CheckResult make_result(std::string name, double max_error, double tolerance,
                        std::string detail = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.max_error = max_error;
    r.tolerance = tolerance;
    r.pass = max_error <= tolerance;
    r.detail = std::move(detail);
    return r;
}

std::array<double, 4> sorted4(std::array<double, 4> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

CheckResult check_partition_function_vs_sum() {
    const double err = max_over_grid([](const SpinParams& p) {
        const double closed = partition_function(p).value();
        const EnergyLevels e = energy_levels(p);
        const double beta = 1.0 / (p.tau * p.j_coupling);
        double direct = 0.0;
        for (double energy : e.as_array()) direct += std::exp(-beta * energy);
        return std::abs(closed - direct) / direct;
    });
    return make_result("partition-function-vs-direct-sum", err, 1e-12);
}

CheckResult check_density_matrix_vs_oracle() {
    const double err = max_over_grid([](const SpinParams& p) {
        return max_abs_diff(thermal_density_matrix(p), oracle::thermal_state_numeric(p));
    });
    return make_result("density-matrix-vs-numeric-oracle", err, 1e-9);
}

CheckResult check_state_eigenvalues_vs_oracle() {
    const double err = max_over_grid([](const SpinParams& p) {
        const auto closed = sorted4(state_eigenvalues(thermal_density_matrix(p)).as_array());
        const auto numeric = sorted4(oracle::eig_hermitian(oracle::thermal_state_numeric(p)).values);
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(closed[static_cast<std::size_t>(i)] - numeric[static_cast<std::size_t>(i)]));
        return worst;
    });
    return make_result("state-eigenvalues-vs-numeric-oracle", err, 1e-9);
}

CheckResult check_mixedness_vs_oracle() {
    const double err = max_over_grid([](const SpinParams& p) {
        const double numeric = mixedness(oracle::thermal_state_numeric(p));
        return std::abs(mixedness_closed_form(p) - numeric);
    });
    return make_result("mixedness-closed-form-vs-numeric-oracle", err, 1e-9);
}

CheckResult check_witness_three_forms() {
    StateSampler sampler(0x51a7e5ULL);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Mat4 rho = sampler.random_density();
        // The equivalence holds for every parameter set, so vary it too.
        const SpinParams p =
            SpinParams::from_ratios(0.5 + 0.005 * i, (i % 5) * 0.5, 0.1 + 0.002 * i);
        const double pauli = witness_expectation(rho);
        const double fid = 0.5 - fidelity_with_pure(rho, singlet_vector());
        const double energy = energy_witness_expectation(rho, p);
        worst = std::max({worst, std::abs(pauli - fid), std::abs(pauli - energy)});
    }
    return make_result("witness-three-form-identity", worst, 1e-12, "1000 random mixed states");
}

CheckResult check_witness_separable_soundness() {
    StateSampler sampler(0x5e9a4ab1ULL);
    double min_w = 1.0;
    for (int i = 0; i < 1000; ++i)
        min_w = std::min(min_w, witness_expectation(sampler.random_separable()));
    std::ostringstream detail;
    detail << "min <W> over separable mixtures = " << min_w;
    return make_result("witness-nonnegative-on-separable", std::max(0.0, -min_w), 1e-12,
                       detail.str());
}

CheckResult check_reconstruction_round_trip() {
    StateSampler sampler(0x9e3779b9ULL);
    const double theta = 0.39269908169872414;  // pi/8
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Populations pops = sampler.random_populations();
        const Populations back = reconstruct_populations(forward_observables(pops, theta), theta);
        for (int k = 1; k <= 4; ++k)
            worst = std::max(worst, std::abs(back.level(k) - pops.level(k)));
    }
    return make_result("reconstruction-round-trip", worst, 1e-12, "1000 population vectors");
}

CheckResult check_reconstruction_degenerate_angle() {
    const NmrObservables obs{0.1, 0.2, 0.3};
    bool threw = false;
    try {
        reconstruct_populations(obs, 0.7853981633974483);  // pi/4
    } catch (const std::domain_error&) {
        threw = true;
    }
    CheckResult r;
    r.name = "reconstruction-rejects-degenerate-angle";
    r.pass = threw;
    r.max_error = threw ? 0.0 : 1.0;
    r.tolerance = 0.0;
    r.detail = "inversion at theta = pi/4 must be refused";
    return r;
}

CheckResult check_high_temperature_limits() {
    double worst = 0.0;
    std::ostringstream detail;
    for (double delta : {0.0, 2.5}) {
        const SpinParams hot = SpinParams::from_ratios(2.0, delta, 1e9);
        const Mat4 rho = thermal_density_matrix(hot);
        worst = std::max(worst, std::abs(mixedness_closed_form(hot) - 1.0));
        worst = std::max(worst, coherence_relative_entropy(rho));

        // Approach must be one-sided along a rising tau tail.
        double prev_m = -1.0;
        double prev_r = 2.0;
        for (double tau : {10.0, 31.6, 100.0, 316.0, 1000.0, 1e4}) {
            const SpinParams p = SpinParams::from_ratios(2.0, delta, tau);
            const double m = mixedness_closed_form(p);
            const double r = coherence_relative_entropy(thermal_density_matrix(p));
            if (m + 1e-15 < prev_m) worst = std::max(worst, prev_m - m);
            if (r > prev_r + 1e-15) worst = std::max(worst, r - prev_r);
            prev_m = m;
            prev_r = r;
        }
    }
    detail << "tau -> infinity: mixedness -> 1 from below, coherence -> 0 from above";
    return make_result("high-temperature-limits", worst, 1e-9, detail.str());
}

CheckResult check_pure_eigenstate_mixedness() {
    double worst = 0.0;
    for (double delta : kDeltas) {
        for (double sigma : {0.0, 1.0, 2.0, 4.0}) {
            const SpinParams p = SpinParams::from_ratios(sigma, delta, 1.0);
            const EigenBasis basis = eigenbasis(p);
            for (int i = 1; i <= 4; ++i)
                worst = std::max(worst, std::abs(mixedness(Mat4::outer(basis.vector(i)))));
        }
    }
    return make_result("pure-eigenstate-mixedness-zero", worst, 1e-9);
}

CheckResult check_singlet_reference_values() {
    const Mat4 rho = singlet_projector();
    const SpinParams p = SpinParams::from_ratios(2.0, 0.0, 1.0);
    const PauliCorrelators c = pauli_correlators(rho);
    double worst = 0.0;
    worst = std::max(worst, std::abs(witness_expectation(rho) + 0.5));
    worst = std::max(worst, std::abs(0.5 - fidelity_with_pure(rho, singlet_vector()) + 0.5));
    worst = std::max(worst, std::abs(energy_witness_expectation(rho, p) + 0.5));
    worst = std::max(worst, std::abs(c.cxx + 1.0));
    worst = std::max(worst, std::abs(c.cyy + 1.0));
    worst = std::max(worst, std::abs(c.czz + 1.0));
    worst = std::max(worst, std::abs(concurrence_check(rho) - 1.0));
    return make_result("singlet-reference-values", worst, 1e-9,
                       "<W> = -1/2, correlators (-1,-1,-1), concurrence 1");
}

CheckResult check_crossing_mixedness_value() {
    double worst = 0.0;
    for (double delta : {0.0, 2.5}) {
        const double sigma_star = critical_omega_sigma(1.0, delta);
        const SpinParams p = SpinParams::from_ratios(sigma_star, delta, 0.01);
        worst = std::max(worst, std::abs(mixedness_closed_form(p) - 2.0 / 3.0));
        worst = std::max(worst, std::abs(mixedness(thermal_density_matrix(p)) - 2.0 / 3.0));
    }
    return make_result("crossing-mixedness-two-thirds", worst, 1e-9,
                       "balanced two-level mixture at the crossing, tau = 0.01");
}

CheckResult check_observable_vs_population_mixedness() {
    double worst = 0.0;
    double worst_vs_closed = 0.0;
    for (double delta : {1.0, 2.5}) {
        for (int i = 0; i < 15; ++i) {
            const double tau = 0.05 + i * 0.33;
            for (int k = 0; k < 15; ++k) {
                const double sigma = 0.0 + k * 0.4;
                const SpinParams p = SpinParams::from_ratios(sigma, delta, tau);
                const double theta = derive_params(p).theta;
                const Populations pops = boltzmann_populations(p);
                const NmrObservables obs = forward_observables(pops, theta);
                const double m_obs = mixedness_from_observables(obs, theta);
                worst = std::max(worst, std::abs(m_obs - mixedness_from_populations(pops)));
                worst_vs_closed =
                    std::max(worst_vs_closed, std::abs(m_obs - mixedness_closed_form(p)));
            }
        }
    }
    std::ostringstream detail;
    detail << "observable formula equals rescaled population formula; max deviation from "
              "closed-form thermal mixedness = "
           << worst_vs_closed;
    return make_result("observable-vs-population-mixedness", std::max(worst, worst_vs_closed),
                       1e-11, detail.str());
}

std::vector<CheckResult> run_validation_checks() {
    return {
        check_partition_function_vs_sum(),
        check_density_matrix_vs_oracle(),
        check_state_eigenvalues_vs_oracle(),
        check_mixedness_vs_oracle(),
        check_witness_three_forms(),
        check_witness_separable_soundness(),
        check_reconstruction_round_trip(),
        check_reconstruction_degenerate_angle(),
        check_high_temperature_limits(),
        check_pure_eigenstate_mixedness(),
        check_singlet_reference_values(),
        check_crossing_mixedness_value(),
        check_observable_vs_population_mixedness(),
    };
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace spinpair
