#include "spinpair/sweeps.hpp"

#include <stdexcept>

#include "spinpair/parallel.hpp"
#include "spinpair/quantifiers.hpp"
#include "spinpair/thermal_state.hpp"

namespace spinpair {

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.points < 2) throw std::invalid_argument("sweep needs at least 2 grid points");
    if (!(spec.max > spec.min)) throw std::invalid_argument("sweep range must have max > min");
    if (spec.axis == SweepAxis::Tau && !(spec.min > 0.0))
        throw std::invalid_argument("tau must be > 0 over the whole sweep");
    if (spec.axis == SweepAxis::OmegaSigma && !(spec.tau > 0.0))
        throw std::invalid_argument("tau must be > 0");
    if (!(spec.j_coupling > 0.0)) throw std::invalid_argument("j_coupling must be > 0");

    std::vector<SweepRow> rows(static_cast<std::size_t>(spec.points));
    parallel_for(rows.size(), [&](std::size_t i) {
        const double x = spec.min + (spec.max - spec.min) * static_cast<double>(i) /
                                        static_cast<double>(spec.points - 1);
        const double tau = spec.axis == SweepAxis::Tau ? x : spec.tau;
        const double omega_sigma = spec.axis == SweepAxis::OmegaSigma ? x : spec.omega_sigma;
        const SpinParams p =
            SpinParams::from_ratios(omega_sigma, spec.omega_delta, tau, spec.j_coupling);

        SweepRow& row = rows[i];
        row.tau = tau;
        row.omega_sigma = omega_sigma;
        row.omega_delta = spec.omega_delta;
        switch (spec.quantity) {
            case SweepQuantity::Coherence:
                row.value = coherence_relative_entropy(thermal_density_matrix(p));
                break;
            case SweepQuantity::Mixedness:
                row.value = mixedness_closed_form(p);
                break;
            case SweepQuantity::Witness: {
                row.value = witness_expectation(thermal_density_matrix(p));
                row.verdict = row.value < 0.0 ? WitnessVerdict::EntangledDetected
                                              : WitnessVerdict::NotDetected;
                break;
            }
        }
    });
    return rows;
}

std::size_t argmax_value(const std::vector<SweepRow>& rows) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].value > rows[best].value) best = i;
    return best;
}

}  // namespace spinpair
