// One-dimensional parameter sweeps of the scalar quantifiers.
#pragma once

#include <vector>

#include "spinpair/spin_system.hpp"
#include "spinpair/witness.hpp"

namespace spinpair {

enum class SweepQuantity { Coherence, Mixedness, Witness };
enum class SweepAxis { Tau, OmegaSigma };

struct SweepSpec {
    SweepQuantity quantity = SweepQuantity::Mixedness;
    SweepAxis axis = SweepAxis::OmegaSigma;
    double min = 0.0;
    double max = 6.0;
    int points = 241;

    // Fixed values; the one matching the axis is ignored.
    double tau = 1.0;
    double omega_sigma = 2.0;
    double omega_delta = 0.0;
    double j_coupling = 1.0;
};

struct SweepRow {
    double tau = 0.0;
    double omega_sigma = 0.0;  // in units of J
    double omega_delta = 0.0;  // in units of J
    double value = 0.0;
    WitnessVerdict verdict = WitnessVerdict::NotDetected;  // witness sweeps only
};

// Evaluates the quantity across an inclusive linear grid, in parallel, with
// rows in axis order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Index of the row with the largest value (first hit on ties).
std::size_t argmax_value(const std::vector<SweepRow>& rows);

}  // namespace spinpair
