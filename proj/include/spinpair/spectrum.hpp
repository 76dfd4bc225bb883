// Stick spectrum and Lorentzian line-shape synthesis for the four allowed
// single-quantum transitions.
//
// Amplitude model: a small-tip readout after thermal equilibration gives each
// line a weight
//
//     amplitude = sin(flip_angle) * (p_lower - p_upper) * roof
//
// where p are eigenstate populations and roof = cos(theta) + sin(theta) for
// the two transitions through level 2, cos(theta) - sin(theta) for the two
// through level 3.  Squaring the roof factors recovers the familiar intensity
// asymmetry 1 +- sin(2 theta) of a strongly coupled doublet, and the two
// intensity factors always sum to 2.  Lines are oriented from the lower- to
// the higher-energy level, so thermal states give nonnegative amplitudes.
#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spinpair/matrix.hpp"
#include "spinpair/spin_system.hpp"

namespace spinpair {

struct TransitionLine {
    int from_level = 0;  // lower energy, 1..4
    int to_level = 0;    // higher energy, 1..4
    double frequency = 0.0;  // |E_to - E_from|, always >= 0
    double amplitude = 0.0;
};

// The four single-spin-flip pairs (1,2), (1,3), (2,4), (3,4) with their
// frequencies; amplitudes are left at zero.
std::vector<TransitionLine> allowed_transitions(const SpinParams& p);

// Lines weighted by the eigenstate populations <phi_i| rho |phi_i>.
std::vector<TransitionLine> line_amplitudes(const Mat4& rho, const SpinParams& p,
                                            double flip_angle);

// {1 + sin(2 theta), 1 - sin(2 theta)}: squared roof factors of the
// level-2 and level-3 transitions respectively.
std::pair<double, double> roofing_intensity_factors(double theta);

struct AxisSpec {
    double f_min = 0.0;
    double f_max = 1.0;
    int points = 2000;
};

// [0, highest line frequency + 10 linewidths], which keeps every peak and its
// shoulders on the axis.
AxisSpec axis_for_lines(std::span<const TransitionLine> lines, double linewidth,
                        int points = 2000);

struct SpectrumTrace {
    std::vector<double> frequencies;
    std::vector<double> intensities;
    double linewidth = 0.0;  // Lorentzian half width at half maximum
};

// Sum of Lorentzians amp * w^2 / ((f - f0)^2 + w^2); each peak height equals
// its line amplitude up to neighboring tails.
SpectrumTrace synthesize_trace(std::span<const TransitionLine> lines, double linewidth,
                               const AxisSpec& axis);

// Strict local maxima with height >= fraction * max intensity.
int count_peaks_above(const SpectrumTrace& trace, double fraction);

struct ScenarioOptions {
    double tau = 0.01;
    double flip_angle = 5.0 * 0.017453292519943295;  // 5 degrees
    double linewidth = 0.02;
    int axis_points = 2000;
    double j_coupling = 1.0;
};

struct LabeledSpectrum {
    std::string scenario;  // below-crossing | at-crossing | above-crossing
    double theta = 0.0;    // radians
    SpinParams params;
    std::vector<TransitionLine> lines;
    SpectrumTrace trace;
};

// For each mixing angle, rebuilds omega_delta = J / tan(2 theta) and places
// omega_sigma one coupling unit below, at, and above the level crossing.
// All traces within the set share one frequency axis.
std::vector<LabeledSpectrum> scenario_spectra(std::span<const double> thetas,
                                              const ScenarioOptions& opt = {});

}  // namespace spinpair
