// End-to-end acceptance battery.  Each numbered criterion prints exactly one
// [PASS]/[FAIL] line with the measured quantity and its tolerance; the
// process exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "spinpair/io.hpp"
#include "spinpair/quantifiers.hpp"
#include "spinpair/reconstruction.hpp"
#include "spinpair/spectrum.hpp"
#include "spinpair/sweeps.hpp"
#include "spinpair/thermal_state.hpp"
#include "spinpair/validation.hpp"
#include "spinpair/witness.hpp"

using namespace spinpair;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(bool pass, const std::string& name, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

std::string fmt(double x) { return format_number(x); }

void from_check(const CheckResult& c) {
    std::string detail = "max_error=" + fmt(c.max_error) + " tolerance=" + fmt(c.tolerance);
    if (!c.detail.empty()) detail += ", " + c.detail;
    report(c.pass, c.name, detail);
}

const TransitionLine* find_line(const std::vector<TransitionLine>& lines, int a, int b) {
    for (const TransitionLine& l : lines)
        if ((l.from_level == a && l.to_level == b) || (l.from_level == b && l.to_level == a))
            return &l;
    return nullptr;
}

double max_abs_amplitude(const std::vector<TransitionLine>& lines) {
    double m = 0.0;
    for (const TransitionLine& l : lines) m = std::max(m, std::abs(l.amplitude));
    return m;
}

void criterion_cold_mixedness_peaks() {
    SweepSpec spec;
    spec.quantity = SweepQuantity::Mixedness;
    spec.axis = SweepAxis::OmegaSigma;
    spec.min = 0.0;
    spec.max = 6.0;
    spec.points = 601;  // step 0.01
    spec.tau = 0.01;

    spec.omega_delta = 0.0;
    const auto equal_rows = run_sweep(spec);
    const SweepRow& peak0 = equal_rows[argmax_value(equal_rows)];
    const bool loc0 = std::abs(peak0.omega_sigma - 2.0) < 1e-12;
    const bool val0 = std::abs(peak0.value - 2.0 / 3.0) <= 1e-3;
    report(loc0 && val0, "cold mixedness peak for equivalent spins sits at omega_sigma/J = 2",
           "peak at " + fmt(peak0.omega_sigma) + ", value " + fmt(peak0.value) +
               ", |value - 2/3| <= 1e-3");

    spec.omega_delta = 2.5;
    const auto detuned_rows = run_sweep(spec);
    const SweepRow& peak1 = detuned_rows[argmax_value(detuned_rows)];
    const double expected = 1.0 + std::sqrt(7.25);
    const double step = 6.0 / 600.0;
    const bool loc1 = std::abs(peak1.omega_sigma - expected) <= step + 1e-12;
    report(loc1, "cold mixedness peak for detuned spins tracks the shifted crossing",
           "peak at " + fmt(peak1.omega_sigma) + ", expected " + fmt(expected) +
               " within one grid step of " + fmt(step));
}

void criterion_spectra() {
    const std::vector<double> thetas{kPi / 4.0, kPi / 6.0, kPi / 18.0};
    const auto set = scenario_spectra(thetas);
    // Layout: [theta][below, at, above].
    const auto& low45 = set[0];
    const auto& at45 = set[1];
    const auto& hi45 = set[2];
    const auto& at30 = set[4];
    const auto& hi10 = set[8];

    const double low_max = max_abs_amplitude(low45.lines);
    const double high_max = max_abs_amplitude(hi45.lines);
    report(low_max < 0.05 * high_max,
           "equivalent spins below the crossing are spectrally dark",
           "max line weight " + fmt(low_max) + " < 5% of " + fmt(high_max));

    const TransitionLine* dom = find_line(at45.lines, 2, 4);
    bool single = dom != nullptr && count_peaks_above(at45.trace, 0.10) == 1;
    if (single)
        for (const TransitionLine& l : at45.lines)
            if (&l != dom && std::abs(l.amplitude) > 0.05 * dom->amplitude) single = false;
    report(single, "equivalent spins at the crossing show one dominant line",
           std::string("peaks above 10%: ") +
               std::to_string(count_peaks_above(at45.trace, 0.10)) + ", line 2-4 weight " +
               fmt(dom != nullptr ? dom->amplitude : 0.0));

    const int peaks30 = count_peaks_above(at30.trace, 0.10);
    const TransitionLine* strong30 = find_line(at30.lines, 2, 4);
    const TransitionLine* weak30 = find_line(at30.lines, 1, 3);
    const double ratio30 =
        (strong30 != nullptr && weak30 != nullptr && strong30->amplitude > 0.0)
            ? weak30->amplitude / strong30->amplitude
            : -1.0;
    const bool ratio30_ok = std::abs(ratio30 - 0.268) <= 2e-3;
    report(peaks30 == 2 && ratio30_ok,
           "mixed spins at the crossing show a two-line roofed pattern",
           "peaks above 10%: " + std::to_string(peaks30) + ", weak/strong = " + fmt(ratio30) +
               ", expected 0.268 +- 2e-3");

    const int peaks10 = count_peaks_above(hi10.trace, 0.10);
    const TransitionLine* up10 = find_line(hi10.lines, 2, 4);
    const TransitionLine* down10 = find_line(hi10.lines, 3, 4);
    const double ratio10 = (up10 != nullptr && down10 != nullptr && up10->amplitude > 0.0)
                               ? down10->amplitude / up10->amplitude
                               : -1.0;
    const double c = std::cos(kPi / 18.0);
    const double s = std::sin(kPi / 18.0);
    const bool ratio10_ok =
        std::abs(ratio10 - 0.70) <= 2e-3 && std::abs(ratio10 - (c - s) / (c + s)) <= 1e-9;
    report(peaks10 == 2 && ratio10_ok,
           "weakly mixed spins above the crossing show both ground-state lines",
           "peaks above 10%: " + std::to_string(peaks10) + ", ratio " + fmt(ratio10) +
               ", expected (cos - sin)/(cos + sin) near 0.70");
}

bool column_prefix_ok(const PhaseDiagram& d) {
    for (std::size_t id = 0; id < d.deltas.size(); ++id) {
        bool ended = false;
        for (std::size_t it = 0; it < d.taus.size(); ++it) {
            const bool det = d.cell(static_cast<int>(id), static_cast<int>(it)).verdict ==
                             WitnessVerdict::EntangledDetected;
            if (!det) ended = true;
            if (ended && det) return false;
        }
    }
    return true;
}

int detected_cells(const PhaseDiagram& d) {
    int n = 0;
    for (const PhaseCell& c : d.cells)
        if (c.verdict == WitnessVerdict::EntangledDetected) ++n;
    return n;
}

void criterion_phase_diagram() {
    PhaseGridSpec grid;
    grid.tau_min = 0.02;
    grid.tau_max = 2.0;
    grid.n_tau = 25;
    grid.delta_min = 0.0;
    grid.delta_max = 3.0;
    grid.n_delta = 13;

    const PhaseDiagram plus2 = phase_diagram(grid, 2.0);
    const PhaseDiagram minus2 = phase_diagram(grid, -2.0);
    const PhaseDiagram plus_half = phase_diagram(grid, 0.5);
    const PhaseDiagram minus_half = phase_diagram(grid, -0.5);
    const PhaseDiagram* all[4] = {&plus2, &minus2, &plus_half, &minus_half};

    bool prefix = true;
    for (const PhaseDiagram* d : all) prefix = prefix && column_prefix_ok(*d);
    report(prefix, "witness detection forms a low-temperature prefix in every column",
           "field ratios 2, -2, 0.5, -0.5");

    double worst_boundary = 0.0;
    int boundary_points = 0;
    for (const PhaseDiagram* d : all) {
        boundary_points += static_cast<int>(d->boundary.size());
        for (const BoundaryPoint& b : d->boundary)
            worst_boundary = std::max(worst_boundary, std::abs(b.expectation));
    }
    report(boundary_points > 0 && worst_boundary < 1e-6,
           "bisected detection boundary reaches |<W>| < 1e-6",
           std::to_string(boundary_points) + " points, worst |<W>| = " + fmt(worst_boundary));

    auto subset_at_coldest = [&](const PhaseDiagram& wide, const PhaseDiagram& narrow) {
        for (std::size_t id = 0; id < narrow.deltas.size(); ++id) {
            const bool n = narrow.cell(static_cast<int>(id), 0).verdict ==
                           WitnessVerdict::EntangledDetected;
            const bool w = wide.cell(static_cast<int>(id), 0).verdict ==
                           WitnessVerdict::EntangledDetected;
            if (n && !w) return false;
        }
        return true;
    };

    const bool two_ok = detected_cells(minus2) > detected_cells(plus2) &&
                        subset_at_coldest(minus2, plus2);
    const bool half_ok = detected_cells(minus_half) > detected_cells(plus_half) &&
                         subset_at_coldest(minus_half, plus_half);
    report(two_ok && half_ok,
           "oppositely signed field ratios widen the entangled region",
           "detected cells: r=-2 " + std::to_string(detected_cells(minus2)) + " vs r=2 " +
               std::to_string(detected_cells(plus2)) + "; r=-0.5 " +
               std::to_string(detected_cells(minus_half)) + " vs r=0.5 " +
               std::to_string(detected_cells(plus_half)));
}

void criterion_dual_mixedness_output() {
    std::vector<ReconstructionRowResult> rows;
    double worst = 0.0;
    int line = 2;
    for (double tau : {0.1, 0.3, 1.0, 3.0}) {
        for (double sigma : {0.5, 1.5, 2.4, 4.0}) {
            const SpinParams p = SpinParams::from_ratios(sigma, 1.0, tau);  // theta = pi/8
            const double theta = derive_params(p).theta;
            const NmrObservables obs = forward_observables(boltzmann_populations(p), theta);
            ReconstructionRowResult r = reconstruct_row(line++, obs, theta);
            if (r.status == "ok")
                worst = std::max(worst, std::abs(r.m_observables - r.m_populations));
            rows.push_back(std::move(r));
        }
    }

    std::ostringstream csv;
    write_reconstruction_csv(csv, rows);
    const std::string text = csv.str();
    const bool columns = text.find("m_observables") != std::string::npos &&
                         text.find("m_populations") != std::string::npos;
    const bool all_ok =
        std::all_of(rows.begin(), rows.end(),
                    [](const ReconstructionRowResult& r) { return r.status == "ok"; });
    report(columns && all_ok && worst <= 1e-12,
           "batch output reports mixedness from observables and from populations",
           "max |m_obs - m_pops| = " + fmt(worst) + " over " + std::to_string(rows.size()) +
               " thermal rows, tolerance 1e-12");
}

}  // namespace

int main() {
    criterion_cold_mixedness_peaks();

    from_check(check_partition_function_vs_sum());
    from_check(check_density_matrix_vs_oracle());
    from_check(check_state_eigenvalues_vs_oracle());
    from_check(check_mixedness_vs_oracle());
    from_check(check_witness_three_forms());
    from_check(check_witness_separable_soundness());
    from_check(check_high_temperature_limits());
    from_check(check_pure_eigenstate_mixedness());
    from_check(check_singlet_reference_values());
    from_check(check_crossing_mixedness_value());
    from_check(check_reconstruction_round_trip());
    from_check(check_reconstruction_degenerate_angle());
    from_check(check_observable_vs_population_mixedness());

    criterion_spectra();
    criterion_phase_diagram();
    criterion_dual_mixedness_output();

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria satisfied\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
    return 1;
}
