#include "spinpair/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinpair/thermal_state.hpp"

namespace spinpair {

namespace {

constexpr int kAllowedPairs[4][2] = {{1, 2}, {1, 3}, {2, 4}, {3, 4}};

}  // namespace

std::vector<TransitionLine> allowed_transitions(const SpinParams& p) {
    const EnergyLevels e = energy_levels(p);
    std::vector<TransitionLine> lines;
    lines.reserve(4);
    for (const auto& pair : kAllowedPairs) {
        const int a = pair[0];
        const int b = pair[1];
        TransitionLine line;
        // Orient from the lower-energy level; ties keep the pair order.
        if (e.level(a) <= e.level(b)) {
            line.from_level = a;
            line.to_level = b;
        } else {
            line.from_level = b;
            line.to_level = a;
        }
        line.frequency = std::abs(e.level(b) - e.level(a));
        lines.push_back(line);
    }
    return lines;
}

std::pair<double, double> roofing_intensity_factors(double theta) {
    const double s = std::sin(2.0 * theta);
    return {1.0 + s, 1.0 - s};
}

std::vector<TransitionLine> line_amplitudes(const Mat4& rho, const SpinParams& p,
                                            double flip_angle) {
    if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("state must be Hermitian");

    const DerivedParams d = derive_params(p);
    const EigenBasis basis = eigenbasis(p);
    std::array<double, 5> pop{};  // 1-based
    for (int i = 1; i <= 4; ++i) {
        const Vec4 v = basis.vector(i);
        pop[static_cast<std::size_t>(i)] = std::real(vdot(v, rho * v));
    }

    const double c = std::cos(d.theta);
    const double s = std::sin(d.theta);
    const double tip = std::sin(flip_angle);

    std::vector<TransitionLine> lines = allowed_transitions(p);
    for (TransitionLine& line : lines) {
        // Each allowed pair passes through exactly one of the mixed levels.
        const bool through_level2 = line.from_level == 2 || line.to_level == 2;
        const double roof = through_level2 ? c + s : c - s;
        const double inversion =
            pop[static_cast<std::size_t>(line.from_level)] - pop[static_cast<std::size_t>(line.to_level)];
        line.amplitude = tip * inversion * roof;
    }
    return lines;
}

AxisSpec axis_for_lines(std::span<const TransitionLine> lines, double linewidth, int points) {
    double f_max = 0.0;
    for (const TransitionLine& l : lines) f_max = std::max(f_max, l.frequency);
    return {0.0, f_max + 10.0 * linewidth, points};
}

SpectrumTrace synthesize_trace(std::span<const TransitionLine> lines, double linewidth,
                               const AxisSpec& axis) {
    if (!(linewidth > 0.0)) throw std::invalid_argument("linewidth must be > 0");
    if (axis.points < 2) throw std::invalid_argument("axis needs at least 2 points");
    if (!(axis.f_max > axis.f_min)) throw std::invalid_argument("axis must have f_max > f_min");

    SpectrumTrace t;
    t.linewidth = linewidth;
    t.frequencies.resize(static_cast<std::size_t>(axis.points));
    t.intensities.assign(static_cast<std::size_t>(axis.points), 0.0);

    const double w2 = linewidth * linewidth;
    for (int i = 0; i < axis.points; ++i) {
        const double f = axis.f_min + (axis.f_max - axis.f_min) * static_cast<double>(i) /
                                          static_cast<double>(axis.points - 1);
        t.frequencies[static_cast<std::size_t>(i)] = f;
        double y = 0.0;
        for (const TransitionLine& l : lines) {
            const double df = f - l.frequency;
            y += l.amplitude * w2 / (df * df + w2);
        }
        t.intensities[static_cast<std::size_t>(i)] = y;
    }
    return t;
}

int count_peaks_above(const SpectrumTrace& trace, double fraction) {
    const std::size_t n = trace.intensities.size();
    if (n < 3) return 0;
    const double top = *std::max_element(trace.intensities.begin(), trace.intensities.end());
    if (!(top > 0.0)) return 0;

    const double floor = fraction * top;
    int count = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double y = trace.intensities[i];
        if (y > trace.intensities[i - 1] && y >= trace.intensities[i + 1] && y >= floor) ++count;
    }
    return count;
}

std::vector<LabeledSpectrum> scenario_spectra(std::span<const double> thetas,
                                              const ScenarioOptions& opt) {
    if (!(opt.j_coupling > 0.0)) throw std::invalid_argument("j_coupling must be > 0");
    if (!(opt.tau > 0.0)) throw std::invalid_argument("tau must be > 0");

    struct Placement {
        const char* name;
        double offset;  // relative to the crossing, in units of J
    };
    constexpr Placement placements[3] = {
        {"below-crossing", -1.0}, {"at-crossing", 0.0}, {"above-crossing", +1.0}};

    std::vector<LabeledSpectrum> out;
    out.reserve(thetas.size() * 3);

    for (double theta : thetas) {
        if (!(theta > 0.0) || !(theta < 1.5707963267948966))
            throw std::invalid_argument("theta must lie in (0, pi/2)");
        const double c2 = std::cos(2.0 * theta);
        const double omega_delta =
            std::abs(c2) < 1e-14 ? 0.0 : opt.j_coupling * c2 / std::sin(2.0 * theta);
        const double crossing = critical_omega_sigma(opt.j_coupling, omega_delta);

        for (const Placement& pl : placements) {
            const double omega_sigma = crossing + pl.offset * opt.j_coupling;
            const SpinParams params = SpinParams::from_ratios(
                omega_sigma / opt.j_coupling, omega_delta / opt.j_coupling, opt.tau,
                opt.j_coupling);

            LabeledSpectrum ls;
            ls.scenario = pl.name;
            ls.theta = theta;
            ls.params = params;
            out.push_back(std::move(ls));
        }
    }

    // One shared axis keeps the traces directly comparable.
    std::vector<TransitionLine> all_lines;
    for (LabeledSpectrum& ls : out) {
        ls.lines = line_amplitudes(thermal_density_matrix(ls.params), ls.params, opt.flip_angle);
        all_lines.insert(all_lines.end(), ls.lines.begin(), ls.lines.end());
    }
    const AxisSpec axis = axis_for_lines(all_lines, opt.linewidth, opt.axis_points);
    for (LabeledSpectrum& ls : out) ls.trace = synthesize_trace(ls.lines, opt.linewidth, axis);
    return out;
}

}  // namespace spinpair
