#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spinpair/spectrum.hpp"
#include "spinpair/thermal_state.hpp"

using namespace spinpair;

namespace {

constexpr double kPi = std::numbers::pi;

SpinParams ratios(double sigma, double delta, double tau) {
    return SpinParams::from_ratios(sigma, delta, tau);
}

const TransitionLine& line_between(const std::vector<TransitionLine>& lines, int a, int b) {
    for (const TransitionLine& l : lines)
        if ((l.from_level == a && l.to_level == b) || (l.from_level == b && l.to_level == a))
            return l;
    throw std::logic_error("no such transition");
}

double max_amplitude(const std::vector<TransitionLine>& lines) {
    double m = 0.0;
    for (const TransitionLine& l : lines) m = std::max(m, std::abs(l.amplitude));
    return m;
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("allowed transition frequencies and orientation") {
    const SpinParams p = ratios(3.0, 1.0, 1.0);
    const double d = std::sqrt(2.0);
    const auto lines = allowed_transitions(p);
    REQUIRE(lines.size() == 4);

    CHECK(line_between(lines, 1, 2).frequency ==
          doctest::Approx((3.0 - d + 1.0) / 2.0).epsilon(1e-14));
    CHECK(line_between(lines, 1, 3).frequency ==
          doctest::Approx((3.0 + d + 1.0) / 2.0).epsilon(1e-14));
    CHECK(line_between(lines, 2, 4).frequency ==
          doctest::Approx((3.0 + d - 1.0) / 2.0).epsilon(1e-14));
    CHECK(line_between(lines, 3, 4).frequency ==
          doctest::Approx((3.0 - d - 1.0) / 2.0).epsilon(1e-14));

    // Level 1 is the top of the ladder here and level 4 the bottom.
    CHECK(line_between(lines, 1, 2).to_level == 1);
    CHECK(line_between(lines, 2, 4).from_level == 4);
    CHECK(line_between(lines, 3, 4).from_level == 4);
}

TEST_CASE("deep shielding flips the outer level order") {
    // With omega_sigma = 0 and a large detuning, D > J makes E2 the top level.
    const auto lines = allowed_transitions(ratios(0.0, 2.5, 1.0));
    CHECK(line_between(lines, 1, 2).from_level == 1);
    CHECK(line_between(lines, 1, 2).to_level == 2);
}

TEST_CASE("roofing intensity factors") {
    for (double theta : {0.1, kPi / 6.0, kPi / 4.0, 1.2}) {
        const auto [strong, weak] = roofing_intensity_factors(theta);
        CHECK(strong + weak == doctest::Approx(2.0).epsilon(1e-14));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        CHECK(strong == doctest::Approx((c + s) * (c + s)).epsilon(1e-13));
        CHECK(weak == doctest::Approx((c - s) * (c - s)).epsilon(1e-13));
    }
}

TEST_CASE("thermal states give nonnegative line amplitudes") {
    for (double tau : {0.05, 0.5, 3.0}) {
        for (double sigma : {0.5, 2.0, 4.0}) {
            const SpinParams p = ratios(sigma, 1.0, tau);
            const auto lines =
                line_amplitudes(thermal_density_matrix(p), p, 5.0 * kPi / 180.0);
            for (const TransitionLine& l : lines) CHECK(l.amplitude >= -1e-15);
        }
    }
}

TEST_CASE("amplitude model against hand-computed weights") {
    // At the crossing for theta = 30 deg the two cold lines share the same
    // population inversion of one half, so their amplitude ratio is exactly
    // the roof ratio.
    const double theta = kPi / 6.0;
    const double delta = std::cos(2.0 * theta) / std::sin(2.0 * theta);
    const double sigma = critical_omega_sigma(1.0, delta);
    const SpinParams p = ratios(sigma, delta, 0.01);
    const double flip = 5.0 * kPi / 180.0;
    const auto lines = line_amplitudes(thermal_density_matrix(p), p, flip);

    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const TransitionLine& strong = line_between(lines, 2, 4);
    const TransitionLine& weak = line_between(lines, 1, 3);
    CHECK(strong.amplitude ==
          doctest::Approx(std::sin(flip) * 0.5 * (c + s)).epsilon(1e-12));
    CHECK(weak.amplitude ==
          doctest::Approx(std::sin(flip) * 0.5 * (c - s)).epsilon(1e-12));
    CHECK(weak.amplitude / strong.amplitude ==
          doctest::Approx((c - s) / (c + s)).epsilon(1e-12));
}

TEST_CASE("level-3 lines vanish for equivalent spins") {
    const SpinParams p = ratios(1.0, 0.0, 0.01);
    const auto lines = line_amplitudes(thermal_density_matrix(p), p, 5.0 * kPi / 180.0);
    CHECK(std::abs(line_between(lines, 1, 3).amplitude) < 1e-15);
    CHECK(std::abs(line_between(lines, 3, 4).amplitude) < 1e-15);
}

TEST_CASE("axis covers every line with a ten-linewidth margin") {
    std::vector<TransitionLine> lines(2);
    lines[0].frequency = 1.0;
    lines[1].frequency = 2.5;
    const AxisSpec axis = axis_for_lines(lines, 0.02);
    CHECK(axis.f_min == 0.0);
    CHECK(axis.f_max == doctest::Approx(2.7).epsilon(1e-14));
    CHECK(axis.points == 2000);
}

TEST_CASE("Lorentzian synthesis hits the height and half-maximum exactly") {
    TransitionLine l;
    l.frequency = 1.0;
    l.amplitude = 1.0;
    const std::vector<TransitionLine> lines{l};
    const AxisSpec axis{0.0, 2.0, 101};  // grid step 0.02 puts f0 and f0 +- w on nodes
    const SpectrumTrace t = synthesize_trace(lines, 0.02, axis);
    REQUIRE(t.frequencies.size() == 101);
    CHECK(t.frequencies[50] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(t.intensities[50] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t.intensities[51] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(t.intensities[49] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("synthesis rejects degenerate inputs") {
    const std::vector<TransitionLine> none;
    CHECK_THROWS_AS(synthesize_trace(none, 0.0, AxisSpec{0.0, 1.0, 10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(synthesize_trace(none, 0.02, AxisSpec{0.0, 1.0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(synthesize_trace(none, 0.02, AxisSpec{1.0, 1.0, 10}),
                    std::invalid_argument);
}

TEST_CASE("peak counting at a relative threshold") {
    TransitionLine big;
    big.frequency = 1.0;
    big.amplitude = 1.0;
    TransitionLine small;
    small.frequency = 3.0;
    small.amplitude = 0.2;
    const std::vector<TransitionLine> lines{big, small};
    const SpectrumTrace t = synthesize_trace(lines, 0.02, AxisSpec{0.0, 4.0, 801});
    CHECK(count_peaks_above(t, 0.10) == 2);
    CHECK(count_peaks_above(t, 0.30) == 1);

    SpectrumTrace flat;
    flat.frequencies = {0.0, 0.5, 1.0};
    flat.intensities = {0.0, 0.0, 0.0};
    CHECK(count_peaks_above(flat, 0.1) == 0);
}

TEST_CASE("scenario set layout") {
    const std::vector<double> thetas{kPi / 4.0, kPi / 6.0};
    const auto set = scenario_spectra(thetas);
    REQUIRE(set.size() == 6);
    CHECK(set[0].scenario == "below-crossing");
    CHECK(set[1].scenario == "at-crossing");
    CHECK(set[2].scenario == "above-crossing");
    CHECK(set[3].scenario == "below-crossing");
    CHECK(set[0].theta == doctest::Approx(kPi / 4.0));
    CHECK(set[3].theta == doctest::Approx(kPi / 6.0));

    // Equivalent spins for theta = pi/4, and all traces share one axis.
    CHECK(set[0].params.omega1 == set[0].params.omega2);
    for (const auto& ls : set) {
        CHECK(ls.trace.frequencies.front() == set[0].trace.frequencies.front());
        CHECK(ls.trace.frequencies.back() == set[0].trace.frequencies.back());
        CHECK(ls.trace.frequencies.size() == 2000);
    }
}

TEST_CASE("cold scenarios reproduce the textbook line patterns") {
    const std::vector<double> thetas{kPi / 4.0, kPi / 6.0, kPi / 18.0};
    const auto set = scenario_spectra(thetas);
    REQUIRE(set.size() == 9);
    const double flip = 5.0 * kPi / 180.0;

    // theta = 45 deg below the crossing: the entangled ground level is dark.
    CHECK(max_amplitude(set[0].lines) < 1e-15);

    // theta = 45 deg at the crossing: one line, through level 2, at D - 0 = J.
    const auto& at45 = set[1];
    const TransitionLine& dom = line_between(at45.lines, 2, 4);
    CHECK(dom.frequency == doctest::Approx(1.0).epsilon(1e-12));
    const double r2 = std::sqrt(2.0);
    CHECK(dom.amplitude == doctest::Approx(std::sin(flip) * 0.5 * r2).epsilon(1e-12));
    CHECK(count_peaks_above(at45.trace, 0.10) == 1);

    // theta = 45 deg above: full inversion through level 2 only.
    const auto& hi45 = set[2];
    CHECK(line_between(hi45.lines, 2, 4).amplitude ==
          doctest::Approx(std::sin(flip) * r2).epsilon(1e-9));
    CHECK(std::abs(line_between(hi45.lines, 3, 4).amplitude) < 1e-15);
    CHECK(max_amplitude(set[0].lines) < 0.05 * max_amplitude(hi45.lines));

    // theta = 30 deg at the crossing: roofed doublet, weak line at 26.8%.
    const auto& at30 = set[4];
    CHECK(count_peaks_above(at30.trace, 0.10) == 2);
    const double c30 = std::cos(kPi / 6.0);
    const double s30 = std::sin(kPi / 6.0);
    CHECK(line_between(at30.lines, 1, 3).amplitude /
              line_between(at30.lines, 2, 4).amplitude ==
          doctest::Approx((c30 - s30) / (c30 + s30)).epsilon(1e-10));

    // theta = 10 deg above: both ground transitions visible, ratio about 0.70.
    const auto& hi10 = set[8];
    CHECK(count_peaks_above(hi10.trace, 0.10) == 2);
    const TransitionLine& up = line_between(hi10.lines, 2, 4);
    const TransitionLine& down = line_between(hi10.lines, 3, 4);
    CHECK(down.from_level == 4);
    CHECK(down.frequency == doctest::Approx(0.5).epsilon(1e-10));
    const double c10 = std::cos(kPi / 18.0);
    const double s10 = std::sin(kPi / 18.0);
    CHECK(down.amplitude / up.amplitude ==
          doctest::Approx((c10 - s10) / (c10 + s10)).epsilon(1e-10));
}

TEST_CASE("scenario preconditions") {
    const std::vector<double> bad_low{0.0};
    CHECK_THROWS_AS(scenario_spectra(bad_low), std::invalid_argument);
    const std::vector<double> bad_high{kPi / 2.0};
    CHECK_THROWS_AS(scenario_spectra(bad_high), std::invalid_argument);

    ScenarioOptions opt;
    opt.tau = 0.0;
    const std::vector<double> ok{kPi / 4.0};
    CHECK_THROWS_AS(scenario_spectra(ok, opt), std::invalid_argument);
}

}  // TEST_SUITE
