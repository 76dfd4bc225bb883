// Two-spin-1/2 system with Zeeman splitting and scalar (J) coupling.
//
// Product basis ordering is {aa, ab, ba, bb} where the first letter is spin 1.
// The coupling mixes |ab> and |ba>; the mixing angle theta parameterizes the
// central-block eigenvectors.  Levels are numbered 1..4 in reports, matching
// the eigenvector order phi_1..phi_4 below (not sorted by energy).
#pragma once

#include <array>

#include "spinpair/matrix.hpp"

namespace spinpair {

// Raw model parameters.  All frequencies share one unit; tau = k_B T / J is
// dimensionless.  The CLI normalizes to j_coupling = 1 so that omega values
// are read as ratios omega / J.
struct SpinParams {
    double omega1 = 0.0;    // Larmor frequency of spin 1
    double omega2 = 0.0;    // Larmor frequency of spin 2
    double j_coupling = 1.0;
    double tau = 1.0;       // reduced temperature k_B T / J

    static SpinParams from_ratios(double omega_sigma, double omega_delta, double tau,
                                  double j_coupling = 1.0);

    // Throws std::invalid_argument naming the violated precondition.
    void validate() const;
};

struct DerivedParams {
    double omega_sigma = 0.0;  // omega1 + omega2
    double omega_delta = 0.0;  // omega1 - omega2
    double d_gap = 0.0;        // sqrt(omega_delta^2 + J^2)
    double theta = 0.0;        // 0.5 * atan2(J, omega_delta), in (0, pi/2)
};

DerivedParams derive_params(const SpinParams& p);

struct EnergyLevels {
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
    double e4 = 0.0;

    double level(int idx1) const;  // idx1 in 1..4
    std::array<double, 4> as_array() const { return {e1, e2, e3, e4}; }
};

EnergyLevels energy_levels(const SpinParams& p);

// Columns of the product-basis -> eigenbasis rotation; all entries real.
struct EigenBasis {
    std::array<std::array<double, 4>, 4> vectors{};  // vectors[i] is phi_{i+1}

    Vec4 vector(int idx1) const;  // idx1 in 1..4, as a complex Vec4
};

EigenBasis eigenbasis(const SpinParams& p);

Mat4 zeeman_matrix(const SpinParams& p);
Mat4 coupling_matrix(const SpinParams& p);
Mat4 hamiltonian_matrix(const SpinParams& p);

// Coupling strength at which levels 3 and 4 cross, for given omega_sigma > 0.
// May be negative when |omega_delta| > omega_sigma (no crossing at positive J).
double critical_j(double omega_sigma, double omega_delta);

// Positive root of the level-crossing condition: omega_sigma = J + D.
double critical_omega_sigma(double j_coupling, double omega_delta);

}  // namespace spinpair
