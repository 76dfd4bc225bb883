#include "spinpair/spin_system.hpp"

#include <cmath>
#include <stdexcept>

namespace spinpair {

SpinParams SpinParams::from_ratios(double omega_sigma, double omega_delta, double tau,
                                   double j_coupling) {
    SpinParams p;
    p.omega1 = 0.5 * (omega_sigma + omega_delta) * j_coupling;
    p.omega2 = 0.5 * (omega_sigma - omega_delta) * j_coupling;
    p.j_coupling = j_coupling;
    p.tau = tau;
    p.validate();
    return p;
}

void SpinParams::validate() const {
    if (!std::isfinite(omega1) || !std::isfinite(omega2))
        throw std::invalid_argument("omega1 and omega2 must be finite");
    if (!std::isfinite(j_coupling) || j_coupling <= 0.0)
        throw std::invalid_argument("j_coupling must be finite and > 0");
    if (!std::isfinite(tau) || tau < 0.0)
        throw std::invalid_argument("tau must be finite and >= 0");
}

DerivedParams derive_params(const SpinParams& p) {
    p.validate();
    DerivedParams d;
    d.omega_sigma = p.omega1 + p.omega2;
    d.omega_delta = p.omega1 - p.omega2;
    d.d_gap = std::hypot(d.omega_delta, p.j_coupling);
    // atan2(J, omega_delta) lies in (0, pi) for J > 0, so theta is in (0, pi/2)
    // and reaches exactly pi/4 for omega_delta = 0.
    d.theta = 0.5 * std::atan2(p.j_coupling, d.omega_delta);
    return d;
}

double EnergyLevels::level(int idx1) const {
    switch (idx1) {
        case 1: return e1;
        case 2: return e2;
        case 3: return e3;
        case 4: return e4;
        default: throw std::invalid_argument("level index must be in 1..4");
    }
}

EnergyLevels energy_levels(const SpinParams& p) {
    const DerivedParams d = derive_params(p);
    const double j = p.j_coupling;
    EnergyLevels e;
    e.e1 = 0.5 * (d.omega_sigma + 0.5 * j);
    e.e2 = 0.5 * (d.d_gap - 0.5 * j);
    e.e3 = -0.5 * (d.d_gap + 0.5 * j);
    e.e4 = 0.5 * (-d.omega_sigma + 0.5 * j);
    return e;
}

Vec4 EigenBasis::vector(int idx1) const {
    if (idx1 < 1 || idx1 > 4) throw std::invalid_argument("level index must be in 1..4");
    Vec4 v{};
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = vectors[static_cast<std::size_t>(idx1 - 1)][static_cast<std::size_t>(i)];
    return v;
}

EigenBasis eigenbasis(const SpinParams& p) {
    const DerivedParams d = derive_params(p);
    const double c = std::cos(d.theta);
    const double s = std::sin(d.theta);
    EigenBasis b;
    b.vectors[0] = {1.0, 0.0, 0.0, 0.0};
    b.vectors[1] = {0.0, c, s, 0.0};
    b.vectors[2] = {0.0, -s, c, 0.0};
    b.vectors[3] = {0.0, 0.0, 0.0, 1.0};
    return b;
}

Mat4 zeeman_matrix(const SpinParams& p) {
    const DerivedParams d = derive_params(p);
    return Mat4::diag(0.5 * d.omega_sigma, 0.5 * d.omega_delta, -0.5 * d.omega_delta,
                      -0.5 * d.omega_sigma);
}

Mat4 coupling_matrix(const SpinParams& p) {
    p.validate();
    const double j = p.j_coupling;
    Mat4 m = Mat4::diag(0.25 * j, -0.25 * j, -0.25 * j, 0.25 * j);
    m(1, 2) = 0.5 * j;
    m(2, 1) = 0.5 * j;
    return m;
}

Mat4 hamiltonian_matrix(const SpinParams& p) { return zeeman_matrix(p) + coupling_matrix(p); }

double critical_j(double omega_sigma, double omega_delta) {
    if (!(omega_sigma > 0.0)) throw std::invalid_argument("omega_sigma must be > 0");
    return (omega_sigma * omega_sigma - omega_delta * omega_delta) / (2.0 * omega_sigma);
}

double critical_omega_sigma(double j_coupling, double omega_delta) {
    if (!(j_coupling > 0.0)) throw std::invalid_argument("j_coupling must be > 0");
    return j_coupling + std::hypot(omega_delta, j_coupling);
}

}  // namespace spinpair
