#include "spinpair/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinpair {

namespace {

constexpr double kEigenvalueFloor = 1e-15;

// log(cosh(x)) without overflow.
double log_cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

// log(exp(a) + exp(b)) without overflow.
double log_add_exp(double a, double b) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

double entropy_bits(const std::array<double, 4>& probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p < -1e-12) throw std::invalid_argument("probabilities must be nonnegative");
        if (p > kEigenvalueFloor) s -= p * std::log2(p);
    }
    return s;
}

double von_neumann_entropy(const StateEigenvalues& l) { return entropy_bits(l.as_array()); }

double diagonal_entropy(const Mat4& rho) {
    return entropy_bits({std::real(rho(0, 0)), std::real(rho(1, 1)), std::real(rho(2, 2)),
                         std::real(rho(3, 3))});
}

double coherence_relative_entropy(const Mat4& rho) {
    const double r = diagonal_entropy(rho) - von_neumann_entropy(state_eigenvalues(rho));
    // Dephasing can only lose information; tiny negative values are rounding.
    return std::max(r, 0.0);
}

double purity(const Mat4& rho) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += std::norm(rho(i, j));
    return s;
}

// Clamped at zero: roundoff can push 1 - purity a few ulp negative for
// nearly pure states.
double mixedness(const Mat4& rho) {
    return std::max(0.0, (4.0 / 3.0) * (1.0 - purity(rho)));
}

double mixedness_closed_form(const SpinParams& p) {
    p.validate();
    if (!(p.tau > 0.0)) throw std::invalid_argument("tau must be > 0");

    const DerivedParams d = derive_params(p);
    const double beta_j = 1.0 / p.tau;  // beta * J
    const double x = d.omega_sigma / p.j_coupling;  // omega_sigma in units of J
    const double y = d.d_gap / p.j_coupling;

    // Tr rho^2 = [exp(-bJ) cosh(bJ x) + cosh(bJ y)] /
    //            (2 [exp(-bJ/2) cosh(bJ x / 2) + cosh(bJ y / 2)]^2)
    const double log_num = log_add_exp(-beta_j + log_cosh(beta_j * x), log_cosh(beta_j * y));
    const double log_den =
        std::numbers::ln2 +
        2.0 * log_add_exp(-0.5 * beta_j + log_cosh(0.5 * beta_j * x), log_cosh(0.5 * beta_j * y));
    return std::max(0.0, (4.0 / 3.0) * (1.0 - std::exp(log_num - log_den)));
}

double fidelity_with_pure(const Mat4& rho, const Vec4& psi) {
    if (std::abs(vnorm(psi) - 1.0) > 1e-10)
        throw std::invalid_argument("reference state must be normalized");
    return std::real(vdot(psi, rho * psi));
}

double concurrence_check(const Mat4& rho) {
    require_x_structure(rho);
    const double r11 = std::max(std::real(rho(0, 0)), 0.0);
    const double r22 = std::max(std::real(rho(1, 1)), 0.0);
    const double r33 = std::max(std::real(rho(2, 2)), 0.0);
    const double r44 = std::max(std::real(rho(3, 3)), 0.0);
    const double inner = std::abs(rho(1, 2)) - std::sqrt(r11 * r44);
    const double outer = std::abs(rho(0, 3)) - std::sqrt(r22 * r33);
    return 2.0 * std::max({0.0, inner, outer});
}

}  // namespace spinpair
