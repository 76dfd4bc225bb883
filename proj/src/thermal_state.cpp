#include "spinpair/thermal_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinpair/oracle.hpp"

namespace spinpair {

namespace {

struct ShiftedWeights {
    std::array<double, 4> w{};  // exp(-beta (E_i - E_min)), indexed by level-1
    double sum = 0.0;
    double log_shift = 0.0;  // -beta * E_min
};

ShiftedWeights shifted_weights(const SpinParams& p) {
    p.validate();
    if (!(p.tau > 0.0)) throw std::invalid_argument("tau must be > 0");

    const EnergyLevels e = energy_levels(p);
    const std::array<double, 4> energies = e.as_array();
    const double beta = 1.0 / (p.tau * p.j_coupling);
    const double e_min = *std::min_element(energies.begin(), energies.end());

    ShiftedWeights sw;
    sw.log_shift = -beta * e_min;
    for (std::size_t i = 0; i < 4; ++i) {
        sw.w[i] = std::exp(-beta * (energies[i] - e_min));
        sw.sum += sw.w[i];
    }
    return sw;
}

}  // namespace

double PartitionFunction::log_value() const { return log_shift + std::log(shifted_sum); }

double PartitionFunction::value() const { return std::exp(log_value()); }

PartitionFunction partition_function(const SpinParams& p) {
    const ShiftedWeights sw = shifted_weights(p);
    PartitionFunction z;
    z.log_shift = sw.log_shift;
    z.shifted_sum = sw.sum;
    return z;
}

double Populations::level(int idx1) const {
    switch (idx1) {
        case 1: return p1;
        case 2: return p2;
        case 3: return p3;
        case 4: return p4;
        default: throw std::invalid_argument("level index must be in 1..4");
    }
}

Populations boltzmann_populations(const SpinParams& p) {
    const ShiftedWeights sw = shifted_weights(p);
    Populations pops;
    pops.p1 = sw.w[0] / sw.sum;
    pops.p2 = sw.w[1] / sw.sum;
    pops.p3 = sw.w[2] / sw.sum;
    pops.p4 = sw.w[3] / sw.sum;
    return pops;
}

Mat4 thermal_density_matrix(const SpinParams& p) {
    const ShiftedWeights sw = shifted_weights(p);
    const DerivedParams d = derive_params(p);
    const double c = std::cos(d.theta);
    const double s = std::sin(d.theta);

    const double q1 = sw.w[0] / sw.sum;
    const double q2 = sw.w[1] / sw.sum;
    const double q3 = sw.w[2] / sw.sum;
    const double q4 = sw.w[3] / sw.sum;

    Mat4 rho;
    rho(0, 0) = q1;
    rho(1, 1) = q2 * c * c + q3 * s * s;
    rho(2, 2) = q2 * s * s + q3 * c * c;
    rho(3, 3) = q4;
    // q2 <= q3 because E_2 >= E_3, so the coherence is never positive.
    rho(1, 2) = (q2 - q3) * s * c;
    rho(2, 1) = rho(1, 2);
    return rho;
}

bool is_x_structured(const Mat4& rho, double tol) {
    const int off_positions[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    for (const auto& pos : off_positions)
        if (std::abs(rho(pos[0], pos[1])) > tol || std::abs(rho(pos[1], pos[0])) > tol)
            return false;
    return true;
}

void require_x_structure(const Mat4& rho, double tol) {
    if (!rho.is_hermitian(tol)) throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(rho.trace() - cplx{1.0}) > 1e-9)
        throw std::invalid_argument("density matrix must have unit trace");
    if (!is_x_structured(rho, tol))
        throw std::invalid_argument("density matrix must be X-structured");
}

StateEigenvalues state_eigenvalues(const Mat4& rho) {
    require_x_structure(rho);
    if (std::abs(rho(0, 3)) > 1e-10)
        throw std::invalid_argument("outer coherence rho(0,3) must vanish");

    const double r11 = std::real(rho(0, 0));
    const double r22 = std::real(rho(1, 1));
    const double r33 = std::real(rho(2, 2));
    const double r44 = std::real(rho(3, 3));
    const double radical =
        std::sqrt((r22 - r33) * (r22 - r33) + 4.0 * std::norm(rho(1, 2)));

    StateEigenvalues l;
    l.l1 = r44;
    l.l2 = r11;
    l.l3 = 0.5 * ((r22 + r33) + radical);
    l.l4 = 0.5 * ((r22 + r33) - radical);
    return l;
}

Mat4 zero_temperature_state(const SpinParams& p, double degeneracy_tol) {
    p.validate();
    if (!(degeneracy_tol >= 0.0)) throw std::invalid_argument("degeneracy_tol must be >= 0");

    const EnergyLevels e = energy_levels(p);
    const std::array<double, 4> energies = e.as_array();
    const double e_min = *std::min_element(energies.begin(), energies.end());
    const double window = degeneracy_tol * p.j_coupling;  // tol is in units of J

    const EigenBasis basis = eigenbasis(p);
    Mat4 rho;
    int n_ground = 0;
    for (int i = 0; i < 4; ++i)
        if (energies[static_cast<std::size_t>(i)] - e_min <= window) ++n_ground;
    for (int i = 0; i < 4; ++i) {
        if (energies[static_cast<std::size_t>(i)] - e_min > window) continue;
        rho = rho + Mat4::outer(basis.vector(i + 1)) * cplx{1.0 / n_ground};
    }
    return rho;
}

void validate_density_matrix(const Mat4& rho, double tol) {
    if (!rho.is_hermitian(tol)) throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(rho.trace() - cplx{1.0}) > tol)
        throw std::invalid_argument("density matrix must have unit trace");
    const auto eig = oracle::eig_hermitian(rho);
    if (eig.values[0] < -tol)
        throw std::invalid_argument("density matrix must be positive semidefinite");
}

}  // namespace spinpair
