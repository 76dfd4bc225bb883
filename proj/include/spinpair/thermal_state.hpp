// Thermal equilibrium states of the coupled two-spin system.
//
// All Boltzmann weights are evaluated relative to the ground energy, so the
// expressions stay finite for arbitrarily small tau; the partition function is
// carried in log space.
#pragma once

#include <array>

#include "spinpair/matrix.hpp"
#include "spinpair/spin_system.hpp"

namespace spinpair {

// Log-space representation: Z = exp(log_shift) * shifted_sum, where
// log_shift = -beta * E_min and shifted_sum = sum_i exp(-beta (E_i - E_min)).
struct PartitionFunction {
    double log_shift = 0.0;
    double shifted_sum = 0.0;

    double log_value() const;
    double value() const;  // may overflow to +inf for extreme beta; log_value never does
};

PartitionFunction partition_function(const SpinParams& p);  // requires tau > 0

// Eigenstate occupation probabilities p_i = exp(-beta E_i) / Z.
struct Populations {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double p4 = 0.0;

    double level(int idx1) const;
    std::array<double, 4> as_array() const { return {p1, p2, p3, p4}; }
};

Populations boltzmann_populations(const SpinParams& p);  // requires tau > 0

// Product-basis thermal density matrix.  X-structured: the only off-diagonal
// elements are rho(1,2) = rho(2,1) <= 0 (0-based indices), coupling |ab>,|ba>.
Mat4 thermal_density_matrix(const SpinParams& p);  // requires tau > 0

// Spectrum of an X-structured state with vanishing outer coherence rho(0,3).
// Ordering follows the closed form (l1 from rho(3,3), l2 from rho(0,0),
// l3/l4 from the central block), not sorted by magnitude.
struct StateEigenvalues {
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 0.0;
    double l4 = 0.0;

    std::array<double, 4> as_array() const { return {l1, l2, l3, l4}; }
};

StateEigenvalues state_eigenvalues(const Mat4& rho);

// tau = 0 limit: equal mixture over every level within degeneracy_tol of the
// ground energy.  Away from level crossings this is the projector onto the
// unique ground state; at a crossing it is the balanced two-level mixture.
Mat4 zero_temperature_state(const SpinParams& p, double degeneracy_tol = 1e-9);

bool is_x_structured(const Mat4& rho, double tol = 1e-10);

// Hermiticity, unit trace, X off-diagonal pattern, rho(0,3) ~ 0.
// Throws std::invalid_argument when violated.
void require_x_structure(const Mat4& rho, double tol = 1e-10);

// Hermiticity / trace / positivity check for externally supplied states.
void validate_density_matrix(const Mat4& rho, double tol = 1e-9);

}  // namespace spinpair
