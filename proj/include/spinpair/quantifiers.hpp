// State quantifiers: entropies, coherence, mixedness, purity, fidelity,
// and a concurrence cross-check for X-structured states.
//
// Entropies are in bits (log base 2).  Eigenvalues below 1e-15 contribute
// zero, which fixes the 0*log(0) limit.
#pragma once

#include "spinpair/matrix.hpp"
#include "spinpair/spin_system.hpp"
#include "spinpair/thermal_state.hpp"

namespace spinpair {

double entropy_bits(const std::array<double, 4>& probabilities);

double von_neumann_entropy(const StateEigenvalues& l);

// Shannon entropy of the product-basis diagonal.
double diagonal_entropy(const Mat4& rho);

// Relative entropy of coherence with respect to the product basis:
// S(diagonal of rho) - S(rho).  Uses the closed-form spectrum, so the state
// must be X-structured with vanishing outer coherence.  Never negative.
double coherence_relative_entropy(const Mat4& rho);

double purity(const Mat4& rho);  // Tr rho^2, in [1/4, 1]

// Normalized mixedness (4/3)(1 - Tr rho^2), in [0, 1].
double mixedness(const Mat4& rho);

// Same quantity for the thermal state, evaluated from the closed-form
// partition sums in log space; stable for any tau > 0.
double mixedness_closed_form(const SpinParams& p);

// <psi| rho |psi> for a normalized pure reference.
double fidelity_with_pure(const Mat4& rho, const Vec4& psi);

// Wootters concurrence restricted to X-structured states.
double concurrence_check(const Mat4& rho);

}  // namespace spinpair
