// Seeded samplers over two-qubit states.  Used by the validation checks and
// the property tests; a fixed seed gives reproducible runs everywhere.
#pragma once

#include <random>

#include "spinpair/matrix.hpp"
#include "spinpair/thermal_state.hpp"

namespace spinpair {

class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed = 0x5eed5eedULL) : rng_(seed) {}

    // Haar-distributed pure state of the full two-spin space.
    Vec4 haar_pure();

    // Mixture of n_terms Haar pure states with flat-Dirichlet weights.
    Mat4 random_density(int n_terms = 4);

    // Product pure state |a> x |b>, each factor Haar on its qubit.
    Vec4 random_product_pure();

    // Separable by construction: mixture of product pure states.
    Mat4 random_separable(int n_terms = 6);

    // Random X-structured state (positive by construction, coherences scaled
    // inside the positivity bounds).
    Mat4 random_x_state();

    // Flat-Dirichlet probability vector over the four levels.
    Populations random_populations();

    std::mt19937_64& engine() { return rng_; }

private:
    std::array<double, 4> dirichlet4();

    std::mt19937_64 rng_;
};

}  // namespace spinpair
