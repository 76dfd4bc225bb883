#include "spinpair/random_states.hpp"

#include <cmath>
#include <vector>

namespace spinpair {

namespace {

std::array<cplx, 2> haar_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<cplx, 2> v{cplx{gauss(rng), gauss(rng)}, cplx{gauss(rng), gauss(rng)}};
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= n;
    v[1] /= n;
    return v;
}

}  // namespace

Vec4 StateSampler::haar_pure() {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec4 v;
    double n2 = 0.0;
    for (auto& x : v) {
        x = cplx{gauss(rng_), gauss(rng_)};
        n2 += std::norm(x);
    }
    const double n = std::sqrt(n2);
    for (auto& x : v) x /= n;
    return v;
}

std::array<double, 4> StateSampler::dirichlet4() {
    // Flat Dirichlet = normalized unit-rate exponentials.
    std::exponential_distribution<double> expo(1.0);
    std::array<double, 4> w{};
    double s = 0.0;
    for (auto& x : w) {
        x = expo(rng_);
        s += x;
    }
    for (auto& x : w) x /= s;
    return w;
}

Mat4 StateSampler::random_density(int n_terms) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(static_cast<std::size_t>(n_terms));
    double s = 0.0;
    for (auto& x : w) {
        x = expo(rng_);
        s += x;
    }
    Mat4 rho;
    for (int k = 0; k < n_terms; ++k)
        rho = rho + Mat4::outer(haar_pure()) * cplx{w[static_cast<std::size_t>(k)] / s};
    return rho;
}

Vec4 StateSampler::random_product_pure() {
    const auto a = haar_qubit(rng_);
    const auto b = haar_qubit(rng_);
    Vec4 v;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v[static_cast<std::size_t>(2 * i + j)] = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return v;
}

Mat4 StateSampler::random_separable(int n_terms) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(static_cast<std::size_t>(n_terms));
    double s = 0.0;
    for (auto& x : w) {
        x = expo(rng_);
        s += x;
    }
    Mat4 rho;
    for (int k = 0; k < n_terms; ++k)
        rho = rho + Mat4::outer(random_product_pure()) * cplx{w[static_cast<std::size_t>(k)] / s};
    return rho;
}

Mat4 StateSampler::random_x_state() {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);

    const std::array<double, 4> d = dirichlet4();
    Mat4 rho = Mat4::diag(d[0], d[1], d[2], d[3]);

    // |rho(1,2)| <= sqrt(rho11 rho22) and |rho(0,3)| <= sqrt(rho00 rho33)
    // keep the two 2x2 blocks positive.
    const double inner = unit(rng_) * std::sqrt(d[1] * d[2]);
    const double outer = unit(rng_) * std::sqrt(d[0] * d[3]);
    const double phi_inner = angle(rng_);
    const double phi_outer = angle(rng_);
    rho(1, 2) = std::polar(inner, phi_inner);
    rho(2, 1) = std::conj(rho(1, 2));
    rho(0, 3) = std::polar(outer, phi_outer);
    rho(3, 0) = std::conj(rho(0, 3));
    return rho;
}

Populations StateSampler::random_populations() {
    const std::array<double, 4> d = dirichlet4();
    return Populations{d[0], d[1], d[2], d[3]};
}

}  // namespace spinpair
