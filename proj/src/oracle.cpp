#include "spinpair/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinpair {
namespace oracle {

namespace {

// Unitary 2x2 rotation zeroing a(p,q), embedded at rows/cols (p,q).
// The phase of a(p,q) is absorbed first, then a standard symmetric Jacobi
// rotation is applied to the resulting real 2x2 block.
Mat4 rotation_for(const Mat4& a, int p, int q) {
    const cplx apq = a(p, q);
    const double m = std::abs(apq);
    Mat4 r = Mat4::identity();
    if (m == 0.0) return r;

    const cplx phase = apq / m;  // a(p,q) = m * phase
    const double app = std::real(a(p, p));
    const double aqq = std::real(a(q, q));
    const double tau = (aqq - app) / (2.0 * m);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    r(p, p) = c;
    r(p, q) = s;
    r(q, p) = -s * std::conj(phase);
    r(q, q) = c * std::conj(phase);
    return r;
}

}  // namespace

EigResult eig_hermitian(const Mat4& a) {
    if (!a.is_hermitian(1e-10)) throw std::invalid_argument("matrix must be Hermitian");

    const double threshold = 1e-13 * std::max(1.0, a.frobenius_norm());
    Mat4 d = a;
    Mat4 v = Mat4::identity();

    constexpr int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps && d.off_diagonal_norm() > threshold; ++sweep) {
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (std::abs(d(p, q)) == 0.0) continue;
                const Mat4 r = rotation_for(d, p, q);
                d = r.adjoint() * d * r;
                v = v * r;
            }
        }
    }

    // Sort ascending with a stable permutation of the columns.
    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return std::real(d(i, i)) < std::real(d(j, j)); });

    EigResult out;
    for (int k = 0; k < 4; ++k) {
        out.values[static_cast<std::size_t>(k)] = std::real(d(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]));
        for (int i = 0; i < 4; ++i) out.vectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

Mat4 thermal_state_numeric(const SpinParams& p) {
    p.validate();
    if (!(p.tau > 0.0)) throw std::invalid_argument("tau must be > 0");

    const EigResult eig = eig_hermitian(hamiltonian_matrix(p));
    const double beta = 1.0 / (p.tau * p.j_coupling);
    const double e_min = eig.values[0];  // ascending

    std::array<double, 4> w{};
    double norm = 0.0;
    for (int k = 0; k < 4; ++k) {
        w[static_cast<std::size_t>(k)] = std::exp(-beta * (eig.values[static_cast<std::size_t>(k)] - e_min));
        norm += w[static_cast<std::size_t>(k)];
    }

    Mat4 rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s{};
            for (int k = 0; k < 4; ++k)
                s += eig.vectors(i, k) * (w[static_cast<std::size_t>(k)] / norm) * std::conj(eig.vectors(j, k));
            rho(i, j) = s;
        }
    return rho;
}

Mat4 partial_transpose(const Mat4& rho, int subsystem) {
    if (subsystem != 1 && subsystem != 2) throw std::invalid_argument("subsystem must be 1 or 2");
    Mat4 r;
    // Basis index is 2a + b with a the state of spin 1, b the state of spin 2.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    if (subsystem == 2)
                        r(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
                    else
                        r(2 * a + b, 2 * c + d) = rho(2 * c + b, 2 * a + d);
                }
    return r;
}

double min_eigenvalue_partial_transpose(const Mat4& rho) {
    const EigResult eig = eig_hermitian(partial_transpose(rho, 2));
    return eig.values[0];
}

PptVerdict ppt_verdict(const Mat4& rho) {
    return min_eigenvalue_partial_transpose(rho) < -1e-10 ? PptVerdict::Entangled
                                                          : PptVerdict::Separable;
}

}  // namespace oracle
}  // namespace spinpair
