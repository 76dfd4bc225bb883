// Independent numerical route used to cross-check the closed-form results.
//
// Everything here works from the dense Hamiltonian matrix with a hand-written
// cyclic Jacobi eigensolver, so it shares no algebra with the analytic
// expressions in spin_system / thermal_state.  Deterministic by construction.
#pragma once

#include <array>

#include "spinpair/matrix.hpp"
#include "spinpair/spin_system.hpp"

namespace spinpair {
namespace oracle {

struct EigResult {
    std::array<double, 4> values{};  // ascending
    Mat4 vectors;                    // column k is the eigenvector of values[k]
};

// Cyclic Jacobi for a Hermitian 4x4.  Sweeps the upper triangle row-major
// until the off-diagonal norm drops below 1e-13 * max(1, ||A||_F).
EigResult eig_hermitian(const Mat4& a);

// exp(-beta H) / Z evaluated through the eigendecomposition of H, with the
// ground energy shifted out of the exponentials.  Requires tau > 0.
Mat4 thermal_state_numeric(const SpinParams& p);

// Partial transpose over spin 1 or spin 2 (same spectrum either way).
Mat4 partial_transpose(const Mat4& rho, int subsystem);

enum class PptVerdict { Entangled, Separable };

// Negativity of the partially transposed state decides entanglement for
// two qubits.  Threshold: smallest eigenvalue < -1e-10.
PptVerdict ppt_verdict(const Mat4& rho);

double min_eigenvalue_partial_transpose(const Mat4& rho);

}  // namespace oracle
}  // namespace spinpair
