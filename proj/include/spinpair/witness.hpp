// Singlet-projector entanglement witness W = I/2 - |s><s| and the phase
// diagram built from it.
//
// Three algebraically equivalent evaluations of <W> are kept as separate code
// paths on purpose: through the singlet fidelity, through the two-spin Pauli
// correlators, and through Hamiltonian expectation values.  Their agreement is
// checked by the test suite on arbitrary states.
#pragma once

#include <string>
#include <vector>

#include "spinpair/matrix.hpp"
#include "spinpair/oracle.hpp"
#include "spinpair/spin_system.hpp"

namespace spinpair {

Vec4 singlet_vector();      // (|ab> - |ba>) / sqrt(2), up to a global sign
Mat4 singlet_projector();
Mat4 witness_operator();    // I/2 - singlet projector

struct PauliCorrelators {
    double cxx = 0.0;
    double cyy = 0.0;
    double czz = 0.0;
};

PauliCorrelators pauli_correlators(const Mat4& rho);

// <W> = (1 + Cxx + Cyy + Czz) / 4.
double witness_expectation(const Mat4& rho);

// <W> = 1/4 + (<H> - <H_Z>) / J, exact for every state because
// H - H_Z is J/4 times the sum of the three Pauli correlator operators.
double energy_witness_expectation(const Mat4& rho, const SpinParams& p);

enum class WitnessVerdict { EntangledDetected, NotDetected };

enum class SeparabilityVerdict { Entangled, Separable };

// Exact X-state criterion: entangled iff rho(0,0)rho(3,3) < |rho(1,2)|^2
// or rho(1,1)rho(2,2) < |rho(0,3)|^2 (strict; boundary counts as separable).
SeparabilityVerdict separability_conditions(const Mat4& rho);

struct WitnessReport {
    double expectation = 0.0;        // Pauli-correlator form
    double fidelity = 0.0;           // overlap with the singlet
    double fidelity_form = 0.0;      // 1/2 - fidelity
    double energy_form = 0.0;
    PauliCorrelators correlators;
    WitnessVerdict verdict = WitnessVerdict::NotDetected;
    oracle::PptVerdict ppt_verdict = oracle::PptVerdict::Separable;
};

WitnessReport make_witness_report(const Mat4& rho, const SpinParams& p);

// Larmor frequencies reproducing a target omega_delta at field ratio
// r = omega1 / omega2.  r = 1 cannot produce omega_delta != 0 and is rejected.
struct FieldRatioMap {
    double omega1 = 0.0;
    double omega2 = 0.0;
};

FieldRatioMap map_field_ratio(double r, double omega_delta);

struct PhaseGridSpec {
    double tau_min = 0.02;
    double tau_max = 2.0;
    int n_tau = 41;
    double delta_min = 0.0;
    double delta_max = 3.0;
    int n_delta = 41;
};

struct PhaseCell {
    double tau = 0.0;
    double omega_delta = 0.0;
    double expectation = 0.0;
    WitnessVerdict verdict = WitnessVerdict::NotDetected;
    oracle::PptVerdict ppt = oracle::PptVerdict::Separable;
};

struct BoundaryPoint {
    double omega_delta = 0.0;
    double tau = 0.0;
    double expectation = 0.0;  // |expectation| < 1e-6 after bisection
};

struct PhaseDiagram {
    double field_ratio = 0.0;
    std::vector<double> taus;
    std::vector<double> deltas;
    std::vector<PhaseCell> cells;  // delta-major: cells[id * n_tau + it]
    std::vector<BoundaryPoint> boundary;

    const PhaseCell& cell(int delta_index, int tau_index) const;
};

// Witness sign over a (tau, omega_delta) grid at fixed field ratio, with the
// detection boundary refined by bisection in tau per column.  Parallel over
// columns; output order is deterministic.
PhaseDiagram phase_diagram(const PhaseGridSpec& grid, double field_ratio,
                           double j_coupling = 1.0);

std::string to_string(WitnessVerdict v);
std::string to_string(SeparabilityVerdict v);
std::string to_string(oracle::PptVerdict v);

}  // namespace spinpair
