// Recovery of eigenstate populations and mixedness from the three
// longitudinal NMR observables (two single-spin polarizations and the
// two-spin correlation).
//
// The linear map from populations to observables involves cos(2 theta); its
// inversion degenerates at theta = pi/4 where the two polarizations become
// identical.  Rows too close to that angle are reported, not inverted.
#pragma once

#include <string>
#include <vector>

#include "spinpair/thermal_state.hpp"

namespace spinpair {

struct NmrObservables {
    double p1z = 0.0;    // polarization of spin 1
    double p2z = 0.0;    // polarization of spin 2
    double p1z2z = 0.0;  // two-spin zz correlation
};

NmrObservables forward_observables(const Populations& pops, double theta);

struct ReconstructionOptions {
    double epsilon_theta = 1e-6;   // reject |cos(2 theta)| below this
    double population_tol = 1e-9;  // slack before declaring observables inconsistent
};

// Inverts the forward map.  Throws std::domain_error near the degenerate
// angle and std::invalid_argument for out-of-range or inconsistent
// observables.  Populations are clamped to [0, 1] and renormalized within
// population_tol.
Populations reconstruct_populations(const NmrObservables& obs, double theta,
                                    const ReconstructionOptions& opt = {});

// Mixedness evaluated directly from the observables, without reconstructing
// populations first.  Note: this expression carries the same 4/3 rescaling as
// mixedness(), i.e. it equals (4/3)(1 - sum p_i^2) identically, not the bare
// linear entropy 1 - sum p_i^2.
double mixedness_from_observables(const NmrObservables& obs, double theta,
                                  const ReconstructionOptions& opt = {});

// (4/3)(1 - sum p_i^2) from already-reconstructed populations.
double mixedness_from_populations(const Populations& pops);

// Error amplification of the inversion: 1 / |cos(2 theta)|.
double reconstruction_condition_number(double theta);

// One processed input row; status is "ok" or a short failure tag and the
// numeric fields are meaningful only when ok.
struct ReconstructionRowResult {
    int line_number = 0;
    std::string status;
    NmrObservables observables;
    double theta = 0.0;  // radians
    Populations populations;
    double m_observables = 0.0;
    double m_populations = 0.0;
    double condition_number = 0.0;
};

ReconstructionRowResult reconstruct_row(int line_number, const NmrObservables& obs,
                                        double theta, const ReconstructionOptions& opt = {});

}  // namespace spinpair
