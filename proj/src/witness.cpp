#include "spinpair/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "spinpair/parallel.hpp"
#include "spinpair/quantifiers.hpp"
#include "spinpair/thermal_state.hpp"

namespace spinpair {

Vec4 singlet_vector() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {cplx{0.0}, cplx{-inv_sqrt2}, cplx{inv_sqrt2}, cplx{0.0}};
}

Mat4 singlet_projector() { return Mat4::outer(singlet_vector()); }

Mat4 witness_operator() { return Mat4::identity() * cplx{0.5} - singlet_projector(); }

PauliCorrelators pauli_correlators(const Mat4& rho) {
    PauliCorrelators c;
    c.cxx = std::real((rho * kron(pauli_x(), pauli_x())).trace());
    c.cyy = std::real((rho * kron(pauli_y(), pauli_y())).trace());
    c.czz = std::real((rho * kron(pauli_z(), pauli_z())).trace());
    return c;
}

double witness_expectation(const Mat4& rho) {
    const PauliCorrelators c = pauli_correlators(rho);
    return 0.25 * (1.0 + c.cxx + c.cyy + c.czz);
}

double energy_witness_expectation(const Mat4& rho, const SpinParams& p) {
    const double h = std::real((rho * hamiltonian_matrix(p)).trace());
    const double hz = std::real((rho * zeeman_matrix(p)).trace());
    return 0.25 + (h - hz) / p.j_coupling;
}

SeparabilityVerdict separability_conditions(const Mat4& rho) {
    require_x_structure(rho);
    const double r11 = std::real(rho(0, 0));
    const double r22 = std::real(rho(1, 1));
    const double r33 = std::real(rho(2, 2));
    const double r44 = std::real(rho(3, 3));
    const bool inner = r11 * r44 < std::norm(rho(1, 2));
    const bool outer = r22 * r33 < std::norm(rho(0, 3));
    return (inner || outer) ? SeparabilityVerdict::Entangled : SeparabilityVerdict::Separable;
}

WitnessReport make_witness_report(const Mat4& rho, const SpinParams& p) {
    WitnessReport r;
    r.correlators = pauli_correlators(rho);
    r.expectation = witness_expectation(rho);
    r.fidelity = fidelity_with_pure(rho, singlet_vector());
    r.fidelity_form = 0.5 - r.fidelity;
    r.energy_form = energy_witness_expectation(rho, p);
    r.verdict = r.expectation < 0.0 ? WitnessVerdict::EntangledDetected
                                    : WitnessVerdict::NotDetected;
    r.ppt_verdict = oracle::ppt_verdict(rho);
    return r;
}

FieldRatioMap map_field_ratio(double r, double omega_delta) {
    if (!std::isfinite(r)) throw std::invalid_argument("field ratio must be finite");
    FieldRatioMap m;
    if (r == 1.0) {
        if (omega_delta != 0.0)
            throw std::invalid_argument(
                "field ratio r = 1 cannot realize a nonzero omega_delta");
        return m;  // omega1 = omega2 = 0
    }
    m.omega2 = omega_delta / (r - 1.0);
    m.omega1 = r * m.omega2;
    return m;
}

const PhaseCell& PhaseDiagram::cell(int delta_index, int tau_index) const {
    return cells[static_cast<std::size_t>(delta_index) * taus.size() +
                 static_cast<std::size_t>(tau_index)];
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

double witness_at(double tau, double omega_delta, double r, double j) {
    const FieldRatioMap fields = map_field_ratio(r, omega_delta);
    SpinParams p{fields.omega1, fields.omega2, j, tau};
    return witness_expectation(thermal_density_matrix(p));
}

}  // namespace

PhaseDiagram phase_diagram(const PhaseGridSpec& grid, double field_ratio, double j_coupling) {
    if (grid.n_tau < 2 || grid.n_delta < 2)
        throw std::invalid_argument("phase grid needs at least 2 points per axis");
    if (!(grid.tau_min > 0.0) || !(grid.tau_max > grid.tau_min))
        throw std::invalid_argument("tau grid must satisfy 0 < tau_min < tau_max");
    if (!(grid.delta_max >= grid.delta_min))
        throw std::invalid_argument("delta grid must satisfy delta_min <= delta_max");
    // Fail on the mapping singularity up front rather than once per cell.
    map_field_ratio(field_ratio, grid.delta_max != 0.0 ? grid.delta_max : grid.delta_min);

    PhaseDiagram out;
    out.field_ratio = field_ratio;
    out.taus = linspace(grid.tau_min, grid.tau_max, grid.n_tau);
    out.deltas = linspace(grid.delta_min, grid.delta_max, grid.n_delta);
    out.cells.resize(static_cast<std::size_t>(grid.n_tau) * static_cast<std::size_t>(grid.n_delta));

    std::vector<std::vector<BoundaryPoint>> column_boundaries(static_cast<std::size_t>(grid.n_delta));

    parallel_for(static_cast<std::size_t>(grid.n_delta), [&](std::size_t id) {
        const double delta = out.deltas[id];
        for (std::size_t it = 0; it < out.taus.size(); ++it) {
            const double tau = out.taus[it];
            const FieldRatioMap fields = map_field_ratio(field_ratio, delta);
            const SpinParams p{fields.omega1, fields.omega2, j_coupling, tau};
            const Mat4 rho = thermal_density_matrix(p);

            PhaseCell& cell = out.cells[id * out.taus.size() + it];
            cell.tau = tau;
            cell.omega_delta = delta;
            cell.expectation = witness_expectation(rho);
            cell.verdict = cell.expectation < 0.0 ? WitnessVerdict::EntangledDetected
                                                  : WitnessVerdict::NotDetected;
            cell.ppt = oracle::ppt_verdict(rho);
        }

        // Refine every sign change along tau until the witness itself is
        // within 1e-6 of zero and the bracket is below 1e-6 wide.
        for (std::size_t it = 0; it + 1 < out.taus.size(); ++it) {
            double lo = out.taus[it];
            double hi = out.taus[it + 1];
            double w_lo = out.cells[id * out.taus.size() + it].expectation;
            const double w_hi = out.cells[id * out.taus.size() + it + 1].expectation;
            if (w_lo == 0.0 || std::signbit(w_lo) == std::signbit(w_hi)) continue;

            double mid = 0.5 * (lo + hi);
            double w_mid = 0.0;
            for (int iter = 0; iter < 200; ++iter) {
                mid = 0.5 * (lo + hi);
                w_mid = witness_at(mid, delta, field_ratio, j_coupling);
                if (std::abs(w_mid) < 1e-6 && hi - lo < 1e-6) break;
                if (std::signbit(w_mid) == std::signbit(w_lo)) {
                    lo = mid;
                    w_lo = w_mid;
                } else {
                    hi = mid;
                }
            }
            column_boundaries[id].push_back({delta, mid, w_mid});
        }
    });

    for (const auto& pts : column_boundaries)
        out.boundary.insert(out.boundary.end(), pts.begin(), pts.end());
    return out;
}

std::string to_string(WitnessVerdict v) {
    return v == WitnessVerdict::EntangledDetected ? "entangled-detected" : "not-detected";
}

std::string to_string(SeparabilityVerdict v) {
    return v == SeparabilityVerdict::Entangled ? "entangled" : "separable";
}

std::string to_string(oracle::PptVerdict v) {
    return v == oracle::PptVerdict::Entangled ? "entangled" : "separable";
}

}  // namespace spinpair
