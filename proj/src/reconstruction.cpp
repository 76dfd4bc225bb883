#include "spinpair/reconstruction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spinpair {

NmrObservables forward_observables(const Populations& pops, double theta) {
    const double c2 = std::cos(2.0 * theta);
    NmrObservables o;
    o.p1z = pops.p1 - pops.p4 + (pops.p2 - pops.p3) * c2;
    o.p2z = pops.p1 - pops.p4 + (pops.p3 - pops.p2) * c2;
    o.p1z2z = pops.p1 + pops.p4 - (pops.p2 + pops.p3);
    return o;
}

namespace {

void check_observable_range(const NmrObservables& obs) {
    const double values[3] = {obs.p1z, obs.p2z, obs.p1z2z};
    const char* names[3] = {"p1z", "p2z", "p1z2z"};
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(values[i]) || std::abs(values[i]) > 1.0 + 1e-12)
            throw std::invalid_argument(std::string(names[i]) + " must lie in [-1, 1]");
    }
}

double checked_cos2theta(double theta, const ReconstructionOptions& opt) {
    const double c2 = std::cos(2.0 * theta);
    if (std::abs(c2) < opt.epsilon_theta)
        throw std::domain_error(
            "mixing angle too close to pi/4: polarizations carry no independent "
            "information there");
    return c2;
}

}  // namespace

Populations reconstruct_populations(const NmrObservables& obs, double theta,
                                    const ReconstructionOptions& opt) {
    check_observable_range(obs);
    const double c2 = checked_cos2theta(theta, opt);

    const double sum = obs.p1z + obs.p2z;
    const double diff = (obs.p1z - obs.p2z) / c2;
    const double zz = obs.p1z2z;

    Populations pops;
    pops.p1 = 0.25 * (1.0 + sum + zz);
    pops.p2 = 0.25 * (1.0 - zz + diff);
    pops.p3 = 0.25 * (1.0 - zz - diff);
    pops.p4 = 0.25 * (1.0 - sum + zz);

    std::array<double, 4> raw = pops.as_array();
    double total = 0.0;
    for (double& p : raw) {
        if (p < -opt.population_tol || p > 1.0 + opt.population_tol)
            throw std::invalid_argument("observables are inconsistent: implied population outside [0, 1]");
        p = std::min(std::max(p, 0.0), 1.0);
        total += p;
    }
    // The four expressions sum to 1 exactly; total can drift only by rounding
    // or clamping within population_tol.
    pops.p1 = raw[0] / total;
    pops.p2 = raw[1] / total;
    pops.p3 = raw[2] / total;
    pops.p4 = raw[3] / total;
    return pops;
}

double mixedness_from_observables(const NmrObservables& obs, double theta,
                                  const ReconstructionOptions& opt) {
    check_observable_range(obs);
    const double c2 = checked_cos2theta(theta, opt);
    const double sum = obs.p1z + obs.p2z;
    const double diff = (obs.p1z - obs.p2z) / c2;
    return 1.0 - (2.0 * obs.p1z2z * obs.p1z2z + sum * sum + diff * diff) / 6.0;
}

double mixedness_from_populations(const Populations& pops) {
    double s = 0.0;
    for (double p : pops.as_array()) s += p * p;
    return (4.0 / 3.0) * (1.0 - s);
}

double reconstruction_condition_number(double theta) {
    const double c2 = std::cos(2.0 * theta);
    if (c2 == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::abs(c2);
}

ReconstructionRowResult reconstruct_row(int line_number, const NmrObservables& obs,
                                        double theta, const ReconstructionOptions& opt) {
    ReconstructionRowResult row;
    row.line_number = line_number;
    row.observables = obs;
    row.theta = theta;
    row.condition_number = reconstruction_condition_number(theta);
    try {
        row.populations = reconstruct_populations(obs, theta, opt);
        row.m_observables = mixedness_from_observables(obs, theta, opt);
        row.m_populations = mixedness_from_populations(row.populations);
        row.status = "ok";
    } catch (const std::domain_error&) {
        row.status = "theta-degenerate";
    } catch (const std::invalid_argument& e) {
        row.status = std::string(e.what()).find("inconsistent") != std::string::npos
                         ? "inconsistent-observables"
                         : "observable-out-of-range";
    }
    return row;
}

}  // namespace spinpair
