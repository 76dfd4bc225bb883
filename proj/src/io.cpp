#include "spinpair/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "spinpair/quantifiers.hpp"
#include "spinpair/thermal_state.hpp"

namespace spinpair {

namespace {

constexpr double kDegPerRad = 57.29577951308232;

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

nlohmann::json matrix_json(const Mat4& m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json rrow = nlohmann::json::array();
        nlohmann::json irow = nlohmann::json::array();
        for (int j = 0; j < 4; ++j) {
            rrow.push_back(std::real(m(i, j)));
            irow.push_back(std::imag(m(i, j)));
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    return {{"re", re}, {"im", im}};
}

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) return "0";  // collapses negative zero
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string quantity_column_name(SweepQuantity q) {
    switch (q) {
        case SweepQuantity::Coherence: return "coherence";
        case SweepQuantity::Mixedness: return "mixedness";
        case SweepQuantity::Witness: return "witness_expectation";
    }
    return "value";
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, SweepQuantity q) {
    os << "tau,omega_sigma,omega_delta," << quantity_column_name(q);
    const bool with_verdict = q == SweepQuantity::Witness;
    if (with_verdict) os << ",verdict";
    os << "\n";
    for (const SweepRow& r : rows) {
        os << format_number(r.tau) << ',' << format_number(r.omega_sigma) << ','
           << format_number(r.omega_delta) << ',' << format_number(r.value);
        if (with_verdict) os << ',' << to_string(r.verdict);
        os << "\n";
    }
}

void write_phase_grid_csv(std::ostream& os, const PhaseDiagram& pd) {
    os << "tau,omega_delta,witness_expectation,verdict,ppt_verdict\n";
    for (const PhaseCell& c : pd.cells) {
        os << format_number(c.tau) << ',' << format_number(c.omega_delta) << ','
           << format_number(c.expectation) << ',' << to_string(c.verdict) << ','
           << to_string(c.ppt) << "\n";
    }
}

void write_phase_boundary_csv(std::ostream& os, const PhaseDiagram& pd) {
    os << "omega_delta,tau,witness_expectation\n";
    for (const BoundaryPoint& b : pd.boundary) {
        os << format_number(b.omega_delta) << ',' << format_number(b.tau) << ','
           << format_number(b.expectation) << "\n";
    }
}

void write_trace_csv(std::ostream& os, const SpectrumTrace& trace) {
    os << "frequency,intensity\n";
    for (std::size_t i = 0; i < trace.frequencies.size(); ++i)
        os << format_number(trace.frequencies[i]) << ',' << format_number(trace.intensities[i])
           << "\n";
}

std::string spectrum_sidecar_json(const LabeledSpectrum& ls, const ScenarioOptions& opt) {
    const DerivedParams d = derive_params(ls.params);
    nlohmann::json lines = nlohmann::json::array();
    for (const TransitionLine& l : ls.lines) {
        lines.push_back({{"from_level", l.from_level},
                         {"to_level", l.to_level},
                         {"frequency", l.frequency},
                         {"amplitude", l.amplitude}});
    }
    const auto roof = roofing_intensity_factors(ls.theta);
    nlohmann::json j{
        {"schema_version", kSchemaVersion},
        {"scenario", ls.scenario},
        {"theta_deg", ls.theta * kDegPerRad},
        {"flip_angle_deg", opt.flip_angle * kDegPerRad},
        {"linewidth", opt.linewidth},
        {"tau", ls.params.tau},
        {"omega_sigma", d.omega_sigma / ls.params.j_coupling},
        {"omega_delta", d.omega_delta / ls.params.j_coupling},
        {"roofing_intensity_factors", {roof.first, roof.second}},
        {"lines", lines},
    };
    return j.dump(2);
}

std::string point_report_json(const SpinParams& p) {
    const DerivedParams d = derive_params(p);
    const EnergyLevels e = energy_levels(p);
    const PartitionFunction z = partition_function(p);
    const Populations pops = boltzmann_populations(p);
    const Mat4 rho = thermal_density_matrix(p);
    const StateEigenvalues lam = state_eigenvalues(rho);
    const WitnessReport w = make_witness_report(rho, p);

    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["parameters"] = {{"omega1", p.omega1},
                       {"omega2", p.omega2},
                       {"j_coupling", p.j_coupling},
                       {"tau", p.tau}};
    j["derived"] = {{"omega_sigma", d.omega_sigma},
                    {"omega_delta", d.omega_delta},
                    {"d_gap", d.d_gap},
                    {"theta", d.theta},
                    {"theta_deg", d.theta * kDegPerRad}};
    j["energies"] = {e.e1, e.e2, e.e3, e.e4};
    j["critical_omega_sigma"] = critical_omega_sigma(p.j_coupling, d.omega_delta);
    j["partition_function"] = {{"log_value", z.log_value()}, {"value", z.value()}};
    j["populations"] = {pops.p1, pops.p2, pops.p3, pops.p4};
    j["density_matrix"] = matrix_json(rho);
    j["state_eigenvalues"] = {lam.l1, lam.l2, lam.l3, lam.l4};
    j["quantifiers"] = {{"purity", purity(rho)},
                        {"mixedness", mixedness(rho)},
                        {"mixedness_closed_form", mixedness_closed_form(p)},
                        {"entropy", von_neumann_entropy(lam)},
                        {"diagonal_entropy", diagonal_entropy(rho)},
                        {"coherence", coherence_relative_entropy(rho)},
                        {"concurrence", concurrence_check(rho)}};
    j["witness"] = {{"expectation", w.expectation},
                    {"fidelity", w.fidelity},
                    {"fidelity_form", w.fidelity_form},
                    {"energy_form", w.energy_form},
                    {"correlators", {w.correlators.cxx, w.correlators.cyy, w.correlators.czz}},
                    {"verdict", to_string(w.verdict)},
                    {"ppt_verdict", to_string(w.ppt_verdict)},
                    {"separability", to_string(separability_conditions(rho))}};
    return j.dump(2);
}

std::vector<ObservablesRow> read_observables_csv(std::istream& is) {
    std::vector<ObservablesRow> rows;
    std::string line;
    int line_number = 0;
    bool header_seen = false;

    while (std::getline(is, line)) {
        ++line_number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        if (!header_seen) {
            std::string lowered = stripped;
            std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            lowered.erase(std::remove_if(lowered.begin(), lowered.end(),
                                         [](unsigned char c) { return std::isspace(c); }),
                          lowered.end());
            if (lowered != "p1z,p2z,p1z2z,theta_deg") {
                ObservablesRow bad;
                bad.line_number = line_number;
                bad.error = "line " + std::to_string(line_number) +
                            ": expected header p1z,p2z,p1z2z,theta_deg";
                rows.push_back(bad);
                return rows;
            }
            header_seen = true;
            continue;
        }

        ObservablesRow row;
        row.line_number = line_number;
        const std::vector<std::string> fields = split_csv_line(stripped);
        if (fields.size() != 4) {
            row.error = "line " + std::to_string(line_number) + ": expected 4 fields, got " +
                        std::to_string(fields.size());
            rows.push_back(row);
            continue;
        }
        double values[4];
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) ok = parse_double(fields[static_cast<std::size_t>(i)], values[i]);
        if (!ok) {
            row.error = "line " + std::to_string(line_number) + ": non-numeric field";
            rows.push_back(row);
            continue;
        }
        row.parsed = true;
        row.observables = {values[0], values[1], values[2]};
        row.theta = values[3] / kDegPerRad;
        rows.push_back(row);
    }

    if (!header_seen) {
        ObservablesRow bad;
        bad.line_number = line_number;
        bad.error = "missing header p1z,p2z,p1z2z,theta_deg";
        rows.push_back(bad);
    }
    return rows;
}

void write_reconstruction_csv(std::ostream& os,
                              const std::vector<ReconstructionRowResult>& rows) {
    os << "line,p1z,p2z,p1z2z,theta_deg,p1,p2,p3,p4,m_observables,m_populations,"
          "condition_number,status\n";
    for (const ReconstructionRowResult& r : rows) {
        os << r.line_number << ',' << format_number(r.observables.p1z) << ','
           << format_number(r.observables.p2z) << ',' << format_number(r.observables.p1z2z)
           << ',' << format_number(r.theta * kDegPerRad) << ',';
        if (r.status == "ok") {
            os << format_number(r.populations.p1) << ',' << format_number(r.populations.p2)
               << ',' << format_number(r.populations.p3) << ','
               << format_number(r.populations.p4) << ',' << format_number(r.m_observables)
               << ',' << format_number(r.m_populations) << ','
               << format_number(r.condition_number);
        } else {
            os << ",,,,,," << format_number(r.condition_number);
        }
        os << ',' << r.status << "\n";
    }
}

}  // namespace spinpair
