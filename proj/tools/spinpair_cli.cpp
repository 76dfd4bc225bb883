// spinpair: command-line front end for the coupled two-spin thermal model.
//
// Subcommands: point, sweep, phase-diagram, spectra, reconstruct, validate.
// Frequencies are given as ratios to the coupling (--omega-sigma means
// omega_sigma / J) unless --j changes the unit.  Invalid parameters exit
// with status 2 and a message naming the violated precondition; failed
// validation exits with status 1.
//
// SPINPAIR_THREADS overrides the worker count used by sweeps and grids.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinpair/io.hpp"
#include "spinpair/quantifiers.hpp"
#include "spinpair/reconstruction.hpp"
#include "spinpair/spectrum.hpp"
#include "spinpair/sweeps.hpp"
#include "spinpair/thermal_state.hpp"
#include "spinpair/validation.hpp"
#include "spinpair/witness.hpp"

namespace {

constexpr double kRadPerDeg = 0.017453292519943295;

struct PointOptions {
    double tau = 1.0;
    double omega_sigma = 2.0;
    double omega_delta = 0.0;
    double j = 1.0;
    std::string json_path;
};

struct SweepOptions {
    std::string quantity = "mixedness";
    std::string axis = "omega-sigma";
    double min = 0.0;
    double max = 6.0;
    int points = 241;
    double tau = 0.01;
    double omega_sigma = 2.0;
    double omega_delta = 0.0;
    double j = 1.0;
    std::string output;
};

struct PhaseOptions {
    double ratio = -1.0;
    spinpair::PhaseGridSpec grid;
    double j = 1.0;
    std::string output;
    std::string boundary;
};

struct SpectraOptions {
    std::vector<double> theta_deg{45.0, 30.0, 10.0};
    double tau = 0.01;
    double flip_deg = 5.0;
    double linewidth = 0.02;
    int points = 2000;
    std::string out_dir = ".";
};

struct ReconstructOptions {
    std::string input;
    std::string output;
    double epsilon_theta = 1e-6;
    double population_tol = 1e-9;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
}

// Writes to the named file, or to stdout when the name is empty or "-".
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os = open_output(path);
    os << content;
}

spinpair::SpinParams params_from(double omega_sigma, double omega_delta, double tau, double j) {
    return spinpair::SpinParams::from_ratios(omega_sigma, omega_delta, tau, j);
}

int run_point(const PointOptions& opt) {
    using namespace spinpair;
    const SpinParams p = params_from(opt.omega_sigma, opt.omega_delta, opt.tau, opt.j);
    if (!(p.tau > 0.0)) throw std::invalid_argument("tau must be > 0");

    const DerivedParams d = derive_params(p);
    const EnergyLevels e = energy_levels(p);
    const PartitionFunction z = partition_function(p);
    const Populations pops = boltzmann_populations(p);
    const Mat4 rho = thermal_density_matrix(p);
    const StateEigenvalues lam = state_eigenvalues(rho);
    const WitnessReport w = make_witness_report(rho, p);

    auto f = [](double x) { return format_number(x); };
    std::ostream& os = std::cout;
    os << "two-spin thermal state\n";
    os << "  omega1 = " << f(p.omega1) << "  omega2 = " << f(p.omega2) << "  J = "
       << f(p.j_coupling) << "  tau = " << f(p.tau) << "\n";
    os << "  omega_sigma/J = " << f(d.omega_sigma / p.j_coupling) << "  omega_delta/J = "
       << f(d.omega_delta / p.j_coupling) << "  D/J = " << f(d.d_gap / p.j_coupling)
       << "  theta = " << f(d.theta / kRadPerDeg) << " deg\n";
    os << "  level crossing at omega_sigma/J = "
       << f(critical_omega_sigma(p.j_coupling, d.omega_delta) / p.j_coupling) << "\n";
    os << "energies/J: " << f(e.e1 / p.j_coupling) << "  " << f(e.e2 / p.j_coupling) << "  "
       << f(e.e3 / p.j_coupling) << "  " << f(e.e4 / p.j_coupling) << "\n";
    os << "partition function: Z = " << f(z.value()) << "  (log Z = " << f(z.log_value())
       << ")\n";
    os << "populations: " << f(pops.p1) << "  " << f(pops.p2) << "  " << f(pops.p3) << "  "
       << f(pops.p4) << "\n";
    os << "density matrix diagonal: " << f(std::real(rho(0, 0))) << "  "
       << f(std::real(rho(1, 1))) << "  " << f(std::real(rho(2, 2))) << "  "
       << f(std::real(rho(3, 3))) << "\n";
    os << "central coherence rho(ab,ba) = " << f(std::real(rho(1, 2))) << "\n";
    os << "state eigenvalues: " << f(lam.l1) << "  " << f(lam.l2) << "  " << f(lam.l3) << "  "
       << f(lam.l4) << "\n";
    os << "purity = " << f(purity(rho)) << "\n";
    os << "mixedness = " << f(mixedness(rho)) << "  (closed form "
       << f(mixedness_closed_form(p)) << ")\n";
    os << "entropy = " << f(von_neumann_entropy(lam)) << " bits, diagonal entropy = "
       << f(diagonal_entropy(rho)) << " bits\n";
    os << "coherence = " << f(coherence_relative_entropy(rho)) << " bits\n";
    os << "concurrence = " << f(concurrence_check(rho)) << "\n";
    os << "witness <W> = " << f(w.expectation) << "  (fidelity form " << f(w.fidelity_form)
       << ", energy form " << f(w.energy_form) << ")\n";
    os << "singlet fidelity = " << f(w.fidelity) << "\n";
    os << "correlators: Cxx = " << f(w.correlators.cxx) << "  Cyy = " << f(w.correlators.cyy)
       << "  Czz = " << f(w.correlators.czz) << "\n";
    os << "verdict: " << to_string(w.verdict) << "  (ppt: " << to_string(w.ppt_verdict)
       << ", closed-form separability: " << to_string(separability_conditions(rho)) << ")\n";

    if (!opt.json_path.empty()) emit(opt.json_path, point_report_json(p) + "\n");
    return 0;
}

int run_sweep(const SweepOptions& opt) {
    using namespace spinpair;
    SweepSpec spec;
    if (opt.quantity == "coherence")
        spec.quantity = SweepQuantity::Coherence;
    else if (opt.quantity == "mixedness")
        spec.quantity = SweepQuantity::Mixedness;
    else if (opt.quantity == "witness")
        spec.quantity = SweepQuantity::Witness;
    else
        throw std::invalid_argument("quantity must be coherence, mixedness, or witness");

    if (opt.axis == "tau")
        spec.axis = SweepAxis::Tau;
    else if (opt.axis == "omega-sigma")
        spec.axis = SweepAxis::OmegaSigma;
    else
        throw std::invalid_argument("axis must be tau or omega-sigma");

    spec.min = opt.min;
    spec.max = opt.max;
    spec.points = opt.points;
    spec.tau = opt.tau;
    spec.omega_sigma = opt.omega_sigma;
    spec.omega_delta = opt.omega_delta;
    spec.j_coupling = opt.j;

    const std::vector<SweepRow> rows = spinpair::run_sweep(spec);
    std::ostringstream buf;
    write_sweep_csv(buf, rows, spec.quantity);
    emit(opt.output, buf.str());
    return 0;
}

int run_phase(const PhaseOptions& opt) {
    using namespace spinpair;
    const PhaseDiagram pd = phase_diagram(opt.grid, opt.ratio, opt.j);

    std::ostringstream grid_buf;
    write_phase_grid_csv(grid_buf, pd);
    emit(opt.output, grid_buf.str());

    if (!opt.boundary.empty()) {
        std::ostringstream b;
        write_phase_boundary_csv(b, pd);
        emit(opt.boundary, b.str());
    }
    return 0;
}

std::string theta_tag(double deg) {
    std::string t = spinpair::format_number(deg);
    for (char& c : t) {
        if (c == '.') c = 'p';
        if (c == '-') c = 'm';
    }
    return t;
}

int run_spectra(const SpectraOptions& opt) {
    using namespace spinpair;
    ScenarioOptions so;
    so.tau = opt.tau;
    so.flip_angle = opt.flip_deg * kRadPerDeg;
    so.linewidth = opt.linewidth;
    so.axis_points = opt.points;

    std::vector<double> thetas;
    thetas.reserve(opt.theta_deg.size());
    for (double deg : opt.theta_deg) thetas.push_back(deg * kRadPerDeg);

    const std::vector<LabeledSpectrum> spectra = scenario_spectra(thetas, so);

    std::filesystem::create_directories(opt.out_dir);
    for (const LabeledSpectrum& ls : spectra) {
        const std::string stem =
            ls.scenario + "-theta" + theta_tag(ls.theta / kRadPerDeg);
        const std::filesystem::path csv_path =
            std::filesystem::path(opt.out_dir) / ("spectrum-" + stem + ".csv");
        const std::filesystem::path json_path =
            std::filesystem::path(opt.out_dir) / ("lines-" + stem + ".json");

        std::ofstream csv = open_output(csv_path.string());
        write_trace_csv(csv, ls.trace);
        std::ofstream js = open_output(json_path.string());
        js << spectrum_sidecar_json(ls, so) << "\n";
        std::cout << csv_path.string() << "\n" << json_path.string() << "\n";
    }
    return 0;
}

int run_reconstruct(const ReconstructOptions& opt) {
    using namespace spinpair;
    std::vector<ObservablesRow> raw;
    if (opt.input.empty() || opt.input == "-") {
        raw = read_observables_csv(std::cin);
    } else {
        std::ifstream is(opt.input);
        if (!is) throw std::runtime_error("cannot open input file: " + opt.input);
        raw = read_observables_csv(is);
    }

    ReconstructionOptions ropt;
    ropt.epsilon_theta = opt.epsilon_theta;
    ropt.population_tol = opt.population_tol;

    std::vector<ReconstructionRowResult> results;
    results.reserve(raw.size());
    for (const ObservablesRow& row : raw) {
        if (!row.parsed) {
            std::cerr << "reconstruct: " << row.error << "\n";
            ReconstructionRowResult bad;
            bad.line_number = row.line_number;
            bad.status = "parse-error";
            results.push_back(bad);
            continue;
        }
        ReconstructionRowResult r = reconstruct_row(row.line_number, row.observables, row.theta, ropt);
        if (r.status != "ok")
            std::cerr << "reconstruct: line " << row.line_number << ": " << r.status << "\n";
        results.push_back(std::move(r));
    }

    std::ostringstream buf;
    write_reconstruction_csv(buf, results);
    emit(opt.output, buf.str());
    return 0;
}

int run_validate() {
    using namespace spinpair;
    const std::vector<CheckResult> results = run_validation_checks();
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                  << "  max_error=" << format_number(r.max_error)
                  << " tolerance=" << format_number(r.tolerance);
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    if (!all_passed(results)) {
        std::cout << "validation FAILED\n";
        return 1;
    }
    std::cout << "all validation checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled two-spin thermal-state toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI/TOML file");

    PointOptions point_opt;
    CLI::App* point = app.add_subcommand("point", "report every quantity at one parameter set");
    point->add_option("--tau", point_opt.tau, "reduced temperature k_B T / J (> 0)");
    point->add_option("--omega-sigma", point_opt.omega_sigma, "(omega1 + omega2) / J");
    point->add_option("--omega-delta", point_opt.omega_delta, "(omega1 - omega2) / J");
    point->add_option("--j", point_opt.j, "coupling in raw units (> 0)");
    point->add_option("--json", point_opt.json_path, "also write a JSON report (path or -)");

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "sweep a quantity along tau or omega-sigma");
    sweep->add_option("--quantity", sweep_opt.quantity, "coherence | mixedness | witness");
    sweep->add_option("--axis", sweep_opt.axis, "tau | omega-sigma");
    sweep->add_option("--min", sweep_opt.min, "axis start");
    sweep->add_option("--max", sweep_opt.max, "axis end");
    sweep->add_option("--points", sweep_opt.points, "grid size (>= 2)");
    sweep->add_option("--tau", sweep_opt.tau, "fixed tau (omega-sigma sweeps)");
    sweep->add_option("--omega-sigma", sweep_opt.omega_sigma, "fixed omega_sigma/J (tau sweeps)");
    sweep->add_option("--omega-delta", sweep_opt.omega_delta, "fixed omega_delta/J");
    sweep->add_option("--j", sweep_opt.j, "coupling in raw units (> 0)");
    sweep->add_option("-o,--output", sweep_opt.output, "CSV output path (default stdout)");

    PhaseOptions phase_opt;
    CLI::App* phase = app.add_subcommand(
        "phase-diagram", "witness verdict over a (tau, omega_delta) grid at fixed field ratio");
    phase->add_option("-r,--ratio", phase_opt.ratio, "field ratio omega1/omega2 (r = 1 is singular)");
    phase->add_option("--tau-min", phase_opt.grid.tau_min, "smallest tau (> 0)");
    phase->add_option("--tau-max", phase_opt.grid.tau_max, "largest tau");
    phase->add_option("--tau-points", phase_opt.grid.n_tau, "tau grid size (>= 2)");
    phase->add_option("--delta-min", phase_opt.grid.delta_min, "smallest omega_delta/J");
    phase->add_option("--delta-max", phase_opt.grid.delta_max, "largest omega_delta/J");
    phase->add_option("--delta-points", phase_opt.grid.n_delta, "omega_delta grid size (>= 2)");
    phase->add_option("--j", phase_opt.j, "coupling in raw units (> 0)");
    phase->add_option("-o,--output", phase_opt.output, "grid CSV output path (default stdout)");
    phase->add_option("--boundary", phase_opt.boundary, "boundary CSV output path");

    SpectraOptions spectra_opt;
    CLI::App* spectra = app.add_subcommand(
        "spectra", "synthesize transition spectra below, at, and above the level crossing");
    spectra->add_option("--theta-deg", spectra_opt.theta_deg,
                        "mixing angles in degrees (repeatable)");
    spectra->add_option("--tau", spectra_opt.tau, "reduced temperature (> 0)");
    spectra->add_option("--flip-deg", spectra_opt.flip_deg, "readout tip angle in degrees");
    spectra->add_option("--linewidth", spectra_opt.linewidth, "Lorentzian HWHM in units of J");
    spectra->add_option("--points", spectra_opt.points, "samples along the frequency axis");
    spectra->add_option("--out-dir", spectra_opt.out_dir, "directory for CSV/JSON output");

    ReconstructOptions rec_opt;
    CLI::App* rec = app.add_subcommand(
        "reconstruct", "recover populations and mixedness from longitudinal observables");
    rec->add_option("-i,--input", rec_opt.input,
                    "CSV with header p1z,p2z,p1z2z,theta_deg (default stdin)");
    rec->add_option("-o,--output", rec_opt.output, "CSV output path (default stdout)");
    rec->add_option("--epsilon-theta", rec_opt.epsilon_theta,
                    "reject rows with |cos 2 theta| below this");
    rec->add_option("--population-tol", rec_opt.population_tol,
                    "slack before observables count as inconsistent");

    CLI::App* validate =
        app.add_subcommand("validate", "run the internal consistency battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (point->parsed()) return run_point(point_opt);
        if (sweep->parsed()) return run_sweep(sweep_opt);
        if (phase->parsed()) return run_phase(phase_opt);
        if (spectra->parsed()) return run_spectra(spectra_opt);
        if (rec->parsed()) return run_reconstruct(rec_opt);
        if (validate->parsed()) return run_validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
