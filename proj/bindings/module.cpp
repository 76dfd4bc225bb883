// Python bindings for the two-spin thermal-state library.  Matrices cross the
// boundary as complex128 numpy arrays; enums cross as short strings.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinpair/io.hpp"
#include "spinpair/oracle.hpp"
#include "spinpair/quantifiers.hpp"
#include "spinpair/random_states.hpp"
#include "spinpair/reconstruction.hpp"
#include "spinpair/spectrum.hpp"
#include "spinpair/spin_system.hpp"
#include "spinpair/sweeps.hpp"
#include "spinpair/thermal_state.hpp"
#include "spinpair/validation.hpp"
#include "spinpair/witness.hpp"

namespace py = pybind11;
using namespace spinpair;

namespace {

py::array_t<cplx> to_numpy(const Mat4& m) {
    py::array_t<cplx> out({4, 4});
    auto buf = out.mutable_unchecked<2>();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) buf(i, j) = m(i, j);
    return out;
}

py::array_t<cplx> to_numpy(const Vec4& v) {
    // The scalar-count constructor can produce a zero-stride array; spell the
    // shape out explicitly.
    py::array_t<cplx> out(std::vector<py::ssize_t>{4});
    auto buf = out.mutable_unchecked<1>();
    for (int i = 0; i < 4; ++i) buf(i) = v[static_cast<std::size_t>(i)];
    return out;
}

Mat4 mat4_from(py::handle obj) {
    const auto arr = py::array_t<cplx, py::array::c_style | py::array::forcecast>::ensure(obj);
    if (!arr || arr.ndim() != 2 || arr.shape(0) != 4 || arr.shape(1) != 4)
        throw std::invalid_argument("expected a 4x4 matrix");
    const auto buf = arr.unchecked<2>();
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = buf(i, j);
    return m;
}

Vec4 vec4_from(py::handle obj) {
    const auto arr = py::array_t<cplx, py::array::c_style | py::array::forcecast>::ensure(obj);
    if (!arr || arr.ndim() != 1 || arr.shape(0) != 4)
        throw std::invalid_argument("expected a length-4 vector");
    const auto buf = arr.unchecked<1>();
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = buf(i);
    return v;
}

}  // namespace

PYBIND11_MODULE(spinpair, m) {
    m.doc() = "thermally polarized coupled two-spin model: states, quantifiers, "
              "witness, spectra, reconstruction";

    py::class_<SpinParams>(m, "SpinParams")
        .def(py::init([](double omega1, double omega2, double j_coupling, double tau) {
                 SpinParams p{omega1, omega2, j_coupling, tau};
                 p.validate();
                 return p;
             }),
             py::arg("omega1"), py::arg("omega2"), py::arg("j_coupling") = 1.0,
             py::arg("tau") = 1.0)
        .def_static("from_ratios", &SpinParams::from_ratios, py::arg("omega_sigma"),
                    py::arg("omega_delta"), py::arg("tau"), py::arg("j_coupling") = 1.0)
        .def_readonly("omega1", &SpinParams::omega1)
        .def_readonly("omega2", &SpinParams::omega2)
        .def_readonly("j_coupling", &SpinParams::j_coupling)
        .def_readonly("tau", &SpinParams::tau);

    py::class_<DerivedParams>(m, "DerivedParams")
        .def_readonly("omega_sigma", &DerivedParams::omega_sigma)
        .def_readonly("omega_delta", &DerivedParams::omega_delta)
        .def_readonly("d_gap", &DerivedParams::d_gap)
        .def_readonly("theta", &DerivedParams::theta);

    py::class_<EnergyLevels>(m, "EnergyLevels")
        .def_readonly("e1", &EnergyLevels::e1)
        .def_readonly("e2", &EnergyLevels::e2)
        .def_readonly("e3", &EnergyLevels::e3)
        .def_readonly("e4", &EnergyLevels::e4)
        .def("level", &EnergyLevels::level, py::arg("index"))
        .def("as_tuple", [](const EnergyLevels& e) {
            return py::make_tuple(e.e1, e.e2, e.e3, e.e4);
        });

    py::class_<Populations>(m, "Populations")
        .def_readonly("p1", &Populations::p1)
        .def_readonly("p2", &Populations::p2)
        .def_readonly("p3", &Populations::p3)
        .def_readonly("p4", &Populations::p4)
        .def("as_tuple", [](const Populations& p) {
            return py::make_tuple(p.p1, p.p2, p.p3, p.p4);
        });

    py::class_<PartitionFunction>(m, "PartitionFunction")
        .def_property_readonly("log_value", &PartitionFunction::log_value)
        .def_property_readonly("value", &PartitionFunction::value);

    py::class_<StateEigenvalues>(m, "StateEigenvalues")
        .def_readonly("l1", &StateEigenvalues::l1)
        .def_readonly("l2", &StateEigenvalues::l2)
        .def_readonly("l3", &StateEigenvalues::l3)
        .def_readonly("l4", &StateEigenvalues::l4)
        .def("as_tuple", [](const StateEigenvalues& l) {
            return py::make_tuple(l.l1, l.l2, l.l3, l.l4);
        });

    py::class_<PauliCorrelators>(m, "PauliCorrelators")
        .def_readonly("cxx", &PauliCorrelators::cxx)
        .def_readonly("cyy", &PauliCorrelators::cyy)
        .def_readonly("czz", &PauliCorrelators::czz);

    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("expectation", &WitnessReport::expectation)
        .def_readonly("fidelity", &WitnessReport::fidelity)
        .def_readonly("fidelity_form", &WitnessReport::fidelity_form)
        .def_readonly("energy_form", &WitnessReport::energy_form)
        .def_readonly("correlators", &WitnessReport::correlators)
        .def_property_readonly("verdict",
                               [](const WitnessReport& r) { return to_string(r.verdict); })
        .def_property_readonly("ppt_verdict",
                               [](const WitnessReport& r) { return to_string(r.ppt_verdict); });

    py::class_<TransitionLine>(m, "TransitionLine")
        .def_readonly("from_level", &TransitionLine::from_level)
        .def_readonly("to_level", &TransitionLine::to_level)
        .def_readonly("frequency", &TransitionLine::frequency)
        .def_readonly("amplitude", &TransitionLine::amplitude);

    py::class_<SpectrumTrace>(m, "SpectrumTrace")
        .def_readonly("frequencies", &SpectrumTrace::frequencies)
        .def_readonly("intensities", &SpectrumTrace::intensities)
        .def_readonly("linewidth", &SpectrumTrace::linewidth);

    py::class_<LabeledSpectrum>(m, "LabeledSpectrum")
        .def_readonly("scenario", &LabeledSpectrum::scenario)
        .def_readonly("theta", &LabeledSpectrum::theta)
        .def_readonly("params", &LabeledSpectrum::params)
        .def_readonly("lines", &LabeledSpectrum::lines)
        .def_readonly("trace", &LabeledSpectrum::trace);

    py::class_<NmrObservables>(m, "NmrObservables")
        .def(py::init([](double p1z, double p2z, double p1z2z) {
                 return NmrObservables{p1z, p2z, p1z2z};
             }),
             py::arg("p1z"), py::arg("p2z"), py::arg("p1z2z"))
        .def_readonly("p1z", &NmrObservables::p1z)
        .def_readonly("p2z", &NmrObservables::p2z)
        .def_readonly("p1z2z", &NmrObservables::p1z2z);

    py::class_<PhaseCell>(m, "PhaseCell")
        .def_readonly("tau", &PhaseCell::tau)
        .def_readonly("omega_delta", &PhaseCell::omega_delta)
        .def_readonly("expectation", &PhaseCell::expectation)
        .def_property_readonly("verdict",
                               [](const PhaseCell& c) { return to_string(c.verdict); })
        .def_property_readonly("ppt_verdict",
                               [](const PhaseCell& c) { return to_string(c.ppt); });

    py::class_<BoundaryPoint>(m, "BoundaryPoint")
        .def_readonly("omega_delta", &BoundaryPoint::omega_delta)
        .def_readonly("tau", &BoundaryPoint::tau)
        .def_readonly("expectation", &BoundaryPoint::expectation);

    py::class_<PhaseGridSpec>(m, "PhaseGridSpec")
        .def(py::init<>())
        .def_readwrite("tau_min", &PhaseGridSpec::tau_min)
        .def_readwrite("tau_max", &PhaseGridSpec::tau_max)
        .def_readwrite("n_tau", &PhaseGridSpec::n_tau)
        .def_readwrite("delta_min", &PhaseGridSpec::delta_min)
        .def_readwrite("delta_max", &PhaseGridSpec::delta_max)
        .def_readwrite("n_delta", &PhaseGridSpec::n_delta);

    py::class_<PhaseDiagram>(m, "PhaseDiagram")
        .def_readonly("field_ratio", &PhaseDiagram::field_ratio)
        .def_readonly("taus", &PhaseDiagram::taus)
        .def_readonly("deltas", &PhaseDiagram::deltas)
        .def_readonly("cells", &PhaseDiagram::cells)
        .def_readonly("boundary", &PhaseDiagram::boundary);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::pass)
        .def_readonly("max_error", &CheckResult::max_error)
        .def_readonly("tolerance", &CheckResult::tolerance)
        .def_readonly("detail", &CheckResult::detail);

    py::class_<StateSampler>(m, "StateSampler")
        .def(py::init<std::uint64_t>(), py::arg("seed") = 0x5eed5eedULL)
        .def("haar_pure", [](StateSampler& s) { return to_numpy(s.haar_pure()); })
        .def("random_density",
             [](StateSampler& s, int n) { return to_numpy(s.random_density(n)); },
             py::arg("n_terms") = 4)
        .def("random_separable",
             [](StateSampler& s, int n) { return to_numpy(s.random_separable(n)); },
             py::arg("n_terms") = 6)
        .def("random_x_state", [](StateSampler& s) { return to_numpy(s.random_x_state()); })
        .def("random_populations", &StateSampler::random_populations);

    // --- system -----------------------------------------------------------
    m.def("derive_params", &derive_params, py::arg("params"));
    m.def("energy_levels", &energy_levels, py::arg("params"));
    m.def("hamiltonian_matrix",
          [](const SpinParams& p) { return to_numpy(hamiltonian_matrix(p)); }, py::arg("params"));
    m.def("zeeman_matrix", [](const SpinParams& p) { return to_numpy(zeeman_matrix(p)); },
          py::arg("params"));
    m.def("coupling_matrix", [](const SpinParams& p) { return to_numpy(coupling_matrix(p)); },
          py::arg("params"));
    m.def("eigenbasis_vectors", [](const SpinParams& p) {
        const EigenBasis b = eigenbasis(p);
        py::list out;
        for (int i = 1; i <= 4; ++i) out.append(to_numpy(b.vector(i)));
        return out;
    }, py::arg("params"));
    m.def("critical_j", &critical_j, py::arg("omega_sigma"), py::arg("omega_delta"));
    m.def("critical_omega_sigma", &critical_omega_sigma, py::arg("j_coupling"),
          py::arg("omega_delta"));

    // --- thermal state ----------------------------------------------------
    m.def("partition_function", &partition_function, py::arg("params"));
    m.def("boltzmann_populations", &boltzmann_populations, py::arg("params"));
    m.def("thermal_density_matrix",
          [](const SpinParams& p) { return to_numpy(thermal_density_matrix(p)); },
          py::arg("params"));
    m.def("state_eigenvalues", [](py::handle rho) { return state_eigenvalues(mat4_from(rho)); },
          py::arg("rho"));
    m.def("zero_temperature_state",
          [](const SpinParams& p, double tol) { return to_numpy(zero_temperature_state(p, tol)); },
          py::arg("params"), py::arg("degeneracy_tol") = 1e-9);

    // --- quantifiers ------------------------------------------------------
    m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("eigenvalues"));
    m.def("diagonal_entropy", [](py::handle rho) { return diagonal_entropy(mat4_from(rho)); },
          py::arg("rho"));
    m.def("coherence_relative_entropy",
          [](py::handle rho) { return coherence_relative_entropy(mat4_from(rho)); },
          py::arg("rho"));
    m.def("purity", [](py::handle rho) { return purity(mat4_from(rho)); }, py::arg("rho"));
    m.def("mixedness", [](py::handle rho) { return mixedness(mat4_from(rho)); }, py::arg("rho"));
    m.def("mixedness_closed_form", &mixedness_closed_form, py::arg("params"));
    m.def("fidelity_with_pure",
          [](py::handle rho, py::handle psi) {
              return fidelity_with_pure(mat4_from(rho), vec4_from(psi));
          },
          py::arg("rho"), py::arg("psi"));
    m.def("concurrence_check", [](py::handle rho) { return concurrence_check(mat4_from(rho)); },
          py::arg("rho"));

    // --- witness ----------------------------------------------------------
    m.def("singlet_vector", []() { return to_numpy(singlet_vector()); });
    m.def("singlet_projector", []() { return to_numpy(singlet_projector()); });
    m.def("witness_operator", []() { return to_numpy(witness_operator()); });
    m.def("pauli_correlators", [](py::handle rho) { return pauli_correlators(mat4_from(rho)); },
          py::arg("rho"));
    m.def("witness_expectation",
          [](py::handle rho) { return witness_expectation(mat4_from(rho)); }, py::arg("rho"));
    m.def("energy_witness_expectation",
          [](py::handle rho, const SpinParams& p) {
              return energy_witness_expectation(mat4_from(rho), p);
          },
          py::arg("rho"), py::arg("params"));
    m.def("separability_conditions",
          [](py::handle rho) { return to_string(separability_conditions(mat4_from(rho))); },
          py::arg("rho"));
    m.def("witness_report",
          [](py::handle rho, const SpinParams& p) { return make_witness_report(mat4_from(rho), p); },
          py::arg("rho"), py::arg("params"));
    m.def("map_field_ratio",
          [](double r, double omega_delta) {
              const FieldRatioMap fm = map_field_ratio(r, omega_delta);
              return py::make_tuple(fm.omega1, fm.omega2);
          },
          py::arg("ratio"), py::arg("omega_delta"));
    m.def("phase_diagram", &phase_diagram, py::arg("grid"), py::arg("field_ratio"),
          py::arg("j_coupling") = 1.0);

    // --- spectrum ---------------------------------------------------------
    m.def("allowed_transitions", &allowed_transitions, py::arg("params"));
    m.def("line_amplitudes",
          [](py::handle rho, const SpinParams& p, double flip) {
              return line_amplitudes(mat4_from(rho), p, flip);
          },
          py::arg("rho"), py::arg("params"), py::arg("flip_angle"));
    m.def("roofing_intensity_factors", &roofing_intensity_factors, py::arg("theta"));
    m.def("synthesize_trace",
          [](const std::vector<TransitionLine>& lines, double linewidth, double f_min,
             double f_max, int points) {
              return synthesize_trace(lines, linewidth, AxisSpec{f_min, f_max, points});
          },
          py::arg("lines"), py::arg("linewidth"), py::arg("f_min"), py::arg("f_max"),
          py::arg("points"));
    m.def("count_peaks_above", &count_peaks_above, py::arg("trace"), py::arg("fraction"));
    m.def("scenario_spectra",
          [](const std::vector<double>& thetas, double tau, double flip_angle, double linewidth,
             int axis_points) {
              ScenarioOptions opt;
              opt.tau = tau;
              opt.flip_angle = flip_angle;
              opt.linewidth = linewidth;
              opt.axis_points = axis_points;
              return scenario_spectra(thetas, opt);
          },
          py::arg("thetas"), py::arg("tau") = 0.01,
          py::arg("flip_angle") = 5.0 * 0.017453292519943295, py::arg("linewidth") = 0.02,
          py::arg("axis_points") = 2000);

    // --- reconstruction ---------------------------------------------------
    m.def("forward_observables", &forward_observables, py::arg("populations"), py::arg("theta"));
    m.def("reconstruct_populations",
          [](const NmrObservables& obs, double theta, double epsilon_theta, double tol) {
              return reconstruct_populations(obs, theta, {epsilon_theta, tol});
          },
          py::arg("observables"), py::arg("theta"), py::arg("epsilon_theta") = 1e-6,
          py::arg("population_tol") = 1e-9);
    m.def("mixedness_from_observables",
          [](const NmrObservables& obs, double theta, double epsilon_theta) {
              return mixedness_from_observables(obs, theta, {epsilon_theta, 1e-9});
          },
          py::arg("observables"), py::arg("theta"), py::arg("epsilon_theta") = 1e-6);
    m.def("mixedness_from_populations", &mixedness_from_populations, py::arg("populations"));
    m.def("reconstruction_condition_number", &reconstruction_condition_number, py::arg("theta"));

    // --- numerical oracle -------------------------------------------------
    py::module_ oracle_mod = m.def_submodule("oracle", "independent numerical cross-checks");
    oracle_mod.def("eig_hermitian", [](py::handle a) {
        const oracle::EigResult r = oracle::eig_hermitian(mat4_from(a));
        py::array_t<double> values(std::vector<py::ssize_t>{4});
        auto buf = values.mutable_unchecked<1>();
        for (int i = 0; i < 4; ++i) buf(i) = r.values[static_cast<std::size_t>(i)];
        return py::make_tuple(values, to_numpy(r.vectors));
    }, py::arg("matrix"));
    oracle_mod.def("thermal_state_numeric",
                   [](const SpinParams& p) { return to_numpy(oracle::thermal_state_numeric(p)); },
                   py::arg("params"));
    oracle_mod.def("partial_transpose",
                   [](py::handle rho, int subsystem) {
                       return to_numpy(oracle::partial_transpose(mat4_from(rho), subsystem));
                   },
                   py::arg("rho"), py::arg("subsystem") = 2);
    oracle_mod.def("ppt_verdict",
                   [](py::handle rho) { return to_string(oracle::ppt_verdict(mat4_from(rho))); },
                   py::arg("rho"));
    oracle_mod.def("min_eigenvalue_partial_transpose",
                   [](py::handle rho) {
                       return oracle::min_eigenvalue_partial_transpose(mat4_from(rho));
                   },
                   py::arg("rho"));

    // --- validation -------------------------------------------------------
    m.def("run_validation_checks", &run_validation_checks);
}
