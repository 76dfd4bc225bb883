#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinpair/io.hpp"
#include "spinpair/reconstruction.hpp"
#include "spinpair/spectrum.hpp"
#include "spinpair/witness.hpp"

using namespace spinpair;

TEST_SUITE("io") {

TEST_CASE("number formatting is deterministic") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(-2.5) == "-2.5");
    CHECK(format_number(1000000.0) == "1000000");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1e-17) == "1e-17");
    CHECK(format_number(0.1) == "0.1");
}

TEST_CASE("sweep column names") {
    CHECK(quantity_column_name(SweepQuantity::Coherence) == "coherence");
    CHECK(quantity_column_name(SweepQuantity::Mixedness) == "mixedness");
    CHECK(quantity_column_name(SweepQuantity::Witness) == "witness_expectation");
}

TEST_CASE("sweep CSV layout") {
    std::vector<SweepRow> rows(2);
    rows[0] = {0.5, 2.0, 0.0, 0.25, WitnessVerdict::NotDetected};
    rows[1] = {0.5, 3.0, 0.0, -0.125, WitnessVerdict::EntangledDetected};

    std::ostringstream plain;
    write_sweep_csv(plain, rows, SweepQuantity::Mixedness);
    CHECK(plain.str() ==
          "tau,omega_sigma,omega_delta,mixedness\n"
          "0.5,2,0,0.25\n"
          "0.5,3,0,-0.125\n");

    std::ostringstream with_verdict;
    write_sweep_csv(with_verdict, rows, SweepQuantity::Witness);
    CHECK(with_verdict.str() ==
          "tau,omega_sigma,omega_delta,witness_expectation,verdict\n"
          "0.5,2,0,0.25,not-detected\n"
          "0.5,3,0,-0.125,entangled-detected\n");
}

TEST_CASE("phase CSV layout") {
    PhaseDiagram pd;
    pd.taus = {0.1};
    pd.deltas = {0.0};
    PhaseCell cell;
    cell.tau = 0.1;
    cell.omega_delta = 0.0;
    cell.expectation = -0.25;
    cell.verdict = WitnessVerdict::EntangledDetected;
    cell.ppt = oracle::PptVerdict::Entangled;
    pd.cells = {cell};
    pd.boundary = {{0.0, 0.75, 2.5e-7}};

    std::ostringstream grid;
    write_phase_grid_csv(grid, pd);
    CHECK(grid.str() ==
          "tau,omega_delta,witness_expectation,verdict,ppt_verdict\n"
          "0.1,0,-0.25,entangled-detected,entangled\n");

    std::ostringstream boundary;
    write_phase_boundary_csv(boundary, pd);
    CHECK(boundary.str() ==
          "omega_delta,tau,witness_expectation\n"
          "0,0.75,2.5e-07\n");
}

TEST_CASE("trace CSV layout") {
    SpectrumTrace t;
    t.frequencies = {0.0, 0.5};
    t.intensities = {0.125, -0.0};
    std::ostringstream os;
    write_trace_csv(os, t);
    CHECK(os.str() == "frequency,intensity\n0,0.125\n0.5,0\n");
}

TEST_CASE("spectrum sidecar JSON carries the scenario metadata") {
    const std::vector<double> thetas{std::numbers::pi / 6.0};
    const ScenarioOptions opt;
    const auto set = scenario_spectra(thetas, opt);
    REQUIRE(set.size() == 3);
    const auto doc = nlohmann::json::parse(spectrum_sidecar_json(set[1], opt));

    CHECK(doc.at("schema_version").get<int>() == kSchemaVersion);
    CHECK(doc.at("scenario").get<std::string>() == "at-crossing");
    CHECK(doc.at("theta_deg").get<double>() == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(doc.at("flip_angle_deg").get<double>() == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(doc.at("lines").size() == 4);
    const auto roof = doc.at("roofing_intensity_factors");
    CHECK(roof.at(0).get<double>() + roof.at(1).get<double>() ==
          doctest::Approx(2.0).epsilon(1e-13));
    for (const auto& line : doc.at("lines")) {
        CHECK(line.at("from_level").get<int>() >= 1);
        CHECK(line.at("to_level").get<int>() <= 4);
        CHECK(line.at("frequency").get<double>() >= 0.0);
    }
}

TEST_CASE("point report JSON is self-consistent") {
    const SpinParams p = SpinParams::from_ratios(1.0, 0.0, 0.05);
    const auto doc = nlohmann::json::parse(point_report_json(p));

    CHECK(doc.at("schema_version").get<int>() == kSchemaVersion);
    CHECK(doc.at("energies").size() == 4);
    CHECK(doc.at("critical_omega_sigma").get<double>() == doctest::Approx(2.0));

    double pop_sum = 0.0;
    for (const auto& q : doc.at("populations")) pop_sum += q.get<double>();
    CHECK(pop_sum == doctest::Approx(1.0).epsilon(1e-12));

    const auto& w = doc.at("witness");
    CHECK(w.at("expectation").get<double>() ==
          doctest::Approx(w.at("fidelity_form").get<double>()).epsilon(1e-12));
    CHECK(w.at("verdict").get<std::string>() == "entangled-detected");
    CHECK(w.at("ppt_verdict").get<std::string>() == "entangled");
    CHECK(doc.at("quantifiers").at("mixedness").get<double>() ==
          doctest::Approx(doc.at("quantifiers").at("mixedness_closed_form").get<double>())
              .epsilon(1e-10));
    CHECK(doc.at("density_matrix").at("re").size() == 4);
}

TEST_CASE("observables CSV parsing accepts flexible headers and comments") {
    std::istringstream in(
        "# calibration run\n"
        "\n"
        " P1z , p2z , P1Z2Z , Theta_Deg \n"
        "0.1,0.05,0.02,22.5\n"
        "# midway comment\n"
        "0.2,0.1,0.0,45\n");
    const auto rows = read_observables_csv(in);
    REQUIRE(rows.size() == 2);

    CHECK(rows[0].parsed);
    CHECK(rows[0].line_number == 4);
    CHECK(rows[0].observables.p1z == doctest::Approx(0.1));
    CHECK(rows[0].observables.p1z2z == doctest::Approx(0.02));
    CHECK(rows[0].theta == doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-14));

    CHECK(rows[1].parsed);
    CHECK(rows[1].line_number == 6);
    CHECK(rows[1].theta == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-14));
}

TEST_CASE("observables CSV rejects a wrong or missing header") {
    std::istringstream wrong("a,b,c,d\n0.1,0.2,0.3,10\n");
    const auto bad = read_observables_csv(wrong);
    REQUIRE(bad.size() == 1);
    CHECK(!bad[0].parsed);
    CHECK(bad[0].error.find("expected header") != std::string::npos);

    std::istringstream empty("\n# only comments\n");
    const auto missing = read_observables_csv(empty);
    REQUIRE(missing.size() == 1);
    CHECK(missing[0].error.find("missing header") != std::string::npos);
}

TEST_CASE("observables CSV flags malformed rows with their line numbers") {
    std::istringstream in(
        "p1z,p2z,p1z2z,theta_deg\n"
        "0.1,0.2,0.3\n"
        "0.1,abc,0.3,10\n"
        "0.1,0.2,0.3,10,extra\n"
        "0.4,0.0,0.1,30\n");
    const auto rows = read_observables_csv(in);
    REQUIRE(rows.size() == 4);

    CHECK(!rows[0].parsed);
    CHECK(rows[0].error.find("line 2") != std::string::npos);
    CHECK(rows[0].error.find("4 fields") != std::string::npos);

    CHECK(!rows[1].parsed);
    CHECK(rows[1].error.find("line 3") != std::string::npos);
    CHECK(rows[1].error.find("non-numeric") != std::string::npos);

    CHECK(!rows[2].parsed);
    CHECK(rows[2].error.find("line 4") != std::string::npos);

    CHECK(rows[3].parsed);
    CHECK(rows[3].line_number == 5);
}

TEST_CASE("reconstruction CSV layout for good and bad rows") {
    std::vector<ReconstructionRowResult> rows;
    rows.push_back(reconstruct_row(2, {0.1, 0.05, 0.02}, std::numbers::pi / 8.0));
    rows.push_back(reconstruct_row(3, {0.1, 0.05, 0.02}, std::numbers::pi / 4.0));

    std::ostringstream os;
    write_reconstruction_csv(os, rows);
    std::istringstream lines(os.str());
    std::string header, good, bad;
    std::getline(lines, header);
    std::getline(lines, good);
    std::getline(lines, bad);

    CHECK(header ==
          "line,p1z,p2z,p1z2z,theta_deg,p1,p2,p3,p4,m_observables,m_populations,"
          "condition_number,status");
    CHECK(good.substr(0, 2) == "2,");
    CHECK(good.find(",ok") != std::string::npos);
    CHECK(std::count(good.begin(), good.end(), ',') == 12);
    CHECK(bad.substr(0, 2) == "3,");
    CHECK(bad.find("theta-degenerate") != std::string::npos);
    CHECK(std::count(bad.begin(), bad.end(), ',') == 12);
    CHECK(bad.find(",,,,,,") != std::string::npos);  // blank numeric fields
}

}  // TEST_SUITE
