// CSV and JSON serialization for the command-line tool and batch interfaces.
//
// Numbers are printed with 12 significant digits, so identical inputs always
// produce byte-identical files.  Every JSON document carries schema_version.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinpair/reconstruction.hpp"
#include "spinpair/spectrum.hpp"
#include "spinpair/sweeps.hpp"
#include "spinpair/witness.hpp"

namespace spinpair {

inline constexpr int kSchemaVersion = 1;

// 12 significant digits; negative zero collapses to "0".
std::string format_number(double x);

std::string quantity_column_name(SweepQuantity q);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, SweepQuantity q);

void write_phase_grid_csv(std::ostream& os, const PhaseDiagram& pd);
void write_phase_boundary_csv(std::ostream& os, const PhaseDiagram& pd);

void write_trace_csv(std::ostream& os, const SpectrumTrace& trace);

// Line list plus scenario metadata for one synthesized spectrum.
std::string spectrum_sidecar_json(const LabeledSpectrum& ls, const ScenarioOptions& opt);

// Full single-point report (parameters, energies, populations, state,
// quantifiers, witness) as a JSON document.
std::string point_report_json(const SpinParams& p);

// --- observables CSV ingestion -------------------------------------------
//
// Expected header: p1z,p2z,p1z2z,theta_deg.  Rows that fail to parse come
// back with parsed = false and a message carrying their line number.

struct ObservablesRow {
    int line_number = 0;
    bool parsed = false;
    std::string error;
    NmrObservables observables;
    double theta = 0.0;  // radians
};

std::vector<ObservablesRow> read_observables_csv(std::istream& is);

void write_reconstruction_csv(std::ostream& os,
                              const std::vector<ReconstructionRowResult>& rows);

}  // namespace spinpair
