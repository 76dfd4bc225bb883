// Self-contained consistency battery: closed forms against the numerical
// oracle, witness identities on random states, reconstruction round trips,
// and limiting cases with known values.  Used by the `validate` subcommand
// and by the acceptance tests.
#pragma once

#include <string>
#include <vector>

namespace spinpair {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

CheckResult check_partition_function_vs_sum();
CheckResult check_density_matrix_vs_oracle();
CheckResult check_state_eigenvalues_vs_oracle();
CheckResult check_mixedness_vs_oracle();
CheckResult check_witness_three_forms();
CheckResult check_witness_separable_soundness();
CheckResult check_reconstruction_round_trip();
CheckResult check_reconstruction_degenerate_angle();
CheckResult check_high_temperature_limits();
CheckResult check_pure_eigenstate_mixedness();
CheckResult check_singlet_reference_values();
CheckResult check_crossing_mixedness_value();
CheckResult check_observable_vs_population_mixedness();

std::vector<CheckResult> run_validation_checks();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace spinpair
