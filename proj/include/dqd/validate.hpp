// validate.hpp — self-check suites behind `dqdsim validate` and the
// acceptance harness. Hard checks gate the exit code; documented
// closed-form/numeric disagreements are reported as notes, never failed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dqd::validate {

struct CheckResult {
    std::string name;
    bool hard_ok = false;
    std::string detail;              // one-line summary with the key numbers
    std::vector<std::string> notes;  // documented-discrepancy observations
};

CheckResult spectral_oracle(int n_params, std::uint64_t seed);
CheckResult thermal_oracle(int n_params, std::uint64_t seed);
CheckResult concurrence_ground_truth(int n_states, std::uint64_t seed);
// Closed-form concurrence and expanded-coherence paths versus the
// authoritative ones; emits disagreement fractions.
CheckResult reconciliation_report(int n_points, std::uint64_t seed);
CheckResult kernel_properties();
CheckResult channel_soundness(int n_states, std::uint64_t seed);
CheckResult table_adjudication();
CheckResult figure_shapes(int workers);
CheckResult sweep_determinism(int workers);
// Monte Carlo telegraph-noise kernel versus the analytic branches.
CheckResult rtn_oracle(std::size_t n_traj, std::uint64_t seed);

struct ValidateOptions {
    std::uint64_t seed = 0;     // 0 -> library default
    bool include_rtn = false;   // "full" level
    std::size_t rtn_trajectories = 100000;
    int workers = 1;
    bool inject_broken_kraus = false; // test hook: adds a non-CPTP set to
                                      // channel soundness
};

std::vector<CheckResult> run_validation(const ValidateOptions& opt);

} // namespace dqd::validate
