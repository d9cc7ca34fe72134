#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pme/cli/config.hpp"
#include "pme/report.hpp"
#include "pme/verify.hpp"

namespace pme::cli {

IntegratorConfig integrator_config(const ExperimentConfig& cfg);

/// Writes <out>/trajectory.csv and <out>/diagnostics.csv. Returns exit code.
int cmd_simulate(const ExperimentConfig& cfg, std::ostream& log);

/// Bound suite plus contraction against a seeded perturbed companion run.
struct VerifyOutcome {
    VerifyReport report;
    BoundCheck contraction_left;  ///< 0..N-1 convention, informational
};
VerifyOutcome run_verify(const ExperimentConfig& cfg);
/// Exit code 0 iff every check passes.
int cmd_verify(const ExperimentConfig& cfg, std::ostream& log);

/// Sup-in-time L1 and L^m errors against the exact Barenblatt solution,
/// one row per N sorted by N. The N-sweep runs concurrently.
std::vector<report::ConvergenceRow> run_convergence(const ExperimentConfig& cfg);
int cmd_convergence(const ExperimentConfig& cfg, std::ostream& log);

/// I + J + K on output grids of n, 2n and 4n samples taken from a single
/// integration; order = log2 of consecutive residual ratios.
std::vector<report::ConsistencyRow> run_consistency(const ExperimentConfig& cfg);
int cmd_consistency(const ExperimentConfig& cfg, std::ostream& log);

int cmd_barrier(const ExperimentConfig& cfg, std::ostream& log);

/// Dispatch on cfg.command.
int run_command(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace pme::cli
