#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pme/diagnostics.hpp"
#include "pme/dynamics.hpp"
#include "pme/sampling.hpp"

namespace pme::report {

// Every CSV starts with a "#schema=<name>/<version>" line followed by the
// column header. Numbers use the shortest round-trip decimal form.
inline constexpr const char* kTrajectorySchema = "pme.trajectory/1";
inline constexpr const char* kDiagnosticsSchema = "pme.diagnostics/1";
inline constexpr const char* kConvergenceSchema = "pme.convergence/1";
inline constexpr const char* kConsistencySchema = "pme.consistency/1";
inline constexpr const char* kBarrierSchema = "pme.barrier/1";

std::string format_number(double v);

/// t, min_gap, x_0 .. x_N
void write_trajectory(std::ostream& out, const Trajectory& traj);

/// t, Zmin, ab_bound, margin, L, prop3_bound, thm2_bound, max_R, linf_bound, tv
void write_diagnostics(std::ostream& out, const std::vector<DiagnosticsRecord>& rows);

struct ConvergenceRow {
    std::size_t N = 0;
    double l1_error = 0.0;
    double lm_error = 0.0;
    double order = 0.0;
    bool has_order = false;
};

/// N, l1_error, lm_error, order (empty where undefined)
void write_convergence(std::ostream& out, const std::vector<ConvergenceRow>& rows);

struct ConsistencyRow {
    std::string phi;
    std::size_t intervals = 0;
    ConsistencyTriple triple;
    double order = 0.0;
    bool has_order = false;
};

/// phi, intervals, I, J, K, residual, order
void write_consistency(std::ostream& out, const std::vector<ConsistencyRow>& rows);

/// j, y, S  (S empty for j = 0)
void write_barrier(std::ostream& out, const Barrier& barrier);

}  // namespace pme::report
