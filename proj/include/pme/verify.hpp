#pragma once

#include <string>
#include <vector>

#include "pme/diagnostics.hpp"
#include "pme/dynamics.hpp"

namespace pme {

/// Outcome of one bound along a trajectory.
struct BoundCheck {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;     ///< number of comparisons made
    std::size_t violations = 0;
    double worst = 0.0;          ///< smallest slack seen (negative = violated)
    std::string detail;
};

struct VerifyOptions {
    double decay_from = 0.01;       ///< L-inf and TV checked for elapsed t >= this
    double ab_rel_tol = 1e-6;       ///< times |Zbar|
    double min_gap_rel_tol = 1e-6;  ///< times the initial minimum gap
    double support_rel_tol = 1e-6;  ///< Prop-3 bound, relative
    double support_abs_tol = 1e-6;  ///< uniform-constant bound, absolute
    double linf_rel_tol = 1e-8;
    double tv_rel_tol = 1e-6;
    double density_rel_tol = 1e-6;  ///< lower density bound, relative
    double contraction_slack = 1e-9;
    /// Multiply the L-inf bound by ((N+1)/N)^{1/(m+1)} and the TV bound by
    /// ((N+1)/N)^{1/2}. The stated constants average N+1 difference terms
    /// with weight 1/N, which Jensen's inequality does not allow; without the
    /// factor both bounds fail for small N (N = 1 is a closed-form counterexample).
    bool jensen_factor = false;
    IndexRange contraction_range = IndexRange::all;
};

struct VerifyReport {
    std::vector<BoundCheck> checks;
    bool passed() const;
    const BoundCheck* find(const std::string& name) const;
};

/// Checks every estimate along `traj`: aronson-benilan, minimum-principle,
/// density-lower-bound, support-growth, support-uniform, linf-decay, tv-decay.
VerifyReport verify_bounds(const Trajectory& traj, const VerifyOptions& opts = {});

/// d_h (h = 1, 2, 4) and d_inf between two trajectories sampled at the same
/// times must be non-increasing.
BoundCheck check_contraction(const Trajectory& a, const Trajectory& b,
                             IndexRange range = IndexRange::all, double slack = 1e-9);

}  // namespace pme
