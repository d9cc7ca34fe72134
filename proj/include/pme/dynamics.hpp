#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pme/core.hpp"

namespace pme {

/// Particle velocities  x'_i = -D+_i [R^m],  i = 0..N, with R_0 = R_{N+1} = 0.
std::vector<double> rhs(const ParticleState& state);

/// Density evolution  R'_i = R_i^2 Delta_i [R^m],  i = 1..N (0-based output).
std::vector<double> rhs_density_form(const ParticleState& state);

struct IntegratorConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();
    /// A step is rejected when a gap drops below gap_guard * (initial min gap).
    double gap_guard = 0.5;
    /// Strictly increasing, positive; the last entry is the final time.
    std::vector<double> output_times;
    /// Keep every accepted step in Trajectory::steps.
    bool record_steps = false;
    std::size_t max_steps = 50'000'000;
};

struct IntegratorStats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t gap_rejections = 0;
    double min_step = std::numeric_limits<double>::infinity();
    double max_step = 0.0;
};

struct Trajectory {
    /// States at t = 0 and at every requested output time, in order.
    std::vector<ParticleState> samples;
    /// Every accepted step when IntegratorConfig::record_steps is set.
    std::vector<ParticleState> steps;
    IntegratorStats stats;

    const ParticleState& initial() const { return samples.front(); }
    const ParticleState& final() const { return samples.back(); }
    std::vector<double> times() const;
};

/// Raised when the step size underflows or the step budget is exhausted.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive Dormand-Prince 5(4) integration of the particle system. Steps
/// land exactly on the requested output times.
Trajectory integrate(const ParticleState& initial, const IntegratorConfig& cfg);

/// `count` equally spaced times on (0, T].
std::vector<double> uniform_times(double T, std::size_t count);

}  // namespace pme
