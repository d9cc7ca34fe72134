#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "pme/core.hpp"
#include "pme/dynamics.hpp"

namespace pme {

/// Z_k = R_k Delta_k [R^m], k = 1..N (0-based output). Discrete counterpart
/// of the pressure second derivative bounded from below by Aronson-Benilan.
std::vector<double> z_vector(const ParticleState& state);

/// min_k Z_k; strictly negative for every valid state.
double z_min(const ParticleState& state);

/// -1 / (|Zbar|^{-1} + (m+1) t). Requires Zbar < 0 and t >= 0.
double ab_lower_bound(double zbar, double m, double t);

struct AbReport {
    double zbar = 0.0;
    double tolerance = 0.0;  ///< 1e-6 |Zbar|
    std::vector<double> times;
    std::vector<double> margins;  ///< min_k Z_k(t) - bound(t)
    std::size_t violations = 0;
    bool passed() const { return violations == 0; }
    double worst_margin() const;
};

/// Margins of the discrete AB estimate at every stored time.
AbReport check_ab(const Trajectory& traj);

double support_length(const ParticleState& state);

/// L0 (1 + |Zbar| (m+1) t)^{1/(m+1)}.
double support_bound_prop3(double L0, double zbar, double m, double t);

/// B = 4^{-(1/m - 1/2)/(m+1)} (m+1)^{1/(m+1)} ell(m); support growth constant
/// valid for arbitrary initial data.
double support_constant_thm2(double m);

/// ((m+1) / (16 m t))^{1/(m+1)}. Requires t > 0.
double linf_bound(double m, double t);

/// ((m+1) / (4 m t))^{1/2}. Requires t > 0.
double tv_bound(double m, double t);

/// Which particles enter d_h / d_inf.
enum class IndexRange {
    left_endpoints,  ///< i = 0..N-1, the step interpolation on [0, 1)
    all,             ///< i = 0..N
};

inline constexpr double kInfiniteOrder = std::numeric_limits<double>::infinity();

/// For finite h: ((1/N) sum (x_i - y_i)^{2h})^{1/(2h)}; for h = infinity the
/// max of |x_i - y_i|. Throws on mismatched N.
double metric_dh(const ParticleState& a, const ParticleState& b, double h,
                 IndexRange range = IndexRange::left_endpoints);

/// (1/N) sum_{n=0}^{N} |y_n - x_n|, an upper bound for the W1 distance of
/// the reconstructions.
double w1_upper(const ParticleState& a, const ParticleState& b);

/// sum_{n=0}^{N} |R_{n+1}^{(m+1)/2} - R_n^{(m+1)/2}| with zero padding.
double tv_halfpower(const ParticleState& state);

/// Smooth test function phi(t, x) for the weak formulation.
struct TestFunction {
    std::string name;
    std::function<double(double, double)> phi;
    std::function<double(double, double)> dt_phi;
    std::function<double(double, double)> dx_phi;
    /// phi(t, .) vanishes for t >= time_support_end.
    double time_support_end = std::numeric_limits<double>::infinity();
};

struct ConsistencyTriple {
    double I = 0.0;
    double J = 0.0;
    double K = 0.0;
    double residual() const { return I + J + K; }
};

enum class SupportPolicy { require_compact, allow_noncompact };

/// Time-integrated weak-form terms along a trajectory, time integrals by the
/// composite trapezoid rule on the stored samples. With the default policy,
/// throws std::invalid_argument unless phi vanishes before the final time.
ConsistencyTriple consistency_triple(const Trajectory& traj, const TestFunction& phi,
                                     SupportPolicy policy = SupportPolicy::require_compact);

/// Space-time bump exp(1 - 1/(1 - s^2)) in t/T and (x - center)/width.
TestFunction bump_test_function(double center, double width, double T);
TestFunction zero_test_function();
TestFunction constant_test_function(double c);

/// One row of the bound report at a stored time.
struct DiagnosticsRecord {
    double t = 0.0;
    std::vector<double> Z;
    double z_min = 0.0;
    double ab_bound = 0.0;
    double margin = 0.0;
    double support_length = 0.0;
    double support_bound_prop3 = 0.0;
    double support_bound_thm2 = 0.0;
    double max_density = 0.0;
    double linf_bound = 0.0;  ///< +inf at t = 0
    double tv_halfpower = 0.0;
    double min_gap = 0.0;
};

std::vector<DiagnosticsRecord> diagnose(const Trajectory& traj);

}  // namespace pme
