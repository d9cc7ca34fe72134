#include "pme/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pme/quadrature.hpp"
#include "pme/sampling.hpp"

namespace pme {

std::vector<double> z_vector(const ParticleState& state) {
    const DensityVector R = densities(state);
    const auto lap = discrete_laplacian(power(R, state.exponent()));
    std::vector<double> Z(R.size());
    for (std::size_t k = 0; k < R.size(); ++k) Z[k] = R.values[k] * lap[k + 1];
    return Z;
}

double z_min(const ParticleState& state) {
    const auto Z = z_vector(state);
    return *std::min_element(Z.begin(), Z.end());
}

double ab_lower_bound(double zbar, double m, double t) {
    if (!(zbar < 0.0)) throw std::invalid_argument("ab_lower_bound: Zbar must be negative");
    if (!(t >= 0.0)) throw std::invalid_argument("ab_lower_bound: t must be >= 0");
    return -1.0 / (1.0 / std::abs(zbar) + (m + 1.0) * t);
}

double AbReport::worst_margin() const {
    return margins.empty() ? 0.0 : *std::min_element(margins.begin(), margins.end());
}

AbReport check_ab(const Trajectory& traj) {
    if (traj.samples.empty()) throw std::invalid_argument("check_ab: empty trajectory");
    const ParticleState& first = traj.initial();
    const double m = first.exponent();
    const double t0 = first.time();
    AbReport report;
    report.zbar = z_min(first);
    report.tolerance = 1e-6 * std::abs(report.zbar);
    for (const auto& s : traj.samples) {
        const double margin = z_min(s) - ab_lower_bound(report.zbar, m, s.time() - t0);
        report.times.push_back(s.time());
        report.margins.push_back(margin);
        if (margin < -report.tolerance) ++report.violations;
    }
    return report;
}

double support_length(const ParticleState& state) {
    return state[state.intervals()] - state[0];
}

double support_bound_prop3(double L0, double zbar, double m, double t) {
    if (!(zbar < 0.0)) throw std::invalid_argument("support_bound_prop3: Zbar must be negative");
    return L0 * std::pow(1.0 + std::abs(zbar) * (m + 1.0) * t, 1.0 / (m + 1.0));
}

double support_constant_thm2(double m) {
    const double exponent = -(1.0 / m - 0.5) / (m + 1.0);
    return std::pow(4.0, exponent) * std::pow(m + 1.0, 1.0 / (m + 1.0)) * barrier_integral(m);
}

double linf_bound(double m, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("linf_bound: t must be positive");
    return std::pow((m + 1.0) / (16.0 * m * t), 1.0 / (m + 1.0));
}

double tv_bound(double m, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("tv_bound: t must be positive");
    return std::sqrt((m + 1.0) / (4.0 * m * t));
}

double metric_dh(const ParticleState& a, const ParticleState& b, double h, IndexRange range) {
    if (a.intervals() != b.intervals()) {
        throw std::invalid_argument("metric_dh: particle counts differ");
    }
    if (!(h >= 1.0)) throw std::invalid_argument("metric_dh: order must be >= 1");
    const std::size_t n = a.intervals();
    const std::size_t count = range == IndexRange::all ? n + 1 : n;
    double largest = 0.0;
    for (std::size_t i = 0; i < count; ++i) largest = std::max(largest, std::abs(a[i] - b[i]));
    if (std::isinf(h) || largest == 0.0) return largest;
    // Scaled by the largest entry so high orders do not underflow.
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) sum += std::pow(std::abs(a[i] - b[i]) / largest, 2.0 * h);
    return largest * std::pow(sum / static_cast<double>(n), 1.0 / (2.0 * h));
}

double w1_upper(const ParticleState& a, const ParticleState& b) {
    if (a.intervals() != b.intervals()) {
        throw std::invalid_argument("w1_upper: particle counts differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i <= a.intervals(); ++i) sum += std::abs(a[i] - b[i]);
    return sum / static_cast<double>(a.intervals());
}

double tv_halfpower(const ParticleState& state) {
    const auto P = power(densities(state), 0.5 * (state.exponent() + 1.0));
    double total = P.front() + P.back();
    for (std::size_t k = 1; k < P.size(); ++k) total += std::abs(P[k] - P[k - 1]);
    return total;
}

ConsistencyTriple consistency_triple(const Trajectory& traj, const TestFunction& phi,
                                     SupportPolicy policy) {
    if (traj.samples.empty()) throw std::invalid_argument("consistency_triple: empty trajectory");
    const double t_first = traj.initial().time();
    const double t_last = traj.final().time();
    if (policy == SupportPolicy::require_compact && !(phi.time_support_end <= t_last)) {
        throw std::invalid_argument("consistency_triple: test function '" + phi.name +
                                    "' is not compactly supported in the time window [" +
                                    std::to_string(t_first) + ", " + std::to_string(t_last) + ")");
    }

    const std::size_t samples = traj.samples.size();
    std::vector<double> t(samples), dt_terms(samples), dx_terms(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const ParticleState& state = traj.samples[s];
        const double time = state.time();
        const std::size_t n = state.intervals();
        const double m = state.exponent();
        const auto R = densities(state);

        double sum_dt = 0.0;
        double sum_dx = 0.0;
        double dx_prev = phi.dx_phi(time, state[0]);
        sum_dt += phi.dt_phi(time, state[0]);
        for (std::size_t j = 1; j <= n; ++j) {
            const double dx_here = phi.dx_phi(time, state[j]);
            sum_dt += phi.dt_phi(time, state[j]);
            sum_dx += (dx_here - dx_prev) * std::pow(R.values[j - 1], m);
            dx_prev = dx_here;
        }
        t[s] = time;
        dt_terms[s] = sum_dt / static_cast<double>(n);
        dx_terms[s] = sum_dx;
    }

    ConsistencyTriple out;
    out.I = quad::trapezoid(t, dt_terms);
    out.J = quad::trapezoid(t, dx_terms);
    const ParticleState& first = traj.initial();
    double k_sum = 0.0;
    for (std::size_t j = 0; j <= first.intervals(); ++j) k_sum += phi.phi(t_first, first[j]);
    out.K = k_sum / static_cast<double>(first.intervals());
    return out;
}

namespace {

// exp(1 - 1/(1 - s^2)) on (-1, 1), zero outside; value 1 at s = 0.
double bump(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

double bump_derivative(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    const double q = 1.0 - s * s;
    return bump(s) * (-2.0 * s / (q * q));
}

}  // namespace

TestFunction bump_test_function(double center, double width, double T) {
    if (!(width > 0.0) || !(T > 0.0)) {
        throw std::invalid_argument("bump_test_function: width and T must be positive");
    }
    TestFunction f;
    std::ostringstream name;
    name << "bump:c=" << center << ":w=" << width;
    f.name = name.str();
    f.phi = [=](double t, double x) { return bump(t / T) * bump((x - center) / width); };
    f.dt_phi = [=](double t, double x) {
        return bump_derivative(t / T) / T * bump((x - center) / width);
    };
    f.dx_phi = [=](double t, double x) {
        return bump(t / T) * bump_derivative((x - center) / width) / width;
    };
    f.time_support_end = T;
    return f;
}

TestFunction zero_test_function() {
    auto zero = [](double, double) { return 0.0; };
    return TestFunction{"zero", zero, zero, zero, 0.0};
}

TestFunction constant_test_function(double c) {
    auto zero = [](double, double) { return 0.0; };
    return TestFunction{"constant", [c](double, double) { return c; }, zero, zero,
                        std::numeric_limits<double>::infinity()};
}

std::vector<DiagnosticsRecord> diagnose(const Trajectory& traj) {
    if (traj.samples.empty()) throw std::invalid_argument("diagnose: empty trajectory");
    const ParticleState& first = traj.initial();
    const double m = first.exponent();
    const double t0 = first.time();
    const double zbar = z_min(first);
    const double L0 = support_length(first);
    const double B = support_constant_thm2(m);

    std::vector<DiagnosticsRecord> rows;
    rows.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        DiagnosticsRecord r;
        r.t = s.time();
        const double elapsed = r.t - t0;
        r.Z = z_vector(s);
        r.z_min = *std::min_element(r.Z.begin(), r.Z.end());
        r.ab_bound = ab_lower_bound(zbar, m, elapsed);
        r.margin = r.z_min - r.ab_bound;
        r.support_length = support_length(s);
        r.support_bound_prop3 = support_bound_prop3(L0, zbar, m, elapsed);
        r.support_bound_thm2 = L0 + B * std::pow(elapsed, 1.0 / (m + 1.0));
        const auto R = densities(s);
        r.max_density = *std::max_element(R.values.begin(), R.values.end());
        r.linf_bound = elapsed > 0.0 ? linf_bound(m, elapsed) : std::numeric_limits<double>::infinity();
        r.tv_halfpower = tv_halfpower(s);
        const auto d = gaps(s);
        r.min_gap = *std::min_element(d.values.begin(), d.values.end());
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace pme
