#include "pme/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace pme {
namespace {

// Velocities from raw positions. Returns false if the ordering is broken.
bool velocities(const std::vector<double>& x, double m, std::vector<double>& Rm,
                std::vector<double>& out) {
    const std::size_t n = x.size() - 1;
    const double scale = static_cast<double>(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double d = x[i] - x[i - 1];
        if (!(d > 0.0)) return false;
        Rm[i - 1] = std::pow(1.0 / (scale * d), m);
    }
    out[0] = -scale * Rm[0];
    for (std::size_t i = 1; i < n; ++i) out[i] = -scale * (Rm[i] - Rm[i - 1]);
    out[n] = scale * Rm[n - 1];
    return true;
}

double min_gap(const std::vector<double>& x) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < x.size(); ++i) g = std::min(g, x[i] - x[i - 1]);
    return g;
}

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

constexpr double kSafety = 0.9;
constexpr double kMaxGrowth = 5.0;
constexpr double kMaxShrink = 0.2;

}  // namespace

std::vector<double> rhs(const ParticleState& state) {
    const auto x = state.positions();
    std::vector<double> pos(x.begin(), x.end());
    std::vector<double> Rm(state.intervals());
    std::vector<double> v(pos.size());
    velocities(pos, state.exponent(), Rm, v);
    return v;
}

std::vector<double> rhs_density_form(const ParticleState& state) {
    const DensityVector R = densities(state);
    const auto lap = discrete_laplacian(power(R, state.exponent()));
    std::vector<double> out(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) out[i] = R.values[i] * R.values[i] * lap[i + 1];
    return out;
}

std::vector<double> Trajectory::times() const {
    std::vector<double> t;
    t.reserve(samples.size());
    for (const auto& s : samples) t.push_back(s.time());
    return t;
}

std::vector<double> uniform_times(double T, std::size_t count) {
    if (!(T > 0.0) || count == 0) throw std::invalid_argument("uniform_times: need T > 0, count >= 1");
    std::vector<double> t(count);
    for (std::size_t i = 0; i < count; ++i) {
        t[i] = T * static_cast<double>(i + 1) / static_cast<double>(count);
    }
    t.back() = T;
    return t;
}

Trajectory integrate(const ParticleState& initial, const IntegratorConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) {
        throw std::invalid_argument("integrate: tolerances must be positive");
    }
    if (!(cfg.gap_guard > 0.0 && cfg.gap_guard < 1.0)) {
        throw std::invalid_argument("integrate: gap guard factor must lie in (0, 1)");
    }
    const double t0 = initial.time();
    for (std::size_t i = 0; i < cfg.output_times.size(); ++i) {
        const double prev = i == 0 ? t0 : cfg.output_times[i - 1];
        if (!(cfg.output_times[i] > prev) || !std::isfinite(cfg.output_times[i])) {
            throw std::invalid_argument("integrate: output times must be finite and strictly increasing after t0");
        }
    }

    Trajectory traj;
    traj.samples.push_back(initial);
    if (cfg.record_steps) traj.steps.push_back(initial);
    if (cfg.output_times.empty()) return traj;

    const double m = initial.exponent();
    const std::size_t n = initial.intervals();
    const std::size_t dim = n + 1;
    const double t_end = cfg.output_times.back();
    const double min_step = 1e-14 * std::max(t_end - t0, std::abs(t_end));

    const auto x0 = initial.positions();
    std::vector<double> y(x0.begin(), x0.end());
    const double gap_floor = cfg.gap_guard * min_gap(y);

    std::vector<double> Rm(n), k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
    std::vector<double> stage(dim), y_new(dim);
    velocities(y, m, Rm, k1);

    // Step from the stiffness scale of R' = R^2 Delta[R^m].
    double r_max = 0.0;
    for (double r : densities(initial).values) r_max = std::max(r_max, r);
    const double nn = static_cast<double>(n);
    double h = std::pow(cfg.rel_tol, 0.2) / (nn * nn * std::pow(r_max, m + 1.0) * 2.0 * (m + 1.0));
    h = std::min({h, cfg.max_step, t_end - t0});

    double t = t0;
    std::size_t next_output = 0;
    bool last_rejected = false;
    std::size_t attempts = 0;

    auto combine = [&](std::initializer_list<std::pair<double, const std::vector<double>*>> terms,
                       double step) {
        for (std::size_t i = 0; i < dim; ++i) {
            double acc = 0.0;
            for (const auto& [c, k] : terms) acc += c * (*k)[i];
            stage[i] = y[i] + step * acc;
        }
    };

    while (next_output < cfg.output_times.size()) {
        if (++attempts > cfg.max_steps) {
            throw IntegrationError("integrate: step budget exhausted at t = " + std::to_string(t));
        }
        const double target = cfg.output_times[next_output];
        bool lands = false;
        double step = h;
        if (t + step >= target || target - (t + step) < min_step) {
            step = target - t;
            lands = true;
        }

        bool ok = true;
        combine({{a21, &k1}}, step);
        ok = ok && velocities(stage, m, Rm, k2);
        if (ok) { combine({{a31, &k1}, {a32, &k2}}, step); ok = velocities(stage, m, Rm, k3); }
        if (ok) { combine({{a41, &k1}, {a42, &k2}, {a43, &k3}}, step); ok = velocities(stage, m, Rm, k4); }
        if (ok) {
            combine({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, step);
            ok = velocities(stage, m, Rm, k5);
        }
        if (ok) {
            combine({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, step);
            ok = velocities(stage, m, Rm, k6);
        }
        if (ok) {
            combine({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, step);
            y_new = stage;
            ok = velocities(y_new, m, Rm, k7);
        }

        double err = std::numeric_limits<double>::infinity();
        if (ok) {
            err = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                const double e = step * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                         e6 * k6[i] + e7 * k7[i]);
                const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
                err = std::max(err, std::abs(e) / sc);
            }
        }

        if (err <= 1.0 && min_gap(y_new) < gap_floor) {
            // The exact flow never shrinks the minimum gap.
            ++traj.stats.gap_rejections;
            ++traj.stats.rejected;
            h = 0.5 * step;
            last_rejected = true;
        } else if (err <= 1.0) {
            t = lands ? target : t + step;
            y.swap(y_new);
            k1.swap(k7);
            ++traj.stats.accepted;
            traj.stats.min_step = std::min(traj.stats.min_step, step);
            traj.stats.max_step = std::max(traj.stats.max_step, step);
            double factor = err > 0.0 ? kSafety * std::pow(err, -0.2) : kMaxGrowth;
            factor = std::clamp(factor, kMaxShrink, kMaxGrowth);
            if (last_rejected) factor = std::min(factor, 1.0);
            // A landing step may be artificially short; do not let it shrink h.
            h = lands ? std::max(h, step * factor) : step * factor;
            h = std::min(h, cfg.max_step);
            last_rejected = false;
            if (cfg.record_steps) traj.steps.push_back(initial.with_positions(y, t));
            if (lands) {
                traj.samples.push_back(initial.with_positions(y, t));
                ++next_output;
            }
        } else {
            ++traj.stats.rejected;
            const double factor = std::isfinite(err)
                                      ? std::clamp(kSafety * std::pow(err, -0.2), kMaxShrink, 1.0)
                                      : kMaxShrink;
            h = step * factor;
            last_rejected = true;
        }

        if (h < min_step) {
            std::ostringstream msg;
            msg << "integrate: step size underflow (h = " << h << ") at t = " << t
                << "; check tolerances or particle ordering";
            throw IntegrationError(msg.str());
        }
    }
    return traj;
}

}  // namespace pme
