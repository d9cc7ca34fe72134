#include "pme/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pme {
namespace {

// Records slack = allowed - actual for one comparison.
void record(BoundCheck& check, double slack, double t) {
    ++check.checked;
    if (check.checked == 1 || slack < check.worst) {
        check.worst = slack;
        if (slack < 0.0) {
            std::ostringstream msg;
            msg << "worst violation at t = " << t;
            check.detail = msg.str();
        }
    }
    if (slack < 0.0) {
        ++check.violations;
        check.passed = false;
    }
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed; });
}

const BoundCheck* VerifyReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

VerifyReport verify_bounds(const Trajectory& traj, const VerifyOptions& opts) {
    if (traj.samples.empty()) throw std::invalid_argument("verify_bounds: empty trajectory");
    const ParticleState& first = traj.initial();
    const double m = first.exponent();
    const double t0 = first.time();
    const double zbar = z_min(first);
    const double L0 = support_length(first);
    const double B = support_constant_thm2(m);
    const auto d0 = gaps(first);
    const double min_gap0 = *std::min_element(d0.values.begin(), d0.values.end());
    const auto R0 = densities(first);
    const double n = static_cast<double>(first.intervals());
    const double jensen = opts.jensen_factor ? (n + 1.0) / n : 1.0;
    const double linf_factor = std::pow(jensen, 1.0 / (m + 1.0));
    const double tv_factor = std::sqrt(jensen);

    auto named = [](const char* name) {
        BoundCheck c;
        c.name = name;
        return c;
    };
    BoundCheck ab = named("aronson-benilan"), mp = named("minimum-principle"),
               lower = named("density-lower-bound"), prop3 = named("support-growth"),
               thm2 = named("support-uniform"), linf = named("linf-decay"), tv = named("tv-decay");

    for (const auto& s : traj.samples) {
        const double t = s.time();
        const double elapsed = t - t0;
        const double growth = 1.0 + std::abs(zbar) * (m + 1.0) * elapsed;

        record(ab, z_min(s) - ab_lower_bound(zbar, m, elapsed) + opts.ab_rel_tol * std::abs(zbar), t);

        const auto d = gaps(s);
        const double gmin = *std::min_element(d.values.begin(), d.values.end());
        record(mp, gmin - min_gap0 * (1.0 - opts.min_gap_rel_tol), t);

        const auto R = densities(s);
        const double shrink = std::pow(growth, -1.0 / (m + 1.0));
        for (std::size_t i = 0; i < R.size(); ++i) {
            const double bound = R0.values[i] * shrink;
            record(lower, R.values[i] - bound * (1.0 - opts.density_rel_tol), t);
        }

        const double L = support_length(s);
        record(prop3, support_bound_prop3(L0, zbar, m, elapsed) * (1.0 + opts.support_rel_tol) - L, t);
        record(thm2, L0 + B * std::pow(elapsed, 1.0 / (m + 1.0)) + opts.support_abs_tol - L, t);

        if (elapsed >= opts.decay_from) {
            const double rmax = *std::max_element(R.values.begin(), R.values.end());
            record(linf, linf_factor * linf_bound(m, elapsed) * (1.0 + opts.linf_rel_tol) - rmax, t);
            record(tv, tv_factor * tv_bound(m, elapsed) * (1.0 + opts.tv_rel_tol) - tv_halfpower(s), t);
        }
    }

    VerifyReport report;
    report.checks = {ab, mp, lower, prop3, thm2, linf, tv};
    return report;
}

BoundCheck check_contraction(const Trajectory& a, const Trajectory& b, IndexRange range,
                             double slack) {
    if (a.samples.size() != b.samples.size()) {
        throw std::invalid_argument("check_contraction: trajectories have different sample counts");
    }
    BoundCheck check;
    check.name = "contraction";
    for (double h : {1.0, 2.0, 4.0, kInfiniteOrder}) {
        double previous = metric_dh(a.samples[0], b.samples[0], h, range);
        for (std::size_t s = 1; s < a.samples.size(); ++s) {
            if (a.samples[s].time() != b.samples[s].time()) {
                throw std::invalid_argument("check_contraction: sample times differ");
            }
            const double current = metric_dh(a.samples[s], b.samples[s], h, range);
            record(check, previous + slack - current, a.samples[s].time());
            if (current > previous + slack) {
                std::ostringstream msg;
                msg << "d_" << (std::isinf(h) ? std::string("inf") : std::to_string(static_cast<int>(h)))
                    << " increased at t = " << a.samples[s].time();
                check.detail = msg.str();
            }
            previous = current;
        }
    }
    return check;
}

}  // namespace pme
