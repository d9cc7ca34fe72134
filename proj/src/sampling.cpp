#include "pme/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pme/quadrature.hpp"

namespace pme {
namespace {

constexpr int kProbeCells = 4096;
constexpr double kMassTol = 1e-12;

// Smallest x in [a, b] with holds(residual(x)), assuming the predicate is
// monotone (false then true) and holds at b. Illinois-type secant steps,
// with a bisection whenever three steps fail to halve the bracket.
// Returns the right end of the final bracket.
template <class Residual>
double bracket_solve(Residual&& residual, bool inclusive, double a, double b, double ra,
                     double rb, double xtol) {
    auto holds = [inclusive](double r) { return inclusive ? r >= 0.0 : r > 0.0; };
    int side = 0;
    int stalled = 0;
    double reference_width = b - a;
    while (b - a > xtol) {
        double x = 0.5 * (a + b);
        if (stalled < 3 && rb != ra) {
            const double secant = (a * rb - b * ra) / (rb - ra);
            if (secant > a && secant < b) x = secant;
        }
        if (!(x > a && x < b)) break;
        const double rx = residual(x);
        if (holds(rx)) {
            b = x;
            rb = rx;
            if (side == 1) ra *= 0.5;
            side = 1;
        } else {
            a = x;
            ra = rx;
            if (side == -1) rb *= 0.5;
            side = -1;
        }
        if (b - a <= 0.5 * reference_width) {
            reference_width = b - a;
            stalled = 0;
        } else {
            ++stalled;
        }
    }
    return b;
}

Interval trimmed_support(const DensitySpec& rho, bool reject_gaps = true) {
    const double lo = rho.support.lo;
    const double hi = rho.support.hi;
    const double h = (hi - lo) / kProbeCells;
    auto grid = [&](int i) { return i == kProbeCells ? hi : lo + h * i; };

    int first = -1;
    int last = -1;
    for (int i = 0; i <= kProbeCells; ++i) {
        if (rho.density(grid(i)) > 0.0) {
            if (first < 0) first = i;
            last = i;
        }
    }
    if (first < 0) throw SamplingError("density '" + rho.name + "' vanishes on its support hint");

    // Refine each edge between the last zero probe and the first positive one.
    auto refine = [&](double zero_side, double positive_side) {
        for (int it = 0; it < 200 && zero_side != positive_side; ++it) {
            const double mid = 0.5 * (zero_side + positive_side);
            if (mid == zero_side || mid == positive_side) break;
            (rho.density(mid) > 0.0 ? positive_side : zero_side) = mid;
        }
        return zero_side;
    };
    Interval out{lo, hi};
    if (first > 0) out.lo = refine(grid(first - 1), grid(first));
    if (last < kProbeCells) out.hi = refine(grid(last + 1), grid(last));

    if (!reject_gaps) return out;

    // Interior zero runs of at least two probes that also carry no mass.
    int run_start = -1;
    for (int i = first; i <= last; ++i) {
        const bool zero = !(rho.density(grid(i)) > 0.0);
        if (zero && run_start < 0) run_start = i;
        if (!zero && run_start >= 0) {
            if (i - run_start >= 2 &&
                mass_between(rho, grid(run_start), grid(i - 1)) < 1e-14) {
                std::ostringstream msg;
                msg << "density '" << rho.name << "' has an interior zero-mass gap near ["
                    << grid(run_start) << ", " << grid(i - 1)
                    << "]; the particle cone requires connected support";
                throw SamplingError(msg.str());
            }
            run_start = -1;
        }
    }
    return out;
}

}  // namespace

void validate(const DensitySpec& rho) {
    if (!rho.density) throw std::invalid_argument("density '" + rho.name + "' has no evaluator");
    if (!(rho.support.hi > rho.support.lo) || !std::isfinite(rho.support.lo) ||
        !std::isfinite(rho.support.hi)) {
        throw std::invalid_argument("density '" + rho.name + "' needs a finite support interval");
    }
    const int probes = 2000;
    for (int i = 0; i <= probes; ++i) {
        const double x = rho.support.lo + (rho.support.hi - rho.support.lo) * i / probes;
        const double v = rho.density(x);
        if (!(v >= 0.0) || !std::isfinite(v)) {
            std::ostringstream msg;
            msg << "density '" << rho.name << "' is negative or non-finite at x = " << x;
            throw std::invalid_argument(msg.str());
        }
    }
    const double mass = mass_between(rho, rho.support.lo, rho.support.hi);
    if (std::abs(mass - 1.0) > 1e-8) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "density '" << rho.name << "' has mass " << mass << ", expected 1";
        throw std::invalid_argument(msg.str());
    }
}

DensitySpec uniform_density(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("uniform density needs a < b");
    const double h = 1.0 / (b - a);
    std::ostringstream name;
    name << "uniform " << a << ' ' << b;
    return DensitySpec{name.str(), [a, b, h](double x) { return (x >= a && x <= b) ? h : 0.0; },
                       {a, b}, {}};
}

DensitySpec barenblatt_density(double m, double t0, double mass) {
    if (!(t0 > 0.0)) throw std::invalid_argument("barenblatt density needs t0 > 0");
    if (std::abs(mass - 1.0) > 1e-12) {
        throw std::invalid_argument("barenblatt density: particle sampling needs unit mass");
    }
    BarenblattProfile profile(m, mass);
    std::ostringstream name;
    name << "barenblatt " << m << ' ' << t0 << ' ' << mass;
    return DensitySpec{name.str(), [profile, t0](double x) { return profile(t0, x); },
                       profile.support(t0), {}};
}

DensitySpec truncated_gaussian_density(double a, double b, double sigma) {
    if (!(b > a) || !(sigma > 0.0)) {
        throw std::invalid_argument("gaussian-truncated needs a < b and sigma > 0");
    }
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a) / (sigma * std::numbers::sqrt2);
    const double norm = sigma * std::sqrt(2.0 * std::numbers::pi) * std::erf(half);
    std::ostringstream name;
    name << "gaussian-truncated " << a << ' ' << b << ' ' << sigma;
    return DensitySpec{name.str(),
                       [=](double x) {
                           if (x < a || x > b) return 0.0;
                           const double s = (x - center) / sigma;
                           return std::exp(-0.5 * s * s) / norm;
                       },
                       {a, b}, {}};
}

DensitySpec piecewise_density(const PiecewiseDensity& pd, std::string name) {
    return DensitySpec{std::move(name), [pd](double x) { return pd(x); },
                       {pd.breakpoints.front(), pd.breakpoints.back()}, pd.breakpoints};
}

double mass_between(const DensitySpec& rho, double a, double b) {
    return quad::integrate(rho.density, a, b, rho.kinks, kMassTol).value;
}

double cdf_pseudo_inverse(const DensitySpec& rho, double z) {
    if (!(z > 0.0 && z < 1.0)) throw std::invalid_argument("cdf_pseudo_inverse: z must lie in (0, 1)");
    const Interval s = trimmed_support(rho, false);
    // The small offset keeps quadrature round-off on a flat stretch of F
    // from being read as F > z.
    const double level = z + 1e-13;
    auto residual = [&](double x) { return mass_between(rho, s.lo, x) - level; };
    const double r_hi = residual(s.hi);
    if (!(r_hi > 0.0)) {
        std::ostringstream msg;
        msg << "cdf_pseudo_inverse: CDF of '" << rho.name << "' does not exceed " << z
            << " within its support";
        throw SamplingError(msg.str());
    }
    const double xtol = 1e-13 * std::max(1.0, s.length());
    return bracket_solve(residual, false, s.lo, s.hi, -level, r_hi, xtol);
}

ParticleState sample_support_preserving(const DensitySpec& rho, std::size_t N, double m) {
    if (N < 1) throw std::invalid_argument("sample_support_preserving: N must be >= 1");
    validate(rho);
    const Interval s = trimmed_support(rho);
    const double xtol = 1e-13 * std::max(1.0, s.length());
    const double n = static_cast<double>(N);

    std::vector<double> x(N + 1);
    x[0] = s.lo;
    x[N] = s.hi;
    double accumulated = 0.0;
    for (std::size_t i = 1; i < N; ++i) {
        const double left = x[i - 1];
        const double target = static_cast<double>(i) / n - accumulated;
        auto residual = [&](double y) { return mass_between(rho, left, y) - target; };
        const double r_hi = residual(s.hi);
        if (!(r_hi >= 0.0)) {
            throw SamplingError("sample_support_preserving: ran out of mass at particle " +
                                std::to_string(i));
        }
        x[i] = bracket_solve(residual, true, left, s.hi, -target, r_hi, xtol);
        accumulated += mass_between(rho, left, x[i]);
    }
    for (std::size_t i = 1; i <= N; ++i) {
        if (!(x[i] > x[i - 1])) {
            std::ostringstream msg;
            msg << "sample_support_preserving: particles " << i - 1 << " and " << i
                << " coincide at x = " << x[i] << " (density '" << rho.name << "')";
            throw SamplingError(msg.str());
        }
    }
    return ParticleState(std::move(x), m, 0.0);
}

double barrier_integral(double m) {
    if (!(m > 1.0)) throw std::invalid_argument("barrier_integral: m must be > 1");
    // z = w^p with p = m/(m-1) makes the integrand p (1 - w^p)^{-1/m} regular at 0;
    // the half interval (0, 1/2] and symmetry give the rest.
    const double p = m / (m - 1.0);
    const double w_max = std::pow(0.5, 1.0 / p);
    auto integrand = [p, m](double w) { return p * std::pow(1.0 - std::pow(w, p), -1.0 / m); };
    return 2.0 * quad::integrate(integrand, 0.0, w_max, 1e-14).value;
}

Barrier barrier_configuration(const BarrierConfig& cfg) {
    if (cfg.N < 4) throw std::invalid_argument("barrier_configuration: N must be >= 4");
    if (!(cfg.m > 1.0)) throw std::invalid_argument("barrier_configuration: m must be > 1");
    if (!(cfg.beta > 0.0)) throw std::invalid_argument("barrier_configuration: beta must be > 0");
    const double n = static_cast<double>(cfg.N);
    std::vector<double> S(cfg.N);
    std::vector<double> y(cfg.N + 1);
    y[0] = cfg.alpha;
    double gap_sum = 0.0;
    for (std::size_t k = 1; k <= cfg.N; ++k) {
        const double z = (static_cast<double>(k) - 0.5) / n;
        // 1 / (beta f(z)) with f(z) = (z(1-z))^{-1/m}
        S[k - 1] = std::pow(z * (1.0 - z), 1.0 / cfg.m) / cfg.beta;
        gap_sum += 1.0 / S[k - 1];
        y[k] = cfg.alpha + gap_sum / n;
    }
    return Barrier{ParticleState(std::move(y), cfg.m, 0.0), std::move(S), barrier_integral(cfg.m)};
}

double wasserstein1(const PiecewiseDensity& p, const PiecewiseDensity& q) {
    // Cumulative mass at every breakpoint, normalized so the last entry is 1.
    auto cumulative = [](const PiecewiseDensity& d) {
        std::vector<double> c(d.breakpoints.size(), 0.0);
        for (std::size_t i = 0; i < d.heights.size(); ++i) {
            c[i + 1] = c[i] + d.heights[i] * (d.breakpoints[i + 1] - d.breakpoints[i]);
        }
        const double total = c.back();
        if (!(std::abs(total - 1.0) < 1e-8)) {
            throw std::invalid_argument("wasserstein1: densities must have unit mass");
        }
        for (double& v : c) v /= total;
        c.back() = 1.0;
        return c;
    };
    const auto cp = cumulative(p);
    const auto cq = cumulative(q);

    std::vector<double> grid;
    grid.reserve(cp.size() + cq.size());
    std::merge(cp.begin(), cp.end(), cq.begin(), cq.end(), std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    // Quantile of d restricted to the mass cell containing zm, evaluated at z.
    auto quantile = [](const PiecewiseDensity& d, const std::vector<double>& c, double zm, double z) {
        auto it = std::upper_bound(c.begin(), c.end(), zm);
        std::size_t cell = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(
            it - c.begin() - 1, 0, static_cast<std::ptrdiff_t>(d.heights.size()) - 1));
        const double span = c[cell + 1] - c[cell];
        const double frac = span > 0.0 ? (z - c[cell]) / span : 0.0;
        return d.breakpoints[cell] + frac * (d.breakpoints[cell + 1] - d.breakpoints[cell]);
    };

    double total = 0.0;
    for (std::size_t j = 1; j < grid.size(); ++j) {
        const double z0 = grid[j - 1];
        const double z1 = grid[j];
        const double zm = 0.5 * (z0 + z1);
        const double u = quantile(p, cp, zm, z0) - quantile(q, cq, zm, z0);
        const double v = quantile(p, cp, zm, z1) - quantile(q, cq, zm, z1);
        const double dz = z1 - z0;
        if ((u >= 0.0) == (v >= 0.0)) {
            total += 0.5 * dz * (std::abs(u) + std::abs(v));
        } else {
            total += 0.5 * dz * (u * u + v * v) / (std::abs(u) + std::abs(v));
        }
    }
    return total;
}

}  // namespace pme
