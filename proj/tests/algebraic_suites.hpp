// Seeded random-instance suites for the algebraic identities and
// inequalities the estimates rest on. Each returns the number of violations.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pme/core.hpp"

namespace suites {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }
    // log-uniform magnitude in [10^lo, 10^hi]
    double magnitude(double lo, double hi) { return std::pow(10.0, uniform(lo, hi)); }
    // nonnegative vector, some entries exactly zero, not all zero
    std::vector<double> nonnegative(std::size_t n) {
        std::vector<double> f(n);
        for (auto& v : f) v = index(0, 4) == 0 ? 0.0 : magnitude(-3, 3);
        if (std::all_of(f.begin(), f.end(), [](double v) { return v == 0.0; })) f[index(0, n - 1)] = 1.0;
        return f;
    }
    std::vector<double> signed_vector(std::size_t n) {
        std::vector<double> f(n);
        for (auto& v : f) v = uniform(-1, 1) * magnitude(-2, 2);
        return f;
    }
};

inline double max_abs(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

/// Sum of Delta_k F over k = 0..N+1 vanishes; some Delta_k F, k in 1..N, is negative.
inline std::size_t laplacian_sum_and_sign(std::uint64_t seed, std::size_t count) {
    Gen g(seed);
    std::size_t bad = 0;
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t n = g.index(1, 64);
        const auto F = g.nonnegative(n);
        const auto lap = pme::discrete_laplacian(F);
        double sum = 0;
        for (double v : lap) sum += v;
        const double N2 = static_cast<double>(n * n);
        const bool zero_sum = std::abs(sum) <= 1e-12 * N2 * max_abs(F);
        const bool negative = *std::min_element(lap.begin() + 1, lap.end() - 1) < 0.0;
        if (!zero_sum || !negative) ++bad;
    }
    return bad;
}

/// -sum_{k=1}^N G_k Delta_k F = sum_{k=0}^N D+_k F D+_k G.
inline std::size_t summation_by_parts(std::uint64_t seed, std::size_t count) {
    Gen g(seed);
    std::size_t bad = 0;
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t n = g.index(1, 64);
        const auto F = g.signed_vector(n);
        const auto G = g.signed_vector(n);
        const auto lap = pme::discrete_laplacian(F);
        const auto dF = pme::forward_diff(F);
        const auto dG = pme::forward_diff(G);
        double lhs = 0, rhs = 0;
        for (std::size_t k = 1; k <= n; ++k) lhs -= G[k - 1] * lap[k];
        for (std::size_t k = 0; k <= n; ++k) rhs += dF[k] * dG[k];
        const double tol = 1e-10 * static_cast<double>(n * n) * max_abs(F) * max_abs(G);
        if (!(std::abs(lhs - rhs) <= tol)) ++bad;
    }
    return bad;
}

/// (z - y)(z^p - y^p) >= 4p/(p+1)^2 (z^{(p+1)/2} - y^{(p+1)/2})^2 for y, z >= 0.
/// Both sides are second order in z - y, so the 1e-12 relative slack is taken
/// against the operand scale |z - y| max(y^p, z^p) rather than the results.
inline std::size_t ineq1(std::uint64_t seed, std::size_t count) {
    Gen g(seed);
    std::size_t bad = 0;
    for (std::size_t c = 0; c < count; ++c) {
        const double p = 5.0 * (1.0 - g.uniform(0, 1));  // (0, 5]
        double y = g.magnitude(-4, 4);
        double z = g.magnitude(-4, 4);
        switch (g.index(0, 9)) {
            case 0: y = 0; break;
            case 1: z = y; break;
            case 2: z = y * (1 + g.uniform(-1e-3, 1e-3)); break;
            default: break;
        }
        const double lhs = (z - y) * (std::pow(z, p) - std::pow(y, p));
        const double d = std::pow(z, 0.5 * (p + 1)) - std::pow(y, 0.5 * (p + 1));
        const double rhs = 4 * p / ((p + 1) * (p + 1)) * d * d;
        const double scale = std::abs(z - y) * std::max(std::pow(y, p), std::pow(z, p));
        if (lhs < rhs - 1e-12 * scale) ++bad;
    }
    return bad;
}

/// (1 + a)^{1/(m+1)} <= 1 + a^{1/(m+1)} for a > 0, m > 0.
inline std::size_t very_elementary(std::uint64_t seed, std::size_t count) {
    Gen g(seed);
    std::size_t bad = 0;
    for (std::size_t c = 0; c < count; ++c) {
        const double a = g.magnitude(-8, 8);
        const double m = g.magnitude(-3, 2);
        const double lhs = std::pow(1 + a, 1 / (m + 1));
        const double rhs = 1 + std::pow(a, 1 / (m + 1));
        if (lhs > rhs * (1 + 1e-14)) ++bad;
    }
    return bad;
}

}  // namespace suites
