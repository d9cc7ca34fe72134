#include "pme/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pme {

ParticleState::ParticleState(std::vector<double> positions, double m, double t)
    : positions_(std::move(positions)), m_(m), t_(t) {
    if (positions_.size() < 2) {
        throw std::invalid_argument("ParticleState: need at least two particles (N >= 1)");
    }
    if (!(m_ > 1.0) || !std::isfinite(m_)) {
        throw std::invalid_argument("ParticleState: exponent m must be finite and > 1");
    }
    if (!(t_ >= 0.0) || !std::isfinite(t_)) {
        throw std::invalid_argument("ParticleState: time must be finite and >= 0");
    }
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (!std::isfinite(positions_[i])) {
            throw std::invalid_argument("ParticleState: non-finite position at index " +
                                        std::to_string(i));
        }
        if (i > 0 && !(positions_[i] > positions_[i - 1])) {
            throw std::invalid_argument("ParticleState: positions not strictly increasing at index " +
                                        std::to_string(i));
        }
    }
}

ParticleState ParticleState::with_positions(std::vector<double> positions, double t) const {
    return ParticleState(std::move(positions), m_, t);
}

double DensityVector::padded(std::ptrdiff_t k) const {
    if (k < 1 || k > static_cast<std::ptrdiff_t>(values.size())) return 0.0;
    return values[static_cast<std::size_t>(k - 1)];
}

double PiecewiseDensity::mass() const {
    double total = 0.0;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        total += heights[i] * (breakpoints[i + 1] - breakpoints[i]);
    }
    return total;
}

double PiecewiseDensity::operator()(double x) const {
    if (heights.empty() || x < breakpoints.front() || x >= breakpoints.back()) return 0.0;
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    return heights[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

GapVector gaps(const ParticleState& state) {
    const auto x = state.positions();
    GapVector d;
    d.values.resize(state.intervals());
    for (std::size_t i = 1; i < x.size(); ++i) d.values[i - 1] = x[i] - x[i - 1];
    return d;
}

DensityVector densities(const ParticleState& state) {
    const auto x = state.positions();
    const auto n = static_cast<double>(state.intervals());
    DensityVector R;
    R.values.resize(state.intervals());
    for (std::size_t i = 1; i < x.size(); ++i) R.values[i - 1] = 1.0 / (n * (x[i] - x[i - 1]));
    return R;
}

std::vector<double> forward_diff(std::span<const double> F) {
    const std::size_t n = F.size();
    const double scale = static_cast<double>(n);
    std::vector<double> out(n + 1);
    // out[k] = N (F_{k+1} - F_k); F_0 = F_{N+1} = 0.
    for (std::size_t k = 0; k <= n; ++k) {
        const double next = k < n ? F[k] : 0.0;
        const double here = k > 0 ? F[k - 1] : 0.0;
        out[k] = scale * (next - here);
    }
    return out;
}

std::vector<double> discrete_laplacian(std::span<const double> F) {
    const std::size_t n = F.size();
    const double scale = static_cast<double>(n) * static_cast<double>(n);
    auto at = [&](std::size_t k) { return (k >= 1 && k <= n) ? F[k - 1] : 0.0; };
    std::vector<double> out(n + 2);
    for (std::size_t k = 0; k <= n + 1; ++k) {
        const double prev = k > 0 ? at(k - 1) : 0.0;
        out[k] = scale * (at(k + 1) + prev - 2.0 * at(k));
    }
    return out;
}

std::vector<double> power(const DensityVector& R, double p) {
    std::vector<double> out(R.values.size());
    std::transform(R.values.begin(), R.values.end(), out.begin(),
                   [p](double r) { return std::pow(r, p); });
    return out;
}

PiecewiseDensity reconstruct(const ParticleState& state) {
    const auto x = state.positions();
    return PiecewiseDensity{std::vector<double>(x.begin(), x.end()), densities(state).values};
}

}  // namespace pme
