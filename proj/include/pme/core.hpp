#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pme {

/// Ordered particle positions x_0 < x_1 < ... < x_N at one instant.
///
/// Each of the N intervals [x_{i-1}, x_i) carries mass 1/N. The constructor
/// enforces the strict ordering (the open cone), N >= 1, m > 1 and t >= 0;
/// an instance is therefore always a valid input to every operation below.
class ParticleState {
public:
    ParticleState(std::vector<double> positions, double m, double t = 0.0);

    std::size_t intervals() const { return positions_.size() - 1; }
    double exponent() const { return m_; }
    double time() const { return t_; }
    std::span<const double> positions() const { return positions_; }
    double operator[](std::size_t i) const { return positions_[i]; }

    ParticleState with_positions(std::vector<double> positions, double t) const;

private:
    std::vector<double> positions_;
    double m_;
    double t_;
};

/// Interval lengths d_i = x_i - x_{i-1}, i = 1..N (stored 0-based).
struct GapVector {
    std::vector<double> values;
};

/// Interval densities R_i = 1/(N d_i), i = 1..N (stored 0-based).
/// Reads outside 1..N are zero; see `padded`.
struct DensityVector {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    /// 1-based access with R_0 = R_{N+1} = 0.
    double padded(std::ptrdiff_t k) const;
};

/// Piecewise constant density, height_i on [breakpoint_{i-1}, breakpoint_i).
struct PiecewiseDensity {
    std::vector<double> breakpoints;
    std::vector<double> heights;

    double mass() const;
    double operator()(double x) const;
};

GapVector gaps(const ParticleState& state);
DensityVector densities(const ParticleState& state);

/// D+_k F = N (F_{k+1} - F_k) for k = 0..N, with F read as zero outside 1..N.
/// F is passed 0-based (F[0] = F_1).
std::vector<double> forward_diff(std::span<const double> F);

/// Delta_k F = N^2 (F_{k+1} + F_{k-1} - 2 F_k) for k = 0..N+1 (zero padding).
std::vector<double> discrete_laplacian(std::span<const double> F);

/// Elementwise power of the density vector, R^p.
std::vector<double> power(const DensityVector& R, double p);

PiecewiseDensity reconstruct(const ParticleState& state);

}  // namespace pme
