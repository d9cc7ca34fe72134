#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pme/core.hpp"
#include "pme/reference.hpp"

namespace pme {

/// Raised when a density cannot be sampled into the open particle cone.
class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A unit-mass probability density on the line.
///
/// `support` must contain the support of the density; it is trimmed to the
/// actual support before sampling. `kinks` lists points where the density is
/// not smooth (jumps, corners) so that quadrature can split there.
struct DensitySpec {
    std::string name;
    std::function<double(double)> density;
    Interval support;
    std::vector<double> kinks;
};

/// Checks non-negativity on a probe grid and unit mass to 1e-8.
void validate(const DensitySpec& rho);

DensitySpec uniform_density(double a, double b);
/// Barenblatt profile at time t0; `mass` must be 1.
DensitySpec barenblatt_density(double m, double t0, double mass = 1.0);
/// Centered Gaussian of width sigma truncated to [a, b] and renormalized.
DensitySpec truncated_gaussian_density(double a, double b, double sigma);
DensitySpec piecewise_density(const PiecewiseDensity& pd, std::string name = "piecewise");

/// Mass of rho on [a, b] by adaptive quadrature (absolute tolerance 1e-12).
double mass_between(const DensitySpec& rho, double a, double b);

/// Right-continuous pseudo-inverse X(z) = inf{x : F(x) > z}, 0 < z < 1,
/// located to 1e-10 in x.
double cdf_pseudo_inverse(const DensitySpec& rho, double z);

/// Support preserving sampling: x_0 = inf supp, each next particle at the
/// smallest point accruing mass 1/N, x_N = sup supp. Throws SamplingError
/// for densities with interior zero-mass gaps.
ParticleState sample_support_preserving(const DensitySpec& rho, std::size_t N, double m);

/// Auxiliary configuration with uniformly bounded AB constant, built from
/// f(z) = (z(1-z))^{-1/m}.
struct BarrierConfig {
    std::size_t N = 4;
    double m = 2.0;
    double beta = 1.0;
    double alpha = 0.0;  ///< position of the leftmost particle
};

struct Barrier {
    ParticleState state;
    std::vector<double> densities;  ///< S_k = 1 / (beta f((k - 1/2)/N)), k = 1..N
    double ell;                     ///< integral of f over (0, 1)
};

Barrier barrier_configuration(const BarrierConfig& cfg);

/// ell(m) = int_0^1 (z(1-z))^{-1/m} dz, for m > 1.
double barrier_integral(double m);

/// 1-Wasserstein distance as the L1 distance of the (piecewise linear)
/// quantile functions, integrated exactly on the merged mass grid.
double wasserstein1(const PiecewiseDensity& p, const PiecewiseDensity& q);

}  // namespace pme
