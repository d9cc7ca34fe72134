#pragma once

#include <functional>
#include <span>

namespace pme::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature to an absolute
/// error target. The interval with the largest error estimate is bisected
/// until the summed estimate drops below `abs_tol` or `max_intervals` is hit.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, int max_intervals = 4000);

/// Same, but the integration range is first split at every point of
/// `cuts` that falls strictly inside (a, b). Use for known kinks or jumps.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> cuts, double abs_tol = 1e-12,
                 int max_intervals = 4000);

/// Composite trapezoid rule on a (non-uniform) grid.
double trapezoid(std::span<const double> t, std::span<const double> values);

}  // namespace pme::quad
