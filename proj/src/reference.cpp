#include "pme/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pme/quadrature.hpp"

namespace pme {
namespace {

double profile_constant(double m) { return (m - 1.0) / (2.0 * m * (m + 1.0)); }

// Integral of |approx - exact|^p over [lo, hi] split at the breakpoints.
double difference_integral(const PiecewiseDensity& approx,
                           const std::function<double(double)>& exact, Interval support,
                           double p, double abs_tol) {
    const double lo = std::min(support.lo, approx.breakpoints.front());
    const double hi = std::max(support.hi, approx.breakpoints.back());
    const auto& bp = approx.breakpoints;

    const std::size_t cells = approx.heights.size();
    const double tol = abs_tol / static_cast<double>(cells + 2);
    double total = 0.0;
    auto outside = [&](double x) { return std::pow(std::abs(exact(x)), p); };
    if (lo < bp.front()) total += quad::integrate(outside, lo, bp.front(), tol).value;
    if (hi > bp.back()) total += quad::integrate(outside, bp.back(), hi, tol).value;
    for (std::size_t i = 0; i < cells; ++i) {
        const double h = approx.heights[i];
        auto cell = [&](double x) { return std::pow(std::abs(h - exact(x)), p); };
        total += quad::integrate(cell, bp[i], bp[i + 1], tol).value;
    }
    return total;
}

}  // namespace

BarenblattProfile::BarenblattProfile(double m, double mass)
    : BarenblattProfile(m, barenblatt_mass_parameter(m, mass), mass, 0) {}

BarenblattProfile::BarenblattProfile(double m, double c, double mass, int)
    : m_(m), c_(c), mass_(mass) {}

BarenblattProfile BarenblattProfile::from_mass_parameter(double m, double mass_parameter) {
    if (!(m > 1.0)) throw std::invalid_argument("Barenblatt: m must be > 1");
    if (!(mass_parameter > 0.0)) throw std::invalid_argument("Barenblatt: C must be > 0");
    const double mass = std::pow(mass_parameter, 0.5 * (m + 1.0)) *
                        std::sqrt(2.0 * m * (m + 1.0) / (m - 1.0)) *
                        std::beta(0.5, m / (m - 1.0));
    return BarenblattProfile(m, mass_parameter, mass, 0);
}

double BarenblattProfile::half_width(double t) const {
    if (!(t > 0.0)) throw std::invalid_argument("Barenblatt: time must be positive");
    return std::sqrt(std::pow(c_, m_ - 1.0) / profile_constant(m_)) *
           std::pow(t, 1.0 / (m_ + 1.0));
}

double BarenblattProfile::operator()(double t, double x) const {
    if (!(t > 0.0)) throw std::invalid_argument("Barenblatt: time must be positive");
    const double scale = std::pow(t, -1.0 / (m_ + 1.0));
    const double xi = scale * x;
    const double base = std::pow(c_, m_ - 1.0) - profile_constant(m_) * xi * xi;
    if (base <= 0.0) return 0.0;
    return scale * std::pow(base, 1.0 / (m_ - 1.0));
}

double barenblatt_eval(const BarenblattProfile& p, double t, double x) { return p(t, x); }

double barenblatt_mass_parameter(double m, double mass) {
    if (!(m > 1.0)) throw std::invalid_argument("Barenblatt: m must be > 1");
    if (!(mass > 0.0)) throw std::invalid_argument("Barenblatt: mass must be > 0");
    const double unit = std::sqrt(2.0 * m * (m + 1.0) / (m - 1.0)) * std::beta(0.5, m / (m - 1.0));
    return std::pow(mass / unit, 2.0 / (m + 1.0));
}

double n1_gap_closed_form(double d0, double m, double t) {
    if (!(d0 > 0.0)) throw std::invalid_argument("n1_gap_closed_form: d0 must be positive");
    return std::pow(std::pow(d0, m + 1.0) + 2.0 * (m + 1.0) * t, 1.0 / (m + 1.0));
}

double l1_error(const PiecewiseDensity& approx, const std::function<double(double)>& exact,
                Interval support, double abs_tol) {
    return difference_integral(approx, exact, support, 1.0, abs_tol);
}

double lm_error(const PiecewiseDensity& approx, const std::function<double(double)>& exact,
                Interval support, double p, double abs_tol) {
    if (!(p >= 1.0)) throw std::invalid_argument("lm_error: exponent must be >= 1");
    return std::pow(difference_integral(approx, exact, support, p, abs_tol), 1.0 / p);
}

}  // namespace pme
