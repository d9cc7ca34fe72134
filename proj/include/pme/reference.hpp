#pragma once

#include <functional>

#include "pme/core.hpp"

namespace pme {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

/// Self-similar source-type solution of rho_t = (rho^m)_xx,
///
///   rho(t, x) = t^{-1/(m+1)} B(t^{-1/(m+1)} x),
///   B(xi)     = (C^{m-1} - (m-1)/(2m(m+1)) xi^2)_+^{1/(m-1)}.
///
/// The mass is independent of t and fixed by C.
class BarenblattProfile {
public:
    /// Profile of the given total mass (C is solved for).
    BarenblattProfile(double m, double mass);

    static BarenblattProfile from_mass_parameter(double m, double mass_parameter);

    double exponent() const { return m_; }
    double mass_parameter() const { return c_; }
    double mass() const { return mass_; }

    /// Half-width of the support at time t > 0.
    double half_width(double t) const;
    Interval support(double t) const { return {-half_width(t), half_width(t)}; }

    /// Profile value; requires t > 0.
    double operator()(double t, double x) const;

private:
    BarenblattProfile(double m, double c, double mass, int);
    double m_;
    double c_;
    double mass_;
};

double barenblatt_eval(const BarenblattProfile& p, double t, double x);

/// The C giving total mass `mass`. Uses the Beta-function closed form
///   mass = C^{(m+1)/2} sqrt(2m(m+1)/(m-1)) B(1/2, m/(m-1)).
double barenblatt_mass_parameter(double m, double mass);

/// Exact gap of the two-particle (N = 1) system, d' = 2 d^{-m}.
double n1_gap_closed_form(double d0, double m, double t);

/// L1 distance between a piecewise constant density and `exact`, integrated
/// over the union of `support` and the density's own support.
double l1_error(const PiecewiseDensity& approx, const std::function<double(double)>& exact,
                Interval support, double abs_tol = 1e-10);

/// L^p distance, (int |approx - exact|^p)^{1/p}, same integration domain.
double lm_error(const PiecewiseDensity& approx, const std::function<double(double)>& exact,
                Interval support, double p, double abs_tol = 1e-12);

}  // namespace pme
