#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pme/quadrature.hpp"
#include "pme/reference.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using pme::BarenblattProfile;

namespace {
double quad_mass(const BarenblattProfile& p, double t) {
    const auto s = p.support(t);
    return pme::quad::integrate([&](double x) { return p(t, x); }, s.lo, s.hi, 1e-13, 20000).value;
}
}  // namespace

TEST_CASE("barenblatt m=2 unit mass closed form") {
    BarenblattProfile p(2.0, 1.0);
    const double c = std::pow(9.0, 2.0 / 3.0) / 12.0;
    CHECK_THAT(p.mass_parameter(), WithinRel(c, 1e-13));
    CHECK_THAT(p.mass_parameter(), WithinAbs(0.360562, 1e-6));
    CHECK_THAT(p(1.0, 0.0), WithinRel(c, 1e-13));
    CHECK_THAT(p.half_width(1.0), WithinRel(std::cbrt(9.0), 1e-13));
    CHECK(p(1.0, 2.1) == 0.0);
    CHECK(p(1.0, -2.1) == 0.0);
    CHECK_THROWS(p(0.0, 0.0));
}

TEST_CASE("mass is time independent and matches quadrature") {
    for (double m : {1.5, 2.0, 3.0, 5.0}) {
        BarenblattProfile p(m, 1.0);
        for (double t : {0.5, 1.0, 2.0, 8.0}) {
            INFO("m=" << m << " t=" << t);
            CHECK_THAT(quad_mass(p, t), WithinAbs(1.0, 1e-10));
        }
    }
}

TEST_CASE("mass parameter oracle and monotonicity") {
    // m = 3 closed form against independent quadrature of B
    const double c3 = pme::barenblatt_mass_parameter(3.0, 1.0);
    CHECK_THAT(quad_mass(BarenblattProfile::from_mass_parameter(3.0, c3), 1.0), WithinAbs(1.0, 1e-10));
    for (double m : {1.5, 2.0, 3.0}) {
        CHECK(pme::barenblatt_mass_parameter(m, 2.0) > pme::barenblatt_mass_parameter(m, 1.0));
    }
    auto p = BarenblattProfile::from_mass_parameter(2.0, 0.5);
    CHECK_THAT(p.mass(), WithinAbs(quad_mass(p, 1.0), 1e-10));
    CHECK_THROWS(BarenblattProfile(2.0, -1.0));
    CHECK_THROWS(BarenblattProfile(1.0, 1.0));
}

TEST_CASE("self-similarity") {
    BarenblattProfile p(2.0, 1.0);
    const double lam = 3.7;
    for (double x : {-1.5, -0.3, 0.0, 0.8, 2.0}) {
        const double lhs = p(lam * 1.3, x);
        const double rhs = std::pow(lam, -1.0 / 3.0) * p(1.3, std::pow(lam, -1.0 / 3.0) * x);
        CHECK_THAT(lhs, WithinAbs(rhs, 1e-14));
    }
    CHECK(pme::barenblatt_eval(p, 1.0, 0.3) == p(1.0, 0.3));
}

TEST_CASE("support half-width formula") {
    for (double m : {1.5, 3.0}) {
        BarenblattProfile p(m, 1.0);
        const double a = std::sqrt(2.0 * m * (m + 1.0) / (m - 1.0) * std::pow(p.mass_parameter(), m - 1.0));
        CHECK_THAT(p.half_width(2.0), WithinRel(a * std::pow(2.0, 1.0 / (m + 1.0)), 1e-13));
        CHECK(p(2.0, 0.999 * p.half_width(2.0)) > 0.0);
    }
}

TEST_CASE("two-particle closed form") {
    CHECK(pme::n1_gap_closed_form(1.0, 2.0, 0.0) == 1.0);
    CHECK_THAT(pme::n1_gap_closed_form(1.0, 2.0, 1.0), WithinRel(1.9129312, 1e-7));
    CHECK_THAT(pme::n1_gap_closed_form(1.0, 3.0, 10.0), WithinRel(3.0, 1e-14));
}

TEST_CASE("L1 and Lm errors") {
    pme::PiecewiseDensity unit{{0.0, 1.0}, {1.0}};
    auto same = [](double x) { return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0; };
    CHECK_THAT(pme::l1_error(unit, same, {0.0, 1.0}), WithinAbs(0.0, 1e-12));
    CHECK_THAT(pme::lm_error(unit, same, {0.0, 1.0}, 2.0), WithinAbs(0.0, 1e-12));

    auto disjoint = [](double x) { return (x >= 3.0 && x <= 4.0) ? 1.0 : 0.0; };
    CHECK_THAT(pme::l1_error(unit, disjoint, {3.0, 4.0}), WithinAbs(2.0, 1e-10));

    // |1 - 2x| on [0,1] integrates to 1/2; L2 norm sqrt(1/3)
    auto ramp = [](double x) { return (x >= 0.0 && x <= 1.0) ? 2.0 * x : 0.0; };
    CHECK_THAT(pme::l1_error(unit, ramp, {0.0, 1.0}), WithinAbs(0.5, 1e-10));
    CHECK_THAT(pme::lm_error(unit, ramp, {0.0, 1.0}, 2.0), WithinAbs(std::sqrt(1.0 / 3.0), 1e-9));

    // scaling both by lambda scales the Lm norm by lambda
    pme::PiecewiseDensity unit3{{0.0, 1.0}, {3.0}};
    auto ramp3 = [](double x) { return (x >= 0.0 && x <= 1.0) ? 6.0 * x : 0.0; };
    CHECK_THAT(pme::lm_error(unit3, ramp3, {0.0, 1.0}, 2.0), WithinAbs(3.0 * std::sqrt(1.0 / 3.0), 1e-9));
}
