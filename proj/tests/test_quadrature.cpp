#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "pme/quadrature.hpp"

using Catch::Matchers::WithinAbs;
namespace quad = pme::quad;

TEST_CASE("polynomials and smooth functions") {
    auto r = quad::integrate([](double x) { return x * x * x - 2 * x; }, -1.0, 2.0);
    CHECK(r.converged);
    CHECK_THAT(r.value, WithinAbs(0.75, 1e-13));

    r = quad::integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
    CHECK_THAT(r.value, WithinAbs(std::sqrt(std::numbers::pi), 1e-12));

    r = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK_THAT(r.value, WithinAbs(2.0, 1e-13));
}

TEST_CASE("reversed and empty ranges") {
    auto f = [](double x) { return x; };
    CHECK_THAT(quad::integrate(f, 1.0, 0.0).value, WithinAbs(-0.5, 1e-14));
    CHECK(quad::integrate(f, 1.0, 1.0).value == 0.0);
}

TEST_CASE("endpoint singularities") {
    // int_0^1 x^{-1/2} = 2
    auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10, 20000);
    CHECK_THAT(r.value, WithinAbs(2.0, 1e-8));
}

TEST_CASE("cuts at kinks") {
    auto step = [](double x) { return x < 0.3 ? 1.0 : 3.0; };
    const double cuts[] = {0.3, 5.0};
    auto r = quad::integrate(step, 0.0, 1.0, cuts);
    CHECK_THAT(r.value, WithinAbs(0.3 + 2.1, 1e-14));
    CHECK(r.evaluations <= 2 * 15);

    auto abs_kink = [](double x) { return std::abs(x - 0.2); };
    const double k[] = {0.2};
    CHECK_THAT(quad::integrate(abs_kink, -1.0, 1.0, k).value, WithinAbs(0.72 + 0.32, 1e-14));
}

TEST_CASE("trapezoid rule") {
    std::vector<double> t{0, 0.5, 2};
    std::vector<double> v{1, 1, 1};
    CHECK_THAT(quad::trapezoid(t, v), WithinAbs(2.0, 1e-15));
    std::vector<double> lin{0, 0.5, 2};
    CHECK_THAT(quad::trapezoid(t, lin), WithinAbs(2.0, 1e-15));
    CHECK(quad::trapezoid(std::vector<double>{1.0}, std::vector<double>{5.0}) == 0.0);
    CHECK_THROWS(quad::trapezoid(t, std::vector<double>{1.0}));
}
