#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "pme/dynamics.hpp"
#include "pme/reference.hpp"
#include "pme/sampling.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using pme::ParticleState;

TEST_CASE("velocities") {
    auto v = pme::rhs(ParticleState({0, 1}, 2));
    REQUIRE(v.size() == 2);
    CHECK(v[0] == -1.0);
    CHECK(v[1] == 1.0);

    auto u = pme::rhs(ParticleState({0, 0.25, 0.5, 0.75, 1.0}, 2));
    CHECK_THAT(u[0], WithinAbs(-4.0, 1e-12));
    CHECK_THAT(u[4], WithinAbs(4.0, 1e-12));
    for (int i = 1; i < 4; ++i) CHECK_THAT(u[i], WithinAbs(0.0, 1e-12));

    // odd symmetry for a symmetric state: no drift of the centre of mass
    auto w = pme::rhs(ParticleState({-2, -0.5, 0, 0.5, 2}, 3));
    double drift = 0;
    for (double x : w) drift += x;
    CHECK_THAT(drift, WithinAbs(0.0, 1e-12));
}

TEST_CASE("density form") {
    auto r = pme::rhs_density_form(ParticleState({0, 1}, 2));
    REQUIRE(r.size() == 1);
    CHECK(r[0] == -2.0);
    auto u = pme::rhs_density_form(ParticleState({0, 0.25, 0.5, 0.75, 1.0}, 2));
    CHECK_THAT(u[1], WithinAbs(0.0, 1e-12));
    CHECK_THAT(u[2], WithinAbs(0.0, 1e-12));

    // chain rule: dR_i/dt = -N R_i^2 (xdot_i - xdot_{i-1})
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> gap(0.1, 1.0);
    std::vector<double> x{0};
    for (int i = 0; i < 9; ++i) x.push_back(x.back() + gap(rng));
    ParticleState s(x, 2.5);
    auto v = pme::rhs(s);
    auto dR = pme::rhs_density_form(s);
    auto R = pme::densities(s);
    for (std::size_t i = 0; i < 9; ++i) {
        const double chain = -9.0 * R.values[i] * R.values[i] * (v[i + 1] - v[i]);
        CHECK_THAT(dR[i], WithinRel(chain, 1e-10));
    }
}

TEST_CASE("two particles follow the closed form") {
    pme::IntegratorConfig cfg;
    cfg.output_times = {0.1, 1.0, 10.0};
    for (double m : {1.5, 2.0, 3.0}) {
        for (double d0 : {0.5, 1.0, 4.0}) {
            auto traj = pme::integrate(ParticleState({0, d0}, m), cfg);
            REQUIRE(traj.samples.size() == 4);
            CHECK(traj.samples[0][1] == d0);
            for (std::size_t k = 1; k < 4; ++k) {
                const auto& s = traj.samples[k];
                CHECK(s.time() == cfg.output_times[k - 1]);
                CHECK_THAT(s[1] - s[0], WithinRel(pme::n1_gap_closed_form(d0, m, s.time()), 1e-7));
            }
        }
    }
    cfg.output_times = {1.0};
    auto t1 = pme::integrate(ParticleState({0, 1}, 2), cfg);
    CHECK_THAT(t1.final()[1] - t1.final()[0], WithinRel(1.9129312, 1e-7));
}

TEST_CASE("bad integrator settings") {
    ParticleState s({0, 1}, 2);
    pme::IntegratorConfig cfg;
    cfg.output_times = {};
    CHECK(pme::integrate(s, cfg).samples.size() == 1);
    cfg.output_times = {1.0, 0.5};
    CHECK_THROWS(pme::integrate(s, cfg));
    cfg.output_times = {1.0};
    cfg.rel_tol = 0;
    CHECK_THROWS(pme::integrate(s, cfg));
    cfg.rel_tol = 1e-8;
    cfg.gap_guard = 1.5;
    CHECK_THROWS(pme::integrate(s, cfg));
    cfg.gap_guard = 0.5;
    cfg.max_steps = 3;
    CHECK_THROWS_AS(pme::integrate(pme::sample_support_preserving(pme::uniform_density(0, 1), 50, 2), cfg),
                    pme::IntegrationError);
}

TEST_CASE("trajectory invariants") {
    auto init = pme::sample_support_preserving(pme::truncated_gaussian_density(-1, 1, 0.4), 40, 2.0);
    pme::IntegratorConfig cfg;
    cfg.output_times = pme::uniform_times(2.0, 20);
    cfg.record_steps = true;
    auto traj = pme::integrate(init, cfg);
    CHECK(traj.samples.size() == 21);
    CHECK(traj.steps.size() == traj.stats.accepted + 1);
    CHECK(traj.stats.min_step <= traj.stats.max_step);
    const auto times = traj.times();
    for (std::size_t i = 1; i < times.size(); ++i) CHECK(times[i] > times[i - 1]);
    for (const auto& s : traj.samples) {
        CHECK_THAT(pme::reconstruct(s).mass(), WithinAbs(1.0, 1e-13));
    }

    // symmetric initial data stays symmetric
    const auto& f = traj.final();
    for (std::size_t i = 0; i <= 40; ++i) CHECK_THAT(f[i] + f[40 - i], WithinAbs(0.0, 1e-9));
}

TEST_CASE("translation covariance") {
    auto a = pme::sample_support_preserving(pme::uniform_density(0, 1), 16, 3.0);
    std::vector<double> shifted(a.positions().begin(), a.positions().end());
    for (auto& x : shifted) x += 2.5;
    pme::IntegratorConfig cfg;
    cfg.output_times = {0.5};
    auto ta = pme::integrate(a, cfg);
    auto tb = pme::integrate(ParticleState(shifted, 3.0), cfg);
    for (std::size_t i = 0; i <= 16; ++i) CHECK_THAT(tb.final()[i] - ta.final()[i], WithinAbs(2.5, 1e-8));
}

TEST_CASE("halving tolerances changes the answer by less than the coarse tolerance") {
    auto init = pme::sample_support_preserving(pme::barenblatt_density(2.0, 1.0), 30, 2.0);
    pme::IntegratorConfig coarse;
    coarse.output_times = {1.0};
    coarse.rel_tol = 1e-6;
    coarse.abs_tol = 1e-8;
    auto fine = coarse;
    fine.rel_tol /= 2;
    fine.abs_tol /= 2;
    auto a = pme::integrate(init, coarse).final();
    auto b = pme::integrate(init, fine).final();
    for (std::size_t i = 0; i <= 30; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-6 * (1 + std::abs(a[i])));
}

TEST_CASE("density form matches finite differences in time") {
    auto init = pme::sample_support_preserving(pme::truncated_gaussian_density(-1, 1, 0.5), 20, 2.0);
    pme::IntegratorConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-14;
    const double h = 1e-5;
    cfg.output_times = {0.3 - h, 0.3, 0.3 + h};
    auto traj = pme::integrate(init, cfg);
    auto Rm = pme::densities(traj.samples[1]).values;
    auto Rp = pme::densities(traj.samples[3]).values;
    auto dR = pme::rhs_density_form(traj.samples[2]);
    for (std::size_t i = 0; i < dR.size(); ++i) {
        CHECK_THAT((Rp[i] - Rm[i]) / (2 * h), WithinAbs(dR[i], 1e-5 * (1 + std::abs(dR[i]))));
    }
}

TEST_CASE("uniform output times") {
    auto t = pme::uniform_times(10.0, 50);
    REQUIRE(t.size() == 50);
    CHECK(t.front() == 0.2);
    CHECK(t.back() == 10.0);
    CHECK_THROWS(pme::uniform_times(0.0, 5));
    CHECK_THROWS(pme::uniform_times(1.0, 0));
}
