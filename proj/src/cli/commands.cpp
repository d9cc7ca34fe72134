#include "pme/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>

#include "pme/cli/svg.hpp"
#include "pme/diagnostics.hpp"
#include "pme/reference.hpp"

namespace pme::cli {
namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const ExperimentConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out);
    const auto path = fs::path(cfg.out) / name;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    return f;
}

std::size_t single_n(const ExperimentConfig& cfg) {
    if (cfg.N.size() != 1) throw ConfigError("field 'N': this command takes a single N");
    return cfg.N.front();
}

// Companion state for the contraction check: every gap scaled by a seeded
// factor in [0.8, 1.2], then shifted.
ParticleState perturbed(const ParticleState& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> factor(0.8, 1.2);
    std::uniform_real_distribution<double> shift(-0.1, 0.1);
    std::vector<double> x(s.intervals() + 1);
    x[0] = s[0] + shift(rng) * (s[s.intervals()] - s[0]);
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = x[i - 1] + (s[i] - s[i - 1]) * factor(rng);
    return s.with_positions(std::move(x), s.time());
}

void print_check(std::ostream& log, const BoundCheck& c) {
    log << (c.passed ? "PASS " : "FAIL ") << c.name << "  checked=" << c.checked
        << " violations=" << c.violations << " worst_slack=" << report::format_number(c.worst);
    if (!c.detail.empty()) log << "  (" << c.detail << ")";
    log << '\n';
}

}  // namespace

IntegratorConfig integrator_config(const ExperimentConfig& cfg) {
    IntegratorConfig ic;
    ic.rel_tol = cfg.rtol;
    ic.abs_tol = cfg.atol;
    ic.output_times = cfg.output_times();
    return ic;
}

int cmd_simulate(const ExperimentConfig& cfg, std::ostream& log) {
    const auto init = initial_state(cfg, single_n(cfg));
    const auto traj = integrate(init, integrator_config(cfg));
    {
        auto f = open_output(cfg, "trajectory.csv");
        report::write_trajectory(f, traj);
    }
    {
        auto f = open_output(cfg, "diagnostics.csv");
        report::write_diagnostics(f, diagnose(traj));
    }
    log << "simulate: N=" << init.intervals() << " m=" << init.exponent() << " samples=" << traj.samples.size()
        << " steps=" << traj.stats.accepted << " rejected=" << traj.stats.rejected << '\n';
    log << "wrote " << (fs::path(cfg.out) / "trajectory.csv").string() << " and "
        << (fs::path(cfg.out) / "diagnostics.csv").string() << '\n';
    return 0;
}

VerifyOutcome run_verify(const ExperimentConfig& cfg) {
    const auto init = initial_state(cfg, single_n(cfg));
    const auto ic = integrator_config(cfg);
    auto traj = integrate(init, ic);
    const auto companion = integrate(perturbed(init, cfg.seed), ic);

    if (cfg.corrupt != 1.0) {
        for (std::size_t s = 1; s < traj.samples.size(); ++s) {
            const auto& st = traj.samples[s];
            std::vector<double> x(st.positions().begin(), st.positions().end());
            for (auto& v : x) v *= cfg.corrupt;
            traj.samples[s] = st.with_positions(std::move(x), st.time());
        }
    }

    VerifyOutcome out;
    VerifyOptions opts;
    out.report = verify_bounds(traj, opts);
    out.report.checks.push_back(check_contraction(traj, companion, opts.contraction_range, opts.contraction_slack));
    out.contraction_left = check_contraction(traj, companion, IndexRange::left_endpoints, opts.contraction_slack);
    out.contraction_left.name = "contraction-left-endpoints";
    return out;
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& log) {
    const auto outcome = run_verify(cfg);
    for (const auto& c : outcome.report.checks) print_check(log, c);
    log << "info: ";
    print_check(log, outcome.contraction_left);
    const bool ok = outcome.report.passed();
    log << (ok ? "verify: all bounds hold\n" : "verify: bound violated\n");
    return ok ? 0 : 1;
}

std::vector<report::ConvergenceRow> run_convergence(const ExperimentConfig& cfg) {
    if (!cfg.density || cfg.density->kind != "barenblatt") {
        throw ConfigError("field 'density': convergence needs a barenblatt density (exact solution)");
    }
    const double md = cfg.density->args[0];
    const double t0 = cfg.density->args[1];
    if (md != cfg.m) throw ConfigError("field 'm': must match the barenblatt exponent");
    const BarenblattProfile exact(md, cfg.density->args[2]);
    const auto ic = integrator_config(cfg);

    auto one = [&](std::size_t n) {
        const auto traj = integrate(initial_state(cfg, n), ic);
        report::ConvergenceRow row;
        row.N = n;
        for (std::size_t s = 1; s < traj.samples.size(); ++s) {
            const auto& st = traj.samples[s];
            const double te = t0 + st.time();
            auto f = [&](double x) { return exact(te, x); };
            const auto pd = reconstruct(st);
            row.l1_error = std::max(row.l1_error, l1_error(pd, f, exact.support(te)));
            row.lm_error = std::max(row.lm_error, lm_error(pd, f, exact.support(te), md));
        }
        return row;
    };

    std::vector<std::future<report::ConvergenceRow>> jobs;
    for (auto n : cfg.N) jobs.push_back(std::async(std::launch::async, one, n));
    std::vector<report::ConvergenceRow> rows;
    for (auto& j : jobs) rows.push_back(j.get());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.N < b.N; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].N == rows[i - 1].N) continue;
        rows[i].order = std::log(rows[i - 1].l1_error / rows[i].l1_error) /
                        std::log(static_cast<double>(rows[i].N) / static_cast<double>(rows[i - 1].N));
        rows[i].has_order = true;
    }
    return rows;
}

int cmd_convergence(const ExperimentConfig& cfg, std::ostream& log) {
    const auto rows = run_convergence(cfg);
    {
        auto f = open_output(cfg, "convergence.csv");
        report::write_convergence(f, rows);
    }
    for (const auto& r : rows) {
        log << "N=" << r.N << " l1=" << report::format_number(r.l1_error)
            << " lm=" << report::format_number(r.lm_error);
        if (r.has_order) log << " order=" << report::format_number(r.order);
        log << '\n';
    }
    if (cfg.plot) {
        Series l1{"L1", {}, {}}, lm{"Lm", {}, {}};
        for (const auto& r : rows) {
            l1.x.push_back(static_cast<double>(r.N));
            l1.y.push_back(r.l1_error);
            lm.x.push_back(static_cast<double>(r.N));
            lm.y.push_back(r.lm_error);
        }
        auto f = open_output(cfg, "convergence.svg");
        write_loglog_svg(f, "error vs N", "N", "sup-in-time error", {l1, lm});
    }
    return 0;
}

std::vector<report::ConsistencyRow> run_consistency(const ExperimentConfig& cfg) {
    const auto init = initial_state(cfg, single_n(cfg));
    const std::size_t n = cfg.outputs;
    if (n < 2) throw ConfigError("field 'outputs': consistency needs at least 2 output times");

    std::vector<TestFunction> family;
    if (cfg.phi == "bump") {
        const double lo = init[0];
        const double L = init[init.intervals()] - lo;
        for (double frac : {0.3, 0.5, 0.7}) family.push_back(bump_test_function(lo + frac * L, 0.4 * L, cfg.T));
    } else if (cfg.phi == "zero") {
        family.push_back(zero_test_function());
    } else {
        family.push_back(constant_test_function(1.0));
    }

    auto ic = integrator_config(cfg);
    ic.output_times = uniform_times(cfg.T, 4 * n);
    const auto fine = integrate(init, ic);

    std::vector<report::ConsistencyRow> rows;
    for (const auto& phi : family) {
        double previous = 0.0;
        for (std::size_t stride : {4, 2, 1}) {
            Trajectory sub;
            for (std::size_t s = 0; s < fine.samples.size(); s += stride) sub.samples.push_back(fine.samples[s]);
            report::ConsistencyRow row;
            row.phi = phi.name;
            row.intervals = sub.samples.size() - 1;
            try {
                row.triple = consistency_triple(sub, phi);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("field 'phi': ") + e.what());
            }
            const double r = std::abs(row.triple.residual());
            if (stride != 4 && previous > 0.0 && r > 0.0) {
                row.order = std::log2(previous / r);
                row.has_order = true;
            }
            previous = r;
            rows.push_back(row);
        }
    }
    return rows;
}

int cmd_consistency(const ExperimentConfig& cfg, std::ostream& log) {
    const auto rows = run_consistency(cfg);
    {
        auto f = open_output(cfg, "consistency.csv");
        report::write_consistency(f, rows);
    }
    for (const auto& r : rows) {
        log << r.phi << " intervals=" << r.intervals
            << " residual=" << report::format_number(r.triple.residual());
        if (r.has_order) log << " order=" << report::format_number(r.order);
        log << '\n';
    }
    return 0;
}

int cmd_barrier(const ExperimentConfig& cfg, std::ostream& log) {
    BarrierConfig b;
    if (cfg.density && cfg.density->kind == "barrier") {
        const auto& a = cfg.density->args;
        if (a[0] < 4 || a[0] != std::floor(a[0])) throw ConfigError("density: barrier N must be an integer >= 4");
        b.N = static_cast<std::size_t>(a[0]);
        b.m = a[1];
        b.beta = a[2];
        b.alpha = a[3];
    } else if (cfg.density) {
        throw ConfigError("field 'density': barrier takes a 'barrier N m beta alpha' spec");
    } else {
        b.N = single_n(cfg);
        b.m = cfg.m;
    }
    const auto barrier = barrier_configuration(b);
    {
        auto f = open_output(cfg, "barrier.csv");
        report::write_barrier(f, barrier);
    }
    const double bound = -2.0 * std::pow(4.0, 0.5 - 1.0 / b.m) / std::pow(b.beta, b.m + 1.0);
    log << "barrier: N=" << b.N << " m=" << b.m << " beta=" << b.beta << " alpha=" << b.alpha << '\n'
        << "ell=" << report::format_number(barrier.ell)
        << " length=" << report::format_number(support_length(barrier.state))
        << " beta*ell=" << report::format_number(b.beta * barrier.ell) << '\n'
        << "Zbar=" << report::format_number(z_min(barrier.state))
        << " lower bound=" << report::format_number(bound) << '\n';
    return 0;
}

int run_command(const ExperimentConfig& cfg, std::ostream& log) {
    validate(cfg);
    if (cfg.command == "simulate") return cmd_simulate(cfg, log);
    if (cfg.command == "verify") return cmd_verify(cfg, log);
    if (cfg.command == "convergence") return cmd_convergence(cfg, log);
    if (cfg.command == "consistency") return cmd_consistency(cfg, log);
    if (cfg.command == "barrier") return cmd_barrier(cfg, log);
    throw ConfigError("unknown command '" + cfg.command + "'");
}

}  // namespace pme::cli
