#include "pme/report.hpp"

#include <charconv>
#include <cmath>

namespace pme::report {
namespace {

void schema(std::ostream& out, const char* name) { out << "#schema=" << name << '\n'; }

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

void write_trajectory(std::ostream& out, const Trajectory& traj) {
    schema(out, kTrajectorySchema);
    const std::size_t n = traj.samples.empty() ? 0 : traj.initial().intervals();
    out << "t,min_gap";
    for (std::size_t i = 0; i <= n; ++i) out << ",x_" << i;
    out << '\n';
    for (const auto& s : traj.samples) {
        double gmin = s[1] - s[0];
        for (std::size_t i = 2; i <= n; ++i) gmin = std::min(gmin, s[i] - s[i - 1]);
        out << format_number(s.time()) << ',' << format_number(gmin);
        for (std::size_t i = 0; i <= n; ++i) out << ',' << format_number(s[i]);
        out << '\n';
    }
}

void write_diagnostics(std::ostream& out, const std::vector<DiagnosticsRecord>& rows) {
    schema(out, kDiagnosticsSchema);
    out << "t,Zmin,ab_bound,margin,L,prop3_bound,thm2_bound,max_R,linf_bound,tv\n";
    for (const auto& r : rows) {
        out << format_number(r.t) << ',' << format_number(r.z_min) << ','
            << format_number(r.ab_bound) << ',' << format_number(r.margin) << ','
            << format_number(r.support_length) << ',' << format_number(r.support_bound_prop3) << ','
            << format_number(r.support_bound_thm2) << ',' << format_number(r.max_density) << ','
            << format_number(r.linf_bound) << ',' << format_number(r.tv_halfpower) << '\n';
    }
}

void write_convergence(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
    schema(out, kConvergenceSchema);
    out << "N,l1_error,lm_error,order\n";
    for (const auto& r : rows) {
        out << r.N << ',' << format_number(r.l1_error) << ',' << format_number(r.lm_error) << ','
            << (r.has_order ? format_number(r.order) : "") << '\n';
    }
}

void write_consistency(std::ostream& out, const std::vector<ConsistencyRow>& rows) {
    schema(out, kConsistencySchema);
    out << "phi,intervals,I,J,K,residual,order\n";
    for (const auto& r : rows) {
        out << r.phi << ',' << r.intervals << ',' << format_number(r.triple.I) << ','
            << format_number(r.triple.J) << ',' << format_number(r.triple.K) << ','
            << format_number(r.triple.residual()) << ','
            << (r.has_order ? format_number(r.order) : "") << '\n';
    }
}

void write_barrier(std::ostream& out, const Barrier& barrier) {
    schema(out, kBarrierSchema);
    out << "j,y,S\n";
    const auto& s = barrier.state;
    for (std::size_t j = 0; j <= s.intervals(); ++j) {
        out << j << ',' << format_number(s[j]) << ',';
        if (j > 0) out << format_number(barrier.densities[j - 1]);
        out << '\n';
    }
}

}  // namespace pme::report
