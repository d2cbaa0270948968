#include "parabifurc/report_io.hpp"

#include <cstdio>

namespace parabifurc {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_sequence_csv(std::ostream& os, const EpsilonSequence& seq, const TraceSequence& ts) {
    os << "k,eps_k,t_k,a_k\n";
    for (long k = 1; k <= seq.N; ++k) {
        os << k << ',' << fmt17(seq.eps[k - 1]) << ',' << fmt17(ts.t[k - 1]) << ','
           << fmt17(ts.a[k - 1]) << '\n';
    }
}

void write_condition_report(std::ostream& os, const ConditionReport& rep) {
    os << "family=" << family_name(rep.family) << '\n';
    os << "N=" << rep.N << '\n';
    os << "precision=" << precision_name(rep.precision) << '\n';
    os << "A_threshold=" << fmt17(rep.A_threshold) << '\n';
    os << "S=" << fmt17(rep.S) << '\n';
    os << "S_pi_form=" << fmt17(rep.S_pi) << '\n';
    os << "S_scaled=" << fmt17(rep.S_scaled) << '\n';
    os << "band=" << fmt17(rep.band) << '\n';
    if (rep.alpha_pairing) os << "alpha_pairing=" << fmt17(*rep.alpha_pairing) << '\n';
    os << "verdict_S=" << (rep.verdict_S ? "PASS" : "FAIL") << '\n';
    os << "verdict_band=" << (rep.verdict_band ? "PASS" : "FAIL") << '\n';
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& rep) {
    os << "N,err,N_err,slope_running\n";
    for (std::size_t i = 0; i < rep.Ns.size(); ++i) {
        std::vector<long> ns(rep.Ns.begin(), rep.Ns.begin() + i + 1);
        std::vector<double> es(rep.errs.begin(), rep.errs.begin() + i + 1);
        os << rep.Ns[i] << ',' << fmt17(rep.errs[i]) << ',' << fmt17(rep.scaled[i]) << ','
           << fmt17(fit_loglog_slope(ns, es)) << '\n';
    }
}

void write_convergence_structured(std::ostream& os, const ConvergenceReport& rep,
                                  std::optional<std::uint64_t> seed) {
    os << "report: convergence\n";
    os << "family: " << family_name(rep.family) << '\n';
    os << "params:\n";
    os << "  A: " << fmt17(rep.params.A) << '\n';
    if (!rep.params.alpha_coeffs.empty()) {
        os << "  alpha_coeffs:";
        for (double c : rep.params.alpha_coeffs) os << ' ' << fmt17(c);
        os << '\n';
    }
    os << "  band_constant: " << fmt17(rep.params.band_constant) << '\n';
    if (seed) os << "  seed: " << *seed << '\n';
    os << "grid:\n";
    os << "  center: " << fmt17(rep.grid.center_re) << ' ' << fmt17(rep.grid.center_im) << '\n';
    os << "  radius: " << fmt17(rep.grid.radius) << '\n';
    os << "  points_per_side: " << rep.grid.points_per_side << '\n';
    os << "precision: " << precision_name(rep.precision) << '\n';
    os << "rows:\n";
    for (std::size_t i = 0; i < rep.Ns.size(); ++i) {
        os << "  - N: " << rep.Ns[i] << "  err: " << fmt17(rep.errs[i])
           << "  N_err: " << fmt17(rep.scaled[i]) << '\n';
    }
    os << "fit_slope: " << fmt17(rep.fit_slope) << '\n';
    os << "fit_C: " << fmt17(rep.fit_C) << '\n';
}

void write_planar_csv(std::ostream& os, const PlanarOrbitReport& rep) {
    os << "n,pre_iterates,orbit_len,dev_z,dev_w,dev_max\n";
    for (std::size_t i = 0; i < rep.n_values.size(); ++i) {
        os << rep.n_values[i] << ',' << rep.pre_iterates[i] << ',' << rep.orbit_len[i] << ','
           << fmt17(rep.dev_z[i]) << ',' << fmt17(rep.dev_w[i]) << ','
           << fmt17(rep.deviations[i]) << '\n';
    }
}

void write_planar_structured(std::ostream& os, const PlanarOrbitReport& rep) {
    os << "report: planar-corollary\n";
    os << "coupling: " << fmt17(rep.coupling) << '\n';
    os << "multiplier: " << rep.multiplier << '\n';
    os << "z0: " << fmt17(rep.z0.real()) << ' ' << fmt17(rep.z0.imag()) << '\n';
    os << "w0: " << fmt17(rep.w0.real()) << ' ' << fmt17(rep.w0.imag()) << '\n';
    os << "basin: " << basin_status_name(rep.basin_status) << '\n';
    os << "rows:\n";
    for (std::size_t i = 0; i < rep.n_values.size(); ++i) {
        os << "  - n: " << rep.n_values[i] << "  pre: " << rep.pre_iterates[i]
           << "  len: " << rep.orbit_len[i] << "  dev: " << fmt17(rep.deviations[i]) << '\n';
    }
}

}  // namespace parabifurc
