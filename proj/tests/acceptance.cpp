// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.
// Tolerances are fixed here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "parabifurc/report_io.hpp"
#include "parabifurc/runner.hpp"

using namespace parabifurc;
using cxd = std::complex<double>;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

std::string fmt3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int index, bool pass, const std::string& what, double secs, double limit_secs) {
    const bool in_time = secs < limit_secs;
    if (!pass || !in_time) ++g_failures;
    std::printf("criterion %d: %s - %s [%.2fs < %.0fs]\n", index,
                (pass && in_time) ? "PASS" : "FAIL", what.c_str(), secs, limit_secs);
}

struct FamilyCase {
    Family fam;
    FamilyParams params;
};

std::vector<FamilyCase> all_generator_families() {
    FamilyParams band;
    band.seed = 424242;
    FamilyParams lin;
    lin.alpha_coeffs = {-1.0, 2.0};
    return {
        {Family::Constant, {}},       {Family::AlphaForm, lin},
        {Family::Example1, {}},       {Family::Example2, {}},
        {Family::Example3, {}},       {Family::Theorem5Linear, {}},
        {Family::Theorem7Band, band}, {Family::Counterexample, {}},
    };
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    Timer t;
    bool pass = true;
    std::ostringstream note;
    const auto grid = make_grid();
    MoebiusMapD negI{cxd(-1), cxd(0), cxd(0), cxd(-1)};
    for (long N : {10L, 100L, 1000L}) {
        const double tol = (N + 1) * 1e-14;
        const ext_real pi = pi_value<ext_real>();
        const ext_real eps = sqrt(ext_real(2) - 2 * cos(pi / (N + 1)));
        const auto M = round_to_double(power(from_epsilon<ExtendedScalar>(eps), N + 1));
        const double dev = entry_distance(M, negI);
        const double mdev = map_distance_to_identity(M, grid);
        if (dev > tol || mdev > tol) pass = false;
        note << " N=" << N << ":dev=" << fmt3(dev);
    }
    report(1, pass, "exact periodicity: (N+1)-fold product = -I and identity map;" + note.str(),
           t.seconds(), 1.0);
}

// ---------------------------------------------------------------- criteria 2+3
void criteria2and3() {
    Timer t;
    bool pass2 = true, pass3 = true;
    double worst2 = 0.0, worst_shift = 0.0, worst_wronsk = 0.0, worst_nevai = 0.0;
    // the consistency suites run on the extended engine at every N: binary64
    // cannot hold these contracts at N = 1e4 (the N^3 sensitivity of the
    // recurrence to its rounded traces), which is what Precision exists for
    for (const auto& c : all_generator_families()) {
        for (long N0 : {101L, 1001L, 10001L}) {
            const long N = nearest_admissible(c.fam, N0);
            const auto seq = generate(c.fam, c.params, N);
            const auto ts = a_coefficients(seq);
            const Precision prec = Precision::Extended;
            const auto run = run_recurrences(ts, prec);

            // criterion 2: two-path relative deviation
            const double dev = matrix_entries_check(run, ts, prec);
            double maxF = 0.0;
            for (double v : run.p) maxF = std::max(maxF, std::abs(v));
            for (double v : run.q) maxF = std::max(maxF, std::abs(v));
            worst2 = std::max(worst2, dev / maxF);
            if (dev / maxF > 1e-10) pass2 = false;

            // criterion 3: structural identities
            const double sh = max_shift_residual(run);
            const double wr = max_wronskian_residual(run);
            const double nv = max_nevai_residual_per_n(run, ts);
            worst_shift = std::max(worst_shift, sh);
            worst_wronsk = std::max(worst_wronsk, wr);
            worst_nevai = std::max(worst_nevai, nv);
            if (sh > 1e-12 || wr > 1e-12) pass3 = false;
            if (nv > 1e3 * kUnitRoundoff) pass3 = false;
        }
    }
    const double secs = t.seconds();
    report(2, pass2,
           "two-path equality (products vs recurrence entries) rel<=1e-10; worst=" + fmt3(worst2),
           secs, 5.0);
    report(3, pass3,
           "shift identity & Wronskian rel<=1e-12, nevai residual <= n*1e3*u; worst shift=" +
               fmt3(worst_shift) + " wronskian=" + fmt3(worst_wronsk) +
               " nevai/n=" + fmt3(worst_nevai),
           secs, 15.0);
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    Timer t;
    bool pass = true;
    std::ostringstream note;
    for (const auto& c : all_generator_families()) {
        if (c.fam == Family::Counterexample) continue;  // criterion 5's subject
        const auto Ns = doubling_schedule(c.fam, 100, 900);
        const auto rep = convergence_experiment(c.fam, c.params, Ns, {}, Precision::Standard);
        double lo = rep.scaled[0], hi = rep.scaled[0];
        for (double s : rep.scaled) {
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        bool ok = hi / lo <= 3.0;
        for (std::size_t i = 0; i + 1 < rep.errs.size(); ++i)
            if (rep.errs[i + 1] > rep.errs[i] * 1.05) ok = false;
        if (rep.fit_slope < -1.3 || rep.fit_slope > -0.7) ok = false;
        if (!ok) pass = false;
        note << ' ' << family_name(c.fam) << ":C=" << fmt3(rep.fit_C)
             << ",slope=" << fmt3(rep.fit_slope);
    }
    report(4, pass,
           "convergence: N*err ratio<=3, err nonincreasing(5%), slope in [-1.3,-0.7];" +
               note.str(),
           t.seconds(), 70.0);
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    Timer t;
    bool pass = true;
    const auto grid = make_grid();
    const auto limit = inverse(from_epsilon<StandardScalar>(0.0));  // z/(1+z)
    std::vector<double> cN, c2N;
    for (long N : {100L, 200L, 400L}) {
        const auto seq = generate(Family::Counterexample, {}, N);
        const auto F = compose_sequence(seq);
        const double err_inv = map_distance(F, limit, grid);
        const double err_id = map_distance_to_identity(F, grid);
        cN.push_back(N * err_inv);
        c2N.push_back(static_cast<double>(N) * N * err_inv);
        if (err_id < 0.15) pass = false;  // recomputed for this grid: max|z^2/(1+z)| = 0.340
        const auto chk = check_conditions(seq, 25.0);
        if (!chk.verdict_band || chk.verdict_S) pass = false;
    }
    // err <= c/N with one measured constant; "stable" = the per-N constants do
    // not grow (the true rate is 1/N^2, so they decay; growth would be the failure)
    const double c = *std::max_element(cN.begin(), cN.end());
    for (double v : cN)
        if (v > 1.05 * cN.front()) pass = false;
    std::ostringstream note;
    note << "necessity: err_to_limit <= c/N with c=" << fmt3(c)
         << " (N^2-scaled constants";
    for (double v : c2N) note << ' ' << fmt3(v);
    note << "), err_to_identity >= 0.15, verdicts band=PASS/S=FAIL at A=25";
    report(5, pass, note.str(), t.seconds(), 10.0);
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    Timer t;
    bool pass = true;
    FamilyParams a1;
    a1.A = 1.0;
    if (alpha_pairing(generate(Family::Theorem5Linear, a1, 400)) > 1e-6) pass = false;
    for (long N : {101L, 201L, 401L, 801L})
        if (alpha_pairing(generate(Family::Example1, {}, N)) > 6.5) pass = false;
    for (long N : {102L, 202L, 402L, 802L})
        if (alpha_pairing(generate(Family::Example2, {}, N)) > 26.0) pass = false;
    double prev = 0.0;
    for (long N : {100L, 200L, 400L}) {
        const double v = alpha_pairing(generate(Family::Counterexample, {}, N));
        if (v / N < 6.0 || v / N > 6.5) pass = false;  // ~ 2 pi N
        if (prev > 0 && (v / prev < 1.9 || v / prev > 2.1)) pass = false;
        prev = v;
    }
    report(6, pass,
           "alpha pairing: ~0 for Theorem5Linear, bounded for Example1/2, linear divergence "
           "for Counterexample",
           t.seconds(), 5.0);
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    Timer t;
    bool pass = true;
    for (const auto& c : all_generator_families()) {
        const long N = nearest_admissible(c.fam, 100);
        const auto seq = generate(c.fam, c.params, N);
        const auto ts = a_coefficients(seq);
        const auto run = run_recurrences(ts);
        double max_abs_a = 0.0;
        for (double a : ts.a) max_abs_a = std::max(max_abs_a, std::abs(a));
        const double C = std::pow(static_cast<double>(N), 3) * max_abs_a;
        if (!(C / std::pow(static_cast<double>(N), 3) <= 1.0 / (2.0 * N * N))) pass = false;
        const double dev = max_p_minus_U(run);
        if (dev > 2 * C) pass = false;  // band form
        double sum = 0.0;
        for (long j = 1; j <= N; ++j) sum += std::abs(ts.a[j - 1] * run.p[j]);
        if (dev > sum / std::sin(ts.theta)) pass = false;  // summed form
    }
    report(7, pass, "perturbation bounds: max|p-U| <= 2C and <= sum|a_j p_j|/sin(theta)",
           t.seconds(), 5.0);
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
    Timer t;
    bool pass = true;
    const std::vector<long> ns = {5, 10, 20, 40};
    const auto h = corollary_experiment(planar_H(), cxd(0.1), cxd(0.05), ns, 1);
    for (std::size_t i = 0; i + 1 < h.deviations.size(); ++i)
        if (!(h.deviations[i + 1] < h.deviations[i])) pass = false;
    if (h.deviations.back() > 0.05) pass = false;
    const auto l = corollary_experiment(planar_L(), cxd(0.1), cxd(0.05), ns, 2);
    for (std::size_t i = 0; i + 1 < l.deviations.size(); ++i)
        if (!(l.deviations[i + 1] < l.deviations[i])) pass = false;
    if (l.deviations.back() > 0.05) pass = false;

    // fiber identification against Example 1, measured constant c = 1
    for (long n : {10L, 20L, 40L}) {
        const long N = 2 * n + 1;
        const auto orbit = orbit_epsilons(planar_H(), cxd(1.0 / (n * n)), N);
        const auto ex1 = generate(Family::Example1, {}, N);
        double worst = 0.0;
        for (long k = 0; k < N; ++k) worst = std::max(worst, std::abs(orbit[k] - ex1.eps[k]));
        if (worst > 1.0 / (static_cast<double>(n) * n * n)) pass = false;
    }
    std::ostringstream note;
    note << "planar corollaries: H dev " << fmt3(h.deviations.front()) << "->"
         << fmt3(h.deviations.back()) << ", L dev " << fmt3(l.deviations.front()) << "->"
         << fmt3(l.deviations.back()) << ", fiber eps within 1/n^3 of Example1";
    report(8, pass, note.str(), t.seconds(), 30.0);
}

// ---------------------------------------------------------------- criterion 9
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion9() {
    Timer t;
    bool pass = true;
    ExperimentConfig rate;
    rate.command = "rate";
    rate.family = Family::Theorem7Band;
    rate.seed = 424242;
    rate.params.seed = 424242;
    rate.Ns = {100, 200, 400};

    ExperimentConfig check;
    check.command = "check";
    check.family = Family::Counterexample;
    check.Ns = {200};
    check.A_threshold = 25.0;

    ExperimentConfig planar;
    planar.command = "planar";
    planar.n_values = {5, 10, 20};

    const fs::path base = fs::temp_directory_path() / "parabifurc_acceptance";
    fs::remove_all(base);
    for (const auto& cfg : {rate, check, planar}) {
        const auto d1 = (base / (cfg.command + "_1")).string();
        const auto d2 = (base / (cfg.command + "_2")).string();
        const auto r1 = run_experiment(cfg, d1);
        const auto r2 = run_experiment(cfg, d2);
        if (r1.exit_code != 0 || r2.exit_code != 0 || r1.files.size() != r2.files.size()) {
            pass = false;
            continue;
        }
        for (std::size_t i = 0; i < r1.files.size(); ++i)
            if (slurp(r1.files[i]) != slurp(r2.files[i])) pass = false;
        // config text itself round-trips
        if (parse_config_text(serialize(cfg)) != cfg) pass = false;
    }
    fs::remove_all(base);
    report(9, pass,
           "reproducibility: identical config+seed+precision gives byte-identical reports",
           t.seconds(), 30.0);
}

}  // namespace

int main() {
    criterion1();
    criteria2and3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
