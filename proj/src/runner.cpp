#include "parabifurc/runner.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "parabifurc/errors.hpp"
#include "parabifurc/report_io.hpp"

namespace parabifurc {

namespace {

namespace fs = std::filesystem;

std::string write_file(const std::string& out_dir, const std::string& name,
                       const std::string& content) {
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    return path.string();
}

Precision suite_precision(const ExperimentConfig& cfg, long N) {
    // identity/consistency suites upgrade to extended above the cancellation knee
    return N > 512 ? Precision::Extended : cfg.precision;
}

FamilyParams effective_params(const ExperimentConfig& cfg) {
    FamilyParams p = cfg.params;
    if (cfg.seed) p.seed = cfg.seed;
    return p;
}

double effective_threshold(const ExperimentConfig& cfg) {
    return cfg.A_threshold > 0 ? cfg.A_threshold : default_a_threshold(cfg.precision);
}

std::string stem_of(const ExperimentConfig& cfg) {
    return cfg.out_stem.empty() ? cfg.command : cfg.out_stem;
}

RunResult run_compose(const ExperimentConfig& cfg, const std::string& out_dir) {
    const long N = cfg.Ns.front();
    const auto seq = generate(cfg.family, effective_params(cfg), N, cfg.precision);
    const MoebiusMapD F = compose_sequence(seq, cfg.precision);
    const double dist = map_distance_to_identity(F, make_grid(cfg.grid));

    std::ostringstream os;
    os << "report: compose\n";
    os << "family: " << family_name(cfg.family) << '\n';
    os << "N: " << N << '\n';
    os << "precision: " << precision_name(cfg.precision) << '\n';
    os << "a: " << fmt17(F.a.real()) << ' ' << fmt17(F.a.imag()) << '\n';
    os << "b: " << fmt17(F.b.real()) << ' ' << fmt17(F.b.imag()) << '\n';
    os << "c: " << fmt17(F.c.real()) << ' ' << fmt17(F.c.imag()) << '\n';
    os << "d: " << fmt17(F.d.real()) << ' ' << fmt17(F.d.imag()) << '\n';
    os << "det: " << fmt17(det(F).real()) << ' ' << fmt17(det(F).imag()) << '\n';
    os << "dist_to_identity: " << fmt17(dist) << '\n';

    RunResult r;
    r.files.push_back(write_file(out_dir, stem_of(cfg) + ".txt", os.str()));
    std::ostringstream sm;
    sm << "compose family=" << family_name(cfg.family) << " N=" << N
       << " dist_to_identity=" << fmt17(dist);
    r.summary = sm.str();
    return r;
}

RunResult run_check(const ExperimentConfig& cfg, const std::string& out_dir) {
    RunResult r;
    const double A = effective_threshold(cfg);
    std::string verdicts;
    for (long N : cfg.Ns) {
        const auto seq = generate(cfg.family, effective_params(cfg), N, cfg.precision);
        const auto rep = check_conditions(seq, A, cfg.precision);
        std::ostringstream os;
        write_condition_report(os, rep);
        r.files.push_back(
            write_file(out_dir, stem_of(cfg) + "_N" + std::to_string(N) + ".txt", os.str()));
        if (cfg.out_format == "csv") {
            const auto ts = a_coefficients(seq);
            std::ostringstream cs;
            write_sequence_csv(cs, seq, ts);
            r.files.push_back(
                write_file(out_dir, stem_of(cfg) + "_N" + std::to_string(N) + ".csv", cs.str()));
        }
        verdicts += " N=" + std::to_string(N) + ":S=" + (rep.verdict_S ? "PASS" : "FAIL") +
                    ",band=" + (rep.verdict_band ? "PASS" : "FAIL");
    }
    r.summary = "check family=" + std::string(family_name(cfg.family)) +
                " A=" + fmt17(A) + verdicts;
    return r;
}

RunResult run_rate(const ExperimentConfig& cfg, const std::string& out_dir) {
    const auto rep =
        convergence_experiment(cfg.family, effective_params(cfg), cfg.Ns, cfg.grid, cfg.precision);
    RunResult r;
    if (cfg.out_format == "csv") {
        std::ostringstream os;
        write_convergence_csv(os, rep);
        r.files.push_back(write_file(out_dir, stem_of(cfg) + ".csv", os.str()));
    } else {
        std::ostringstream os;
        write_convergence_structured(os, rep, cfg.seed);
        r.files.push_back(write_file(out_dir, stem_of(cfg) + ".txt", os.str()));
    }
    std::ostringstream sm;
    sm << "rate family=" << family_name(cfg.family) << " N=" << cfg.Ns.front() << ".."
       << cfg.Ns.back() << " fit_C=" << fmt17(rep.fit_C) << " fit_slope=" << fmt17(rep.fit_slope);
    r.summary = sm.str();
    return r;
}

RunResult run_counterexample(const ExperimentConfig& cfg, const std::string& out_dir) {
    const auto grid_pts = make_grid(cfg.grid);
    const MoebiusMapD limit = inverse(from_epsilon<StandardScalar>(0.0));  // z/(1+z)
    ConvergenceReport rep;
    rep.family = cfg.family;
    rep.params = effective_params(cfg);
    rep.grid = cfg.grid;
    rep.precision = cfg.precision;
    rep.Ns = cfg.Ns;
    std::vector<double> err_inv;
    for (long N : cfg.Ns) {
        const auto seq = generate(cfg.family, rep.params, N, cfg.precision);
        const MoebiusMapD F = compose_sequence(seq, cfg.precision);
        rep.errs.push_back(map_distance_to_identity(F, grid_pts));
        rep.scaled.push_back(N * rep.errs.back());
        err_inv.push_back(map_distance(F, limit, grid_pts));
    }
    rep.fit_slope = fit_loglog_slope(rep.Ns, rep.errs);
    for (double s : rep.scaled) rep.fit_C = std::max(rep.fit_C, s);

    const double A = effective_threshold(cfg);
    std::ostringstream os;
    os << "report: counterexample\n";
    os << "limit_map: z/(1+z)\n";
    os << "A_threshold: " << fmt17(A) << '\n';
    os << "rows:\n";
    for (std::size_t i = 0; i < rep.Ns.size(); ++i) {
        const auto seq = generate(cfg.family, rep.params, rep.Ns[i], cfg.precision);
        const auto chk = check_conditions(seq, A, cfg.precision);
        os << "  - N: " << rep.Ns[i] << "  err_to_identity: " << fmt17(rep.errs[i])
           << "  err_to_limit: " << fmt17(err_inv[i])
           << "  N_err_to_limit: " << fmt17(rep.Ns[i] * err_inv[i])
           << "  verdict_S: " << (chk.verdict_S ? "PASS" : "FAIL")
           << "  verdict_band: " << (chk.verdict_band ? "PASS" : "FAIL") << '\n';
    }
    RunResult r;
    r.files.push_back(write_file(out_dir, stem_of(cfg) + ".txt", os.str()));
    std::ostringstream cs;
    write_convergence_csv(cs, rep);
    r.files.push_back(write_file(out_dir, stem_of(cfg) + ".csv", cs.str()));
    std::ostringstream sm;
    sm << "counterexample N=" << cfg.Ns.front() << ".." << cfg.Ns.back()
       << " err_to_identity=" << fmt17(rep.errs.back())
       << " err_to_limit=" << fmt17(err_inv.back());
    r.summary = sm.str();
    return r;
}

RunResult run_identities(const ExperimentConfig& cfg, const std::string& out_dir) {
    const long N = cfg.Ns.front();
    const Precision prec = suite_precision(cfg, N);
    const auto seq = generate(cfg.family, effective_params(cfg), N, cfg.precision);
    const auto ts = a_coefficients(seq);
    const auto run = run_recurrences(ts, prec);
    const double shift = max_shift_residual(run);
    const double wronsk = max_wronskian_residual(run);
    const double nevai = max_nevai_residual_per_n(run, ts);
    const double entries = matrix_entries_check(run, ts, prec);
    const auto pb = proposition_bounds(run);

    std::ostringstream os;
    os << "report: identities\n";
    os << "family: " << family_name(cfg.family) << '\n';
    os << "N: " << N << '\n';
    os << "precision: " << precision_name(prec) << '\n';
    os << "max_shift_residual: " << fmt17(shift) << '\n';
    os << "max_wronskian_residual: " << fmt17(wronsk) << '\n';
    os << "max_nevai_residual_per_n: " << fmt17(nevai) << '\n';
    os << "nevai_tolerance_per_n: " << fmt17(1e3 * kUnitRoundoff) << '\n';
    os << "matrix_entries_deviation: " << fmt17(entries) << '\n';
    os << "prop_pN: " << fmt17(pb.pN_abs) << '\n';
    os << "prop_pN1_plus1: " << fmt17(pb.pN1_plus1_abs) << '\n';
    os << "prop_ptildeN: " << fmt17(pb.ptildeN_abs) << '\n';
    os << "prop_ptildeN1_minus1: " << fmt17(pb.ptildeN1_minus1_abs) << '\n';

    RunResult r;
    r.files.push_back(write_file(out_dir, stem_of(cfg) + ".txt", os.str()));
    std::ostringstream sm;
    sm << "identities family=" << family_name(cfg.family) << " N=" << N
       << " shift=" << fmt17(shift) << " wronskian=" << fmt17(wronsk)
       << " nevai_per_n=" << fmt17(nevai);
    r.summary = sm.str();
    return r;
}

RunResult run_planar(const ExperimentConfig& cfg, const std::string& out_dir) {
    const PlanarMap map = cfg.map == "H" ? planar_H() : planar_L();
    const auto rep = corollary_experiment(map, cfg.z0, cfg.w0, cfg.n_values, cfg.multiplier);
    RunResult r;
    if (cfg.out_format == "csv") {
        std::ostringstream os;
        write_planar_csv(os, rep);
        r.files.push_back(write_file(out_dir, stem_of(cfg) + ".csv", os.str()));
    } else {
        std::ostringstream os;
        write_planar_structured(os, rep);
        r.files.push_back(write_file(out_dir, stem_of(cfg) + ".txt", os.str()));
    }
    std::ostringstream sm;
    sm << "planar map=" << cfg.map << " n=" << cfg.n_values.front() << ".."
       << cfg.n_values.back() << " final_dev=" << fmt17(rep.deviations.back());
    r.summary = sm.str();
    return r;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, const std::string& out_dir) {
    const auto violations = validate(cfg);
    if (!violations.empty()) {
        RunResult r;
        r.exit_code = 2;
        std::string msg = "invalid config:";
        for (const auto& v : violations) msg += " [" + v + "]";
        r.summary = msg;
        return r;
    }
    try {
        if (cfg.command == "compose") return run_compose(cfg, out_dir);
        if (cfg.command == "check") return run_check(cfg, out_dir);
        if (cfg.command == "rate") return run_rate(cfg, out_dir);
        if (cfg.command == "counterexample") return run_counterexample(cfg, out_dir);
        if (cfg.command == "identities") return run_identities(cfg, out_dir);
        return run_planar(cfg, out_dir);
    } catch (const PoleError& e) {
        return {3, {}, std::string("numerical failure: ") + e.what()};
    } catch (const DivergenceError& e) {
        return {3, {}, std::string("numerical failure: ") + e.what()};
    } catch (const BasinError& e) {
        return {3, {}, std::string("numerical failure: ") + e.what()};
    } catch (const IncompatibleN& e) {
        return {2, {}, std::string("invalid config: ") + e.what()};
    } catch (const std::invalid_argument& e) {
        return {2, {}, std::string("invalid config: ") + e.what()};
    }
}

}  // namespace parabifurc
