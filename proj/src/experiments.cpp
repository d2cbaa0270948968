#include "parabifurc/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace parabifurc {

namespace {

template <class S>
MoebiusMapD compose_impl(std::span<const double> eps) {
    using R = typename S::real;
    MoebiusMap<S> F = moebius_identity<S>();
    for (double e : eps) F = compose(from_epsilon<S>(R(e)), F);
    if constexpr (S::mode == Precision::Standard)
        return F;
    else
        return round_to_double(F);
}

template <class S>
std::vector<MoebiusMapD> partials_impl(std::span<const double> eps) {
    using R = typename S::real;
    std::vector<MoebiusMapD> out;
    out.reserve(eps.size());
    MoebiusMap<S> F = moebius_identity<S>();
    for (double e : eps) {
        F = compose(from_epsilon<S>(R(e)), F);
        if constexpr (S::mode == Precision::Standard)
            out.push_back(F);
        else
            out.push_back(round_to_double(F));
    }
    return out;
}

ConvergenceReport measure(Family family, const FamilyParams& params,
                          const std::vector<long>& Ns, const GridSpec& grid,
                          Precision precision, const std::vector<EpsilonSequence>& seqs) {
    ConvergenceReport rep;
    rep.family = family;
    rep.params = params;
    rep.grid = grid;
    rep.precision = precision;
    rep.Ns = Ns;
    const auto pts = make_grid(grid);
    for (const auto& seq : seqs) {
        const MoebiusMapD F = compose_sequence(seq, precision);
        const double err = map_distance_to_identity(F, pts);
        rep.errs.push_back(err);
        rep.scaled.push_back(static_cast<double>(seq.N) * err);
    }
    rep.fit_slope = fit_loglog_slope(rep.Ns, rep.errs);
    rep.fit_C = 0.0;
    for (double s : rep.scaled) rep.fit_C = std::max(rep.fit_C, s);
    return rep;
}

}  // namespace

MoebiusMapD compose_sequence(const EpsilonSequence& seq,
                             std::optional<Precision> precision_override) {
    const Precision p = precision_override.value_or(seq.precision);
    return p == Precision::Standard ? compose_impl<StandardScalar>(seq.eps)
                                    : compose_impl<ExtendedScalar>(seq.eps);
}

std::vector<MoebiusMapD> partial_products(std::span<const double> eps, Precision precision) {
    return precision == Precision::Standard ? partials_impl<StandardScalar>(eps)
                                            : partials_impl<ExtendedScalar>(eps);
}

ConvergenceReport convergence_experiment(Family family, const FamilyParams& params,
                                         const std::vector<long>& Ns, const GridSpec& grid,
                                         Precision precision) {
    if (Ns.empty()) throw std::invalid_argument("convergence_experiment: empty N schedule");
    std::vector<EpsilonSequence> seqs;
    seqs.reserve(Ns.size());
    for (long N : Ns) seqs.push_back(generate(family, params, N, precision));
    return measure(family, params, Ns, grid, precision, seqs);
}

ConvergenceReport autonomous_baseline(long N, double offset, const GridSpec& grid,
                                      Precision precision) {
    if (N < 2) throw std::invalid_argument("autonomous_baseline: N must be >= 2");
    if (!(std::abs(offset) < 1.0))
        throw std::invalid_argument("autonomous_baseline: |offset| must be < 1");
    const double eps = pi_value<double>() / (static_cast<double>(N) + offset);
    return autonomous_baseline_value(N, eps, grid, precision);
}

ConvergenceReport autonomous_baseline_value(long N, double eps, const GridSpec& grid,
                                            Precision precision) {
    const EpsilonSequence seq = constant_sequence_from_value(N, eps, precision);
    return measure(Family::Custom, seq.params, {N}, grid, precision, {seq});
}

std::vector<long> doubling_schedule(Family family, long first, long last) {
    std::vector<long> out;
    long n = nearest_admissible(family, first);
    while (n <= last) {
        out.push_back(n);
        // doubling the family parameter keeps parity-constrained Ns admissible:
        // Example1 (N = 2m+1) -> 2N-1, Example2 (N = 4m+2) -> 2N-2
        if (family == Family::Example1) n = 2 * n - 1;
        else if (family == Family::Example2) n = 2 * n - 2;
        else n = 2 * n;
    }
    return out;
}

double fit_loglog_slope(const std::vector<long>& Ns, const std::vector<double>& errs) {
    if (Ns.size() != errs.size() || Ns.size() < 2)
        return std::numeric_limits<double>::quiet_NaN();
    const std::size_t n = Ns.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(static_cast<double>(Ns[i]));
        my += std::log(errs[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(static_cast<double>(Ns[i])) - mx;
        sxy += dx * (std::log(errs[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace parabifurc
