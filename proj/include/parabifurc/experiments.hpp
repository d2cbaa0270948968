#pragma once

#include <span>
#include <vector>

#include "parabifurc/moebius.hpp"
#include "parabifurc/sequences.hpp"

namespace parabifurc {

/// Per-N sup-grid distances of F_N to the identity and the fitted rate.
/// fit_slope: unweighted least-squares slope of log err vs log N (advisory);
/// fit_C: max of N*err over the tested Ns (the faithful one-sided constant).
struct ConvergenceReport {
    Family family = Family::Constant;
    FamilyParams params;
    GridSpec grid;
    Precision precision = Precision::Standard;
    std::vector<long> Ns;
    std::vector<double> errs;    // sup-grid |F_N(z) - z|
    std::vector<double> scaled;  // N * err
    double fit_slope = 0.0;
    double fit_C = 0.0;
};

/// Left-fold product of from_epsilon(eps_k) in ascending k. The Extended engine
/// folds in 128-bit floats and rounds the final matrix to binary64.
MoebiusMapD compose_sequence(const EpsilonSequence& seq,
                             std::optional<Precision> precision_override = std::nullopt);

/// Per-N partial products F_1..F_N (Extended engine, rounded per entry); used by
/// the two-path checks.
std::vector<MoebiusMapD> partial_products(std::span<const double> eps, Precision precision);

/// Build, compose and measure each N of the schedule, then fit.
ConvergenceReport convergence_experiment(Family family, const FamilyParams& params,
                                         const std::vector<long>& Ns, const GridSpec& grid,
                                         Precision precision = Precision::Standard);

/// Autonomous baseline: constant sequence eps = pi/(N + offset), |offset| < 1.
/// offset = 0 is the Constant family.
ConvergenceReport autonomous_baseline(long N, double offset, const GridSpec& grid = {},
                                      Precision precision = Precision::Standard);

/// Baseline in explicit-value form: constant sequence with the given eps.
/// With eps = sqrt(2 - 2cos(pi/(N+1))) this is exactly the Counterexample family.
ConvergenceReport autonomous_baseline_value(long N, double eps, const GridSpec& grid = {},
                                            Precision precision = Precision::Standard);

/// Doubling N-schedule seeded at the family's smallest admissible N >= first;
/// each subsequent entry is the smallest admissible N >= twice the previous,
/// stopping once > last.
std::vector<long> doubling_schedule(Family family, long first, long last);

/// Unweighted least-squares slope of log(err) against log(N).
double fit_loglog_slope(const std::vector<long>& Ns, const std::vector<double>& errs);

}  // namespace parabifurc
