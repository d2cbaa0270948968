#pragma once

#include <complex>
#include <vector>

#include "parabifurc/moebius.hpp"
#include "parabifurc/precision.hpp"

namespace parabifurc {

/// Trace data t_k = 2 - eps_k^2 (k = 1..N, 1-based in t[k-1]) together with the
/// comparison angle theta = pi/N, x = 2cos(theta) and the deviations a_k = t_k - x.
/// a_k is stored separately because forming t_k - x in binary64 loses ~log10(N^3)
/// digits; a_coefficients() fills it at the appropriate precision.
struct TraceSequence {
    long N = 0;
    double x = 0.0;
    double theta = 0.0;
    std::vector<double> t;  // t[k-1] = t_k
    std::vector<double> a;  // a[k-1] = a_k = t_k - x
};

/// All sequences from one forward pass, directly indexed: p[k] = p_k.
///   p, q, U: indices 0..N+1
///   ptilde:  indices 0..N     (its recurrence consumes t_{k+1}, so t_N is last)
///   phi[n] = 1 + delta[n] for n = 1..N+1; delta[n] = sum_{j<n} a_j p_j e^{ij theta}
///   (index 0 of phi and indices 0,1 of delta are unused padding).
struct RecurrenceRun {
    long N = 0;
    Precision precision = Precision::Standard;
    std::vector<double> p, q, ptilde, U;
    std::vector<std::complex<double>> phi, delta;
};

/// Four magnitudes behind the Proposition estimates:
/// |p_N|, |p_{N+1}+1|, |ptilde_N|, |ptilde_{N-1}-1| (each O(1/N) for admissible
/// sequences, O(1) for the counterexample).
struct PropositionBounds {
    double pN_abs = 0.0;
    double pN1_plus1_abs = 0.0;
    double ptildeN_abs = 0.0;
    double ptildeN1_minus1_abs = 0.0;

    double max() const;
    double min() const;
};

/// Forward three-term recurrences p, q, ptilde, U plus the phi/delta representation.
/// Deterministic evaluation order; delta accumulated by compensated summation in
/// ascending j. The Extended engine recomputes in 128-bit floats and rounds the
/// stored values to binary64.
RecurrenceRun run_recurrences(const TraceSequence& ts, Precision precision = Precision::Standard);

/// sin(k theta)/sin(theta), the classical second-kind Chebyshev value U_k(2cos theta).
double chebyshev_closed_form(long k, double theta);

/// Residual of the representation sin(theta) p_n = |phi_n| sin(n theta - arg phi_n).
/// An identity in exact arithmetic; the contract asserted by tests is
/// residual <= n * 1e3 * u. Returns NaN if phi_n = 0 (arg undefined).
double nevai_residual(const RecurrenceRun& run, const TraceSequence& ts, long n);

/// Builds F_n = f_n o ... o f_1 by explicit matrix products for n = 1..N and
/// returns the max entrywise deviation from the recurrence entries
/// (p_{n+1}-p_n, q_n-q_{n+1}; -p_n, q_n). Both paths consume the same stored
/// traces (the factor of f_k is ((t_k-1, 2-t_k), (-1, 1))), mirroring the
/// statement of the entry formulas over t_k. `precision` selects the engine.
double matrix_entries_check(const RecurrenceRun& run, const TraceSequence& ts,
                            Precision precision = Precision::Standard);

PropositionBounds proposition_bounds(const RecurrenceRun& run);

// ---- identity-suite measurements (used by tests and the `identities` command) ----

/// max over k = 1..N+1 of |q_k - (p_k - ptilde_{k-1})| / max(1, |q_k|, |p_k|, |ptilde_{k-1}|).
double max_shift_residual(const RecurrenceRun& run);

/// max over k = 0..N of |p_{k+1} q_k - p_k q_{k+1} - 1| / max(1, |p_{k+1} q_k|, |p_k q_{k+1}|).
double max_wronskian_residual(const RecurrenceRun& run);

/// max over n = 1..N+1 of nevai_residual(n) / n.
double max_nevai_residual_per_n(const RecurrenceRun& run, const TraceSequence& ts);

/// max over n = 1..N+1 of |p_n - U_n| (the perturbation-bound left-hand side).
double max_p_minus_U(const RecurrenceRun& run);

}  // namespace parabifurc
