#include "parabifurc/recurrences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parabifurc/summation.hpp"

namespace parabifurc {

namespace {

// Forward pass at the engine's precision. The phi/delta machinery derives its
// own internally consistent inputs from the stored traces: a_k := t_k - x and
// theta := acos(x/2), so the sine-representation identity holds at engine accuracy rather
// than at the accuracy of the (separately computed) TraceSequence.a.
template <class S>
RecurrenceRun run_impl(const TraceSequence& ts) {
    using R = typename S::real;
    using std::acos;
    using std::cos;
    using std::sin;

    const long N = ts.N;
    std::vector<R> t(N);
    for (long k = 0; k < N; ++k) t[k] = R(ts.t[k]);
    const R x = R(ts.x);
    const R theta = acos(x / 2);

    std::vector<R> p(N + 2), q(N + 2), pt(N + 1), U(N + 2);
    p[0] = R(0); p[1] = R(1);
    q[0] = R(1); q[1] = R(1);
    pt[0] = R(0); pt[1] = R(1);
    U[0] = R(0); U[1] = R(1);
    for (long k = 1; k <= N; ++k) {
        p[k + 1] = t[k - 1] * p[k] - p[k - 1];
        q[k + 1] = t[k - 1] * q[k] - q[k - 1];
        U[k + 1] = x * U[k] - U[k - 1];
    }
    for (long k = 1; k <= N - 1; ++k) {
        pt[k + 1] = t[k] * pt[k] - pt[k - 1];  // shifted: consumes t_{k+1}
    }

    // delta_{n+1} = delta_n + a_n p_n e^{i n theta}, compensated, ascending n.
    std::vector<R> dre(N + 2, R(0)), dim(N + 2, R(0));
    CompensatedSum<R> acc_re, acc_im;
    for (long j = 1; j <= N; ++j) {
        const R aj = t[j - 1] - x;
        const R mag = aj * p[j];
        acc_re.add(mag * cos(j * theta));
        acc_im.add(mag * sin(j * theta));
        dre[j + 1] = acc_re.value();
        dim[j + 1] = acc_im.value();
    }

    RecurrenceRun run;
    run.N = N;
    run.precision = S::mode;
    run.p.resize(N + 2);
    run.q.resize(N + 2);
    run.ptilde.resize(N + 1);
    run.U.resize(N + 2);
    run.phi.assign(N + 2, {0.0, 0.0});
    run.delta.assign(N + 2, {0.0, 0.0});
    for (long k = 0; k <= N + 1; ++k) {
        run.p[k] = to_double(p[k]);
        run.q[k] = to_double(q[k]);
        run.U[k] = to_double(U[k]);
    }
    for (long k = 0; k <= N; ++k) run.ptilde[k] = to_double(pt[k]);
    run.phi[1] = {1.0, 0.0};
    for (long n = 2; n <= N + 1; ++n) {
        run.delta[n] = {to_double(dre[n]), to_double(dim[n])};
        run.phi[n] = {to_double(R(1) + dre[n]), to_double(dim[n])};
    }
    return run;
}

// Left-fold partial products of the factor matrices, rounded per n. The factor
// of f_k in trace form: ((t_k - 1, 2 - t_k), (-1, 1)).
template <class S>
double entries_check_impl(const RecurrenceRun& run, const TraceSequence& ts) {
    using R = typename S::real;
    using C = typename S::complex;
    const long N = ts.N;
    MoebiusMap<S> F = moebius_identity<S>();
    double dev = 0.0;
    for (long n = 1; n <= N; ++n) {
        const R t(ts.t[n - 1]);
        const MoebiusMap<S> factor{C(t - R(1)), C(R(2) - t), C(R(-1)), C(R(1))};
        F = compose(factor, F);
        const MoebiusMapD Fd = [&] {
            if constexpr (S::mode == Precision::Standard) return F;
            else return round_to_double(F);
        }();
        const double ra = run.p[n + 1] - run.p[n];
        const double rb = run.q[n] - run.q[n + 1];
        const double rc = -run.p[n];
        const double rd = run.q[n];
        dev = std::max(dev, std::abs(Fd.a.real() - ra));
        dev = std::max(dev, std::abs(Fd.b.real() - rb));
        dev = std::max(dev, std::abs(Fd.c.real() - rc));
        dev = std::max(dev, std::abs(Fd.d.real() - rd));
    }
    return dev;
}

}  // namespace

RecurrenceRun run_recurrences(const TraceSequence& ts, Precision precision) {
    if (ts.N < 1 || static_cast<long>(ts.t.size()) != ts.N)
        throw std::invalid_argument("run_recurrences: invalid TraceSequence");
    return precision == Precision::Standard ? run_impl<StandardScalar>(ts)
                                            : run_impl<ExtendedScalar>(ts);
}

double chebyshev_closed_form(long k, double theta) {
    if (k < 0) throw std::invalid_argument("chebyshev_closed_form: k must be >= 0");
    if (!(theta > 0.0 && theta < pi_value<double>()))
        throw std::invalid_argument("chebyshev_closed_form: theta must be in (0, pi)");
    return std::sin(k * theta) / std::sin(theta);
}

double nevai_residual(const RecurrenceRun& run, const TraceSequence& ts, long n) {
    if (n < 1 || n > run.N + 1)
        throw std::invalid_argument("nevai_residual: n out of range [1, N+1]");
    const double theta = std::acos(ts.x / 2);  // engine convention: theta from x
    const auto phi = run.phi[n];
    const double mod = std::abs(phi);
    if (mod == 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double argphi = std::atan2(phi.imag(), phi.real());
    return std::abs(std::sin(theta) * run.p[n] - mod * std::sin(n * theta - argphi));
}

double matrix_entries_check(const RecurrenceRun& run, const TraceSequence& ts,
                            Precision precision) {
    if (ts.N != run.N)
        throw std::invalid_argument("matrix_entries_check: trace length != run.N");
    return precision == Precision::Standard ? entries_check_impl<StandardScalar>(run, ts)
                                            : entries_check_impl<ExtendedScalar>(run, ts);
}

double PropositionBounds::max() const {
    return std::max({pN_abs, pN1_plus1_abs, ptildeN_abs, ptildeN1_minus1_abs});
}

double PropositionBounds::min() const {
    return std::min({pN_abs, pN1_plus1_abs, ptildeN_abs, ptildeN1_minus1_abs});
}

PropositionBounds proposition_bounds(const RecurrenceRun& run) {
    const long N = run.N;
    return {std::abs(run.p[N]), std::abs(run.p[N + 1] + 1.0),
            std::abs(run.ptilde[N]), std::abs(run.ptilde[N - 1] - 1.0)};
}

double max_shift_residual(const RecurrenceRun& run) {
    double worst = 0.0;
    for (long k = 1; k <= run.N + 1; ++k) {
        const double r = std::abs(run.q[k] - (run.p[k] - run.ptilde[k - 1]));
        const double scale = std::max(
            {1.0, std::abs(run.q[k]), std::abs(run.p[k]), std::abs(run.ptilde[k - 1])});
        worst = std::max(worst, r / scale);
    }
    return worst;
}

double max_wronskian_residual(const RecurrenceRun& run) {
    double worst = 0.0;
    for (long k = 0; k <= run.N; ++k) {
        const double lhs = run.p[k + 1] * run.q[k];
        const double rhs = run.p[k] * run.q[k + 1];
        const double r = std::abs(lhs - rhs - 1.0);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        worst = std::max(worst, r / scale);
    }
    return worst;
}

double max_nevai_residual_per_n(const RecurrenceRun& run, const TraceSequence& ts) {
    double worst = 0.0;
    for (long n = 1; n <= run.N + 1; ++n) {
        const double r = nevai_residual(run, ts, n);
        if (std::isnan(r)) continue;  // phi_n = 0: arg undefined, reported as NaN
        worst = std::max(worst, r / n);
    }
    return worst;
}

double max_p_minus_U(const RecurrenceRun& run) {
    double worst = 0.0;
    for (long n = 1; n <= run.N + 1; ++n)
        worst = std::max(worst, std::abs(run.p[n] - run.U[n]));
    return worst;
}

}  // namespace parabifurc
