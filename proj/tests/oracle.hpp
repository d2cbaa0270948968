#pragma once

// Independent reference implementations for the tests. Everything here is
// written as plain forward loops over a 256-bit float type and must stay
// decoupled from the library code paths it is used to check.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <vector>

namespace oracle {

namespace mp = boost::multiprecision;
using big = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;

inline big pi() {
    static const big value = 4 * atan(big(1));
    return value;
}

struct Mat {
    big a, b, c, d;
};

inline Mat factor(const big& eps) {
    const big e2 = eps * eps;
    return {1 - e2, e2, big(-1), big(1)};
}

inline Mat mul(const Mat& g, const Mat& f) {
    return {g.a * f.a + g.b * f.c, g.a * f.b + g.b * f.d,
            g.c * f.a + g.d * f.c, g.c * f.b + g.d * f.d};
}

/// Left-fold product of the factor matrices of the given eps list.
inline Mat fold(const std::vector<big>& eps) {
    Mat m{big(1), big(0), big(0), big(1)};
    for (const big& e : eps) m = mul(factor(e), m);
    return m;
}

inline std::complex<double> apply(const Mat& m, std::complex<double> z) {
    // real matrix entries; complex arithmetic done in double on top of
    // double-rounded entries is not adequate here, so do it in big parts
    const big zr(z.real()), zi(z.imag());
    const big nr = m.a * zr + m.b, ni = m.a * zi;
    const big dr = m.c * zr + m.d, di = m.c * zi;
    const big den = dr * dr + di * di;
    const big wr = (nr * dr + ni * di) / den;
    const big wi = (ni * dr - nr * di) / den;
    return {static_cast<double>(wr), static_cast<double>(wi)};
}

struct Recur {
    std::vector<big> p, q, pt, U;  // p[k] = p_k etc.; pt up to index N
    big x, theta;
};

/// Forward recurrences from the trace list t_k = 2 - eps_k^2.
inline Recur recurrences(const std::vector<big>& eps) {
    const long N = static_cast<long>(eps.size());
    std::vector<big> t(N);
    for (long k = 0; k < N; ++k) t[k] = 2 - eps[k] * eps[k];
    Recur r;
    r.theta = pi() / N;
    r.x = 2 * cos(r.theta);
    r.p.assign(N + 2, big(0));
    r.q.assign(N + 2, big(0));
    r.pt.assign(N + 1, big(0));
    r.U.assign(N + 2, big(0));
    r.p[1] = 1;
    r.q[0] = 1;
    r.q[1] = 1;
    r.pt[1] = 1;
    r.U[1] = 1;
    for (long k = 1; k <= N; ++k) {
        r.p[k + 1] = t[k - 1] * r.p[k] - r.p[k - 1];
        r.q[k + 1] = t[k - 1] * r.q[k] - r.q[k - 1];
        r.U[k + 1] = r.x * r.U[k] - r.U[k - 1];
    }
    for (long k = 1; k <= N - 1; ++k) r.pt[k + 1] = t[k] * r.pt[k] - r.pt[k - 1];
    return r;
}

// --- eps generators evaluated at oracle precision ---

inline std::vector<big> eps_constant(long N) {
    return std::vector<big>(N, pi() / N);
}

inline std::vector<big> eps_example1(long N) {
    const long m = (N - 1) / 2;
    std::vector<big> e(N);
    for (long k = 1; k <= N; ++k) e[k - 1] = pi() / (2 * sqrt(big(m) * m + k));
    return e;
}

inline std::vector<big> eps_example2(long N) {
    const long m = (N - 2) / 4;
    std::vector<big> e(N);
    for (long k = 1; k <= N; ++k) e[k - 1] = pi() / (2 * sqrt(4 * big(m) * m + 2 * k));
    return e;
}

inline std::vector<big> eps_example3(long N) {
    std::vector<big> e(N);
    const big n3 = big(N) * N * N;
    for (long k = 1; k <= N; ++k) e[k - 1] = pi() / pow(n3 + k, big(1) / 3);
    return e;
}

inline std::vector<big> eps_counterexample(long N) {
    const big e = sqrt(big(2) - 2 * cos(pi() / (N + 1)));
    return std::vector<big>(N, e);
}

/// Widen a generated double sequence exactly (for checking downstream math
/// against the values the library actually uses).
inline std::vector<big> widen(const std::vector<double>& eps) {
    std::vector<big> out(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) out[i] = big(eps[i]);
    return out;
}

/// Taylor model for the Constant family deviation: a = -theta^4/12 + O(theta^6).
inline double constant_a_taylor(long N) {
    const big th = pi() / N;
    return static_cast<double>(-pow(th, 4) / 12 + pow(th, 6) / 360);
}

/// Closed form sum_{k=1}^{N} U_k^2 = (N/2) / sin^2(pi/N) (since sin(N pi/N) = 0).
inline double sum_U_squared(long N) {
    const big s = sin(pi() / N);
    return static_cast<double>(big(N) / 2 / (s * s));
}

}  // namespace oracle
