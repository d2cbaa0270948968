#include "parabifurc/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parabifurc/errors.hpp"
#include "parabifurc/summation.hpp"

namespace parabifurc {

namespace {

// Fixed-algorithm generator (xorshift64*) so that seeded sequences are
// bit-identical across platforms; std::uniform_real_distribution is
// implementation-defined and would break byte-identical report reproduction.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

template <class R>
R alpha_poly(const std::vector<double>& coeffs, const R& u) {
    R acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + R(*it);
    return acc;
}

template <class S>
std::vector<double> generate_impl(Family family, const FamilyParams& params, long N) {
    using R = typename S::real;
    using std::cos;
    using std::sqrt;
    const R pi = pi_value<R>();
    std::vector<double> eps(N);

    switch (family) {
        case Family::Constant: {
            const double e = to_double(pi / R(N));
            std::fill(eps.begin(), eps.end(), e);
            break;
        }
        case Family::AlphaForm: {
            if (params.alpha_coeffs.empty())
                throw std::invalid_argument("AlphaForm requires alpha_coeffs");
            const R n(N);
            for (long k = 1; k <= N; ++k) {
                const R alpha = alpha_poly<R>(params.alpha_coeffs, R(k) / n);
                eps[k - 1] = to_double(pi / n + alpha / (n * n));
            }
            break;
        }
        case Family::Example1: {
            if (N < 3 || N % 2 != 1)
                throw IncompatibleN("Example1 requires N = 2m+1");
            const long m = (N - 1) / 2;
            for (long k = 1; k <= N; ++k)
                eps[k - 1] = to_double(pi / (2 * sqrt(R(m) * R(m) + R(k))));
            break;
        }
        case Family::Example2: {
            if (N < 6 || (N - 2) % 4 != 0)
                throw IncompatibleN("Example2 requires N = 4m+2");
            const long m = (N - 2) / 4;
            for (long k = 1; k <= N; ++k)
                eps[k - 1] = to_double(pi / (2 * sqrt(4 * R(m) * R(m) + 2 * R(k))));
            break;
        }
        case Family::Example3: {
            const R n3 = R(N) * R(N) * R(N);
            for (long k = 1; k <= N; ++k) {
                if constexpr (S::mode == Precision::Standard) {
                    eps[k - 1] = to_double(pi / std::cbrt(to_double(n3 + R(k))));
                } else {
                    eps[k - 1] = to_double(pi / pow(n3 + R(k), R(1) / R(3)));
                }
            }
            break;
        }
        case Family::Theorem5Linear: {
            const R n(N);
            const R A(params.A);
            for (long k = 1; k <= N; ++k)
                eps[k - 1] =
                    to_double(pi / n + A * (R(-1) / (n * n) + 2 * R(k) / (n * n * n)));
            break;
        }
        case Family::Theorem7Band: {
            if (!params.seed)
                throw std::invalid_argument("Theorem7Band requires a seed");
            Xorshift64Star rng(*params.seed);
            const R n(N);
            const R half_width = R(params.band_constant) / (n * n * n);
            for (long k = 1; k <= N; ++k) {
                const R u(rng.uniform01());
                eps[k - 1] = to_double(pi / n + (2 * u - R(1)) * half_width);
            }
            break;
        }
        case Family::Counterexample: {
            if (N < 3) throw IncompatibleN("Counterexample requires N >= 3");
            const double e = to_double(sqrt(R(2) - 2 * cos(pi / R(N + 1))));
            std::fill(eps.begin(), eps.end(), e);
            break;
        }
        case Family::Custom: {
            if (static_cast<long>(params.custom_eps.size()) != N)
                throw std::invalid_argument("Custom requires custom_eps of length N");
            eps = params.custom_eps;
            break;
        }
    }
    return eps;
}

template <class S>
TraceSequence a_impl(const EpsilonSequence& seq) {
    using R = typename S::real;
    using std::cos;
    const long N = seq.N;
    const R pi = pi_value<R>();
    const R theta = pi / R(N);
    const R x = 2 * cos(theta);

    TraceSequence ts;
    ts.N = N;
    ts.theta = to_double(theta);
    ts.x = to_double(x);
    ts.t.resize(N);
    ts.a.resize(N);
    for (long k = 0; k < N; ++k) {
        const R e(seq.eps[k]);
        const R t = R(2) - e * e;
        ts.t[k] = to_double(t);
        ts.a[k] = to_double(t - x);
    }
    return ts;
}

template <class S>
ConditionReport check_impl(const EpsilonSequence& seq, double A_threshold) {
    using R = typename S::real;
    using std::abs;
    using std::cos;
    using std::sin;
    const long N = seq.N;
    const R pi = pi_value<R>();
    const R theta = pi / R(N);
    const R x = 2 * cos(theta);
    const R sin_theta = sin(theta);
    const R r = pi / R(N);  // reference for the (pi/N)^2 - eps^2 form of S

    CompensatedSum<R> sum_a, sum_pi;
    R band(0);
    for (long k = 1; k <= N; ++k) {
        const R e(seq.eps[k - 1]);
        const R a = (R(2) - e * e) - x;
        const R Uk = sin(R(k) * theta) / sin_theta;
        sum_a.add(a * Uk * Uk);
        sum_pi.add((r * r - e * e) * Uk * Uk);
        const R scaled = R(N) * R(N) * R(N) * abs(a);
        if (scaled > band) band = scaled;
    }

    ConditionReport rep;
    rep.family = seq.family;
    rep.N = N;
    rep.precision = S::mode;
    rep.A_threshold = A_threshold;
    rep.S = to_double(abs(sum_a.value()));
    rep.S_pi = to_double(abs(sum_pi.value()));
    rep.S_scaled = to_double(R(N) * abs(sum_a.value()));
    rep.band = to_double(band);
    rep.verdict_S = rep.S_scaled <= A_threshold;
    rep.verdict_band = rep.band <= A_threshold;
    if (alpha_supported(seq.family)) rep.alpha_pairing = alpha_pairing(seq);
    return rep;
}

void validate_eps_range(const std::vector<double>& eps) {
    for (double e : eps) {
        if (!std::isfinite(e) || !(e > 0.0) || !(e < 1.0))
            throw IncompatibleN("generated eps_k outside (0, 1); N too small for family");
    }
}

Precision active_precision(const EpsilonSequence& seq, std::optional<Precision> override_p) {
    if (override_p) return *override_p;
    // forming a_k = 2 - eps^2 - 2cos(pi/N) loses ~log10(N^3) digits in binary64
    if (seq.N > 512) return Precision::Extended;
    return seq.precision;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Constant: return "Constant";
        case Family::AlphaForm: return "AlphaForm";
        case Family::Example1: return "Example1";
        case Family::Example2: return "Example2";
        case Family::Example3: return "Example3";
        case Family::Theorem5Linear: return "Theorem5Linear";
        case Family::Theorem7Band: return "Theorem7Band";
        case Family::Counterexample: return "Counterexample";
        case Family::Custom: return "Custom";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Constant, Family::AlphaForm, Family::Example1, Family::Example2,
                     Family::Example3, Family::Theorem5Linear, Family::Theorem7Band,
                     Family::Counterexample, Family::Custom}) {
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

EpsilonSequence generate(Family family, const FamilyParams& params, long N,
                         Precision precision) {
    if (N < 1) throw IncompatibleN("N must be positive");
    EpsilonSequence seq;
    seq.family = family;
    seq.params = params;
    seq.N = N;
    seq.precision = precision;
    seq.eps = precision == Precision::Standard
                  ? generate_impl<StandardScalar>(family, params, N)
                  : generate_impl<ExtendedScalar>(family, params, N);
    validate_eps_range(seq.eps);
    return seq;
}

EpsilonSequence constant_sequence_from_value(long N, double eps, Precision precision) {
    FamilyParams params;
    params.custom_eps.assign(N, eps);
    return generate(Family::Custom, params, N, precision);
}

TraceSequence a_coefficients(const EpsilonSequence& seq,
                             std::optional<Precision> precision_override) {
    return active_precision(seq, precision_override) == Precision::Standard
               ? a_impl<StandardScalar>(seq)
               : a_impl<ExtendedScalar>(seq);
}

ConditionReport check_conditions(const EpsilonSequence& seq, double A_threshold,
                                 std::optional<Precision> precision_override) {
    if (!(A_threshold > 0))
        throw std::invalid_argument("check_conditions: A_threshold must be positive");
    return active_precision(seq, precision_override) == Precision::Standard
               ? check_impl<StandardScalar>(seq, A_threshold)
               : check_impl<ExtendedScalar>(seq, A_threshold);
}

bool alpha_supported(Family family) {
    switch (family) {
        case Family::Constant:
        case Family::AlphaForm:
        case Family::Example1:
        case Family::Example2:
        case Family::Theorem5Linear:
        case Family::Example3:
        case Family::Counterexample:
            return true;
        case Family::Theorem7Band:
        case Family::Custom:
            return false;
    }
    return false;
}

double alpha_pairing(const EpsilonSequence& seq) {
    if (!alpha_supported(seq.family))
        throw UnsupportedFamily(std::string("alpha_pairing: no alpha interpretation for ") +
                                family_name(seq.family));
    const long N = seq.N;
    if (N < 2) throw std::invalid_argument("alpha_pairing: N must be >= 2");
    const double r = pi_value<double>() / N;
    const double n2 = static_cast<double>(N) * N;
    double worst = 0.0;
    for (long k = 1; k <= N - 1; ++k) {
        const double ak = n2 * (seq.eps[k - 1] - r);
        const double ank = n2 * (seq.eps[N - k - 1] - r);
        worst = std::max(worst, N * std::abs(ak + ank));
    }
    return worst;
}

double default_a_threshold(Precision precision) {
    const EpsilonSequence seq = generate(Family::Constant, {}, 101, precision);
    // threshold only needs to be positive here; we read S_scaled back
    const ConditionReport rep = check_conditions(seq, 1.0, precision);
    return 10.0 * rep.S_scaled;
}

long nearest_admissible(Family family, long n) {
    switch (family) {
        case Family::Example1: {
            long v = std::max<long>(n, 3);
            if (v % 2 == 0) ++v;
            return v;
        }
        case Family::Example2: {
            long v = std::max<long>(n, 6);
            const long rem = (v - 2) % 4;
            if (rem != 0) v += 4 - rem;
            return v;
        }
        case Family::Counterexample:
            return std::max<long>(n, 3);
        default:
            return std::max<long>(n, 4);
    }
}

}  // namespace parabifurc
