#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <cstdint>

namespace parabifurc {

/// Working precision for a computation. Standard is IEEE binary64; Extended is
/// a 128-bit-significand binary float, used where forming a_k = 2 - eps^2 - 2cos(pi/N)
/// (and everything downstream of it) cancels ~log10(N^3) digits.
enum class Precision { Standard, Extended };

namespace mp = boost::multiprecision;

using ext_real = mp::number<mp::cpp_bin_float<128, mp::digit_base_2>, mp::et_off>;
using ext_complex =
    mp::number<mp::complex_adaptor<mp::cpp_bin_float<128, mp::digit_base_2>>, mp::et_off>;

/// Scalar pack for the binary64 engine.
struct StandardScalar {
    using real = double;
    using complex = std::complex<double>;
    static constexpr Precision mode = Precision::Standard;
};

/// Scalar pack for the extended engine.
struct ExtendedScalar {
    using real = ext_real;
    using complex = ext_complex;
    static constexpr Precision mode = Precision::Extended;
};

// Unit roundoff of binary64 (half ulp of 1). Tolerance contracts are stated in
// multiples of this regardless of the engine that produced the values.
inline constexpr double kUnitRoundoff = 0x1.0p-53;

template <class R>
R pi_value();

template <>
inline double pi_value<double>() {
    return 3.14159265358979323846264338327950288;
}

template <>
inline ext_real pi_value<ext_real>() {
    static const ext_real pi = 4 * atan(ext_real(1));
    return pi;
}

inline double to_double(double x) { return x; }
inline double to_double(const ext_real& x) { return static_cast<double>(x); }

inline std::complex<double> to_complex_double(const std::complex<double>& z) { return z; }
inline std::complex<double> to_complex_double(const ext_complex& z) {
    return {static_cast<double>(real(z)), static_cast<double>(imag(z))};
}

template <class S>
typename S::complex to_scalar_complex(std::complex<double> z) {
    using R = typename S::real;
    return typename S::complex(R(z.real()), R(z.imag()));
}

inline const char* precision_name(Precision p) {
    return p == Precision::Standard ? "std" : "ext";
}

}  // namespace parabifurc
