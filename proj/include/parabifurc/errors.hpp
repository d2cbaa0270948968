#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace parabifurc {

/// Evaluation point is (numerically) the pole of a Moebius map.
class PoleError : public std::runtime_error {
public:
    PoleError(std::complex<double> z, const std::string& what)
        : std::runtime_error(what), z_(z) {}
    std::complex<double> point() const { return z_; }

private:
    std::complex<double> z_;
};

/// An orbit left the admissible region (|w| > 10) during iteration.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::complex<double> w, long step, const std::string& what)
        : std::runtime_error(what), w_(w), step_(step) {}
    std::complex<double> point() const { return w_; }
    long step() const { return step_; }

private:
    std::complex<double> w_;
    long step_;
};

/// Starting point failed the parabolic-basin membership test.
class BasinError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// N violates a family's parity/size constraint.
class IncompatibleN : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested operation is not defined for this sequence family.
class UnsupportedFamily : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Configuration file is malformed or fails validation.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace parabifurc
