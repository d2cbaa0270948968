#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parabifurc/precision.hpp"
#include "parabifurc/recurrences.hpp"

namespace parabifurc {

/// Perturbation-sequence families:
///   Constant       eps_k = pi/N
///   AlphaForm      eps_k = pi/N + alpha(k)/N^2, alpha(k) a polynomial in k/N
///   Example1       eps_k = pi/(2 sqrt(m^2+k)),   N = 2m+1
///   Example2       eps_k = pi/(2 sqrt(4m^2+2k)), N = 4m+2
///   Example3       eps_k = pi/(N^3+k)^(1/3)
///   Theorem5Linear eps_k = pi/N + A(-1/N^2 + 2k/N^3)
///   Theorem7Band   eps_k = pi/N + uniform[-C/N^3, +C/N^3]   (seeded)
///   Counterexample eps_k^2 = 2 - 2cos(pi/(N+1))
///   Custom         eps list given directly
enum class Family {
    Constant,
    AlphaForm,
    Example1,
    Example2,
    Example3,
    Theorem5Linear,
    Theorem7Band,
    Counterexample,
    Custom,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilyParams {
    double A = 1.0;                         // Theorem5Linear coefficient
    std::vector<double> alpha_coeffs;       // AlphaForm: alpha(k) = sum_j c_j (k/N)^j
    double band_constant = 1.0;             // Theorem7Band half-width C
    std::optional<std::uint64_t> seed;      // Theorem7Band (required)
    std::vector<double> custom_eps;         // Custom

    bool operator==(const FamilyParams&) const = default;
};

struct EpsilonSequence {
    Family family = Family::Constant;
    FamilyParams params;
    long N = 0;
    Precision precision = Precision::Standard;
    std::vector<double> eps;  // eps[k-1] = eps_k, all in (0, 1)
};

/// Sufficient-condition measurements for one sequence.
/// S is |sum a_k U_k^2| (the a_k form used for verdicts); S_pi is the
/// ((pi/N)^2 - eps_k^2) form; the two differ by a sum of O(1/N^4) terms and both
/// are reported. band = max_k N^3 |a_k|. Verdicts compare N*S and band against
/// A_threshold. Recomputation with the same Precision is bit-identical.
struct ConditionReport {
    Family family = Family::Constant;
    long N = 0;
    Precision precision = Precision::Standard;
    double A_threshold = 0.0;
    double S = 0.0;
    double S_pi = 0.0;
    double S_scaled = 0.0;  // N*S
    double band = 0.0;
    std::optional<double> alpha_pairing;  // present when the family exposes alpha
    bool verdict_S = false;
    bool verdict_band = false;
};

/// Generate a family's sequence. Throws IncompatibleN when N violates the family's
/// parity/size constraint or produces eps outside (0,1); throws std::invalid_argument
/// for missing/invalid params (e.g. Theorem7Band without a seed).
EpsilonSequence generate(Family family, const FamilyParams& params, long N,
                         Precision precision = Precision::Standard);

/// Convenience for the autonomous baseline's explicit-value form: a Custom
/// constant sequence eps_k = eps for all k.
EpsilonSequence constant_sequence_from_value(long N, double eps,
                                             Precision precision = Precision::Standard);

/// Traces and deviations for a sequence. a_k = 2 - eps_k^2 - 2cos(pi/N) cancels
/// ~N^3-many digits, so the computation upgrades itself to Extended for N > 512
/// (unless a precision override is given) and rounds results to binary64.
TraceSequence a_coefficients(const EpsilonSequence& seq,
                             std::optional<Precision> precision_override = std::nullopt);

/// Condition checker (S-sum and band test). Sums accumulate by compensated
/// summation in ascending k,
/// at the same auto-upgraded precision as a_coefficients.
ConditionReport check_conditions(const EpsilonSequence& seq, double A_threshold,
                                 std::optional<Precision> precision_override = std::nullopt);

/// max over 1 <= k <= N-1 of N |alpha(k) + alpha(N-k)| with alpha(k) = N^2 (eps_k - pi/N).
/// Bounded for admissible alpha-form families; diverges linearly in N for the
/// counterexample.
/// Throws UnsupportedFamily for Theorem7Band and Custom.
double alpha_pairing(const EpsilonSequence& seq);

/// Default checker threshold: 10x the measured N*S of the Constant family at N = 101.
double default_a_threshold(Precision precision = Precision::Standard);

/// Smallest admissible N >= n for the family (parity constraints of Example1/2).
long nearest_admissible(Family family, long n);

bool alpha_supported(Family family);

}  // namespace parabifurc
