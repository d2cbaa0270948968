#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "parabifurc/errors.hpp"
#include "parabifurc/precision.hpp"

namespace parabifurc {

/// Moebius map z -> (a z + b)/(c z + d), stored as a 2x2 complex matrix.
/// All constructors in this project produce unimodular matrices (det = 1);
/// products are never renormalized, determinant drift is monitored by tests.
///
/// The factor matrix of f_eps(z) = z/(1-z) + eps^2 is ((1-eps^2, eps^2), (-1, 1)),
/// whose numerator row is the top row: a = 1-eps^2, b = eps^2, c = -1, d = 1.
template <class S = StandardScalar>
struct MoebiusMap {
    using C = typename S::complex;
    C a{1}, b{0}, c{0}, d{1};
};

using MoebiusMapD = MoebiusMap<StandardScalar>;
using MoebiusMapX = MoebiusMap<ExtendedScalar>;

template <class S>
MoebiusMap<S> moebius_identity() {
    return MoebiusMap<S>{};
}

template <class S>
typename S::complex det(const MoebiusMap<S>& m) {
    return m.a * m.d - m.b * m.c;
}

template <class S>
typename S::complex trace(const MoebiusMap<S>& m) {
    return m.a + m.d;
}

/// Matrix of f_eps. eps = 0 yields f_0(z) = z/(1-z). det = 1-eps^2+eps^2 = 1 exactly.
template <class S = StandardScalar>
MoebiusMap<S> from_epsilon(const typename S::real& eps) {
    using std::isfinite;
    if (!isfinite(to_double(eps)) || to_double(eps) < 0)
        throw std::invalid_argument("from_epsilon: eps must be finite and >= 0");
    using R = typename S::real;
    using C = typename S::complex;
    R e2 = eps * eps;
    return {C(R(1) - e2), C(e2), C(R(-1)), C(R(1))};
}

/// Fiber map of the planar skew products: matrix of z -> z/(1-z) + eps2
/// for a (possibly complex) perturbation eps2. Equals from_epsilon(sqrt(eps2))
/// when eps2 > 0 real.
template <class S = StandardScalar>
MoebiusMap<S> from_epsilon_squared(const typename S::complex& eps2) {
    using C = typename S::complex;
    return {C(1) - eps2, eps2, C(-1), C(1)};
}

/// Matrix product g*f, i.e. the map applying f first: apply(compose(g,f), z) = g(f(z)).
template <class S>
MoebiusMap<S> compose(const MoebiusMap<S>& g, const MoebiusMap<S>& f) {
    return {g.a * f.a + g.b * f.c, g.a * f.b + g.b * f.d,
            g.c * f.a + g.d * f.c, g.c * f.b + g.d * f.d};
}

/// Inverse of a unimodular matrix: ((d, -b), (-c, a)).
template <class S>
MoebiusMap<S> inverse(const MoebiusMap<S>& m) {
    return {m.d, -m.b, -m.c, m.a};
}

/// n-th power by repeated squaring (autonomous iteration).
template <class S>
MoebiusMap<S> power(MoebiusMap<S> base, long n) {
    if (n < 0) throw std::invalid_argument("power: n must be >= 0");
    MoebiusMap<S> result = moebius_identity<S>();
    while (n > 0) {
        if (n & 1) result = compose(base, result);
        base = compose(base, base);
        n >>= 1;
    }
    return result;
}

/// Relative pole test: |c z + d| < 1e-12 * (|c z| + |d| + 1).
template <class S>
bool at_pole(const MoebiusMap<S>& m, const typename S::complex& z) {
    using std::abs;
    auto den = m.c * z + m.d;
    return abs(den) < 1e-12 * (abs(m.c * z) + abs(m.d) + 1);
}

template <class S>
typename S::complex apply(const MoebiusMap<S>& m, const typename S::complex& z) {
    if (at_pole(m, z))
        throw PoleError(to_complex_double(z), "apply: grid point is a numerical pole");
    return (m.a * z + m.b) / (m.c * z + m.d);
}

/// max over the grid of |m(z) - z|. Invariant under rescaling m by any nonzero
/// complex scalar (the map is projective). Propagates PoleError.
template <class S>
typename S::real map_distance_to_identity(const MoebiusMap<S>& m,
                                          const std::vector<typename S::complex>& grid) {
    if (grid.empty())
        throw std::invalid_argument("map_distance_to_identity: empty grid");
    using std::abs;
    using R = typename S::real;
    R worst(0);
    for (const auto& z : grid) {
        R dist = abs(parabifurc::apply(m, z) - z);
        if (dist > worst) worst = dist;
    }
    return worst;
}

/// max over the grid of |m(z) - target(z)|.
template <class S>
typename S::real map_distance(const MoebiusMap<S>& m, const MoebiusMap<S>& target,
                              const std::vector<typename S::complex>& grid) {
    if (grid.empty())
        throw std::invalid_argument("map_distance: empty grid");
    using std::abs;
    using R = typename S::real;
    R worst(0);
    for (const auto& z : grid) {
        R dist = abs(parabifurc::apply(m, z) - parabifurc::apply(target, z));
        if (dist > worst) worst = dist;
    }
    return worst;
}

template <class S>
typename S::real max_entry_norm(const MoebiusMap<S>& m) {
    using std::abs;
    using R = typename S::real;
    R n = abs(m.a);
    if (abs(m.b) > n) n = abs(m.b);
    if (abs(m.c) > n) n = abs(m.c);
    if (abs(m.d) > n) n = abs(m.d);
    return n;
}

/// Entrywise max-distance between two maps as matrices (not projective).
template <class S>
typename S::real entry_distance(const MoebiusMap<S>& m, const MoebiusMap<S>& n) {
    using std::abs;
    using R = typename S::real;
    R dev = abs(m.a - n.a);
    if (abs(m.b - n.b) > dev) dev = abs(m.b - n.b);
    if (abs(m.c - n.c) > dev) dev = abs(m.c - n.c);
    if (abs(m.d - n.d) > dev) dev = abs(m.d - n.d);
    return dev;
}

inline MoebiusMapD round_to_double(const MoebiusMapX& m) {
    return {to_complex_double(m.a), to_complex_double(m.b),
            to_complex_double(m.c), to_complex_double(m.d)};
}

inline MoebiusMapX widen(const MoebiusMapD& m) {
    return {to_scalar_complex<ExtendedScalar>(m.a), to_scalar_complex<ExtendedScalar>(m.b),
            to_scalar_complex<ExtendedScalar>(m.c), to_scalar_complex<ExtendedScalar>(m.d)};
}

/// Sampling region for sup-norm measurements: a disk sampled on the uniform
/// points_per_side grid of its bounding square, keeping points inside the disk.
/// The default is the compact set used throughout: |z| <= 0.5, 10x10 square grid
/// (60 surviving points), well away from the fiber pole z = 1.
struct GridSpec {
    double center_re = 0.0;
    double center_im = 0.0;
    double radius = 0.5;
    int points_per_side = 10;

    bool operator==(const GridSpec&) const = default;
};

std::vector<std::complex<double>> make_grid(const GridSpec& spec = {});

template <class S>
std::vector<typename S::complex> make_grid_as(const GridSpec& spec = {}) {
    std::vector<typename S::complex> out;
    for (auto z : make_grid(spec)) out.push_back(to_scalar_complex<S>(z));
    return out;
}

}  // namespace parabifurc
