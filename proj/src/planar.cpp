#include "parabifurc/planar.hpp"

#include <cmath>
#include <stdexcept>

#include "parabifurc/moebius.hpp"

namespace parabifurc {

namespace {
constexpr double kDivergenceRadius = 10.0;
constexpr double kBasinRadius = 1e-3;
}  // namespace

PlanarMap planar_H() { return {pi_value<double>() * pi_value<double>() / 4.0}; }
PlanarMap planar_L() { return {pi_value<double>() * pi_value<double>() / 8.0}; }

const char* basin_status_name(BasinStatus s) {
    switch (s) {
        case BasinStatus::Interior: return "interior";
        case BasinStatus::FixedPoint: return "fixed-point";
        case BasinStatus::Outside: return "outside";
        case BasinStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::complex<double> g_apply(std::complex<double> w) { return w - w * w + w * w * w; }

std::complex<double> g_iterate(std::complex<double> w, long k) {
    if (k < 0) throw std::invalid_argument("g_iterate: k must be >= 0");
    for (long j = 0; j < k; ++j) {
        w = g_apply(w);
        if (std::abs(w) > kDivergenceRadius)
            throw DivergenceError(w, j + 1, "g_iterate: orbit left |w| <= 10");
    }
    return w;
}

std::pair<std::complex<double>, std::complex<double>> planar_apply(const PlanarMap& map,
                                                                   std::complex<double> z,
                                                                   std::complex<double> w) {
    const auto fiber = from_epsilon_squared<StandardScalar>(map.coupling * w);
    return {parabifurc::apply(fiber, z), g_apply(w)};
}

BasinStatus basin_test(std::complex<double> w, long max_iter) {
    if (max_iter < 100) throw std::invalid_argument("basin_test: max_iter must be >= 100");
    if (w == std::complex<double>(0.0, 0.0)) return BasinStatus::FixedPoint;
    for (long j = 0; j < max_iter; ++j) {
        if (std::abs(w) > kDivergenceRadius) return BasinStatus::Outside;
        if (std::abs(w) < kBasinRadius && (1.0 / w).real() > 0.0) return BasinStatus::Interior;
        w = g_apply(w);
        if (w == std::complex<double>(0.0, 0.0)) return BasinStatus::Interior;  // landed on 0
    }
    return BasinStatus::Indeterminate;
}

PlanarOrbitReport corollary_experiment(const PlanarMap& map, std::complex<double> z,
                                       std::complex<double> w,
                                       const std::vector<long>& n_values, int multiplier) {
    if (multiplier != 1 && multiplier != 2)
        throw std::invalid_argument("corollary_experiment: multiplier must be 1 (H) or 2 (L)");
    PlanarOrbitReport rep;
    rep.coupling = map.coupling;
    rep.z0 = z;
    rep.w0 = w;
    rep.multiplier = multiplier;
    rep.basin_status = basin_test(w);
    rep.basin_flag =
        rep.basin_status == BasinStatus::Interior || rep.basin_status == BasinStatus::FixedPoint;
    if (!rep.basin_flag)
        throw BasinError(std::string("corollary_experiment: starting w is ") +
                         basin_status_name(rep.basin_status));

    for (long n : n_values) {
        const long pre = multiplier * n * n;
        const long len = multiplier * (2 * n + 1);
        std::complex<double> wn = g_iterate(w, pre);
        std::complex<double> zn = z;
        for (long j = 0; j < len; ++j) {
            auto [z2, w2] = planar_apply(map, zn, wn);
            zn = z2;
            wn = w2;
        }
        rep.n_values.push_back(n);
        rep.pre_iterates.push_back(pre);
        rep.orbit_len.push_back(len);
        rep.dev_z.push_back(std::abs(zn - z));
        rep.dev_w.push_back(std::abs(wn));
        rep.deviations.push_back(std::max(rep.dev_z.back(), rep.dev_w.back()));
    }
    return rep;
}

std::vector<double> orbit_epsilons(const PlanarMap& map, std::complex<double> w, long count) {
    std::vector<double> eps;
    eps.reserve(count);
    for (long k = 1; k <= count; ++k) {
        const std::complex<double> e2 = map.coupling * w;
        eps.push_back(std::sqrt(std::abs(e2)));
        w = g_apply(w);
    }
    return eps;
}

}  // namespace parabifurc
