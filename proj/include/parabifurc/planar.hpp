#pragma once

#include <complex>
#include <vector>

#include "parabifurc/errors.hpp"
#include "parabifurc/precision.hpp"

namespace parabifurc {

/// Skew product (z, w) -> (z/(1-z) + coupling*w, g(w)) with g(w) = w - w^2 + w^3.
/// H has coupling pi^2/4, L has pi^2/8. g has a parabolic fixed point at 0
/// (g(0) = 0, g'(0) = 1); for real w > 0 the fiber map equals
/// from_epsilon(sqrt(coupling*w)).
struct PlanarMap {
    double coupling = 0.0;
};

PlanarMap planar_H();
PlanarMap planar_L();

enum class BasinStatus {
    Interior,       // orbit reached |w| < 1e-3 with Re(1/w) > 0
    FixedPoint,     // w = 0 exactly; adheres to the basin closure, flagged apart
    Outside,        // orbit left |w| <= 10
    Indeterminate,  // neither within max_iter; reported, not guessed
};

const char* basin_status_name(BasinStatus s);

/// One application of g.
std::complex<double> g_apply(std::complex<double> w);

/// k-fold iterate of g. Throws DivergenceError if |w_j| > 10 at any step.
/// For w in the basin, |result| ~ 1/k.
std::complex<double> g_iterate(std::complex<double> w, long k);

/// One application of the skew product. Throws PoleError on the fiber pole z = 1.
std::pair<std::complex<double>, std::complex<double>> planar_apply(const PlanarMap& map,
                                                                   std::complex<double> z,
                                                                   std::complex<double> w);

/// Heuristic basin membership: iterate g up to
/// max_iter (>= 100) steps looking for |w| < 1e-3 with Re(1/w) > 0.
BasinStatus basin_test(std::complex<double> w, long max_iter = 100000);

/// Deviations ||M^(orbit_len)(z, g^(pre)(w)) - (z, 0)|| for each n, where for
/// multiplier 1 (map H) pre = n^2 and orbit_len = 2n+1, and for multiplier 2
/// (map L) pre = 2n^2 and orbit_len = 4n+2.
struct PlanarOrbitReport {
    double coupling = 0.0;
    std::complex<double> z0, w0;
    int multiplier = 1;
    bool basin_flag = false;
    BasinStatus basin_status = BasinStatus::Indeterminate;
    std::vector<long> n_values;
    std::vector<long> pre_iterates;
    std::vector<long> orbit_len;
    std::vector<double> dev_z;
    std::vector<double> dev_w;
    std::vector<double> deviations;  // max(dev_z, dev_w)
};

/// Runs the corollary schedule. Throws BasinError if w fails the basin test
/// (Outside or Indeterminate).
PlanarOrbitReport corollary_experiment(const PlanarMap& map, std::complex<double> z,
                                       std::complex<double> w,
                                       const std::vector<long>& n_values, int multiplier);

/// Fiber eps values along the orbit: eps_k = sqrt(coupling * w_{k-1}) for
/// k = 1..count, starting at w_0 = w (w real positive). The bridge to Example 1:
/// with w = 1/n^2 these track pi/(2 sqrt(n^2+k)) to O(1/n^3).
std::vector<double> orbit_epsilons(const PlanarMap& map, std::complex<double> w, long count);

}  // namespace parabifurc
