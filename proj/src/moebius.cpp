#include "parabifurc/moebius.hpp"

namespace parabifurc {

std::vector<std::complex<double>> make_grid(const GridSpec& spec) {
    if (spec.points_per_side < 2)
        throw std::invalid_argument("make_grid: points_per_side must be >= 2");
    if (!(spec.radius > 0))
        throw std::invalid_argument("make_grid: radius must be positive");
    std::vector<std::complex<double>> pts;
    const int n = spec.points_per_side;
    const double step = 2.0 * spec.radius / (n - 1);
    const double r2 = spec.radius * spec.radius;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = spec.center_re - spec.radius + i * step;
            const double y = spec.center_im - spec.radius + j * step;
            const double dx = x - spec.center_re;
            const double dy = y - spec.center_im;
            if (dx * dx + dy * dy <= r2) pts.emplace_back(x, y);
        }
    }
    return pts;
}

}  // namespace parabifurc
