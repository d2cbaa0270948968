#pragma once

#include <cmath>

namespace parabifurc {

/// Neumaier compensated accumulator. Terms must be added in a fixed order for
/// reproducible sums; every S-type sum in this project accumulates in ascending k.
template <class R>
class CompensatedSum {
public:
    void add(const R& value) {
        using std::abs;
        R t = sum_ + value;
        if (abs(sum_) >= abs(value))
            comp_ += (sum_ - t) + value;
        else
            comp_ += (value - t) + sum_;
        sum_ = t;
    }

    R value() const { return sum_ + comp_; }

private:
    R sum_{};
    R comp_{};
};

}  // namespace parabifurc
