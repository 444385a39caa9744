#pragma once

#include <cmath>

namespace pslab {

// Neumaier compensated accumulator; summation error stays O(eps) independent
// of the term count.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace pslab
