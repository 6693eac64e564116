#pragma once

namespace radlab {

// Kahan compensated accumulator. For the all-positive prime sums used here
// the relative error stays within a few ulp regardless of term count.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

}  // namespace radlab
