#include "hilbert/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace hilbert::kernel {

double coth_minus_one(double v) {
    if (!(v > 0.0)) throw std::domain_error("coth_minus_one: argument must be > 0");
    if (v > 350.0) return 0.0;
    if (v < 1e-4) {
        // Laurent expansion 1/v - 1 + v/3 - v^3/45; next term O(v^5) is
        // below 1e-22 relative at the switch point.
        const double v2 = v * v;
        return 1.0 / v - 1.0 + v * (1.0 / 3.0 - v2 / 45.0);
    }
    return 2.0 / std::expm1(2.0 * v);
}

double coth(double v) {
    return coth_minus_one(v) + 1.0;
}

}  // namespace hilbert::kernel
