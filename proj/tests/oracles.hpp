// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <cmath>
#include <utility>

namespace test_oracle {

// Brute-force zeta: direct partial sums plus an integral tail bracket.
// Returns (lower, upper) enclosing zeta(sigma); the bracket width is about
// N^{-sigma}, which at N = 1e7 pins integer arguments well below 1e-13.
inline std::pair<double, double> zeta_bracket(double sigma, long N = 10000000) {
    double sum = 0.0;
    for (long k = N; k >= 1; --k) sum += std::pow(static_cast<double>(k), -sigma);
    const double tail_hi = std::pow(static_cast<double>(N), 1.0 - sigma) / (sigma - 1.0);
    const double tail_lo = std::pow(static_cast<double>(N + 1), 1.0 - sigma) / (sigma - 1.0);
    return {sum + tail_lo, sum + tail_hi};
}

// coth(v) - 1 via the defining exponentials in long double, for spot checks
// away from the extreme branches.
inline double coth_minus_one_ref(double v) {
    const long double e2v = std::exp(2.0L * static_cast<long double>(v));
    return static_cast<double>(2.0L / (e2v - 1.0L));
}

}  // namespace test_oracle
