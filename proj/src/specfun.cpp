#include "hilbert/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hilbert::specfun {

namespace {

// Lanczos approximation, g = 7, 9 terms (Godfrey's coefficients).
// Accurate to ~1e-15 relative for real x > 0.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosC[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_series(double x) {
    double a = kLanczosC[0];
    for (int i = 1; i < 9; ++i) a += kLanczosC[i] / (x - 1.0 + i);
    return a;
}

constexpr double kSqrtTwoPi = 2.5066282746310005024;
// Gamma overflows double just above x = 171.62.
constexpr double kGammaOverflowX = 171.62;

}  // namespace

double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma: argument must be > 0");
    if (x > kGammaOverflowX) throw std::overflow_error("gamma: result above representable range");
    if (x > 24.0) {
        // Stirling series; the Lanczos set below drifts past ~1e-14 here.
        // x^{x-1/2} e^{-x} as the square of its half power keeps the result
        // in range without the exponent-amplified rounding of exp(log(..)).
        const double ix = 1.0 / x, ix2 = ix * ix;
        double s = 1.0 / 156.0;
        s = s * ix2 - 691.0 / 360360.0;
        s = s * ix2 + 1.0 / 1188.0;
        s = s * ix2 - 1.0 / 1680.0;
        s = s * ix2 + 1.0 / 1260.0;
        s = s * ix2 - 1.0 / 360.0;
        s = s * ix2 + 1.0 / 12.0;
        const double h = std::pow(x, 0.5 * (x - 0.5)) * std::exp(-0.5 * x);
        return kSqrtTwoPi * h * h * std::exp(s * ix);
    }
    const double t = x + kLanczosG - 0.5;
    const double h = std::pow(t, 0.5 * (x - 0.5)) * std::exp(-0.5 * t);
    return kSqrtTwoPi * lanczos_series(x) * h * h;
}

double zeta(double sigma) {
    if (!(sigma > 1.0)) throw std::domain_error("zeta: argument must be > 1");
    // Direct terms up to N-1, then the Euler-Maclaurin tail at N:
    //   N^{-s}/2 + N^{1-s}/(s-1) + sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
    // With N = 16 the j = 8 term is already below 1e-20 relative for all s > 1,
    // so the truncated remainder (bounded by the first omitted term) is
    // negligible at double precision.
    constexpr int N = 16;
    constexpr double b2j_over_fact[8] = {
        // B_{2j} / (2j)! for j = 1..8
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
        1.0 / 74724249600.0,
        -3617.0 / 10670622842880000.0,
    };
    double sum = 0.0;
    for (int k = N - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -sigma);
    const double nps = std::pow(static_cast<double>(N), -sigma);
    sum += 0.5 * nps;
    sum += nps * N / (sigma - 1.0);
    // rising factorial s(s+1)...(s+2j-2), advanced two factors per term
    double rising = sigma;
    double npow = nps / N;  // N^{-s-1}
    for (int j = 1; j <= 8; ++j) {
        const double term = b2j_over_fact[j - 1] * rising * npow;
        sum += term;
        if (std::fabs(term) < 1e-18 * sum) break;
        rising *= (sigma + 2.0 * j - 1.0) * (sigma + 2.0 * j);
        npow /= static_cast<double>(N) * N;
    }
    return sum;
}

double mellin_coth_constant(double sigma) {
    return gamma(sigma) * zeta(sigma) / std::pow(2.0, sigma - 1.0);
}

double surface_constant(int s, double gamma_param) {
    if (s < 1) throw std::domain_error("surface_constant: s must be >= 1");
    if (!(gamma_param > 0.0)) throw std::domain_error("surface_constant: gamma must be > 0");
    const double g1 = gamma(1.0 / gamma_param);
    double num = 1.0;
    for (int i = 0; i < s; ++i) num *= g1;
    return num / (std::pow(gamma_param, s - 1) * gamma(s / gamma_param));
}

double omega_constant(const ProblemParams& p) {
    return surface_constant(p.m, p.alpha) * mellin_coth_constant(p.sigma);
}

double varpi_constant(const ProblemParams& p) {
    return surface_constant(p.n, p.beta) * mellin_coth_constant(p.sigma);
}

double best_constant(const ProblemParams& pr) {
    return std::pow(surface_constant(pr.n, pr.beta), 1.0 / pr.p) *
           std::pow(surface_constant(pr.m, pr.alpha), 1.0 / pr.q()) *
           mellin_coth_constant(pr.sigma);
}

}  // namespace hilbert::specfun
