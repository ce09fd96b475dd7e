#pragma once

#include <string>

#include "hilbert/params.hpp"

namespace hilbert::verify {

enum class ProfileKind {
    truncated_power,  // A r^a on [cut, inf)
    double_power,     // A r^{a} below the knee, continuous A' r^{a_outer} beyond
    exp_power,        // A r^a e^{-rate r}
    eps_family_f,     // r^{sigma - eps/p - dim} on [1, inf)
    eps_family_g,     // r^{-sigma - eps/q - dim} on [1, inf)
};

// One registered radial test function. The registry is closed (enumerated
// kinds) so that convergence of the weighted norms, the l1 norm and the
// bilinear form is decidable from exponent windows before any quadrature.
struct RadialProfile {
    ProfileKind kind = ProfileKind::exp_power;
    int dim = 1;             // dimension of its space
    double norm_param = 1.0; // the gamma of its l^gamma space
    double amplitude = 1.0;
    double a = 0.0;          // leading exponent (inner exponent for double_power)
    double a_outer = 0.0;    // double_power outer exponent
    double knee = 1.0;       // double_power knee / truncated_power cut
    double rate = 1.0;       // exp_power decay rate
    double sigma = 2.0;      // eps families
    double eps = 0.1;
    double conj = 2.0;       // p for eps_family_f, q for eps_family_g

    double eval(double r) const;
    // log(eval(r)), -inf where the profile vanishes; exact in the far tails
    // where eval itself would over- or underflow
    double log_eval(double r) const;

    double support_lo() const;       // 0 unless the profile vanishes inside a ball
    double origin_power() const;     // eval ~ r^{origin_power} as r -> 0 (when supported there)
    bool exponential_tail() const;
    double tail_power() const;       // eval ~ r^{tail_power} for power tails
    double tail_rate() const;        // decay rate for exponential tails
    bool strictly_positive() const;  // > 0 everywhere on (0, inf)

    std::string label() const;
};

RadialProfile truncated_power(int dim, double gamma, double a, double cut);
RadialProfile double_power(int dim, double gamma, double a_inner, double a_outer,
                           double knee = 1.0);
RadialProfile exp_power(int dim, double gamma, double a, double rate);
// Extremal pair of the sharpness construction; requires 0 < eps < p (sigma - 1).
RadialProfile eps_family_f(const ProblemParams& pr, double eps);
RadialProfile eps_family_g(const ProblemParams& pr, double eps);

// f(r) -> amp * f(r / c) expressed inside the registry.
RadialProfile dilate(const RadialProfile& f, double c, double amp);

}  // namespace hilbert::verify
