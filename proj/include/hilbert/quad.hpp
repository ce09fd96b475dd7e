#pragma once

#include <functional>
#include <optional>

namespace hilbert::quad {

using Integrand = std::function<double(double)>;

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;  // estimate
    long evaluations = 0;
    bool converged = false;
};

enum class LeftEndpoint {
    regular,
    // integrand ~ (v - a)^{s} with s in (-1, 0) at the left endpoint;
    // absorbed by the substitution v = a + t^{1/(1+s)}
    integrable_singularity,
};

enum class RightTail {
    exponential_decay,  // falls like e^{-tail_rate * v}
    algebraic_decay,    // falls like v^{-1 - tail_power}
};

// Endpoint declarations are independent: an integrand may carry an origin
// singularity and a declared tail at the same time (the kernel moment at
// small exponents does).
struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    LeftEndpoint left = LeftEndpoint::regular;
    double left_singularity_power = 0.0;  // the s above, in (-1, 0)
    RightTail tail = RightTail::exponential_decay;
    double tail_rate = 1.0;   // exponential decay hint
    double tail_power = 1.0;  // algebraic decay hint

    QuadConfig with_left_singularity(double power) const {
        QuadConfig c = *this;
        if (power < 0.0 && power > -1.0) {
            c.left = LeftEndpoint::integrable_singularity;
            c.left_singularity_power = power;
        }
        return c;
    }
    QuadConfig with_exponential_tail(double rate) const {
        QuadConfig c = *this;
        c.tail = RightTail::exponential_decay;
        c.tail_rate = rate;
        return c;
    }
    QuadConfig with_algebraic_tail(double power) const {
        QuadConfig c = *this;
        c.tail = RightTail::algebraic_decay;
        c.tail_power = power;
        return c;
    }
};

// Adaptive Gauss-Kronrod 7-15 on [a, b]. Singularities only at declared
// endpoints. NaN from the integrand throws std::runtime_error;
// running out of subdivisions returns the best estimate with
// converged = false.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg = {});

// Splits [a, inf) at a pivot (max(1, 10/rate) past a), maps the tail by a
// monotone transform chosen from the declared tail behavior, and applies
// integrate_finite to each piece.
QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg = {});

struct DoubleRadialOptions {
    double inner_lo = 0.0;
    double outer_lo = 0.0;
    // per-outer-point inner configuration (tail rates usually depend on rho);
    // when absent the inner level inherits the outer config with a tightened
    // tolerance
    std::optional<std::function<QuadConfig(double)>> inner_cfg;
    QuadConfig outer_cfg;
};

// Nested semi-infinite quadrature of k(r, rho): outer adaptive over rho,
// inner adaptive over r, combined error estimate. converged only when
// every inner integral and the outer one converged.
QuadResult integrate_double_radial(const std::function<double(double, double)>& k,
                                   const QuadConfig& cfg,
                                   const DoubleRadialOptions& opt = {});

}  // namespace hilbert::quad
