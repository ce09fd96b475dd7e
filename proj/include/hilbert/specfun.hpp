#pragma once

#include "hilbert/params.hpp"

namespace hilbert::specfun {

// Gamma function for x > 0: Lanczos approximation below 24, Stirling series
// above. Relative error <= 1e-13 on [1e-3, 170]. Throws std::domain_error for
// x <= 0, std::overflow_error past the representable range (x > ~171.6).
double gamma(double x);

// Riemann zeta for sigma > 1, Euler-Maclaurin accelerated partial sums
// with an explicit remainder cutoff. Relative error <= 1e-13.
// Throws std::domain_error for sigma <= 1.
double zeta(double sigma);

// integral_0^inf (coth v - 1) v^{sigma-1} dv = Gamma(sigma) zeta(sigma) / 2^{sigma-1}
double mellin_coth_constant(double sigma);

// C(s, gamma) = Gamma(1/gamma)^s / (gamma^{s-1} Gamma(s/gamma)), the constant with
//   integral_{R+^s} F(|x|_gamma) dx = C(s, gamma) * integral_0^inf F(r) r^{s-1} dr.
double surface_constant(int s, double gamma_param);

// Constant value of the x-side weight omega(sigma, y): C(m, alpha) * mellin.
double omega_constant(const ProblemParams& p);

// Constant value of the y-side weight varpi(sigma, x): C(n, beta) * mellin.
// The denominator uses beta^{n-1}, consistent with the best-constant
// factorization and the x<->y symmetry of the derivation.
double varpi_constant(const ProblemParams& p);

// Best constant K = C(n,beta)^{1/p} * C(m,alpha)^{1/q} * mellin(sigma).
// Valid for every p outside {0,1}; the exponents may be negative.
double best_constant(const ProblemParams& p);

}  // namespace hilbert::specfun
