#pragma once

#include <vector>

#include "hilbert/params.hpp"
#include "hilbert/quad.hpp"

namespace hilbert::weights {

struct WeightReport {
    double sigma = 0.0;
    double point_norm = 0.0;  // |y|_beta or |x|_alpha where the weight was evaluated
    double computed = 0.0;    // quadrature value
    double closed_form = 0.0; // the matching weight constant
    double rel_deviation = 0.0;
    bool converged = false;
};

// omega(sigma, y) at |y|_beta = y_norm, computed in the pre-substitution form
// (profile integrated directly in r at fixed y_norm), so agreement with the
// constant closed form is a genuine check rather than an algebraic identity.
WeightReport omega(double sigma, double y_norm, int m, double alpha,
                   const quad::QuadConfig& cfg = {});

// varpi(sigma, x) at |x|_alpha = x_norm, integrated directly in rho over the
// y-space.
WeightReport varpi(double sigma, double x_norm, int n, double beta,
                   const quad::QuadConfig& cfg = {});

// int_{lower}^inf (coth v - 1) v^{s-1} dv for s > 1, stable for any
// lower >= 0 (the v^{s-2} origin behavior is absorbed by a power
// substitution on [lower, 1]).
quad::QuadResult lower_truncated_mellin(double s, double lower,
                                        const quad::QuadConfig& cfg = {});

struct ThetaPoint {
    double sigma_tilde = 0.0;
    double t = 0.0;      // |y|_beta
    double theta = 0.0;  // in [0, 1)
    bool converged = false;
};

// Normalized lower-tail defect: theta_(sigma~)(t) =
//   (1 / mellin(sigma~)) * integral_0^{1/t} (coth v - 1) v^{sigma~-1} dv.
ThetaPoint theta(double sigma_tilde, double t, const quad::QuadConfig& cfg = {});

struct TruncatedWeight {
    double direct = 0.0;     // quadrature over |x|_alpha >= 1
    double via_theta = 0.0;  // omega constant * (1 - theta)
    double rel_gap = 0.0;
    bool converged = false;
};

// w(sigma~, y): the weight restricted to |x|_alpha >= 1, computed two ways
// for cross-validation.
TruncatedWeight truncated_weight(double sigma_tilde, double y_norm, int m, double alpha,
                                 const quad::QuadConfig& cfg = {});

struct DecayFit {
    double slope = 0.0;  // of log theta against log t
    int used_points = 0; // grid points that survived underflow censoring
};

// Least-squares slope of log theta over a grid of t values (>= 1, spanning
// several decades). Expected near -(sigma~ - 1).
DecayFit theta_decay_fit(double sigma_tilde, const std::vector<double>& t_grid,
                         const quad::QuadConfig& cfg = {});

}  // namespace hilbert::weights
