#include "hilbert/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "hilbert/kernel.hpp"
#include "hilbert/specfun.hpp"

namespace hilbert::weights {
WeightReport omega(double sigma, double y_norm, int m, double alpha,
                   const quad::QuadConfig& cfg) {
    if (!(sigma > 1.0)) throw std::domain_error("omega: sigma must be > 1");
    if (!(y_norm > 0.0)) throw std::domain_error("omega: y_norm must be > 0");
    ProblemParams pp;
    pp.m = m;
    pp.alpha = alpha;
    pp.sigma = sigma;

    // |y|^{-sigma} C(m, alpha) * int_0^inf (coth(r/|y|) - 1) r^{sigma-1} dr;
    // integrand ~ |y| r^{sigma-2} at the origin, tail ~ e^{-2r/|y|}. The
    // prefactor is folded into the integrand so the quadrature works at
    // unit magnitude regardless of |y|.
    quad::QuadConfig qc =
        cfg.with_left_singularity(sigma - 2.0).with_exponential_tail(2.0 / y_norm);
    const double scale = std::pow(y_norm, -sigma);
    auto f = [&](double r) {
        return scale * kernel::coth_minus_one(r / y_norm) * std::pow(r, sigma - 1.0);
    };
    quad::QuadResult res = quad::integrate_semi_infinite(f, 0.0, qc);

    WeightReport rep;
    rep.sigma = sigma;
    rep.point_norm = y_norm;
    rep.computed = specfun::surface_constant(m, alpha) * res.value;
    rep.closed_form = specfun::omega_constant(pp);
    rep.rel_deviation = std::fabs(rep.computed - rep.closed_form) / rep.closed_form;
    rep.converged = res.converged;
    return rep;
}

WeightReport varpi(double sigma, double x_norm, int n, double beta,
                   const quad::QuadConfig& cfg) {
    if (!(sigma > 1.0)) throw std::domain_error("varpi: sigma must be > 1");
    if (!(x_norm > 0.0)) throw std::domain_error("varpi: x_norm must be > 0");
    ProblemParams pp;
    pp.n = n;
    pp.beta = beta;
    pp.sigma = sigma;

    // |x|^{sigma} C(n, beta) * int_0^inf (coth(|x|/rho) - 1) rho^{-sigma-1} drho;
    // the kernel is exactly zero below rho = |x|/350, the bulk sits on
    // |x|-proportional scales, and the tail falls like rho^{-sigma}. The
    // prefactor is folded in to keep the quadrature at unit magnitude.
    const double scale = std::pow(x_norm, sigma);
    auto f = [&](double rho) {
        return scale * kernel::coth_minus_one(x_norm / rho) * std::pow(rho, -sigma - 1.0);
    };
    quad::QuadResult bulk =
        quad::integrate_finite(f, x_norm / 350.0, 10.0 * x_norm, cfg);
    quad::QuadResult tail = quad::integrate_semi_infinite(
        f, 10.0 * x_norm, cfg.with_algebraic_tail(sigma - 1.0));
    quad::QuadResult res;
    res.value = bulk.value + tail.value;
    res.abs_error = bulk.abs_error + tail.abs_error;
    res.evaluations = bulk.evaluations + tail.evaluations;
    res.converged = bulk.converged && tail.converged;

    WeightReport rep;
    rep.sigma = sigma;
    rep.point_norm = x_norm;
    rep.computed = specfun::surface_constant(n, beta) * res.value;
    rep.closed_form = specfun::varpi_constant(pp);
    rep.rel_deviation = std::fabs(rep.computed - rep.closed_form) / rep.closed_form;
    rep.converged = res.converged;
    return rep;
}

quad::QuadResult lower_truncated_mellin(double s, double lower, const quad::QuadConfig& cfg) {
    if (!(s > 1.0)) throw std::domain_error("lower_truncated_mellin: s must be > 1");
    if (lower >= 400.0) {
        quad::QuadResult zero;
        zero.converged = true;
        return zero;
    }
    auto f = [s](double v) { return kernel::coth_minus_one(v) * std::pow(v, s - 1.0); };
    quad::QuadResult head;
    head.converged = true;
    if (lower < 1.0) {
        if (s < 2.0) {
            // global power substitution v = t^{1/(s-1)} absorbs the v^{s-2}
            // origin behavior even when lower > 0
            const double k = 1.0 / (s - 1.0);
            auto g = [&](double t) { return f(std::pow(t, k)) * k * std::pow(t, k - 1.0); };
            head = quad::integrate_finite(g, std::pow(lower, 1.0 / k), 1.0, cfg);
        } else {
            head = quad::integrate_finite(f, lower, 1.0, cfg);
        }
    }
    quad::QuadResult tail =
        quad::integrate_semi_infinite(f, std::max(lower, 1.0), cfg.with_exponential_tail(2.0));
    quad::QuadResult res;
    res.value = head.value + tail.value;
    res.abs_error = head.abs_error + tail.abs_error;
    res.evaluations = head.evaluations + tail.evaluations;
    res.converged = head.converged && tail.converged;
    return res;
}

ThetaPoint theta(double sigma_tilde, double t, const quad::QuadConfig& cfg) {
    if (!(sigma_tilde > 1.0)) throw std::domain_error("theta: sigma~ must be > 1");
    if (!(t > 0.0)) throw std::domain_error("theta: t must be > 0");
    ThetaPoint pt;
    pt.sigma_tilde = sigma_tilde;
    pt.t = t;
    // the kernel is exactly zero beyond 350, so the upper limit can be capped
    const double upper = std::min(1.0 / t, 400.0);
    if (upper <= 0.0) {
        pt.theta = 0.0;
        pt.converged = true;
        return pt;
    }
    quad::QuadConfig qc = cfg.with_left_singularity(sigma_tilde - 2.0);
    auto f = [&](double v) {
        return kernel::coth_minus_one(v) * std::pow(v, sigma_tilde - 1.0);
    };
    quad::QuadResult res = quad::integrate_finite(f, 0.0, upper, qc);
    pt.theta = res.value / specfun::mellin_coth_constant(sigma_tilde);
    pt.converged = res.converged;
    return pt;
}

TruncatedWeight truncated_weight(double sigma_tilde, double y_norm, int m, double alpha,
                                 const quad::QuadConfig& cfg) {
    TruncatedWeight tw;
    // direct: C(m, alpha) * int_{1/y_norm}^inf (coth v - 1) v^{sigma~-1} dv
    quad::QuadResult res = lower_truncated_mellin(sigma_tilde, 1.0 / y_norm, cfg);
    tw.direct = specfun::surface_constant(m, alpha) * res.value;

    ProblemParams pp;
    pp.m = m;
    pp.alpha = alpha;
    pp.sigma = sigma_tilde;
    ThetaPoint pt = theta(sigma_tilde, y_norm, cfg);
    tw.via_theta = specfun::omega_constant(pp) * (1.0 - pt.theta);
    const double scale = std::fabs(tw.via_theta) > 0.0 ? std::fabs(tw.via_theta) : 1.0;
    tw.rel_gap = std::fabs(tw.direct - tw.via_theta) / scale;
    tw.converged = res.converged && pt.converged;
    return tw;
}

DecayFit theta_decay_fit(double sigma_tilde, const std::vector<double>& t_grid,
                         const quad::QuadConfig& cfg) {
    DecayFit fit;
    std::vector<double> lx, ly;
    for (double t : t_grid) {
        ThetaPoint pt = theta(sigma_tilde, t, cfg);
        if (pt.theta < 1e-280) continue;  // censored: underflow at large t
        lx.push_back(std::log(t));
        ly.push_back(std::log(pt.theta));
    }
    fit.used_points = static_cast<int>(lx.size());
    if (fit.used_points < 2) throw std::runtime_error("theta_decay_fit: not enough usable points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= lx.size();
    my /= ly.size();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    fit.slope = num / den;
    return fit;
}

}  // namespace hilbert::weights
