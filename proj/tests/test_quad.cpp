#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "hilbert/kernel.hpp"
#include "hilbert/quad.hpp"
#include "hilbert/specfun.hpp"

using namespace hilbert;
using quad::QuadConfig;
using quad::QuadResult;

TEST_CASE("finite: polynomial and radial-moment integrands") {
    QuadResult r = quad::integrate_finite([](double u) { return u; }, 0.0, 1.0);
    CHECK(std::fabs(r.value - 0.5) < 1e-14);
    CHECK(r.converged);
    for (auto [s, g] : {std::pair<int, double>{1, 1.0}, {2, 1.0}, {3, 2.0}, {2, 3.0}}) {
        const double e = s / g - 1.0;
        QuadConfig qc;
        if (e < 0.0) qc = qc.with_left_singularity(e);
        QuadResult m = quad::integrate_finite(
            [e](double u) { return std::pow(u, e); }, 0.0, 1.0, qc);
        CHECK(std::fabs(m.value - g / s) < 1e-12 * (g / s));
    }
}

TEST_CASE("finite: truncated kernel moment matches the full-minus-tail split") {
    auto f = [](double v) { return kernel::coth_minus_one(v) * v; };
    QuadResult head = quad::integrate_finite(f, 0.0, 1.0);
    CHECK(head.converged);
    CHECK(head.value > 0.0);
    // frozen reference for the head piece
    CHECK(std::fabs(head.value - 0.60694728460981007205) < 1e-12);
    QuadConfig tc;
    tc = tc.with_exponential_tail(2.0);
    QuadResult tail = quad::integrate_semi_infinite(f, 1.0, tc);
    const double total = specfun::mellin_coth_constant(2.0);
    CHECK(std::fabs(head.value + tail.value - total) < 1e-11);
}

TEST_CASE("semi-infinite: exponential and algebraic tails") {
    QuadConfig ec;
    ec = ec.with_exponential_tail(1.0);
    QuadResult e = quad::integrate_semi_infinite([](double v) { return std::exp(-v); }, 0.0, ec);
    CHECK(std::fabs(e.value - 1.0) < 1e-12);
    CHECK(e.converged);

    QuadConfig ac;
    ac = ac.with_algebraic_tail(0.5);
    QuadResult a = quad::integrate_semi_infinite(
        [](double r) { return std::pow(r, -1.5); }, 1.0, ac);
    CHECK(std::fabs(a.value - 2.0) < 1e-12);
    CHECK(a.converged);
}

TEST_CASE("semi-infinite: kernel moment against the closed form") {
    QuadConfig qc;
    qc = qc.with_exponential_tail(2.0);
    auto f = [](double v) { return kernel::coth_minus_one(v) * v; };
    QuadResult r = quad::integrate_semi_infinite(f, 0.0, qc);
    const double cf = specfun::mellin_coth_constant(2.0);
    CHECK(std::fabs(r.value - cf) <= 1e-10 * cf);
}

TEST_CASE("scaling covariance") {
    QuadConfig qc;
    for (double c : {0.1, 10.0}) {
        QuadConfig sc = qc.with_exponential_tail(c);
        QuadResult scaled = quad::integrate_semi_infinite(
            [c](double v) { return std::exp(-c * v) * c; }, 0.0, sc);
        CHECK(std::fabs(scaled.value - 1.0) < 1e-10);
    }
}

TEST_CASE("NaN from the integrand is an error") {
    CHECK_THROWS_AS(quad::integrate_finite(
                        [](double u) { return u < 0.5 ? 1.0 : std::nan(""); }, 0.0, 1.0),
                    std::runtime_error);
}

TEST_CASE("non-convergence is reported, with the best estimate") {
    QuadConfig qc;
    qc.max_subdivisions = 2;
    qc.rel_tol = 1e-14;
    qc.abs_tol = 1e-300;
    QuadResult r = quad::integrate_finite(
        [](double u) { return std::pow(u + 1e-4, -0.9); }, 0.0, 1.0, qc);
    CHECK_FALSE(r.converged);
    CHECK(r.value > 0.0);
}

TEST_CASE("empty range integrates to zero") {
    QuadResult r = quad::integrate_finite([](double) { return 1.0; }, 2.0, 2.0);
    CHECK(r.value == 0.0);
    CHECK(r.converged);
}

TEST_CASE("double radial: separable product and degenerate cases") {
    QuadResult r = quad::integrate_double_radial(
        [](double x, double y) { return std::exp(-x) * std::exp(-y); }, {});
    CHECK(std::fabs(r.value - 1.0) < 1e-10);
    CHECK(r.converged);

    QuadResult z = quad::integrate_double_radial([](double, double) { return 0.0; }, {});
    CHECK(z.value == 0.0);
}

TEST_CASE("double radial: truncated kernel case cross-checked by order swap") {
    // k(r, rho) = (coth(r/rho) - 1) r^{0.8} rho^{-3} on [1,inf)^2; the inner
    // integral grows like rho^{1.8}, so the outer tail falls like rho^{-1.2}
    auto k = [](double r, double rho) {
        if (r < 1.0 || rho < 1.0) return 0.0;
        return kernel::coth_minus_one(r / rho) * std::pow(r, 0.8) * std::pow(rho, -3.0);
    };
    quad::DoubleRadialOptions opt;
    opt.inner_lo = 1.0;
    opt.outer_lo = 1.0;
    opt.inner_cfg = [](double rho) {
        QuadConfig c;
        c.rel_tol = 1e-11;
        return c.with_exponential_tail(2.0 / rho);
    };
    opt.outer_cfg = opt.outer_cfg.with_algebraic_tail(0.2);
    QuadResult a = quad::integrate_double_radial(k, {}, opt);
    CHECK(a.converged);
    CHECK(a.value > 0.0);

    auto kt = [&](double rho, double r) { return k(r, rho); };
    quad::DoubleRadialOptions swp;
    swp.inner_lo = 1.0;
    swp.outer_lo = 1.0;
    // swapped order: the inner rho-integral has a rho^{-2} kernel-linearized
    // tail and the outer r-integral then falls like r^{-1.2}
    swp.inner_cfg = [](double) {
        QuadConfig c;
        c.rel_tol = 1e-11;
        return c.with_algebraic_tail(1.0);
    };
    swp.outer_cfg = swp.outer_cfg.with_algebraic_tail(0.2);
    QuadResult b = quad::integrate_double_radial(kt, {}, swp);
    CHECK(std::fabs(a.value - b.value) <= 10.0 * (a.abs_error + b.abs_error));
}

TEST_CASE("double radial: Fubini consistency on separable and mixed kernels") {
    std::vector<std::function<double(double, double)>> kernels;
    for (double lx : {0.5, 1.0, 2.0, 3.0})
        for (double ly : {0.3, 0.7, 1.0, 1.5, 2.5}) {
            kernels.push_back([lx, ly](double x, double y) {
                return std::exp(-lx * x - ly * y);
            });
        }
    kernels.push_back([](double x, double y) { return std::exp(-x - y - 0.5 * x * y); });
    kernels.push_back([](double x, double y) { return x * std::exp(-x - y - x * y); });
    kernels.push_back([](double x, double y) { return std::exp(-(x + y) * (1.0 + 0.1 * std::sin(x + y))); });
    kernels.push_back([](double x, double y) { return std::exp(-x - y) / (1.0 + x + y); });
    kernels.push_back([](double x, double y) { return std::exp(-x - 2.0 * y) * std::cos(0.3 * x * y); });
    for (const auto& k : kernels) {
        QuadResult a = quad::integrate_double_radial(k, {});
        auto kt = [&k](double x, double y) { return k(y, x); };
        QuadResult b = quad::integrate_double_radial(kt, {});
        CHECK(std::fabs(a.value - b.value) <= 10.0 * (a.abs_error + b.abs_error) + 1e-13);
    }
}

TEST_CASE("error-estimate honesty on a closed-form battery") {
    struct Item {
        double computed, err_est, truth;
    };
    std::vector<Item> items;
    auto fin = [&](std::function<double(double)> f, double a, double b, double truth,
                   QuadConfig qc = {}) {
        QuadResult r = quad::integrate_finite(f, a, b, qc);
        items.push_back({r.value, r.abs_error, truth});
    };
    auto semi = [&](std::function<double(double)> f, double a, double truth, QuadConfig qc) {
        QuadResult r = quad::integrate_semi_infinite(f, a, qc);
        items.push_back({r.value, r.abs_error, truth});
    };

    for (int k = 1; k <= 5; ++k)
        fin([k](double u) { return std::pow(u, k); }, 0.0, 1.0, 1.0 / (k + 1));
    fin([](double u) { return std::exp(u); }, 0.0, 1.0, M_E - 1.0);
    fin([](double u) { return std::sin(u); }, 0.0, M_PI, 2.0);
    fin([](double u) { return 1.0 / (1.0 + u); }, 0.0, 1.0, std::log(2.0));
    fin([](double u) { return u * std::exp(u); }, 0.0, 1.0, 1.0);
    fin([](double u) { return std::sqrt(u); }, 0.0, 1.0, 2.0 / 3.0);
    fin([](double u) { return -std::log(u); }, 0.0, 1.0, 1.0);
    fin([](double u) { return 1.0 / (u * u + 0.01); }, 0.0, 1.0, 10.0 * std::atan(10.0));
    fin([](double u) { return std::exp(-u * u); }, 0.0, 2.0,
        0.5 * std::sqrt(M_PI) * std::erf(2.0));
    {
        QuadConfig qc;
        qc = qc.with_left_singularity(-0.5);
        fin([](double u) { return 1.0 / std::sqrt(u); }, 0.0, 1.0, 2.0, qc);
        QuadConfig q3;
        q3 = q3.with_left_singularity(-0.3);
        fin([](double u) { return std::pow(u, -0.3); }, 0.0, 1.0, 1.0 / 0.7, q3);
    }
    {
        QuadConfig e1;
        e1 = e1.with_exponential_tail(3.0);
        semi([](double v) { return std::exp(-3.0 * v); }, 0.0, 1.0 / 3.0, e1);
        QuadConfig e2;
        e2 = e2.with_exponential_tail(1.0);
        semi([](double v) { return v * std::exp(-v); }, 0.0, 1.0, e2);
        semi([](double v) { return std::exp(-v) * std::sin(v); }, 0.0, 0.5, e2);
        semi([](double v) { return std::exp(-v) / std::sqrt(v + 1e-300); }, 0.0,
             std::sqrt(M_PI), e2.with_left_singularity(-0.5));
        semi([](double v) { return std::sqrt(v) * std::exp(-v); }, 0.0,
             specfun::gamma(1.5), e2);
        semi([](double v) { return std::exp(-v * v); }, 0.0, 0.5 * std::sqrt(M_PI),
             e2.with_exponential_tail(2.0));
        QuadConfig e3;
        e3 = e3.with_exponential_tail(2.0);
        semi([](double v) { return v * v * std::exp(-2.0 * v); }, 0.0, 0.25, e3);
        for (double s : {1.3, 2.7}) {
            semi([s](double v) { return kernel::coth_minus_one(v) * std::pow(v, s - 1.0); },
                 0.0, specfun::mellin_coth_constant(s),
                 e3.with_left_singularity(s - 2.0));
        }
        QuadConfig a1;
        a1 = a1.with_algebraic_tail(1.0);
        semi([](double v) { return std::pow(v, -2.0); }, 1.0, 1.0, a1);
        semi([](double v) { return 1.0 / (1.0 + v * v); }, 0.0, M_PI / 2.0, a1);
        QuadConfig a2;
        a2 = a2.with_algebraic_tail(0.25);
        semi([](double v) { return std::pow(v, -1.25); }, 1.0, 4.0, a2);
        QuadConfig a3;
        a3 = a3.with_algebraic_tail(2.0);
        semi([](double v) { return std::pow(v, -3.0); }, 2.0, 0.125, a3);
        semi([](double v) { return v / std::pow(1.0 + v * v, 2.0); }, 0.0, 0.5, a3);
    }
    fin([](double u) { return std::cos(u); }, 0.0, 1.0, std::sin(1.0));
    fin([](double u) { return 1.0 / (2.0 - u); }, 0.0, 1.0, std::log(2.0));
    fin([](double u) { return std::cosh(u); }, 0.0, 1.0, std::sinh(1.0));

    REQUIRE(items.size() >= 30);
    int within5 = 0;
    for (const Item& it : items) {
        const double err = std::fabs(it.computed - it.truth);
        const double floor5 = 5.0 * it.err_est + 4e-16 * std::fabs(it.truth);
        const double floor50 = 50.0 * it.err_est + 4e-15 * std::fabs(it.truth);
        if (err <= floor5) within5 += 1;
        CHECK(err <= floor50);
    }
    CHECK(within5 * 100 >= 95 * static_cast<int>(items.size()));
}
