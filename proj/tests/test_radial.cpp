#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "hilbert/radial.hpp"
#include "hilbert/specfun.hpp"

using namespace hilbert;
using radial::RadialIntegrand;
using radial::Support;

namespace {

RadialIntegrand power_tail(int s, double g, double eps) {
    RadialIntegrand ri;
    ri.s = s;
    ri.gamma_param = g;
    ri.profile = [s, eps](double r) { return std::pow(r, -s - eps); };
    ri.support_hint = Support::unit_ball_exterior;
    ri.tail_hint = eps;
    return ri;
}

RadialIntegrand exponential(int s, double g) {
    RadialIntegrand ri;
    ri.s = s;
    ri.gamma_param = g;
    ri.profile = [](double r) { return std::exp(-r); };
    ri.support_hint = Support::full;
    return ri;
}

RadialIntegrand bump(int s, double g) {
    RadialIntegrand ri;
    ri.s = s;
    ri.gamma_param = g;
    ri.profile = [](double r) { return r < 1.0 ? (1.0 - r * r) : 0.0; };
    ri.support_hint = Support::unit_ball_interior;
    return ri;
}

}  // namespace

TEST_CASE("reduce_radial: bounded-domain volumes") {
    const double M = 3.0;
    RadialIntegrand simplex;
    simplex.s = 2;
    simplex.gamma_param = 1.0;
    simplex.profile = [](double) { return 1.0; };
    simplex.support_hint = Support::unit_ball_interior;
    simplex.r_hi = M;
    CHECK(std::fabs(radial::reduce_radial(simplex).value - M * M / 2.0) < 1e-12);

    RadialIntegrand disk = simplex;
    disk.gamma_param = 2.0;
    CHECK(std::fabs(radial::reduce_radial(disk).value - M_PI * M * M / 4.0) < 1e-10);
}

TEST_CASE("reduce_radial: power-tail closed form") {
    // s = 3, gamma = 2, eps = 1/2
    quad::QuadResult r = radial::reduce_radial(power_tail(3, 2.0, 0.5));
    const double cf = specfun::surface_constant(3, 2.0) / 0.5;
    CHECK(std::fabs(r.value - cf) <= 1e-9 * cf);
    CHECK(r.converged);
}

TEST_CASE("reduce_radial: homogeneity under profile dilation") {
    for (double c : {0.5, 2.0}) {
        RadialIntegrand base = exponential(2, 2.0);
        RadialIntegrand scaled = base;
        scaled.profile = [c](double r) { return std::exp(-r / c); };
        const double a = radial::reduce_radial(base).value;
        const double b = radial::reduce_radial(scaled).value;
        CHECK(std::fabs(b - c * c * a) <= 1e-9 * std::fabs(b));
    }
}

TEST_CASE("mc_oracle: quarter-disk indicator") {
    RadialIntegrand ri = bump(2, 2.0);
    ri.profile = [](double) { return 1.0; };
    radial::McResult mc = radial::mc_oracle(ri, 1000000, 12345);
    CHECK(std::fabs(mc.estimate - M_PI / 4.0) <= 3.0 * mc.std_error);
    CHECK(mc.reliable);
}

TEST_CASE("mc_oracle: frozen-seed determinism, serial equals parallel") {
    RadialIntegrand ri = exponential(2, 1.0);
    radial::McResult a = radial::mc_oracle(ri, 200000, 777, true);
    radial::McResult b = radial::mc_oracle(ri, 200000, 777, true);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    radial::McResult s = radial::mc_oracle(ri, 200000, 777, false);
    CHECK(a.estimate == s.estimate);
    CHECK(a.std_error == s.std_error);
    radial::McResult c = radial::mc_oracle(ri, 200000, 778, true);
    CHECK(a.estimate != c.estimate);
}

TEST_CASE("mc_oracle: exterior power profile against the closed form") {
    radial::McResult mc = radial::mc_oracle(power_tail(3, 3.0, 1.0), 1000000, 12345);
    const double cf = specfun::surface_constant(3, 3.0);
    CHECK(std::fabs(mc.estimate - cf) <= 3.0 * mc.std_error);
}

TEST_CASE("mc_oracle agrees with reduce_radial across the grid") {
    for (int s = 1; s <= 3; ++s)
        for (double g : {1.0, 2.0, 3.0}) {
            for (const RadialIntegrand& ri :
                 {exponential(s, g), power_tail(s, g, 1.0), bump(s, g)}) {
                const double truth = radial::reduce_radial(ri).value;
                radial::McResult mc = radial::mc_oracle(ri, 1000000, 20240 + s);
                INFO("s=", s, " gamma=", g);
                CHECK(std::fabs(mc.estimate - truth) <= 3.0 * mc.std_error);
            }
        }
}

TEST_CASE("mc_oracle: surface constant recovered over the exponent grid") {
    // the geometric sampler against C(s,gamma)/eps, without any radial
    // reduction in the loop
    for (int s = 1; s <= 3; ++s)
        for (double g : {1.0, 2.0, 3.0})
            for (double eps : {0.25, 0.5, 1.0}) {
                radial::McResult mc =
                    radial::mc_oracle(power_tail(s, g, eps), 400000, 90210 + s);
                const double cf = specfun::surface_constant(s, g) / eps;
                INFO("s=", s, " gamma=", g, " eps=", eps);
                CHECK(std::fabs(mc.estimate - cf) <= 3.0 * mc.std_error);
            }
}

TEST_CASE("mc_oracle: dominance flag trips when the proposal tail is too light") {
    // eps = 0.04 with the default hint gives an infinite-variance weight
    RadialIntegrand ri = power_tail(1, 1.0, 0.04);
    ri.tail_hint = 0.5;
    radial::McResult mc = radial::mc_oracle(ri, 200000, 4242);
    CHECK_FALSE(mc.reliable);
}

TEST_CASE("mc_oracle: input validation") {
    CHECK_THROWS_AS(radial::mc_oracle(exponential(5, 1.0), 1000000, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(radial::mc_oracle(exponential(2, 1.0), 10, 1), std::invalid_argument);
}

TEST_CASE("divergence witness: logarithmic growth slope equals the surface constant") {
    for (auto [s, g] : {std::pair<int, double>{1, 1.0}, {2, 2.0}, {2, 1.0}}) {
        radial::DivergenceWitness w = radial::divergence_witness(s, g);
        CHECK(w.confirmed);
        CHECK(w.rel_deviation <= 0.01);
    }
}
