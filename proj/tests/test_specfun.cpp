#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "hilbert/specfun.hpp"
#include "oracles.hpp"

using namespace hilbert;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("gamma: exact and frozen anchors") {
    CHECK(specfun::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(specfun::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // frozen high-precision values
    CHECK(rel(specfun::gamma(0.5), 1.7724538509055160273) < 1e-13);
    CHECK(rel(specfun::gamma(1e-3), 999.42377248459546612) < 1e-13);
    CHECK(rel(specfun::gamma(12.34), 92044896.636968600790) < 1e-13);
    CHECK(rel(specfun::gamma(0.123), 7.6624172619623119553) < 1e-13);
    CHECK(rel(specfun::gamma(170.0), 4.2690680090047052749e304) < 1e-13);
}

TEST_CASE("gamma: recurrence property") {
    std::mt19937_64 eng(7);
    std::uniform_real_distribution<double> dist(1e-3, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(eng);
        const double lhs = specfun::gamma(x + 1.0);
        CHECK(std::fabs(lhs - x * specfun::gamma(x)) / lhs < 1e-12);
    }
}

TEST_CASE("gamma: domain and overflow errors") {
    CHECK_THROWS_AS(specfun::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::gamma(-3.5), std::domain_error);
    CHECK_THROWS_AS(specfun::gamma(172.0), std::overflow_error);
}

TEST_CASE("zeta: brute-force partial-sum oracle with integral tail bracket") {
    auto [lo2, hi2] = test_oracle::zeta_bracket(2.0);
    const double z2 = specfun::zeta(2.0);
    CHECK(z2 >= lo2 - 1e-14);
    CHECK(z2 <= hi2 + 1e-14);
    CHECK(rel(z2, M_PI * M_PI / 6.0) < 1e-13);

    auto [lo4, hi4] = test_oracle::zeta_bracket(4.0);
    const double z4 = specfun::zeta(4.0);
    CHECK(z4 >= lo4 - 1e-14);
    CHECK(z4 <= hi4 + 1e-14);
    CHECK(rel(z4, std::pow(M_PI, 4) / 90.0) < 1e-13);
}

TEST_CASE("zeta: frozen anchors and asymptote") {
    CHECK(rel(specfun::zeta(1.1), 10.584448464950809826) < 1e-13);
    CHECK(rel(specfun::zeta(1.5), 2.6123753486854883433) < 1e-13);
    CHECK(rel(specfun::zeta(3.0), 1.2020569031595942854) < 1e-13);
    CHECK(rel(specfun::zeta(10.0), 1.0009945751278180853) < 1e-13);
    const double z50 = specfun::zeta(50.0);
    CHECK(z50 > 1.0);
    CHECK(z50 < 1.0 + 1e-14);
}

TEST_CASE("zeta: one-term-plus-tail bracket property") {
    for (double s : {1.05, 1.3, 2.0, 3.7, 6.0, 12.0, 30.0}) {
        const double z = specfun::zeta(s);
        CHECK(z > 1.0);
        CHECK(z < 1.0 + std::pow(2.0, 1.0 - s) / (s - 1.0) + std::pow(2.0, -s));
    }
}

TEST_CASE("zeta: domain error at and below the pole") {
    CHECK_THROWS_AS(specfun::zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::zeta(0.3), std::domain_error);
}

TEST_CASE("mellin constant: frozen closed-form values") {
    CHECK(rel(specfun::mellin_coth_constant(1.1), 9.3951973506772804360) < 1e-12);
    CHECK(rel(specfun::mellin_coth_constant(1.5), 1.6370634782410159931) < 1e-12);
    CHECK(rel(specfun::mellin_coth_constant(2.0), 0.82246703342411321824) < 1e-12);
    CHECK(rel(specfun::mellin_coth_constant(3.0), 0.60102845157979714270) < 1e-12);
    CHECK(rel(specfun::mellin_coth_constant(5.0), 1.5553916327150548895) < 1e-12);
    CHECK(rel(specfun::mellin_coth_constant(10.0), 709.45490512184106798) < 1e-12);
    // assembled identity against the in-house zeta
    CHECK(rel(specfun::mellin_coth_constant(3.0), 2.0 * specfun::zeta(3.0) / 4.0) < 1e-14);
}

TEST_CASE("surface constant: unit cases and frozen values") {
    for (double g : {0.5, 1.0, 2.0, 3.0}) CHECK(specfun::surface_constant(1, g) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rel(specfun::surface_constant(2, 1.0), 1.0) < 1e-14);
    CHECK(rel(specfun::surface_constant(2, 2.0), M_PI / 2.0) < 1e-14);
    CHECK(rel(specfun::surface_constant(3, 2.0), 1.5707963267948966192) < 1e-13);
    CHECK(rel(specfun::surface_constant(3, 3.0), 2.1362188280661881879) < 1e-13);
    CHECK(rel(specfun::surface_constant(2, 3.0), 1.7666387502854499573) < 1e-13);
    CHECK(rel(specfun::surface_constant(3, 1.0), 0.5) < 1e-14);
}

TEST_CASE("best constant: reductions, frozen anchor, exchange symmetry") {
    ProblemParams pr;
    pr.sigma = 2.0;
    pr.p = 2.0;
    CHECK(rel(specfun::best_constant(pr), 0.82246703342411321824) < 1e-13);
    for (double p : {1.5, 3.0, 0.5, -1.0}) {
        ProblemParams pv = pr;
        pv.p = p;
        pv.sigma = 2.7;
        CHECK(rel(specfun::best_constant(pv), specfun::mellin_coth_constant(2.7)) < 1e-13);
    }
    ProblemParams pa;
    pa.m = 2;
    pa.n = 1;
    pa.alpha = 2.0;
    pa.beta = 1.0;
    pa.sigma = 3.0;
    pa.p = 2.0;
    CHECK(rel(specfun::best_constant(pa), 0.75327745529380437) < 1e-13);

    // swapping (m,alpha) <-> (n,beta) together with p <-> q leaves K fixed
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        ProblemParams x;
        x.m = 1 + static_cast<int>(u(eng) * 3);
        x.n = 1 + static_cast<int>(u(eng) * 3);
        x.alpha = 0.5 + 2.0 * u(eng);
        x.beta = 0.5 + 2.0 * u(eng);
        x.sigma = 1.2 + 3.0 * u(eng);
        x.p = 1.1 + 3.0 * u(eng);
        ProblemParams y = x;
        std::swap(y.m, y.n);
        std::swap(y.alpha, y.beta);
        y.p = x.q();
        CHECK(rel(specfun::best_constant(x), specfun::best_constant(y)) < 1e-13);
    }
}

TEST_CASE("weight constants: reductions and factorization identity") {
    ProblemParams pr;
    pr.sigma = 2.5;
    pr.p = 2.0;
    CHECK(rel(specfun::omega_constant(pr), specfun::mellin_coth_constant(2.5)) < 1e-14);

    ProblemParams p2;
    p2.n = 2;
    p2.beta = 2.0;
    p2.sigma = 2.0;
    CHECK(rel(specfun::varpi_constant(p2), (M_PI / 2.0) * M_PI * M_PI / 12.0) < 1e-13);

    std::mt19937_64 eng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        ProblemParams x;
        x.m = 1 + static_cast<int>(u(eng) * 3);
        x.n = 1 + static_cast<int>(u(eng) * 3);
        x.alpha = 0.5 + 2.0 * u(eng);
        x.beta = 0.5 + 2.0 * u(eng);
        x.sigma = 1.2 + 3.0 * u(eng);
        x.p = 1.1 + 3.0 * u(eng);
        const double k = std::pow(specfun::varpi_constant(x), 1.0 / x.p) *
                         std::pow(specfun::omega_constant(x), 1.0 / x.q());
        CHECK(rel(specfun::best_constant(x), k) < 1e-13);
    }
}
