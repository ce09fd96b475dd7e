#include <cmath>

#include <doctest.h>

#include "hilbert/cli.hpp"
#include "hilbert/specfun.hpp"
#include "hilbert/weights.hpp"

using namespace hilbert;
using cli::RunConfig;
using cli::Subcommand;

namespace {
RunConfig quiet(RunConfig cfg) {
    cfg.format = cli::OutputFormat::human;
    cfg.output_path = "";
    return cfg;
}
}  // namespace

TEST_CASE("cli constants: rows mirror the closed forms") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::constants;
    cfg.sigma_grid = {1.5, 2.0, 3.0, 5.0};
    report::Report rep;
    CHECK(cli::run(quiet(cfg), &rep) == 0);
    REQUIRE(rep.rows.size() == 4);
    for (const auto& row : rep.rows) {
        ProblemParams pr = cfg.params;
        pr.sigma = row["sigma"].get<double>();
        CHECK(row["K"].get<double>() == specfun::best_constant(pr));
        CHECK(row["K1"].get<double>() == specfun::varpi_constant(pr));
        CHECK(row["K2"].get<double>() == specfun::omega_constant(pr));
    }
    CHECK(rep.summary["failures"].get<int>() == 0);
}

TEST_CASE("cli weights: sweep rows pass the deviation gate") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::weights;
    cfg.params.m = 2;
    cfg.params.alpha = 2.0;
    cfg.sigma_grid = {2.0};
    cfg.norm_grid = {0.01, 1.0, 100.0};
    cfg.side = "omega";
    report::Report rep;
    CHECK(cli::run(quiet(cfg), &rep) == 0);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) {
        CHECK(row["rel_deviation"].get<double>() <= 1e-8);
        CHECK(row["holds"].get<bool>());
    }
}

TEST_CASE("cli: configuration errors exit with status 2") {
    RunConfig empty;
    empty.subcommand = Subcommand::verify;
    empty.preset = "reverse-p-half";
    empty.sigma_grid = {};
    CHECK(cli::run(quiet(empty)) == 2);

    RunConfig badp;
    badp.subcommand = Subcommand::constants;
    badp.sigma_grid = {2.0};
    badp.params.p = 1.0;
    CHECK(cli::run(quiet(badp)) == 2);

    RunConfig badpreset;
    badpreset.subcommand = Subcommand::verify;
    badpreset.sigma_grid = {2.0};
    badpreset.preset = "nonsense";
    CHECK(cli::run(quiet(badpreset)) == 2);
}

TEST_CASE("cli: an unachievable gate forces exit status 1") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::weights;
    cfg.sigma_grid = {2.0};
    cfg.norm_grid = {1.0};
    cfg.check_tol = 1e-18;
    report::Report rep;
    CHECK(cli::run(quiet(cfg), &rep) == 1);
    CHECK(rep.summary["failures"].get<int>() > 0);
}

TEST_CASE("cli: wrong-denominator variant is detected by the deviation gate") {
    // If the y-side weight constant carried the x-norm parameter in its
    // denominator, the computed weight would sit far outside the gate.
    const int n = 2;
    const double beta = 1.0, alpha = 2.0, sigma = 2.0;
    weights::WeightReport w = weights::varpi(sigma, 1.0, n, beta);
    const double g1b = specfun::gamma(1.0 / beta);
    const double buggy = g1b * g1b / (std::pow(alpha, n - 1) * specfun::gamma(n / beta)) *
                         specfun::mellin_coth_constant(sigma);
    CHECK(std::fabs(w.computed - buggy) / buggy > 1e-3);   // would fail the gate
    CHECK(w.rel_deviation <= 1e-8);                        // the correct form passes
}

TEST_CASE("cli verify: reverse preset produces a reverse-direction row") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::verify;
    cfg.preset = "reverse-p-half";
    cfg.sigma_grid = {2.0};
    report::Report rep;
    CHECK(cli::run(quiet(cfg), &rep) == 0);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0]["direction"].get<std::string>() == "reverse");
    CHECK(rep.rows[0]["holds"].get<bool>());
}

TEST_CASE("cli sharpness: rows and the monotone-gap summary") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::sharpness;
    cfg.eps_grid = {0.2, 0.02};
    report::Report rep;
    CHECK(cli::run(quiet(cfg), &rep) == 0);
    CHECK(rep.rows.size() == 2);
    CHECK(rep.summary["monotone_gap"].get<bool>());
}

TEST_CASE("cli: canonical JSON is deterministic, CSV projects the rows") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::weights;
    cfg.sigma_grid = {1.5, 2.0};
    cfg.norm_grid = {0.5, 2.0};
    report::Report a, b;
    CHECK(cli::run(quiet(cfg), &a) == 0);
    CHECK(cli::run(quiet(cfg), &b) == 0);
    CHECK(a.canonical_json() == b.canonical_json());

    CHECK(a.to_json()["schema_version"].get<std::string>() == "1");
    const std::string csv = a.to_csv();
    CHECK(csv.rfind("closed_form,", 0) == 0);  // sorted header
    int lines = 0;
    for (char c : csv)
        if (c == '\n') lines += 1;
    CHECK(lines == 1 + 8);  // header + 2 sigma x 2 norms x 2 sides
}
