// Command-line front end: closed-form constant tables, weight verification
// sweeps, inequality batteries, sharpness sweeps, operator-norm search, and
// the full acceptance suite, with JSON/CSV reports.

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilbert/cli.hpp"

namespace {

hilbert::cli::OutputFormat parse_format(const std::string& s) {
    if (s == "json") return hilbert::cli::OutputFormat::json;
    if (s == "csv") return hilbert::cli::OutputFormat::csv;
    return hilbert::cli::OutputFormat::human;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of a multidimensional Hilbert-type "
                 "integral inequality with the coth-1 kernel"};
    app.require_subcommand(1);

    hilbert::cli::RunConfig cfg;
    std::string format = "human";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.params.m, "dimension of the x-space");
        sub->add_option("--n", cfg.params.n, "dimension of the y-space");
        sub->add_option("--alpha", cfg.params.alpha, "l^alpha norm parameter on x");
        sub->add_option("--beta", cfg.params.beta, "l^beta norm parameter on y");
        sub->add_option("--p", cfg.params.p, "exponent p (q is derived)");
        sub->add_option("--rel-tol", cfg.quad.rel_tol, "quadrature relative tolerance");
        sub->add_option("--abs-tol", cfg.quad.abs_tol, "quadrature absolute tolerance");
        sub->add_option("--output-format", format, "json|csv|human");
        sub->add_option("--output", cfg.output_path, "write the report to this path");
        sub->add_option("--seed", cfg.seed, "seed for Monte-Carlo oracles");
        sub->add_option("--threads", cfg.threads, "worker threads (0: default, 1: serial)");
        sub->add_option("--check-tol", cfg.check_tol, "relative deviation gate for checks");
    };

    CLI::App* constants = app.add_subcommand("constants", "closed-form constant table");
    cfg.sigma_grid = {1.5, 2.0, 3.0, 5.0};
    constants->add_option("--sigma", cfg.sigma_grid, "sigma grid")->delimiter(',');
    add_common(constants);

    CLI::App* weights = app.add_subcommand("weights", "weight function constancy sweep");
    cfg.norm_grid = {0.01, 1.0, 100.0};
    weights->add_option("--sigma", cfg.sigma_grid, "sigma grid")->delimiter(',');
    weights->add_option("--ynorm", cfg.norm_grid, "point-norm grid")->delimiter(',');
    weights->add_option("--side", cfg.side, "omega|varpi|both");
    add_common(weights);

    CLI::App* verify = app.add_subcommand("verify", "inequality verification battery");
    verify->add_option("--sigma", cfg.params.sigma, "sigma");
    verify->add_option("--preset", cfg.preset,
                       "forward|reverse-p-half|reverse-p-neg1|full-kernel|chain");
    add_common(verify);

    CLI::App* sharpness = app.add_subcommand("sharpness", "extremal-family sweep");
    cfg.eps_grid = {0.2, 0.02, 0.002};
    sharpness->add_option("--sigma", cfg.params.sigma, "sigma");
    sharpness->add_option("--eps", cfg.eps_grid, "eps sweep (decreasing)")->delimiter(',');
    add_common(sharpness);

    CLI::App* opnorm = app.add_subcommand("opnorm", "operator-norm family search");
    opnorm->add_option("--sigma", cfg.params.sigma, "sigma");
    opnorm->add_option("--family", cfg.family, "eps|exp-power");
    opnorm->add_option("--eps-min", cfg.eps_min, "smallest admissible eps probed");
    add_common(opnorm);

    CLI::App* suite = app.add_subcommand("suite", "full acceptance battery");
    add_common(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.format = parse_format(format);
    if (constants->parsed()) cfg.subcommand = hilbert::cli::Subcommand::constants;
    if (weights->parsed()) cfg.subcommand = hilbert::cli::Subcommand::weights;
    if (verify->parsed()) cfg.subcommand = hilbert::cli::Subcommand::verify;
    if (sharpness->parsed()) cfg.subcommand = hilbert::cli::Subcommand::sharpness;
    if (opnorm->parsed()) cfg.subcommand = hilbert::cli::Subcommand::opnorm;
    if (suite->parsed()) cfg.subcommand = hilbert::cli::Subcommand::suite;

    // the verify/sharpness/opnorm subcommands use a single sigma
    if (verify->parsed() || sharpness->parsed() || opnorm->parsed())
        cfg.sigma_grid = {cfg.params.sigma};

    return hilbert::cli::run(cfg);
}
