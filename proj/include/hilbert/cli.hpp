#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbert/params.hpp"
#include "hilbert/quad.hpp"
#include "hilbert/report.hpp"

namespace hilbert::cli {

enum class Subcommand { constants, weights, verify, sharpness, opnorm, suite };
enum class OutputFormat { json, csv, human };

struct RunConfig {
    Subcommand subcommand = Subcommand::constants;
    ProblemParams params;
    std::vector<double> sigma_grid;  // constants / weights sweeps
    std::vector<double> norm_grid;   // weights point norms
    std::vector<double> eps_grid;    // sharpness
    quad::QuadConfig quad;           // tolerance overrides
    double check_tol = 1e-8;         // weight deviation gate
    OutputFormat format = OutputFormat::human;
    std::string output_path;  // empty: stdout only
    std::uint64_t seed = 12345;
    int threads = 0;  // 0: runtime default
    std::string preset = "forward";  // verify: forward|reverse-p-half|reverse-p-neg1|full-kernel|chain
    std::string side = "both";       // weights: omega|varpi|both
    std::string family = "eps";      // opnorm: eps|exp-power
    double eps_min = 1e-3;           // opnorm bracket
};

// Exit status: 0 all checks pass, 1 a check failed, 2 configuration error,
// 3 numerical non-convergence. The report (if requested) is filled even on
// partial failure.
int run(const RunConfig& cfg, report::Report* out = nullptr);

}  // namespace hilbert::cli
