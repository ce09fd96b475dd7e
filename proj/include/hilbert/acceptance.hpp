#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hilbert::accept {

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // measured worst value vs tolerance
    double seconds = 0.0;
};

struct SuiteResult {
    std::vector<Criterion> criteria;
    nlohmann::json rows;  // canonical battery output (criteria 1-9 numbers)
    bool all_pass = false;
    double total_seconds = 0.0;
};

// Runs the acceptance battery (criteria 1-9) once and returns both the
// pass/fail lines and the canonical numeric output.
SuiteResult run_battery(std::uint64_t seed, bool parallel = true);

// Full suite: battery plus the determinism criterion (battery rerun,
// byte-compared on the canonical JSON) and the wall-clock budget.
SuiteResult run_all(std::uint64_t seed, bool parallel = true);

}  // namespace hilbert::accept
