// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run via ctest or directly; an optional argument overrides the seed.

#include <cstdio>
#include <cstdlib>

#include "hilbert/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 12345;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    hilbert::accept::SuiteResult sr = hilbert::accept::run_all(seed);
    for (const auto& c : sr.criteria)
        std::printf("criterion %2d [%s] %s -- %s (%.2f s)\n", c.id,
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str(), c.seconds);
    std::printf("%s: %zu/%zu criteria passed in %.1f s\n",
                sr.all_pass ? "ACCEPTED" : "REJECTED",
                static_cast<std::size_t>(
                    std::count_if(sr.criteria.begin(), sr.criteria.end(),
                                  [](const hilbert::accept::Criterion& c) { return c.pass; })),
                sr.criteria.size(), sr.total_seconds);
    return sr.all_pass ? 0 : 1;
}
