// Compares the serial reference paths against the OpenMP ones on the
// heavier workloads (Monte-Carlo oracle, weight sweep, forward battery)
// and checks that both produce bit-identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hilbert/parallel.hpp"
#include "hilbert/profiles.hpp"
#include "hilbert/radial.hpp"
#include "hilbert/verify.hpp"
#include "hilbert/weights.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Timing {
    double serial = 0.0, parallel = 0.0;
    bool identical = false;
};

Timing bench_mc(long samples) {
    hilbert::radial::RadialIntegrand ri;
    ri.s = 3;
    ri.gamma_param = 2.0;
    ri.profile = [](double r) { return std::exp(-r) * r; };
    ri.support_hint = hilbert::radial::Support::full;
    Timing t;
    auto t0 = Clock::now();
    auto a = hilbert::radial::mc_oracle(ri, samples, 42, false);
    t.serial = seconds_since(t0);
    t0 = Clock::now();
    auto b = hilbert::radial::mc_oracle(ri, samples, 42, true);
    t.parallel = seconds_since(t0);
    t.identical = a.estimate == b.estimate && a.std_error == b.std_error;
    return t;
}

Timing bench_weights() {
    std::vector<double> sigmas = {1.5, 2.0, 3.0, 5.0};
    std::vector<double> norms = {1e-2, 1e-1, 1.0, 1e1, 1e2};
    auto sweep = [&](bool parallel) {
        std::vector<double> out(sigmas.size() * norms.size());
        hilbert::par::for_index(out.size(), parallel, [&](std::size_t i) {
            const double s = sigmas[i / norms.size()];
            const double t = norms[i % norms.size()];
            out[i] = hilbert::weights::omega(s, t, 3, 2.0).computed;
        });
        return out;
    };
    Timing t;
    auto t0 = Clock::now();
    auto a = sweep(false);
    t.serial = seconds_since(t0);
    t0 = Clock::now();
    auto b = sweep(true);
    t.parallel = seconds_since(t0);
    t.identical = a == b;
    return t;
}

Timing bench_battery() {
    hilbert::ProblemParams pr;
    pr.sigma = 2.0;
    pr.p = 2.0;
    auto pairs = hilbert::verify::forward_pairs(pr);
    auto sweep = [&](bool parallel) {
        std::vector<double> out(pairs.size());
        hilbert::par::for_index(out.size(), parallel, [&](std::size_t i) {
            out[i] = hilbert::verify::check_main_inequality(pairs[i].f, pairs[i].g, pr).ratio;
        });
        return out;
    };
    Timing t;
    auto t0 = Clock::now();
    auto a = sweep(false);
    t.serial = seconds_since(t0);
    t0 = Clock::now();
    auto b = sweep(true);
    t.parallel = seconds_since(t0);
    t.identical = a == b;
    return t;
}

void report(const char* name, const Timing& t) {
    std::printf("%-16s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name,
                t.serial, t.parallel, t.serial / t.parallel,
                t.identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", hilbert::par::max_threads());
    report("mc_oracle(4e6)", bench_mc(4000000));
    report("weight sweep", bench_weights());
    report("forward battery", bench_battery());
    return 0;
}
