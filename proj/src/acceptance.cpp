#include "hilbert/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "hilbert/kernel.hpp"
#include "hilbert/parallel.hpp"
#include "hilbert/profiles.hpp"
#include "hilbert/quad.hpp"
#include "hilbert/radial.hpp"
#include "hilbert/sharp.hpp"
#include "hilbert/specfun.hpp"
#include "hilbert/verify.hpp"
#include "hilbert/weights.hpp"

namespace hilbert::accept {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

struct Budget {
    double seconds;
};

// Each criterion body returns pass and fills a detail line plus its rows.

Criterion mellin_identity(json* rows) {
    auto t0 = Clock::now();
    Criterion c{1, "kernel moment identity against the Gamma*zeta closed form", false, "", 0};
    const double tol = 1e-10;
    double worst = 0.0;
    json out = json::array();
    for (double s : {1.1, 1.5, 2.0, 3.0, 5.0, 10.0}) {
        quad::QuadConfig qc;
        qc.rel_tol = 1e-12;
        qc = qc.with_left_singularity(s - 2.0).with_exponential_tail(2.0);
        auto f = [s](double v) { return kernel::coth_minus_one(v) * std::pow(v, s - 1.0); };
        quad::QuadResult r = quad::integrate_semi_infinite(f, 0.0, qc);
        const double cf = specfun::mellin_coth_constant(s);
        const double rel = std::fabs(r.value - cf) / cf;
        worst = std::max(worst, rel);
        out.push_back({{"sigma", s}, {"quad", r.value}, {"closed_form", cf}, {"rel", rel}});
    }
    (*rows)["mellin"] = out;
    c.seconds = elapsed(t0);
    c.pass = worst <= tol && c.seconds <= 1.0;
    c.detail = "worst rel " + fmt(worst) + " (tol 1e-10)";
    return c;
}

Criterion radial_reduction(std::uint64_t seed, bool parallel, json* rows) {
    auto t0 = Clock::now();
    Criterion c{2, "radial reduction: power-tail closed form and Monte-Carlo oracle", false, "", 0};
    double worst_rel = 0.0, worst_sigmas = 0.0;
    json out = json::array();
    for (int s = 1; s <= 3; ++s)
        for (double g : {1.0, 2.0, 3.0}) {
            for (double eps : {0.25, 1.0, 2.0}) {
                radial::RadialIntegrand ri;
                ri.s = s;
                ri.gamma_param = g;
                ri.profile = [s, eps](double r) { return std::pow(r, -s - eps); };
                ri.support_hint = radial::Support::unit_ball_exterior;
                ri.tail_hint = eps;
                quad::QuadResult rr = radial::reduce_radial(ri);
                const double cf = specfun::surface_constant(s, g) / eps;
                const double rel = std::fabs(rr.value - cf) / cf;
                worst_rel = std::max(worst_rel, rel);
                out.push_back({{"s", s}, {"gamma", g}, {"eps", eps}, {"value", rr.value},
                               {"closed_form", cf}, {"rel", rel}});
            }
            radial::RadialIntegrand ri;
            ri.s = s;
            ri.gamma_param = g;
            const double eps = 1.0;
            ri.profile = [s, eps](double r) { return std::pow(r, -s - eps); };
            ri.support_hint = radial::Support::unit_ball_exterior;
            ri.tail_hint = eps;
            radial::McResult mc = radial::mc_oracle(ri, 1000000, seed, parallel);
            const double cf = specfun::surface_constant(s, g) / eps;
            const double sigmas = std::fabs(mc.estimate - cf) / mc.std_error;
            worst_sigmas = std::max(worst_sigmas, sigmas);
            out.push_back({{"s", s}, {"gamma", g}, {"mc_estimate", mc.estimate},
                           {"mc_std_error", mc.std_error}, {"sigmas", sigmas},
                           {"reliable", mc.reliable}});
        }
    (*rows)["radial"] = out;
    c.seconds = elapsed(t0);
    c.pass = worst_rel <= 1e-9 && worst_sigmas <= 3.0 && c.seconds <= 60.0;
    c.detail = "worst rel " + fmt(worst_rel) + " (tol 1e-9), worst MC deviation " +
               fmt(worst_sigmas) + " sigma (tol 3)";
    return c;
}

const std::vector<std::pair<int, double>> kGeometries = {{1, 1.0}, {2, 1.0}, {2, 2.0}, {3, 2.0}};

Criterion weight_constancy(bool parallel, json* rows) {
    auto t0 = Clock::now();
    Criterion c{3, "weight constancy across four decades of point norms", false, "", 0};
    const double norms[5] = {1e-2, 1e-1, 1.0, 1e1, 1e2};
    const double sigmas[3] = {1.5, 2.0, 5.0};
    struct Row {
        const char* side;
        int dim;
        double gpar, sigma, t, dev;
        bool conv;
    };
    std::vector<Row> grid;
    for (auto [d, gp] : kGeometries)
        for (double s : sigmas)
            for (double t : norms) {
                grid.push_back({"omega", d, gp, s, t, 0, false});
                grid.push_back({"varpi", d, gp, s, t, 0, false});
            }
    par::for_index(grid.size(), parallel, [&](std::size_t i) {
        Row& r = grid[i];
        weights::WeightReport w = r.side[0] == 'o'
                                      ? weights::omega(r.sigma, r.t, r.dim, r.gpar)
                                      : weights::varpi(r.sigma, r.t, r.dim, r.gpar);
        r.dev = w.rel_deviation;
        r.conv = w.converged;
    });
    double worst = 0.0;
    bool conv = true;
    json out = json::array();
    for (const Row& r : grid) {
        worst = std::max(worst, r.dev);
        conv = conv && r.conv;
        out.push_back({{"side", r.side}, {"dim", r.dim}, {"norm_param", r.gpar},
                       {"sigma", r.sigma}, {"point_norm", r.t}, {"rel_deviation", r.dev}});
    }
    (*rows)["weights"] = out;
    c.seconds = elapsed(t0);
    c.pass = worst <= 1e-8 && conv && c.seconds <= 30.0;
    c.detail = "worst rel deviation " + fmt(worst) + " (tol 1e-8)";
    return c;
}

Criterion truncated_weight_and_decay(bool parallel, json* rows) {
    auto t0 = Clock::now();
    Criterion c{4, "truncated weight identity and defect decay rate", false, "", 0};
    const double norms[5] = {1e-2, 1e-1, 1.0, 1e1, 1e2};
    const double sigmas[3] = {1.5, 2.0, 5.0};
    struct Row {
        int dim;
        double gpar, sigma, t, gap_over_k2;
    };
    std::vector<Row> grid;
    for (auto [d, gp] : kGeometries)
        for (double s : sigmas)
            for (double t : norms) grid.push_back({d, gp, s, t, 0});
    par::for_index(grid.size(), parallel, [&](std::size_t i) {
        Row& r = grid[i];
        weights::TruncatedWeight tw = weights::truncated_weight(r.sigma, r.t, r.dim, r.gpar);
        ProblemParams pp;
        pp.m = r.dim;
        pp.alpha = r.gpar;
        pp.sigma = r.sigma;
        r.gap_over_k2 = std::fabs(tw.direct - tw.via_theta) / specfun::omega_constant(pp);
    });
    double worst_gap = 0.0;
    json out = json::array();
    for (const Row& r : grid) {
        worst_gap = std::max(worst_gap, r.gap_over_k2);
        out.push_back({{"dim", r.dim}, {"norm_param", r.gpar}, {"sigma", r.sigma},
                       {"point_norm", r.t}, {"gap_over_k2", r.gap_over_k2}});
    }
    json slopes = json::array();
    bool slopes_ok = true;
    for (double st : {2.0, 3.0}) {
        weights::DecayFit fit = weights::theta_decay_fit(st, {10.0, 100.0, 1000.0});
        const bool near = std::fabs(fit.slope + (st - 1.0)) <= 0.05;
        const bool guaranteed = fit.slope <= -(st - 1.5);  // guaranteed decay rate
        slopes_ok = slopes_ok && near && guaranteed;
        slopes.push_back({{"sigma_tilde", st}, {"slope", fit.slope}});
    }
    (*rows)["truncated_weight"] = out;
    (*rows)["theta_slopes"] = slopes;
    c.seconds = elapsed(t0);
    c.pass = worst_gap <= 1e-9 && slopes_ok && c.seconds <= 10.0;
    c.detail = "worst identity gap/K2 " + fmt(worst_gap) + " (tol 1e-9), slopes " +
               (slopes_ok ? "ok" : "BAD");
    return c;
}

Criterion main_forward(bool parallel, json* rows) {
    auto t0 = Clock::now();
    Criterion c{5, "main inequality, equivalent form and chain on the forward battery",
                false, "", 0};
    struct Case {
        ProblemParams pr;
        verify::ProfilePair pair;
    };
    std::vector<Case> cases;
    for (auto [m, a] : {std::pair<int, double>{1, 1.0}, std::pair<int, double>{2, 2.0}})
        for (double s : {1.5, 2.0})
            for (double p : {1.5, 2.0, 3.0}) {
                ProblemParams pr;
                pr.m = m;
                pr.alpha = a;
                pr.n = 1;
                pr.beta = 1.0;
                pr.sigma = s;
                pr.p = p;
                auto pairs = verify::forward_pairs(pr);
                cases.push_back({pr, pairs[0]});
                cases.push_back({pr, pairs[1]});
            }
    std::vector<verify::VerifyReport> reps(cases.size());
    par::for_index(cases.size(), parallel, [&](std::size_t i) {
        reps[i] = verify::check_main_inequality(cases[i].pair.f, cases[i].pair.g, cases[i].pr);
    });
    bool ok = true;
    double worst_ratio = 0.0;
    json out = json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& r = reps[i];
        const bool chain = r.I <= r.J * r.g_norm * (1.0 + 1e-8) + 1e-12;
        ok = ok && r.holds && r.converged && r.ratio <= 1.0 - 1e-6 && chain &&
             r.J < r.bound_J;
        worst_ratio = std::max(worst_ratio, r.ratio);
        out.push_back({{"m", cases[i].pr.m}, {"sigma", cases[i].pr.sigma},
                       {"p", cases[i].pr.p}, {"pair", cases[i].pair.label},
                       {"I", r.I}, {"J", r.J}, {"f_norm", r.f_norm}, {"g_norm", r.g_norm},
                       {"ratio", r.ratio}, {"holds", r.holds}});
    }
    (*rows)["main_forward"] = out;
    c.seconds = elapsed(t0);
    c.pass = ok && c.seconds <= 120.0;
    c.detail = fmt(static_cast<double>(reps.size())) + " pairs, worst ratio " +
               fmt(worst_ratio) + " (gate 1-1e-6)";
    return c;
}

Criterion sharpness(bool parallel, json* rows) {
    auto t0 = Clock::now();
    Criterion c{6, "extremal family drives the ratio to the best constant", false, "", 0};
    ProblemParams pr;
    pr.sigma = 2.0;
    pr.p = 2.0;
    auto pts = sharp::sharpness_sweep(pr, {0.2, 0.02, 0.002}, {}, parallel);
    const bool increasing = pts[0].ratio < pts[1].ratio && pts[1].ratio < pts[2].ratio &&
                            pts[2].ratio < 1.0;
    const double gap_ratio = pts[2].gap / pts[1].gap;
    const bool linearish = gap_ratio >= 0.05 && gap_ratio <= 0.3;
    // linear extrapolation of the two smallest-eps points to eps = 0
    const double e1 = pts[1].eps, r1 = pts[1].ratio;
    const double e2 = pts[2].eps, r2 = pts[2].ratio;
    const double predicted = r2 + (r1 - r2) * (0.0 - e2) / (e1 - e2);
    const double residual = std::fabs(predicted - r2);
    const bool hits_one = std::fabs(predicted - 1.0) <= 2.0 * residual;
    json out = json::array();
    for (const auto& sp : pts)
        out.push_back({{"eps", sp.eps}, {"I_tilde", sp.I_tilde},
                       {"product_norms", sp.product_norms}, {"ratio", sp.ratio},
                       {"gap", sp.gap}});
    (*rows)["sharpness"] = out;
    c.seconds = elapsed(t0);
    c.pass = increasing && linearish && hits_one && c.seconds <= 60.0;
    c.detail = "gap ratio " + fmt(gap_ratio) + " (want [0.05,0.3]), extrapolated " +
               fmt(predicted);
    return c;
}

Criterion reverse_regime(bool parallel, json* rows) {
    auto t0 = Clock::now();
    Criterion c{7, "reversed inequalities for p = 1/2 and p = -1", false, "", 0};
    json out = json::array();
    std::vector<double> ps = {0.5, -1.0};
    std::vector<verify::VerifyReport> reps(ps.size());
    std::vector<ProblemParams> prs(ps.size());
    par::for_index(ps.size(), parallel, [&](std::size_t i) {
        ProblemParams pr;
        pr.sigma = 2.0;
        pr.p = ps[i];
        prs[i] = pr;
        verify::ProfilePair pair = verify::reverse_pair(pr);
        reps[i] = verify::check_main_inequality(pair.f, pair.g, pr);
    });
    bool ok = true;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& r = reps[i];
        ok = ok && r.holds && r.converged && r.direction == verify::Direction::reverse;
        out.push_back({{"p", ps[i]}, {"I", r.I}, {"bound_I", r.bound_I}, {"J", r.J},
                       {"bound_J", r.bound_J}, {"holds", r.holds}});
    }
    (*rows)["reverse"] = out;
    c.seconds = elapsed(t0);
    c.pass = ok && c.seconds <= 60.0;
    c.detail = ok ? "both regimes reversed" : "reverse inequality failed";
    return c;
}

Criterion full_kernel_forms(bool parallel, json* rows) {
    auto t0 = Clock::now();
    Criterion c{8, "full-kernel forms and the additive decomposition", false, "", 0};
    struct Case {
        ProblemParams pr;
        verify::ProfilePair pair;
    };
    std::vector<Case> cases;
    {
        ProblemParams pr;  // includes the one-dimensional specialized forms
        pr.sigma = 2.0;
        pr.p = 2.0;
        for (const auto& pair : verify::full_kernel_pairs(pr)) cases.push_back({pr, pair});
        ProblemParams pr2 = pr;
        pr2.m = 2;
        pr2.alpha = 2.0;
        auto pairs2 = verify::full_kernel_pairs(pr2);
        cases.push_back({pr2, pairs2[0]});
        cases.push_back({pr2, pairs2[2]});
    }
    std::vector<verify::FullKernelReport> reps(cases.size());
    par::for_index(cases.size(), parallel, [&](std::size_t i) {
        reps[i] = verify::check_full_kernel(cases[i].pair.f, cases[i].pair.g, cases[i].pr);
    });
    bool ok = true;
    double worst_pw = 0.0;
    json out = json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& r = reps[i];
        ok = ok && r.identity_ok && r.holds && r.holds_J && r.converged;
        worst_pw = std::max(worst_pw, r.pointwise_gap);
        out.push_back({{"m", cases[i].pr.m}, {"pair", cases[i].pair.label},
                       {"I_coth", r.I_coth}, {"identity_gap", r.identity_gap},
                       {"identity_tol", r.identity_tol}, {"holds", r.holds},
                       {"holds_J", r.holds_J}});
    }
    (*rows)["full_kernel"] = out;
    c.seconds = elapsed(t0);
    c.pass = ok && worst_pw <= 1e-8 && c.seconds <= 60.0;
    c.detail = "identity + shifted forms on " + fmt(static_cast<double>(reps.size())) +
               " pairs, worst pointwise gap " + fmt(worst_pw);
    return c;
}

Criterion operator_norm(bool parallel, json* rows) {
    auto t0 = Clock::now();
    Criterion c{9, "operator norm: J-side equality and family search toward K", false, "", 0};
    ProblemParams pr;
    pr.sigma = 2.0;
    pr.p = 2.0;
    // J-side equality on three profiles
    std::vector<verify::RadialProfile> fs = {
        verify::exp_power(1, 1.0, 1.75, 1.0),
        verify::truncated_power(1, 1.0, 0.6, 1.0),
        verify::eps_family_f(pr, 0.25),
    };
    double worst_eq = 0.0;
    std::vector<double> eqdev(fs.size());
    par::for_index(fs.size(), parallel, [&](std::size_t i) {
        const double tn = sharp::Tf_norm(fs[i], pr);
        const double j = verify::equivalent_J(fs[i], pr).value;
        eqdev[i] = std::fabs(tn - j) / j;
    });
    json out = json::array();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        worst_eq = std::max(worst_eq, eqdev[i]);
        out.push_back({{"profile", fs[i].label()}, {"rel_gap", eqdev[i]}});
    }
    sharp::OpNormEstimate est = sharp::opnorm_search(pr, sharp::Family::eps, {}, 1e-3);
    const bool bounded = est.best_ratio <= est.K_value * (1.0 + 1e-8);
    const bool reaches = est.best_ratio >= 0.99 * est.K_value;
    out.push_back({{"family", est.family_id}, {"best_ratio", est.best_ratio},
                   {"K", est.K_value}, {"arg_eps", est.arg_eps}});
    (*rows)["operator_norm"] = out;
    c.seconds = elapsed(t0);
    c.pass = worst_eq <= 1e-10 && bounded && reaches && c.seconds <= 60.0;
    c.detail = "norm equality worst rel " + fmt(worst_eq) + ", best ratio/K " +
               fmt(est.best_ratio / est.K_value);
    return c;
}

}  // namespace

SuiteResult run_battery(std::uint64_t seed, bool parallel) {
    SuiteResult sr;
    sr.rows = json::object();
    auto t0 = Clock::now();
    sr.criteria.push_back(mellin_identity(&sr.rows));
    sr.criteria.push_back(radial_reduction(seed, parallel, &sr.rows));
    sr.criteria.push_back(weight_constancy(parallel, &sr.rows));
    sr.criteria.push_back(truncated_weight_and_decay(parallel, &sr.rows));
    sr.criteria.push_back(main_forward(parallel, &sr.rows));
    sr.criteria.push_back(sharpness(parallel, &sr.rows));
    sr.criteria.push_back(reverse_regime(parallel, &sr.rows));
    sr.criteria.push_back(full_kernel_forms(parallel, &sr.rows));
    sr.criteria.push_back(operator_norm(parallel, &sr.rows));
    sr.total_seconds = elapsed(t0);
    sr.all_pass = std::all_of(sr.criteria.begin(), sr.criteria.end(),
                              [](const Criterion& c) { return c.pass; });
    return sr;
}

SuiteResult run_all(std::uint64_t seed, bool parallel) {
    auto t0 = Clock::now();
    SuiteResult first = run_battery(seed, parallel);
    SuiteResult second = run_battery(seed, parallel);
    Criterion det{10, "determinism: identical seed reproduces byte-identical output", false,
                  "", 0.0};
    const std::string a = first.rows.dump();
    const std::string b = second.rows.dump();
    first.total_seconds = elapsed(t0);
    det.seconds = second.total_seconds;
    const bool in_budget = first.total_seconds <= 600.0;
    det.pass = (a == b) && in_budget;
    det.detail = std::string(a == b ? "byte-identical" : "MISMATCH") + ", full suite " +
                 fmt(first.total_seconds) + " s (budget 600)";
    first.criteria.push_back(det);
    first.all_pass = first.all_pass && det.pass;
    return first;
}

}  // namespace hilbert::accept
