#include "hilbert/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "hilbert/acceptance.hpp"
#include "hilbert/parallel.hpp"
#include "hilbert/profiles.hpp"
#include "hilbert/sharp.hpp"
#include "hilbert/specfun.hpp"
#include "hilbert/verify.hpp"
#include "hilbert/weights.hpp"

namespace hilbert::cli {

namespace {

using report::json;

struct RowStats {
    int failures = 0;
    int non_converged = 0;
    double worst_dev = 0.0;
};

// Row-level guard: a numerical failure in one grid cell becomes an error row
// instead of aborting the sweep, so partial results are still written.
template <class Fn>
json guarded_row(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        json row;
        row["error"] = e.what();
        row["holds"] = false;
        row["converged"] = false;
        return row;
    }
}

json params_json(const ProblemParams& p) {
    return {{"m", p.m}, {"n", p.n}, {"alpha", p.alpha}, {"beta", p.beta},
            {"sigma", p.sigma}, {"p", p.p}, {"q", p.q()}};
}

void run_constants(const RunConfig& cfg, report::Report& rep, RowStats& st) {
    for (double s : cfg.sigma_grid) {
        ProblemParams pr = cfg.params;
        pr.sigma = s;
        json row;
        row["sigma"] = s;
        row["K"] = specfun::best_constant(pr);
        row["K1"] = specfun::varpi_constant(pr);
        row["K2"] = specfun::omega_constant(pr);
        row["mellin"] = specfun::mellin_coth_constant(s);
        row["C_m_alpha"] = specfun::surface_constant(pr.m, pr.alpha);
        row["C_n_beta"] = specfun::surface_constant(pr.n, pr.beta);
        row["holds"] = true;
        row["converged"] = true;
        rep.rows.push_back(row);
    }
    (void)st;
}

void run_weights(const RunConfig& cfg, report::Report& rep, RowStats& st) {
    struct Cell {
        std::string side;
        double sigma, t;
        weights::WeightReport w;
    };
    std::vector<Cell> cells;
    for (double s : cfg.sigma_grid)
        for (double t : cfg.norm_grid) {
            if (cfg.side != "varpi") cells.push_back({"omega", s, t, {}});
            if (cfg.side != "omega") cells.push_back({"varpi", s, t, {}});
        }
    par::for_index(cells.size(), cfg.threads != 1, [&](std::size_t i) {
        Cell& c = cells[i];
        c.w = c.side == "omega"
                  ? weights::omega(c.sigma, c.t, cfg.params.m, cfg.params.alpha, cfg.quad)
                  : weights::varpi(c.sigma, c.t, cfg.params.n, cfg.params.beta, cfg.quad);
    });
    for (const Cell& c : cells) {
        const bool ok = c.w.rel_deviation <= cfg.check_tol;
        json row;
        row["side"] = c.side;
        row["sigma"] = c.sigma;
        row["point_norm"] = c.t;
        row["computed"] = c.w.computed;
        row["closed_form"] = c.w.closed_form;
        row["rel_deviation"] = c.w.rel_deviation;
        row["holds"] = ok;
        row["converged"] = c.w.converged;
        rep.rows.push_back(row);
        st.failures += ok ? 0 : 1;
        st.non_converged += c.w.converged ? 0 : 1;
        st.worst_dev = std::max(st.worst_dev, c.w.rel_deviation);
    }
}

json verify_row(const ProblemParams& pr, const std::string& label,
                const verify::VerifyReport& r) {
    json row;
    row["pair"] = label;
    row["sigma"] = pr.sigma;
    row["p"] = pr.p;
    row["I"] = r.I;
    row["J"] = r.J;
    row["f_norm"] = r.f_norm;
    row["g_norm"] = r.g_norm;
    row["bound_I"] = r.bound_I;
    row["bound_J"] = r.bound_J;
    row["ratio"] = r.ratio;
    row["direction"] = r.direction == verify::Direction::forward ? "forward" : "reverse";
    if (r.f_l1) row["f_l1"] = *r.f_l1;
    if (r.g_l1) row["g_l1"] = *r.g_l1;
    row["holds"] = r.holds;
    row["converged"] = r.converged;
    return row;
}

void run_verify(const RunConfig& cfg, report::Report& rep, RowStats& st) {
    ProblemParams pr = cfg.params;
    std::vector<json> rows;
    if (cfg.preset == "forward") {
        auto pairs = verify::forward_pairs(pr);
        rows.resize(pairs.size());
        par::for_index(pairs.size(), cfg.threads != 1, [&](std::size_t i) {
            rows[i] = guarded_row([&] {
                return verify_row(pr, pairs[i].label,
                                  verify::check_main_inequality(pairs[i].f, pairs[i].g, pr,
                                                                cfg.quad));
            });
        });
    } else if (cfg.preset == "reverse-p-half" || cfg.preset == "reverse-p-neg1") {
        pr.p = cfg.preset == "reverse-p-half" ? 0.5 : -1.0;
        auto pair = verify::reverse_pair(pr);
        rows.push_back(guarded_row([&] {
            return verify_row(pr, pair.label,
                              verify::check_main_inequality(pair.f, pair.g, pr, cfg.quad));
        }));
    } else if (cfg.preset == "full-kernel") {
        std::vector<verify::ProfilePair> sel = verify::full_kernel_pairs(pr);
        rows.resize(sel.size());
        par::for_index(sel.size(), cfg.threads != 1, [&](std::size_t i) {
            rows[i] = guarded_row([&] {
                verify::FullKernelReport r =
                    verify::check_full_kernel(sel[i].f, sel[i].g, pr, cfg.quad);
                json row;
                row["pair"] = sel[i].label;
                row["I_coth"] = r.I_coth;
                row["I"] = r.I;
                row["f_l1"] = r.f_l1;
                row["g_l1"] = r.g_l1;
                row["identity_gap"] = r.identity_gap;
                row["identity_tol"] = r.identity_tol;
                row["bound"] = r.bound;
                row["J_form"] = r.J_form;
                row["bound_J"] = r.bound_J;
                row["holds"] = r.identity_ok && r.holds && r.holds_J;
                row["converged"] = r.converged;
                return row;
            });
        });
    } else if (cfg.preset == "chain") {
        auto pairs = verify::forward_pairs(pr);
        rows.resize(pairs.size());
        par::for_index(pairs.size(), cfg.threads != 1, [&](std::size_t i) {
            rows[i] = guarded_row([&] {
                verify::ChainReport r = verify::check_weighted_chain(pairs[i].f, pr, cfg.quad);
                json row;
                row["pair"] = pairs[i].label;
                row["J1"] = r.J1;
                row["rhs"] = r.rhs;
                row["J"] = r.J;
                row["ratio_J_J1"] = r.ratio_J_J1;
                row["holds"] = r.holds;
                row["converged"] = r.converged;
                return row;
            });
        });
    } else {
        throw std::invalid_argument("unknown verify preset: " + cfg.preset);
    }
    for (auto& row : rows) {
        st.failures += row["holds"].get<bool>() ? 0 : 1;
        st.non_converged += row["converged"].get<bool>() ? 0 : 1;
        rep.rows.push_back(std::move(row));
    }
}

void run_sharpness(const RunConfig& cfg, report::Report& rep, RowStats& st) {
    auto pts = sharp::sharpness_sweep(cfg.params, cfg.eps_grid, cfg.quad, cfg.threads != 1);
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i].eps > pts[i + 1].eps && pts[i].gap < pts[i + 1].gap - 1e-10)
            monotone = false;
    for (const auto& sp : pts) {
        const bool ok = sp.ratio > 0.0 && sp.ratio < 1.0;
        json row;
        row["eps"] = sp.eps;
        row["I_tilde"] = sp.I_tilde;
        row["product_norms"] = sp.product_norms;
        row["ratio"] = sp.ratio;
        row["gap"] = sp.gap;
        row["holds"] = ok;
        row["converged"] = sp.converged;
        rep.rows.push_back(row);
        st.failures += ok ? 0 : 1;
        st.non_converged += sp.converged ? 0 : 1;
    }
    rep.summary["monotone_gap"] = monotone;
    if (!monotone) st.failures += 1;
}

void run_opnorm(const RunConfig& cfg, report::Report& rep, RowStats& st) {
    sharp::Family fam =
        cfg.family == "exp-power" ? sharp::Family::exp_power : sharp::Family::eps;
    sharp::OpNormEstimate est = sharp::opnorm_search(cfg.params, fam, cfg.quad, cfg.eps_min);
    const bool ok = est.best_ratio <= est.K_value * (1.0 + 1e-8);
    json row;
    row["family"] = est.family_id;
    row["best_ratio"] = est.best_ratio;
    row["K"] = est.K_value;
    row["ratio_over_K"] = est.best_ratio / est.K_value;
    if (fam == sharp::Family::eps) row["arg_eps"] = est.arg_eps;
    if (fam == sharp::Family::exp_power) {
        row["arg_a"] = est.arg_a;
        row["arg_rate"] = est.arg_rate;
    }
    row["holds"] = ok;
    row["converged"] = est.converged;
    rep.rows.push_back(row);
    st.failures += ok ? 0 : 1;
    st.non_converged += est.converged ? 0 : 1;
}

void run_suite(const RunConfig& cfg, report::Report& rep, RowStats& st) {
    accept::SuiteResult sr = accept::run_all(cfg.seed, cfg.threads != 1);
    for (const auto& c : sr.criteria) {
        json row;
        row["criterion"] = c.id;
        row["name"] = c.name;
        row["holds"] = c.pass;
        row["detail"] = c.detail;
        row["seconds"] = c.seconds;
        row["converged"] = true;
        rep.rows.push_back(row);
        st.failures += c.pass ? 0 : 1;
    }
    rep.summary["battery"] = sr.rows;
    rep.summary["total_seconds"] = sr.total_seconds;
}

void print_human(const report::Report& rep, const RunConfig& cfg) {
    if (cfg.subcommand == Subcommand::suite) {
        for (const auto& row : rep.rows)
            std::printf("criterion %2d [%s] %s -- %s (%.2f s)\n",
                        row["criterion"].get<int>(),
                        row["holds"].get<bool>() ? "PASS" : "FAIL",
                        row["name"].get<std::string>().c_str(),
                        row["detail"].get<std::string>().c_str(),
                        row["seconds"].get<double>());
        return;
    }
    // generic table: one line per row
    for (const auto& row : rep.rows) {
        std::string line;
        for (auto it = row.begin(); it != row.end(); ++it) {
            line += it.key();
            line += "=";
            line += it.value().dump();
            line += "  ";
        }
        std::printf("%s\n", line.c_str());
    }
}

}  // namespace

int run(const RunConfig& cfg, report::Report* out) {
    report::Report rep;
    RowStats st;
    try {
        cfg.params.validate();
        if (cfg.subcommand == Subcommand::constants || cfg.subcommand == Subcommand::weights ||
            cfg.subcommand == Subcommand::verify) {
            if (cfg.sigma_grid.empty()) throw std::invalid_argument("empty sigma grid");
            for (double s : cfg.sigma_grid)
                if (!(s > 1.0)) throw std::invalid_argument("sigma grid values must be > 1");
        }
        if (cfg.subcommand == Subcommand::weights && cfg.norm_grid.empty())
            throw std::invalid_argument("empty point-norm grid");
        if (cfg.subcommand == Subcommand::sharpness && cfg.eps_grid.empty())
            throw std::invalid_argument("empty eps grid");
        if (!(cfg.quad.rel_tol > 0.0) || !(cfg.quad.abs_tol > 0.0))
            throw std::invalid_argument("tolerances must be positive");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    }

    par::set_threads(cfg.threads);
    rep.config = {{"subcommand", static_cast<int>(cfg.subcommand)},
                  {"params", params_json(cfg.params)},
                  {"sigma_grid", cfg.sigma_grid},
                  {"norm_grid", cfg.norm_grid},
                  {"eps_grid", cfg.eps_grid},
                  {"rel_tol", cfg.quad.rel_tol},
                  {"abs_tol", cfg.quad.abs_tol},
                  {"check_tol", cfg.check_tol},
                  {"seed", cfg.seed},
                  {"preset", cfg.preset},
                  {"side", cfg.side},
                  {"family", cfg.family}};

    try {
        switch (cfg.subcommand) {
            case Subcommand::constants: run_constants(cfg, rep, st); break;
            case Subcommand::weights: run_weights(cfg, rep, st); break;
            case Subcommand::verify: run_verify(cfg, rep, st); break;
            case Subcommand::sharpness: run_sharpness(cfg, rep, st); break;
            case Subcommand::opnorm: run_opnorm(cfg, rep, st); break;
            case Subcommand::suite: run_suite(cfg, rep, st); break;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }

    rep.summary["rows"] = rep.rows.size();
    rep.summary["failures"] = st.failures;
    rep.summary["non_converged"] = st.non_converged;
    if (cfg.subcommand == Subcommand::weights)
        rep.summary["worst_rel_deviation"] = st.worst_dev;

    if (!cfg.output_path.empty()) {
        std::ofstream f(cfg.output_path);
        if (!f) {
            std::fprintf(stderr, "configuration error: cannot write %s\n",
                         cfg.output_path.c_str());
            return 2;
        }
        f << (cfg.format == OutputFormat::csv ? rep.to_csv() : rep.to_json().dump(2) + "\n");
    }
    switch (cfg.format) {
        case OutputFormat::json: std::printf("%s\n", rep.to_json().dump(2).c_str()); break;
        case OutputFormat::csv: std::printf("%s", rep.to_csv().c_str()); break;
        case OutputFormat::human: print_human(rep, cfg); break;
    }
    if (out) *out = rep;

    if (st.failures > 0) return 1;
    if (st.non_converged > 0) return 3;
    return 0;
}

}  // namespace hilbert::cli
