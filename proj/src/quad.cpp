#include "hilbert/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace hilbert::quad {

namespace {

// Gauss-Kronrod 7-15 pair: abscissae of the positive half on [-1, 1],
// Kronrod weights, and the embedded 7-point Gauss weights (zero at
// Kronrod-only nodes).
constexpr int kHalf = 8;
constexpr double kNode[kHalf] = {
    0.0,
    0.2077849550078984676006894037732449,
    0.4058451513773971669066064120769615,
    0.5860872354676911302941448382587296,
    0.7415311855993944398638647732807884,
    0.8648644233597690727897127886409262,
    0.9491079123427585245261896840478513,
    0.9914553711208126392068546975263285,
};
constexpr double kWK[kHalf] = {
    0.2094821410847278280129991748917143,
    0.2044329400752988924141619992346491,
    0.1903505780647854099132564024210137,
    0.1690047266392679028265834265985503,
    0.1406532597155259187451895905102379,
    0.1047900103222501838398763225415180,
    0.0630920926299785532907006631892043,
    0.0229353220105292249637320080589696,
};
constexpr double kWG[kHalf] = {
    0.4179591836734693877551020408163265,
    0.0,
    0.3818300505051189449503697754889751,
    0.0,
    0.2797053914892766679014677714237796,
    0.0,
    0.1294849661688696932706114326790820,
    0.0,
};

struct Panel {
    double a, b;
    double value, err;
};

struct PanelRule {
    double value = 0.0, err = 0.0;
    bool nonfinite = false;
};

PanelRule gk15(const Integrand& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fp[kHalf], fm[kHalf];
    fp[0] = f(c);
    fm[0] = 0.0;
    evals += 1;
    double k15 = kWK[0] * fp[0];
    double g7 = kWG[0] * fp[0];
    double resabs = kWK[0] * std::fabs(fp[0]);
    for (int i = 1; i < kHalf; ++i) {
        const double dx = h * kNode[i];
        fp[i] = f(c + dx);
        fm[i] = f(c - dx);
        evals += 2;
        k15 += kWK[i] * (fp[i] + fm[i]);
        g7 += kWG[i] * (fp[i] + fm[i]);
        resabs += kWK[i] * (std::fabs(fp[i]) + std::fabs(fm[i]));
    }
    PanelRule r;
    if (!std::isfinite(k15)) {
        r.nonfinite = true;
        return r;
    }
    const double mean = 0.5 * k15;
    double resasc = kWK[0] * std::fabs(fp[0] - mean);
    for (int i = 1; i < kHalf; ++i)
        resasc += kWK[i] * (std::fabs(fp[i] - mean) + std::fabs(fm[i] - mean));
    resasc *= h;
    r.value = k15 * h;
    double err = std::fabs((k15 - g7) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double noise = 50.0 * std::numeric_limits<double>::epsilon() * resabs * h;
    r.err = std::max(err, noise);
    return r;
}

double tol_target(const QuadConfig& cfg, double value) {
    return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
}

// Adaptive bisection driven by the largest panel error; no endpoint
// transforms at this level.
QuadResult adapt(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    QuadResult res;
    if (!(b > a)) {
        res.converged = true;
        return res;
    }
    auto worse = [](const Panel& x, const Panel& y) {
        if (x.err != y.err) return x.err < y.err;
        return x.a > y.a;  // deterministic tie-break
    };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);

    auto eval_panel = [&](double lo, double hi) -> Panel {
        PanelRule r = gk15(f, lo, hi, res.evaluations);
        if (r.nonfinite) throw std::runtime_error("quad: integrand returned a non-finite value");
        return Panel{lo, hi, r.value, r.err};
    };

    Panel first = eval_panel(a, b);
    double total_val = first.value;
    double total_err = first.err;
    heap.push(first);
    int panels = 1;
    while (total_err > tol_target(cfg, total_val) && panels < cfg.max_subdivisions) {
        Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // not splittable at double precision
        heap.pop();
        Panel left = eval_panel(worst.a, mid);
        Panel right = eval_panel(mid, worst.b);
        total_val += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        panels += 1;
    }

    // fixed-order compensated summation over position-sorted panels
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double sum = 0.0, comp = 0.0, err = 0.0;
    for (const Panel& pl : all) {
        const double y = pl.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += pl.err;
    }
    res.value = sum;
    res.abs_error = err;
    res.converged = err <= tol_target(cfg, sum);
    return res;
}

QuadResult combine(const QuadResult& x, const QuadResult& y, const QuadConfig& cfg) {
    QuadResult r;
    r.value = x.value + y.value;
    r.abs_error = x.abs_error + y.abs_error;
    r.evaluations = x.evaluations + y.evaluations;
    r.converged = (x.converged && y.converged) || r.abs_error <= tol_target(cfg, r.value);
    return r;
}

constexpr double kArgCap = 1e300;  // transformed abscissae are clamped here

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    if (b < a) throw std::invalid_argument("integrate_finite: requires a <= b");
    if (cfg.left == LeftEndpoint::integrable_singularity &&
        cfg.left_singularity_power > -1.0 && cfg.left_singularity_power < 0.0) {
        // absorb the (v-a)^s endpoint behavior: v = a + t^k, k = 1/(1+s)
        const double k = 1.0 / (1.0 + cfg.left_singularity_power);
        const double c = std::min(b, a + 1.0);
        auto g = [&](double t) {
            return t > 0.0 ? f(a + std::pow(t, k)) * k * std::pow(t, k - 1.0) : 0.0;
        };
        QuadConfig sub = cfg;
        sub.left = LeftEndpoint::regular;
        QuadResult head = adapt(g, 0.0, std::pow(c - a, 1.0 / k), sub);
        if (c >= b) return head;
        QuadResult rest = adapt(f, c, b, sub);
        return combine(head, rest, cfg);
    }
    return adapt(f, a, b, cfg);
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg) {
    const bool algebraic = cfg.tail == RightTail::algebraic_decay;
    const double rate = cfg.tail_rate > 0.0 ? cfg.tail_rate : 1.0;
    // head extends 10 decay lengths, floored at 1 only for slow decays; a
    // unit floor would hide sub-unit-scale mass inside the first panel
    const double offset = algebraic ? 10.0 : (rate > 10.0 ? 10.0 / rate : std::max(1.0, 10.0 / rate));
    const double pivot = a + offset;

    QuadResult head = integrate_finite(f, a, pivot, cfg);

    QuadConfig tail_cfg = cfg;
    tail_cfg.left = LeftEndpoint::regular;
    QuadResult tail;
    if (algebraic) {
        const double d = cfg.tail_power > 0.0 ? cfg.tail_power : 1.0;
        // t = pivot * u^{-1/d} turns a t^{-1-d} tail into a bounded integrand on (0, 1]
        auto g = [&](double u) {
            const double lt = std::log(pivot) - std::log(u) / d;
            if (lt <= 690.0) {
                const double t = std::exp(lt);
                const double fv = f(t);
                if (fv == 0.0) return 0.0;
                const double ljac = std::log(pivot / d) - (1.0 + d) / d * std::log(u);
                const double jac = std::exp(ljac);
                if (std::isfinite(jac)) return fv * jac;
                return fv > 0.0 ? std::exp(std::log(fv) + ljac)
                                : -std::exp(std::log(-fv) + ljac);
            }
            // t is past double range; by here the integrand has settled to its
            // t^{-1-d} limit, whose transformed value is the constant
            // f(te) te^{1+d} pivot^{-d} / d for any representable probe te
            const double te = kArgCap;
            const double fv = f(te);
            if (fv == 0.0) return 0.0;
            const double lg = (1.0 + d) * std::log(te) - d * std::log(pivot) - std::log(d);
            return fv > 0.0 ? std::exp(std::log(fv) + lg) : -std::exp(std::log(-fv) + lg);
        };
        tail = adapt(g, 0.0, 1.0, tail_cfg);
    } else {
        // t = pivot - ln(u)/lambda with lambda at half the declared rate, so a
        // slightly optimistic rate hint still leaves a decaying transformed
        // integrand instead of a logarithmic endpoint blow-up
        const double lambda = 0.5 * rate;
        auto g = [&](double u) {
            double t = pivot - std::log(u) / lambda;
            if (!(t < kArgCap)) t = kArgCap;
            return f(t) / (lambda * u);
        };
        tail = adapt(g, 0.0, 1.0, tail_cfg);
    }
    return combine(head, tail, cfg);
}

QuadResult integrate_double_radial(const std::function<double(double, double)>& k,
                                   const QuadConfig& cfg,
                                   const DoubleRadialOptions& opt) {
    QuadConfig inner_default = cfg;
    inner_default.rel_tol = cfg.rel_tol * 0.1;
    inner_default.abs_tol = cfg.abs_tol * 0.1;

    long inner_evals = 0;
    bool inner_ok = true;
    double worst_inner_rel = 0.0;

    auto outer_integrand = [&](double rho) {
        QuadConfig icfg = opt.inner_cfg ? (*opt.inner_cfg)(rho) : inner_default;
        QuadResult in = integrate_semi_infinite([&](double r) { return k(r, rho); },
                                                opt.inner_lo, icfg);
        inner_evals += in.evaluations;
        inner_ok = inner_ok && in.converged;
        const double rel = in.value != 0.0 ? in.abs_error / std::fabs(in.value) : 0.0;
        worst_inner_rel = std::max(worst_inner_rel, rel);
        return in.value;
    };

    QuadConfig ocfg = opt.outer_cfg;
    ocfg.rel_tol = cfg.rel_tol;
    ocfg.abs_tol = cfg.abs_tol;
    ocfg.max_subdivisions = cfg.max_subdivisions;
    QuadResult outer = integrate_semi_infinite(outer_integrand, opt.outer_lo, ocfg);

    QuadResult r;
    r.value = outer.value;
    r.evaluations = outer.evaluations + inner_evals;
    r.abs_error = outer.abs_error + worst_inner_rel * std::fabs(outer.value);
    r.converged = outer.converged && inner_ok;
    return r;
}

}  // namespace hilbert::quad
