#include "hilbert/profiles.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hilbert::verify {

double RadialProfile::eval(double r) const {
    if (!(r > 0.0)) return 0.0;
    double v = 0.0;
    switch (kind) {
        case ProfileKind::truncated_power:
            return r >= knee ? amplitude * std::pow(r, a) : 0.0;
        case ProfileKind::double_power:
            if (r <= knee) return amplitude * std::pow(r, a);
            v = std::pow(knee, a - a_outer) * std::pow(r, a_outer);
            break;
        case ProfileKind::exp_power:
            v = std::pow(r, a) * std::exp(-rate * r);
            break;
        case ProfileKind::eps_family_f:
            return r >= 1.0 ? amplitude * std::pow(r, sigma - eps / conj - dim) : 0.0;
        case ProfileKind::eps_family_g:
            return r >= 1.0 ? amplitude * std::pow(r, -sigma - eps / conj - dim) : 0.0;
    }
    // the factored forms can hit inf * 0 far out in the tails
    if (!std::isfinite(v)) return std::exp(log_eval(r));
    return amplitude * v;
}

double RadialProfile::log_eval(double r) const {
    constexpr double kMinusInf = -std::numeric_limits<double>::infinity();
    if (!(r > 0.0) || !(amplitude > 0.0)) return kMinusInf;
    const double la = std::log(amplitude);
    const double lr = std::log(r);
    switch (kind) {
        case ProfileKind::truncated_power:
            return r >= knee ? la + a * lr : kMinusInf;
        case ProfileKind::double_power:
            if (r <= knee) return la + a * lr;
            return la + (a - a_outer) * std::log(knee) + a_outer * lr;
        case ProfileKind::exp_power:
            return la + a * lr - rate * r;
        case ProfileKind::eps_family_f:
            return r >= 1.0 ? la + (sigma - eps / conj - dim) * lr : kMinusInf;
        case ProfileKind::eps_family_g:
            return r >= 1.0 ? la + (-sigma - eps / conj - dim) * lr : kMinusInf;
    }
    return kMinusInf;
}

double RadialProfile::support_lo() const {
    switch (kind) {
        case ProfileKind::truncated_power: return knee;
        case ProfileKind::eps_family_f:
        case ProfileKind::eps_family_g: return 1.0;
        default: return 0.0;
    }
}

double RadialProfile::origin_power() const {
    switch (kind) {
        case ProfileKind::double_power:
        case ProfileKind::exp_power: return a;
        default: return 0.0;  // not supported at the origin
    }
}

bool RadialProfile::exponential_tail() const { return kind == ProfileKind::exp_power; }

double RadialProfile::tail_power() const {
    switch (kind) {
        case ProfileKind::truncated_power: return a;
        case ProfileKind::double_power: return a_outer;
        case ProfileKind::exp_power: return a;
        case ProfileKind::eps_family_f: return sigma - eps / conj - dim;
        case ProfileKind::eps_family_g: return -sigma - eps / conj - dim;
    }
    return 0.0;
}

double RadialProfile::tail_rate() const { return exponential_tail() ? rate : 0.0; }

bool RadialProfile::strictly_positive() const {
    return (kind == ProfileKind::double_power || kind == ProfileKind::exp_power) &&
           amplitude > 0.0;
}

std::string RadialProfile::label() const {
    std::ostringstream os;
    switch (kind) {
        case ProfileKind::truncated_power:
            os << "truncated_power(a=" << a << ",cut=" << knee << ")";
            break;
        case ProfileKind::double_power:
            os << "double_power(" << a << "," << a_outer << ",knee=" << knee << ")";
            break;
        case ProfileKind::exp_power:
            os << "exp_power(a=" << a << ",rate=" << rate << ")";
            break;
        case ProfileKind::eps_family_f:
            os << "eps_family_f(eps=" << eps << ")";
            break;
        case ProfileKind::eps_family_g:
            os << "eps_family_g(eps=" << eps << ")";
            break;
    }
    if (amplitude != 1.0) os << "*" << amplitude;
    return os.str();
}

RadialProfile truncated_power(int dim, double gamma, double a, double cut) {
    RadialProfile f;
    f.kind = ProfileKind::truncated_power;
    f.dim = dim;
    f.norm_param = gamma;
    f.a = a;
    f.knee = cut;
    if (!(cut > 0.0)) throw std::invalid_argument("truncated_power: cut must be > 0");
    return f;
}

RadialProfile double_power(int dim, double gamma, double a_inner, double a_outer, double knee) {
    RadialProfile f;
    f.kind = ProfileKind::double_power;
    f.dim = dim;
    f.norm_param = gamma;
    f.a = a_inner;
    f.a_outer = a_outer;
    f.knee = knee;
    if (!(knee > 0.0)) throw std::invalid_argument("double_power: knee must be > 0");
    return f;
}

RadialProfile exp_power(int dim, double gamma, double a, double rate) {
    RadialProfile f;
    f.kind = ProfileKind::exp_power;
    f.dim = dim;
    f.norm_param = gamma;
    f.a = a;
    f.rate = rate;
    if (!(rate > 0.0)) throw std::invalid_argument("exp_power: rate must be > 0");
    return f;
}

namespace {
void check_eps(const ProblemParams& pr, double eps) {
    if (!(eps > 0.0) || !(eps < pr.p * (pr.sigma - 1.0)))
        throw std::invalid_argument("eps family: requires 0 < eps < p (sigma - 1)");
}
}  // namespace

RadialProfile eps_family_f(const ProblemParams& pr, double eps) {
    check_eps(pr, eps);
    RadialProfile f;
    f.kind = ProfileKind::eps_family_f;
    f.dim = pr.m;
    f.norm_param = pr.alpha;
    f.sigma = pr.sigma;
    f.eps = eps;
    f.conj = pr.p;
    return f;
}

RadialProfile eps_family_g(const ProblemParams& pr, double eps) {
    check_eps(pr, eps);
    RadialProfile g;
    g.kind = ProfileKind::eps_family_g;
    g.dim = pr.n;
    g.norm_param = pr.beta;
    g.sigma = pr.sigma;
    g.eps = eps;
    g.conj = pr.q();
    return g;
}

RadialProfile dilate(const RadialProfile& f, double c, double amp) {
    if (!(c > 0.0)) throw std::invalid_argument("dilate: scale must be > 0");
    RadialProfile d = f;
    switch (f.kind) {
        case ProfileKind::truncated_power:
        case ProfileKind::double_power:
            // amp * (r/c)^a pieces: fold c^-a into the amplitude, scale the knee
            d.amplitude = amp * f.amplitude * std::pow(c, -f.a);
            if (f.kind == ProfileKind::double_power) {
                // outer piece rescales consistently because continuity at the
                // knee is restored with the scaled knee
                d.knee = f.knee * c;
            } else {
                d.knee = f.knee * c;
            }
            break;
        case ProfileKind::exp_power:
            d.amplitude = amp * f.amplitude * std::pow(c, -f.a);
            d.rate = f.rate / c;
            break;
        default:
            throw std::invalid_argument("dilate: eps-family profiles have a fixed cut");
    }
    return d;
}

}  // namespace hilbert::verify
