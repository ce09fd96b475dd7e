#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbert/params.hpp"
#include "hilbert/profiles.hpp"
#include "hilbert/quad.hpp"

namespace hilbert::verify {

struct NormResult {
    double value = 0.0;
    double abs_error = 0.0;
    bool finite = false;     // false: divergence marker, value is meaningless
    bool converged = false;  // quadrature state when finite
};

// |f|_{p,Phi} with Phi(x) = |x|_alpha^{p(m-sigma)-m}, by radial reduction.
// Divergence is decided from the registry's exponent windows (and reported
// as a marker), not guessed at runtime.
NormResult norm_p_phi(const RadialProfile& f, const ProblemParams& pr,
                      const quad::QuadConfig& cfg = {});

// |g|_{q,Psi} with Psi(y) = |y|_beta^{q(n+sigma)-n}.
NormResult norm_q_psi(const RadialProfile& g, const ProblemParams& pr,
                      const quad::QuadConfig& cfg = {});

// Plain l1 norm over the profile's own space.
NormResult norm_l1(const RadialProfile& f, const quad::QuadConfig& cfg = {});

// I = double integral of (coth(|x|_a/|y|_b) - 1) f g over R+^m x R+^n.
quad::QuadResult bilinear_I(const RadialProfile& f, const RadialProfile& g,
                            const ProblemParams& pr, const quad::QuadConfig& cfg = {});

// Same bilinear form with the full coth kernel (shifted-form checks).
quad::QuadResult bilinear_I_coth(const RadialProfile& f, const RadialProfile& g,
                                 const ProblemParams& pr, const quad::QuadConfig& cfg = {});

// J = { int |y|^{-p sigma - n} ( int (coth - 1) f dx )^p dy }^{1/p}.
// Power-tailed profiles route through the scaled kernel transform so the
// integrand never overflows; the general exponent version backing the
// operator-norm side lives in weighted_Tf_norm.
quad::QuadResult equivalent_J(const RadialProfile& f, const ProblemParams& pr,
                              const quad::QuadConfig& cfg = {});

// { C(n,beta) int rho^{w} (Tf)(rho)^p rho^{n-1} drho }^{1/p} for a caller-chosen
// weight exponent w; equivalent_J passes w = -p sigma - n.
NormResult weighted_Tf_norm(const RadialProfile& f, const ProblemParams& pr, double w,
                            const quad::QuadConfig& cfg = {});

// (Tf)(y_norm): the kernel transform of f at radius y_norm. Power-tailed
// profiles factor into y_norm^{t+m} times a bounded truncated-kernel moment,
// so huge radii stay representable through transform_T_log.
double transform_T(const RadialProfile& f, double y_norm, const ProblemParams& pr,
                   const quad::QuadConfig& cfg = {});
double transform_T_log(const RadialProfile& f, double y_norm, const ProblemParams& pr,
                       const quad::QuadConfig& cfg = {});

enum class Direction { forward, reverse };

struct VerifyReport {
    double I = 0.0, J = 0.0;
    double f_norm = 0.0, g_norm = 0.0;
    double bound_I = 0.0;  // K |f| |g|
    double bound_J = 0.0;  // K |f|
    double ratio = 0.0;    // I / bound_I
    Direction direction = Direction::forward;
    bool holds = false;     // both the I and J inequalities in the regime's direction
    bool converged = false;
    std::optional<double> f_l1, g_l1;
    std::string f_label, g_label;
};

// Main inequality check on one admissible pair. Throws std::invalid_argument
// when a norm precondition fails (norm zero or divergent).
VerifyReport check_main_inequality(const RadialProfile& f, const RadialProfile& g,
                            const ProblemParams& pr, const quad::QuadConfig& cfg = {});

struct ChainReport {
    double J1 = 0.0;          // the omega-weighted inner form
    double rhs = 0.0;         // varpi-constant side
    double J = 0.0;
    double ratio_J_J1 = 0.0;  // equals omega_constant^{1/q}
    Direction direction = Direction::forward;
    bool holds = false;
    bool converged = false;
};

// The intermediate inequality chain with the constant weights folded in.
ChainReport check_weighted_chain(const RadialProfile& f, const ProblemParams& pr,
                               const quad::QuadConfig& cfg = {});

struct FullKernelReport {
    double I_coth = 0.0, I = 0.0;
    double f_l1 = 0.0, g_l1 = 0.0;
    double identity_gap = 0.0;  // |I_coth - I - |f|_1 |g|_1|
    double identity_tol = 0.0;  // combined quadrature error budget
    double bound = 0.0;         // |f|_1 |g|_1 + K |f| |g|
    double J_form = 0.0;        // subtracted-kernel J-side value
    double bound_J = 0.0;       // K |f|
    double pointwise_gap = 0.0; // worst |(int coth f) - |f|_1 - (Tf)| over probe radii
    bool identity_ok = false;
    bool holds = false;    // I_coth < bound
    bool holds_J = false;  // J_form < bound_J
    bool converged = false;
};

// Full-coth-kernel forms: the additive decomposition identity plus the
// shifted inequalities. Requires finite l1 norms.
FullKernelReport check_full_kernel(const RadialProfile& f, const RadialProfile& g,
                                     const ProblemParams& pr,
                                     const quad::QuadConfig& cfg = {});

struct ProfilePair {
    RadialProfile f, g;
    std::string label;
};

// Admissible forward-battery pairs for the given parameters (exponents set
// inside the documented convergence windows).
std::vector<ProfilePair> forward_pairs(const ProblemParams& pr);

// Pairs additionally admissible for the full-kernel checks (both l1
// norms finite).
std::vector<ProfilePair> full_kernel_pairs(const ProblemParams& pr);

// Strictly positive double-power pair for the reverse regimes. Windows:
//   0 < p < 1: f = dp(sigma-m+1, sigma-m-1/2), g = dp(-n-sigma-1/2, -n-sigma+1/4)
//   p < 0:     f = dp(sigma-m-1/4, sigma-m+1), g = dp(-n-sigma+1/2, -n-sigma-5/4)
// chosen so the weighted norms, the l1-side and the bilinear form all
// converge (verified by the closed-form power integrals in the tests).
ProfilePair reverse_pair(const ProblemParams& pr);

}  // namespace hilbert::verify
