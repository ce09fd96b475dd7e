#pragma once

#include <string>
#include <vector>

#include "hilbert/params.hpp"
#include "hilbert/profiles.hpp"
#include "hilbert/quad.hpp"

namespace hilbert::sharp {

// (Tf)(y) at radius y_norm: the kernel transform of an admissible profile.
double apply_T(const verify::RadialProfile& f, double y_norm, const ProblemParams& pr,
               const quad::QuadConfig& cfg = {});

// |Tf| in the p-norm against the conjugate weight. The weight exponent is
// formed literally as (q(n+sigma)-n)(1-p), which collapses to -p sigma - n;
// numerically this route must coincide with equivalent_J.
double Tf_norm(const verify::RadialProfile& f, const ProblemParams& pr,
               const quad::QuadConfig& cfg = {});

struct SharpnessPoint {
    double eps = 0.0;
    double I_tilde = 0.0;
    double product_norms = 0.0;  // |f~|_{p,Phi} |g~|_{q,Psi}, closed form
    double ratio = 0.0;          // I~ / (K * product_norms)
    double gap = 0.0;            // 1 - ratio
    bool converged = false;
};

// Drives the extremal family toward the best constant: for each eps the
// bilinear form is evaluated through its one-dimensional reduction via the
// truncated weight, and the norm product by its closed form.
std::vector<SharpnessPoint> sharpness_sweep(const ProblemParams& pr,
                                            const std::vector<double>& eps_list,
                                            const quad::QuadConfig& cfg = {},
                                            bool parallel = true);

enum class Family { eps, exp_power };

struct OpNormEstimate {
    std::string family_id;
    double best_ratio = 0.0;
    double arg_eps = 0.0;           // eps family argmax
    double arg_a = 0.0, arg_rate = 0.0;  // exp_power family argmax
    double K_value = 0.0;
    bool converged = true;
};

// Maximizes |Tf|/|f|_{p,Phi} over the chosen family by golden-section search
// (log scale in eps). p > 1 only.
OpNormEstimate opnorm_search(const ProblemParams& pr, Family family,
                             const quad::QuadConfig& cfg = {}, double eps_min = 1e-3);

}  // namespace hilbert::sharp
