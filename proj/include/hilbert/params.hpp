#pragma once

#include <stdexcept>

namespace hilbert {

// One inequality instance: dimensions, norm parameters, kernel exponent,
// conjugate exponent pair. q is always derived from p so that 1/p + 1/q = 1
// holds exactly up to rounding; it is never stored separately.
struct ProblemParams {
    int m = 1;            // dimension of the x-space
    int n = 1;            // dimension of the y-space
    double alpha = 1.0;   // l^alpha norm parameter on x
    double beta = 1.0;    // l^beta norm parameter on y
    double sigma = 2.0;   // kernel/weight exponent, > 1
    double p = 2.0;       // exponent, any real outside {0, 1}

    double q() const { return p / (p - 1.0); }

    bool forward_regime() const { return p > 1.0; }

    void validate() const {
        if (m < 1 || n < 1)
            throw std::invalid_argument("ProblemParams: dimensions must be >= 1");
        if (!(alpha > 0.0) || !(beta > 0.0))
            throw std::invalid_argument("ProblemParams: alpha, beta must be > 0");
        if (!(sigma > 1.0))
            throw std::invalid_argument("ProblemParams: sigma must be > 1");
        if (p == 0.0 || p == 1.0)
            throw std::invalid_argument("ProblemParams: p must not be 0 or 1");
    }
};

}  // namespace hilbert
