#pragma once

namespace hilbert::kernel {

// h(v) = coth(v) - 1 = 2 / (e^{2v} - 1), evaluated stably on the whole
// positive axis: Laurent expansion below 1e-4, exact zero above 350
// (2 e^{-700} sits at the subnormal floor). Throws std::domain_error
// for v <= 0.
double coth_minus_one(double v);

// coth(v) = coth_minus_one(v) + 1, same domain contract.
double coth(double v);

}  // namespace hilbert::kernel
