#pragma once

#include <functional>

namespace sgr {

struct RootTolerance {
    double width = 1e-14;     // final bracket width
    double residual = 1e-12;  // |fn(root)|
    int max_iterations = 400;
};

/// Root of a continuous fn on [lo, hi] with fn(lo) * fn(hi) < 0.
///
/// Alternates secant and bisection steps, so the bracket at least halves every
/// two iterations. A secant iterate that falls outside the open bracket is
/// replaced by the midpoint. Iteration stops once the bracket is narrower than
/// `tol.width` and the better endpoint meets `tol.residual`, or when the bracket
/// can no longer shrink in double precision. Returns the endpoint with the
/// smaller |fn|. Throws BracketError without a sign change.
[[nodiscard]] double solve_bracketed(const std::function<double(double)>& fn, double lo, double hi,
                                     const RootTolerance& tol = {});

}  // namespace sgr
