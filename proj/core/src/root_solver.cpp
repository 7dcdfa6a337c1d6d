#include "sgradius/root_solver.hpp"

#include <cmath>

#include <fmt/format.h>

#include "sgradius/errors.hpp"

namespace sgr {

double solve_bracketed(const std::function<double(double)>& fn, double lo, double hi,
                       const RootTolerance& tol) {
    if (!(lo < hi)) {
        throw BracketError(fmt::format("solve_bracketed: empty bracket [{}, {}]", lo, hi));
    }
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if (!std::isfinite(flo) || !std::isfinite(fhi) || std::signbit(flo) == std::signbit(fhi)) {
        throw BracketError(
            fmt::format("solve_bracketed: no sign change on [{}, {}] (f = {}, {})", lo, hi, flo, fhi));
    }

    for (int it = 0; it < tol.max_iterations; ++it) {
        const double best = std::min(std::abs(flo), std::abs(fhi));
        if (hi - lo <= tol.width && best <= tol.residual) {
            break;
        }
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;  // adjacent doubles
        }
        double x = mid;
        if (it % 2 == 0) {
            const double secant = hi - fhi * (hi - lo) / (fhi - flo);
            if (std::isfinite(secant) && secant > lo && secant < hi) {
                x = secant;
            }
        }
        const double fx = fn(x);
        if (fx == 0.0) {
            return x;
        }
        if (std::signbit(fx) == std::signbit(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

}  // namespace sgr
