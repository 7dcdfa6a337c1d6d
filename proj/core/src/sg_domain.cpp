#include "sgradius/sg_domain.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "sgradius/constants.hpp"
#include "sgradius/errors.hpp"

namespace sgr {

Complex sigmoid(Complex z) {
    const Complex denom = 1.0 + cexp(-z);
    if (std::abs(denom) < 1e-300) {
        throw DomainError("sigmoid: pole at e^{-z} = -1");
    }
    return require_finite(2.0 / denom, "sigmoid");
}

double sg_log_modulus(Complex w) noexcept {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        return inf;
    }
    const Complex other = 2.0 - w;
    if (w == Complex{} || other == Complex{}) {
        return inf;
    }
    const Complex ratio = w / other;
    if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag()) || ratio == Complex{}) {
        return inf;
    }
    // |log u|^2 = ln|u|^2 + Arg(u)^2; Arg's sign does not matter here.
    return std::hypot(std::log(std::abs(ratio)), std::arg(ratio));
}

bool sg_contains(Complex w) noexcept {
    return sg_log_modulus(w) < 1.0;
}

double lemma_radius(double a) {
    if (!(a > kSgLeft && a < kSgRight)) {
        throw DomainError(fmt::format("lemma_radius: center {} outside (2/(1+e), 2e/(1+e))", a));
    }
    return kSgInradius - std::abs(a - 1.0);
}

bool disk_in_sg(const Disk& d) noexcept {
    if (!(d.center > kSgLeft && d.center < kSgRight) || !(d.radius >= 0.0)) {
        return false;
    }
    return d.radius <= kSgInradius - std::abs(d.center - 1.0);
}

double lemma_touch_point(double a) {
    const double r = lemma_radius(a);
    return a >= 1.0 ? a + r : a - r;
}

BoundaryTrace sg_boundary(int samples) {
    if (samples < 3) {
        throw DomainError("sg_boundary: need at least 3 samples");
    }
    BoundaryTrace trace;
    trace.closed = true;
    trace.params.reserve(static_cast<std::size_t>(samples));
    trace.points.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * kPi * k / samples;
        trace.params.push_back(t);
        trace.points.push_back(sigmoid(std::polar(1.0, t)));
    }
    return trace;
}

void write_csv(std::ostream& out, const BoundaryTrace& trace) {
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
        fmt::print(out, "{:.17g},{:.17g},{:.17g}\n", trace.params[i], trace.points[i].real(),
                   trace.points[i].imag());
    }
}

}  // namespace sgr
