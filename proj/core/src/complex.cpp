#include "sgradius/complex.hpp"

#include <cmath>
#include <string>

#include "sgradius/errors.hpp"

namespace sgr {

namespace {

// Collapse -0 imaginary parts so the negative real axis belongs to the upper side of the cut.
Complex canonical_zero(Complex w) {
    return w.imag() == 0.0 ? Complex{w.real(), 0.0} : w;
}

}  // namespace

Complex require_finite(Complex w, const char* what) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw DomainError(std::string(what) + ": non-finite result");
    }
    return w;
}

Complex principal_log(Complex w) {
    require_finite(w, "principal_log");
    if (w == Complex{0.0, 0.0}) {
        throw DomainError("principal_log: logarithm of zero");
    }
    return std::log(canonical_zero(w));
}

Complex principal_sqrt(Complex w) {
    require_finite(w, "principal_sqrt");
    return std::sqrt(canonical_zero(w));
}

Complex cexp(Complex z) {
    return require_finite(std::exp(z), "cexp");
}

Complex csin(Complex z) {
    return require_finite(std::sin(z), "csin");
}

Complex csinh(Complex z) {
    return require_finite(std::sinh(z), "csinh");
}

Complex ipow(Complex z, int n) {
    if (n < 0 || n > 64) {
        throw DomainError("ipow: exponent must lie in [0, 64]");
    }
    Complex result{1.0, 0.0};
    Complex base = z;
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1U) {
        if ((e & 1U) != 0U) {
            result *= base;
        }
        base *= base;
    }
    return result;
}

}  // namespace sgr
