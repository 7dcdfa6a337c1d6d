#pragma once

#include <complex>

namespace sgr {

using Complex = std::complex<double>;

/// Principal logarithm ln|w| + i Arg(w), Arg in (-pi, pi].
/// A negative real input always maps to +i*pi regardless of the sign of zero.
/// Throws DomainError for w == 0 or non-finite input.
[[nodiscard]] Complex principal_log(Complex w);

/// Square root with nonnegative real part; negative reals get the root with
/// nonnegative imaginary part.
[[nodiscard]] Complex principal_sqrt(Complex w);

[[nodiscard]] Complex cexp(Complex z);
[[nodiscard]] Complex csin(Complex z);
[[nodiscard]] Complex csinh(Complex z);

/// z^n by repeated squaring, 0 <= n <= 64.
[[nodiscard]] Complex ipow(Complex z, int n);

/// Throws DomainError if either component is NaN or infinite.
Complex require_finite(Complex w, const char* what);

}  // namespace sgr
