#pragma once

#include <iosfwd>
#include <vector>

#include "sgradius/complex.hpp"

namespace sgr {

/// Disk centered on the real axis.
struct Disk {
    double center = 1.0;
    double radius = 0.0;
};

/// Sampled closed curve. `params` holds the curve parameter of each point.
struct BoundaryTrace {
    std::vector<double> params;
    std::vector<Complex> points;
    bool closed = true;
};

/// The modified sigmoid 2/(1+e^{-z}). Throws DomainError at its poles.
[[nodiscard]] Complex sigmoid(Complex z);

/// |log(w/(2-w))|, the quantity the domain bounds by 1.
/// Returns +infinity at w in {0, 2} and for non-finite w.
[[nodiscard]] double sg_log_modulus(Complex w) noexcept;

/// Strict membership in {w : |log(w/(2-w))| < 1}.
[[nodiscard]] bool sg_contains(Complex w) noexcept;

/// (e-1)/(e+1) - |a-1| for 2/(1+e) < a < 2e/(1+e); DomainError otherwise.
[[nodiscard]] double lemma_radius(double a);

/// True iff the center is admissible and the radius does not exceed lemma_radius(center).
/// Inadmissible centers return false instead of throwing.
[[nodiscard]] bool disk_in_sg(const Disk& d) noexcept;

/// The boundary point of the largest admissible disk about `a` that lies on the
/// domain boundary: a + r_a on the side of the nearer real endpoint.
[[nodiscard]] double lemma_touch_point(double a);

/// Boundary of the domain as the sigmoid image of the unit circle, t = 2*pi*k/samples.
[[nodiscard]] BoundaryTrace sg_boundary(int samples);

/// Rows `t,re,im` with 17 significant digits, no header.
void write_csv(std::ostream& out, const BoundaryTrace& trace);

}  // namespace sgr
