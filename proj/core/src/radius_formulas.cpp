#include "sgradius/radius_formulas.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "sgradius/constants.hpp"
#include "sgradius/errors.hpp"
#include "sgradius/root_solver.hpp"

namespace sgr {

namespace {

constexpr double e = kE;

double nth_root(double x, int n) {
    return n == 1 ? x : std::pow(x, 1.0 / n);
}

double janowski(double A, double B, int n) {
    // B = 0 belongs to the first case; both expressions coincide there.
    const double base = B >= 0.0 ? (e - 1.0) / (A * (1.0 + e) - 2.0 * B)
                                 : (e - 1.0) / (A * (1.0 + e) - 2.0 * B * e);
    return std::min(1.0, nth_root(base, n));
}

// Shared by G2 and G3: the two radii are the same expression.
double g2_g3(int n) {
    const double k = 3.0 * n * (e + 1.0);
    const double disc = k * k + 4.0 * (e - 1.0) * (n * (e + 1.0) + (e - 1.0));
    return nth_root(2.0 * (e - 1.0) / (k + std::sqrt(disc)), n);
}

double evaluate_closed_form(ClassId id, const ParamSet& p) {
    const double a = p.alpha;
    const int n = p.n;
    switch (id) {
    case ClassId::Janowski:
        return janowski(p.A, p.B, n);
    case ClassId::StarlikeAlpha:
        // S*(a) = S*[1-2a, -1]: (e-1)/(1+3e-2a(1+e)).
        return janowski(1.0 - 2.0 * a, -1.0, 1);
    case ClassId::BS:
        return 2.0 * (e - 1.0) /
               ((1.0 + e) + std::sqrt((1.0 + e) * (1.0 + e) + 4.0 * a * (e - 1.0) * (e - 1.0)));
    case ClassId::LemniscateAlpha:
        return (e - 1.0) * (3.0 + e - 2.0 * a * (1.0 + e)) /
               ((1.0 - a) * (1.0 - a) * (1.0 + e) * (1.0 + e));
    case ClassId::ExpAlpha:
        return std::log((2.0 * e - a * (1.0 + e)) / ((1.0 + e) * (1.0 - a)));
    case ClassId::RL:
        return (4.0 * kSqrt2 - 7.0 * e - 5.0) * (e - 1.0) /
               (32.0 * kSqrt2 - 7.0 * e * e + 6.0 * e * (4.0 * kSqrt2 - 5.0) - 47.0);
    case ClassId::CardioidC:
        return -1.0 + std::sqrt((-1.0 + 5.0 * e) / (2.0 + 2.0 * e));
    case ClassId::RationalR:
        return (std::sqrt((2.0 * kSqrt2 + 3.0) * (2.0 * e * e - 1.0)) - (kSqrt2 + 1.0) * e) /
               (1.0 + e);
    case ClassId::Crescent:
        return (-1.0 - 2.0 * e + 3.0 * e * e) / (4.0 * e + 4.0 * e * e);
    case ClassId::Sine:
        return std::log((std::sqrt(2.0 * (1.0 + e * e)) + e - 1.0) / (1.0 + e));
    case ClassId::G1: {
        const double k = 2.0 * n * (1.0 + e);
        return nth_root((e - 1.0) / (k + std::sqrt(k * k + (e - 1.0) * (e - 1.0))), n);
    }
    case ClassId::G2:
    case ClassId::G3:
        return g2_g3(n);
    case ClassId::G4: {
        const double k = (n + 1.0) * (1.0 + e);
        const double disc = k * k + 4.0 * (e - 1.0) * ((e + 1.0) * n - 2.0);
        return nth_root(2.0 * (e - 1.0) / (k + std::sqrt(disc)), n);
    }
    case ClassId::CloseToStarlike: {
        // Printed without an n-th root; exact for n = 1, flagged otherwise.
        const double m = 1.0 + n - a;
        const double disc =
            (e + 1.0) * (e + 1.0) * m * m + (e - 1.0) * ((1.0 - 2.0 * a) * (e + 1.0) + 2.0 * e);
        return (e - 1.0) / ((1.0 + e) * m + std::sqrt(disc));
    }
    case ClassId::WClass: {
        const double k = n * (e + 1.0);
        return nth_root((e - 1.0) / (std::sqrt(k * k + (e - 1.0) * (e - 1.0)) + k), n);
    }
    case ClassId::MBeta:
        // Literal reading (e-1) + (e+1)*beta - 1 of the printed denominator.
        return nth_root((e - 1.0) / ((e - 1.0) + (e + 1.0) * p.beta - 1.0), n);
    case ClassId::PE:
    case ClassId::Nephroid:
    case ClassId::ConvexityOrder:
        break;
    }
    throw WrongMethodError(fmt::format("{}: radius is a root of an equation", to_string(id)));
}

}  // namespace

std::string_view to_string(RadiusMethod m) noexcept {
    switch (m) {
    case RadiusMethod::ClosedForm:
        return "closed-form";
    case RadiusMethod::Root:
        return "root";
    case RadiusMethod::Oracle:
        return "oracle";
    }
    return "unknown";
}

RadiusResult closed_form_radius(ClassId id, const ParamSet& p) {
    if (spec_of(id).radius_kind != RadiusKind::ClosedForm) {
        throw WrongMethodError(fmt::format("{}: radius is a root of an equation", to_string(id)));
    }
    validate(id, p);
    const double value = evaluate_closed_form(id, p);
    if (!(value > 0.0 && value <= 1.0)) {
        throw InternalError(fmt::format("{}: closed form gave {:.17g}, outside (0, 1]",
                                        to_string(id), value));
    }
    return {value, RadiusMethod::ClosedForm, id, p, 0.0};
}

std::function<double(double)> radius_equation(ClassId id, const ParamSet& p) {
    switch (id) {
    case ClassId::PE:
        return [](double r) { return (e + 1.0) * r * std::exp(r) - (e - 1.0); };
    case ClassId::Nephroid:
        return [](double r) { return (e + 1.0) * (3.0 * r + r * r * r) - 3.0 * (e - 1.0); };
    case ClassId::ConvexityOrder:
        return [a = p.alpha](double r) { return std::exp(r) * (r + a) - 2.0 + a; };
    default:
        throw WrongMethodError(fmt::format("{}: radius has a closed form", to_string(id)));
    }
}

RadiusResult root_radius(ClassId id, const ParamSet& p) {
    const auto fn = radius_equation(id, p);
    validate(id, p);
    const double root = solve_bracketed(fn, 1e-15, 1.0 - 1e-15);
    const double residual = std::abs(fn(root));
    if (residual > 1e-12) {
        throw InternalError(
            fmt::format("{}: root residual {:.3g} exceeds 1e-12", to_string(id), residual));
    }
    return {root, RadiusMethod::Root, id, p, residual};
}

RadiusResult formula_radius(ClassId id, const ParamSet& p) {
    return spec_of(id).radius_kind == RadiusKind::ClosedForm ? closed_form_radius(id, p)
                                                             : root_radius(id, p);
}

}  // namespace sgr
