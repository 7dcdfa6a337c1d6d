#include "sgradius/class_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "sgradius/constants.hpp"
#include "sgradius/errors.hpp"
#include "sgradius/sg_domain.hpp"

namespace sgr {

namespace {

Complex divide(Complex num, Complex den, const char* who) {
    if (den == Complex{}) {
        throw DomainError(fmt::format("{}: pole", who));
    }
    return require_finite(num / den, who);
}

Complex q_janowski(const ParamSet& p, Complex z) {
    const Complex w = ipow(z, p.n);
    return divide(1.0 + p.A * w, 1.0 + p.B * w, "janowski");
}

Complex q_starlike_alpha(const ParamSet& p, Complex z) {
    return divide(1.0 + (1.0 - 2.0 * p.alpha) * z, 1.0 - z, "starlike-alpha");
}

Complex q_bs(const ParamSet& p, Complex z) {
    return 1.0 + divide(z, 1.0 - p.alpha * z * z, "bs");
}

Complex q_lemniscate_alpha(const ParamSet& p, Complex z) {
    return p.alpha + (1.0 - p.alpha) * principal_sqrt(1.0 + z);
}

Complex q_exp_alpha(const ParamSet& p, Complex z) {
    return p.alpha + (1.0 - p.alpha) * cexp(z);
}

Complex q_rl(const ParamSet&, Complex z) {
    const double c = kSqrt2 - 1.0;
    const Complex ratio = divide(1.0 - z, 1.0 + 2.0 * c * z, "rl");
    return kSqrt2 - c * principal_sqrt(ratio);
}

Complex q_cardioid(const ParamSet&, Complex z) {
    return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0;
}

Complex q_rational(const ParamSet&, Complex z) {
    constexpr double k = kRationalK;
    return 1.0 + divide(z * (k + z), k * (k - z), "rational");
}

Complex q_crescent(const ParamSet&, Complex z) {
    return z + principal_sqrt(1.0 + z * z);
}

Complex q_pe(const ParamSet&, Complex z) {
    return 1.0 + z * cexp(z);
}

Complex q_nephroid(const ParamSet&, Complex z) {
    return 1.0 + z - z * z * z / 3.0;
}

Complex q_sine(const ParamSet&, Complex z) {
    return 1.0 + csin(z);
}

Complex q_g1(const ParamSet& p, Complex z) {
    const Complex w = ipow(z, p.n);
    return 1.0 + divide(4.0 * p.n * w, 1.0 - w * w, "g1");
}

Complex q_g2(const ParamSet& p, Complex z) {
    const Complex w = ipow(z, p.n);
    const double n = p.n;
    return divide(1.0 + 3.0 * n * w + (n - 1.0) * w * w, 1.0 - w * w, "g2");
}

// f3 = z(1+z^n)^2/(1-z^n)
Complex q_g3(const ParamSet& p, Complex z) {
    const Complex w = ipow(z, p.n);
    const double n = p.n;
    return 1.0 + divide(2.0 * n * w, 1.0 + w, "g3") + divide(n * w, 1.0 - w, "g3");
}

// f4 = z(1+z^n)/(1-z^n)^{1/n}
Complex q_g4(const ParamSet& p, Complex z) {
    const Complex w = ipow(z, p.n);
    const double n = p.n;
    return 1.0 + divide(n * w, 1.0 + w, "g4") + divide(w, 1.0 - w, "g4");
}

// f = z(1+z^n)/(1-z^n)^{(n+2-2a)/n}, or with (1-z) in the denominator.
Complex q_close_to_starlike(const ParamSet& p, Complex z) {
    const Complex w = ipow(z, p.n);
    const double n = p.n;
    const double e = n + 2.0 - 2.0 * p.alpha;
    const Complex head = 1.0 + divide(n * w, 1.0 + w, "close-to-starlike");
    if (p.cs_reading == CsReading::PowerN) {
        return head + divide(e * w, 1.0 - w, "close-to-starlike");
    }
    return head + divide((e / n) * z, 1.0 - z, "close-to-starlike");
}

// f_w = z(1+z^n)/(1-z^n)
Complex q_w(const ParamSet& p, Complex z) {
    const Complex w = ipow(z, p.n);
    return 1.0 + divide(2.0 * p.n * w, 1.0 - w * w, "w");
}

// f = z(1-z^n)^{2(beta-1)/n}
Complex q_m_beta(const ParamSet& p, Complex z) {
    const Complex w = ipow(z, p.n);
    return 1.0 - divide(2.0 * (p.beta - 1.0) * w, 1.0 - w, "m-beta");
}

Complex q_convexity(const ParamSet&, Complex z) {
    return sigmoid(z);
}

constexpr ParamUsage kNone{};
constexpr ParamUsage kAlpha{.alpha = true};
constexpr ParamUsage kN{.n = true};

constexpr std::array<ClassSpec, kClassCount> kRegistry{{
    {ClassId::Janowski, "janowski", RadiusKind::ClosedForm, {.A_B = true, .n = true}, q_janowski,
     "z^n = r^n on the real axis: left endpoint for B > 0, right endpoint for B < 0"},
    {ClassId::StarlikeAlpha, "starlike-alpha", RadiusKind::ClosedForm, kAlpha, q_starlike_alpha,
     "z = r, right endpoint"},
    {ClassId::BS, "bs", RadiusKind::ClosedForm, kAlpha, q_bs, "z = +r and z = -r"},
    {ClassId::LemniscateAlpha, "lemniscate-alpha", RadiusKind::ClosedForm, kAlpha,
     q_lemniscate_alpha, "z = -r, left endpoint"},
    {ClassId::ExpAlpha, "exp-alpha", RadiusKind::ClosedForm, kAlpha, q_exp_alpha,
     "z = r, right endpoint"},
    {ClassId::RL, "rl", RadiusKind::ClosedForm, kNone, q_rl, "z = -r, left endpoint"},
    {ClassId::CardioidC, "cardioid", RadiusKind::ClosedForm, kNone, q_cardioid,
     "z = r, right endpoint"},
    {ClassId::RationalR, "rational", RadiusKind::ClosedForm, kNone, q_rational,
     "z = r, right endpoint"},
    {ClassId::Crescent, "crescent", RadiusKind::ClosedForm, kNone, q_crescent,
     "z = r, right endpoint"},
    {ClassId::PE, "pe", RadiusKind::RootEquation, kNone, q_pe, "z = r, right endpoint"},
    {ClassId::Nephroid, "nephroid", RadiusKind::RootEquation, kNone, q_nephroid,
     "no extremal stated"},
    {ClassId::Sine, "sine", RadiusKind::ClosedForm, kNone, q_sine, "no extremal stated"},
    {ClassId::G1, "g1", RadiusKind::ClosedForm, kN, q_g1, "z^n = +r^n and z^n = -r^n"},
    {ClassId::G2, "g2", RadiusKind::ClosedForm, kN, q_g2, "z^n = r^n, right endpoint"},
    {ClassId::G3, "g3", RadiusKind::ClosedForm, kN, q_g3, "z^n = -r^n, left endpoint"},
    {ClassId::G4, "g4", RadiusKind::ClosedForm, kN, q_g4,
     "z^n = -r^n, left endpoint (both signs when n = 1)"},
    {ClassId::CloseToStarlike, "close-to-starlike", RadiusKind::ClosedForm,
     {.alpha = true, .n = true}, q_close_to_starlike, "z^n = r^n, right endpoint"},
    {ClassId::WClass, "w", RadiusKind::ClosedForm, kN, q_w, "z^n = +r^n and z^n = -r^n"},
    {ClassId::MBeta, "m-beta", RadiusKind::ClosedForm, {.beta = true, .n = true}, q_m_beta,
     "z^n = r^n, left endpoint"},
    {ClassId::ConvexityOrder, "convexity-order", RadiusKind::RootEquation, kAlpha, q_convexity,
     "minimum of Re(1 + z f0''/f0') at z = -r"},
}};

static_assert([] {
    for (std::size_t i = 0; i < kRegistry.size(); ++i) {
        if (static_cast<std::size_t>(kRegistry[i].id) != i) {
            return false;
        }
    }
    return true;
}());

void require(bool ok, ClassId id, const std::string& what) {
    if (!ok) {
        throw DomainError(fmt::format("{}: {}", to_string(id), what));
    }
}

}  // namespace

std::span<const ClassSpec, kClassCount> registry() noexcept {
    return kRegistry;
}

const ClassSpec& spec_of(ClassId id) noexcept {
    return kRegistry[static_cast<std::size_t>(id)];
}

std::string_view to_string(ClassId id) noexcept {
    return spec_of(id).name;
}

std::optional<ClassId> parse_class(std::string_view name) noexcept {
    const auto it = std::find_if(kRegistry.begin(), kRegistry.end(),
                                 [&](const ClassSpec& s) { return s.name == name; });
    if (it == kRegistry.end()) {
        return std::nullopt;
    }
    return it->id;
}

double alpha_upper_bound(ClassId id) {
    switch (id) {
    case ClassId::StarlikeAlpha:
    case ClassId::BS:
    case ClassId::CloseToStarlike:
    case ClassId::ConvexityOrder:
        return 1.0;
    case ClassId::LemniscateAlpha:
        // Beyond 2/(1+e) the bound (1-a)(1-sqrt(1-r)) never reaches (e-1)/(e+1)
        // and the closed form no longer gives the radius.
        return kSgLeft;
    case ClassId::ExpAlpha:
        return kE / (1.0 + kE);
    default:
        throw DomainError(fmt::format("{}: class has no alpha parameter", to_string(id)));
    }
}

void validate(ClassId id, const ParamSet& p) {
    const ParamUsage u = spec_of(id).usage;
    if (u.n) {
        require(p.n >= 1 && p.n <= 64, id, fmt::format("n = {} outside [1, 64]", p.n));
    }
    if (u.A_B) {
        require(std::isfinite(p.A) && std::isfinite(p.B), id, "A and B must be finite");
        require(-1.0 <= p.B && p.B < p.A && p.A <= 1.0, id,
                fmt::format("need -1 <= B < A <= 1, got A = {}, B = {}", p.A, p.B));
    }
    if (u.alpha) {
        const double hi = alpha_upper_bound(id);
        require(p.alpha >= 0.0 && p.alpha < hi, id,
                fmt::format("alpha = {} outside [0, {:.17g})", p.alpha, hi));
    }
    if (u.beta) {
        require(std::isfinite(p.beta) && p.beta > 1.0, id,
                fmt::format("beta = {} must exceed 1", p.beta));
    }
}

Complex extremal_q(ClassId id, const ParamSet& p, Complex z) {
    require_finite(z, "extremal_q");
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("extremal_q: z must lie in the open unit disk");
    }
    return require_finite(spec_of(id).extremal_q(p, z), "extremal_q");
}

Complex convexity_functional(Complex z) {
    const Complex ez = cexp(-z);
    return sigmoid(z) + divide(z * ez, 1.0 + ez, "convexity_functional");
}

bool is_ambiguous(ClassId id, const ParamSet& p) noexcept {
    return id == ClassId::MBeta || (id == ClassId::CloseToStarlike && p.n > 1);
}

bool sharpness_claimed(ClassId id) noexcept {
    return id != ClassId::Nephroid && id != ClassId::Sine;
}

}  // namespace sgr
