#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sgradius/class_catalog.hpp"
#include "sgradius/errors.hpp"
#include "sgradius/radius_formulas.hpp"
#include "sgradius/root_solver.hpp"
#include "sgradius/sg_domain.hpp"
#include "sgradius/sharpness_oracle.hpp"

using sgr::ClassId;
using sgr::Complex;
using sgr::ParamSet;

namespace {

constexpr double e = std::numbers::e;
constexpr double pi = std::numbers::pi;

double radius(ClassId id, const ParamSet& p = {}) {
    return sgr::formula_radius(id, p).value;
}

double h(Complex w) {
    return std::abs(std::log(w / (2.0 - w)));
}

// The real-axis (or z^n real) point where each extremal image meets the boundary.
Complex touch_point(ClassId id, const ParamSet& p, double r) {
    const int n = p.n;
    switch (id) {
    case ClassId::Janowski: return p.B >= 0 ? std::polar(r, pi / n) : Complex{r, 0};
    case ClassId::LemniscateAlpha:
    case ClassId::RL: return {-r, 0};
    case ClassId::G3:
    case ClassId::G4: return std::polar(r, pi / n);
    case ClassId::MBeta: return {r, 0};
    default: return {r, 0};
    }
}

}  // namespace

TEST_CASE("quoted constants") {
    CHECK(std::abs(radius(ClassId::RL) - 0.738309) <= 5e-6);
    CHECK(std::abs(radius(ClassId::CardioidC) - 0.301221) <= 5e-6);
    CHECK(std::abs(radius(ClassId::RationalR) - 0.645131) <= 5e-6);
    CHECK(std::abs(radius(ClassId::Crescent) - 0.389089) <= 5e-6);
    CHECK(std::abs(radius(ClassId::PE) - 0.331672) <= 5e-6);
    CHECK(std::abs(radius(ClassId::Nephroid) - 0.43473) <= 5e-6);
    CHECK(std::abs(radius(ClassId::Sine) - 0.447074) <= 5e-6);
    CHECK(std::abs(radius(ClassId::ConvexityOrder) - 0.852606) <= 5e-6);
    CHECK(std::abs(radius(ClassId::Janowski) - (e - 1) / (3 * e + 1)) < 1e-15);
    CHECK(std::abs(radius(ClassId::Janowski) - 0.187692) <= 5e-6);
    CHECK(std::abs(radius(ClassId::BS) - (e - 1) / (e + 1)) < 1e-15);
}

TEST_CASE("methods and residuals") {
    const auto pe = sgr::formula_radius(ClassId::PE, {});
    CHECK(pe.method == sgr::RadiusMethod::Root);
    CHECK(pe.residual <= 1e-12);
    const auto rl = sgr::formula_radius(ClassId::RL, {});
    CHECK(rl.method == sgr::RadiusMethod::ClosedForm);
    CHECK(rl.residual == 0.0);
    CHECK(sgr::to_string(sgr::RadiusMethod::Oracle) == "oracle");
    CHECK_THROWS_AS((void)sgr::closed_form_radius(ClassId::PE, {}), sgr::WrongMethodError);
    CHECK_THROWS_AS((void)sgr::radius_equation(ClassId::RL, {}), sgr::WrongMethodError);
    CHECK_THROWS_AS((void)sgr::formula_radius(ClassId::BS, ParamSet{.alpha = 2.0}), sgr::DomainError);
}

TEST_CASE("Janowski clamp and case split") {
    CHECK(radius(ClassId::Janowski, ParamSet{.A = 0.1, .B = 0.0}) == 1.0);
    // Case (i) with B > 0: (e-1)/(A(1+e) - 2B).
    const double want = (e - 1) / (0.5 * (1 + e) - 0.5);
    CHECK(radius(ClassId::Janowski, ParamSet{.A = 0.5, .B = 0.25}) == doctest::Approx(std::min(1.0, want)));
    CHECK(radius(ClassId::Janowski, ParamSet{.A = 0.5, .B = -0.5, .n = 2}) ==
          doctest::Approx(std::sqrt((e - 1) / (0.5 * (1 + e) + e))).epsilon(1e-14));
}

TEST_CASE("G4(1) and W(1) solve the same quadratic") {
    const double root = sgr::solve_bracketed(
        [](double r) { return (e - 1) * r * r + 2 * (e + 1) * r - (e - 1); }, 0.0, 1.0);
    CHECK(std::abs(radius(ClassId::G4) - root) < 1e-13);
    CHECK(std::abs(radius(ClassId::WClass) - root) < 1e-13);
}

TEST_CASE("G1 matches its quartic majorant") {
    // h(1 + 4r/(1-r^2)) = 1 at the radius.
    const double r = radius(ClassId::G1);
    CHECK(std::abs(h({1 + 4 * r / (1 - r * r), 0}) - 1.0) < 1e-10);
    CHECK(r == doctest::Approx(0.1140272).epsilon(1e-6));
}

TEST_CASE("property: extremal images touch the boundary at the formula radius") {
    const ClassId ids[] = {ClassId::Janowski,        ClassId::StarlikeAlpha, ClassId::BS,
                           ClassId::LemniscateAlpha, ClassId::ExpAlpha,      ClassId::RL,
                           ClassId::CardioidC,       ClassId::RationalR,     ClassId::Crescent,
                           ClassId::PE,              ClassId::G1,            ClassId::G2,
                           ClassId::G3,              ClassId::G4,            ClassId::WClass};
    for (const ClassId id : ids) {
        for (const auto& [gid, p] : sgr::parameter_grid(id)) {
            const double r = radius(id, p);
            if (r >= 1.0) {
                continue;  // clamped Janowski rows
            }
            INFO(sgr::to_string(id), " n=", p.n, " alpha=", p.alpha, " A=", p.A, " B=", p.B);
            const Complex q = sgr::extremal_q(id, p, touch_point(id, p, r));
            REQUIRE(std::abs(h(q) - 1.0) < 1e-10);
        }
    }
    // Close-to-starlike at n = 1, where the printed form is exact.
    for (const double a : {0.0, 0.25, 0.5, 0.75}) {
        const ParamSet p{.alpha = a, .n = 1};
        const double r = radius(ClassId::CloseToStarlike, p);
        CHECK(std::abs(h(sgr::extremal_q(ClassId::CloseToStarlike, p, {r, 0})) - 1.0) < 1e-10);
    }
}

TEST_CASE("degenerate parameters") {
    CHECK(std::abs(radius(ClassId::LemniscateAlpha) - (e - 1) * (3 + e) / ((1 + e) * (1 + e))) < 1e-12);
    CHECK(std::abs(radius(ClassId::ExpAlpha) - std::log(2 * e / (1 + e))) < 1e-12);
    CHECK(std::abs(radius(ClassId::StarlikeAlpha) - (e - 1) / (3 * e + 1)) < 1e-12);
    for (const double a : {0.0, 0.1, 0.3, 0.6, 0.9}) {
        const auto s = sgr::closed_form_radius(ClassId::StarlikeAlpha, ParamSet{.alpha = a});
        const auto j = sgr::closed_form_radius(ClassId::Janowski, ParamSet{.A = 1 - 2 * a, .B = -1});
        CHECK(s.value == j.value);
    }
    for (int n = 1; n <= 8; ++n) {
        CHECK(radius(ClassId::G2, ParamSet{.n = n}) == radius(ClassId::G3, ParamSet{.n = n}));
    }
    // Endpoint limits.
    CHECK(radius(ClassId::LemniscateAlpha, ParamSet{.alpha = std::nextafter(2 / (1 + e), 0.0)}) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS((void)radius(ClassId::LemniscateAlpha, ParamSet{.alpha = 0.6}), sgr::DomainError);
    CHECK(radius(ClassId::ExpAlpha, ParamSet{.alpha = e / (1 + e) - 1e-12}) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(radius(ClassId::BS, ParamSet{.alpha = 0.999}) < radius(ClassId::BS));
}

TEST_CASE("property: r^n decreases with n") {
    const ClassId ids[] = {ClassId::G1, ClassId::G2, ClassId::G3, ClassId::G4, ClassId::WClass};
    for (const ClassId id : ids) {
        double previous = 1.0;
        for (int n = 1; n <= 8; ++n) {
            const double r = radius(id, ParamSet{.n = n});
            INFO(sgr::to_string(id), " n=", n);
            REQUIRE(r > 0.0);
            REQUIRE(r <= 1.0);
            REQUIRE(std::pow(r, n) < previous);
            previous = std::pow(r, n);
        }
    }
}

TEST_CASE("convexity equation") {
    for (const double a : {0.0, 0.25, 0.5, 0.75}) {
        const auto r = sgr::formula_radius(ClassId::ConvexityOrder, ParamSet{.alpha = a});
        CHECK(std::abs(std::exp(r.value) * (r.value + a) - 2 + a) < 1e-12);
        // Minimum of the functional on the negative axis equals alpha there.
        CHECK(std::abs(sgr::convexity_functional({-r.value, 0}).real() - a) < 1e-12);
    }
}
