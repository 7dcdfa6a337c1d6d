#pragma once

#include <functional>
#include <string_view>

#include "sgradius/class_catalog.hpp"

namespace sgr {

enum class RadiusMethod { ClosedForm, Root, Oracle };

[[nodiscard]] std::string_view to_string(RadiusMethod m) noexcept;

struct RadiusResult {
    double value = 0.0;  // in (0, 1]
    RadiusMethod method = RadiusMethod::ClosedForm;
    ClassId id = ClassId::Janowski;
    ParamSet params;
    double residual = 0.0;  // |equation| at the root; 0 for closed forms
};

/// Closed-form radius for every class whose radius_kind is ClosedForm.
/// Only JANOWSKI is clamped at 1. Throws DomainError for invalid parameters,
/// WrongMethodError for root-equation classes, InternalError if a formula leaves (0, 1].
[[nodiscard]] RadiusResult closed_form_radius(ClassId id, const ParamSet& p);

/// The scalar equation whose smallest positive root is the radius
/// (PE, NEPHROID, CONVEXITY_ORDER). Increasing on (0, 1).
[[nodiscard]] std::function<double(double)> radius_equation(ClassId id, const ParamSet& p);

/// Root of radius_equation on (1e-15, 1 - 1e-15).
[[nodiscard]] RadiusResult root_radius(ClassId id, const ParamSet& p);

/// Dispatches on the class's radius kind.
[[nodiscard]] RadiusResult formula_radius(ClassId id, const ParamSet& p);

}  // namespace sgr
