#pragma once

#include <string>

#include "sgradius/radius_formulas.hpp"
#include "sgradius/sharpness_oracle.hpp"

namespace sgr {

/// Number with 17 significant digits (`%.17g`); non-finite values become null.
[[nodiscard]] std::string json_number(double x);

/// JSON object holding only the parameters the class reads.
[[nodiscard]] std::string params_json(ClassId id, const ParamSet& p);

/// Short human label such as `A=1 B=-1 n=1`, or `-` for parameter-free classes.
[[nodiscard]] std::string params_label(ClassId id, const ParamSet& p);

/// {"class", "params", "value", "method", "residual"}
[[nodiscard]] std::string to_json(const RadiusResult& r);

/// {"class", "params", "oracle_radius", "formula_radius", "abs_gap", "touch_angle",
///  "max_modulus_at_formula_radius", "saturated", "status"}
[[nodiscard]] std::string to_json(const OracleReport& r, double tolerance = kAgreementTolerance);

}  // namespace sgr
