#pragma once

#include <numbers>

namespace sgr {

inline constexpr double kE = std::numbers::e;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

// Real-axis endpoints of the sigmoid domain: 2/(1+e) and 2e/(1+e).
inline constexpr double kSgLeft = 2.0 / (1.0 + kE);
inline constexpr double kSgRight = 2.0 * kE / (1.0 + kE);

// (e-1)/(e+1): radius of the largest disk about 1 inside the domain.
inline constexpr double kSgInradius = (kE - 1.0) / (kE + 1.0);

}  // namespace sgr
