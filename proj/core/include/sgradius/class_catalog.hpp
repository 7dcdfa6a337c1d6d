#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "sgradius/complex.hpp"

namespace sgr {

enum class ClassId {
    Janowski,
    StarlikeAlpha,
    BS,
    LemniscateAlpha,
    ExpAlpha,
    RL,
    CardioidC,
    RationalR,
    Crescent,
    PE,
    Nephroid,
    Sine,
    G1,
    G2,
    G3,
    G4,
    CloseToStarlike,
    WClass,
    MBeta,
    ConvexityOrder,
};

inline constexpr std::size_t kClassCount = 20;

enum class RadiusKind { ClosedForm, RootEquation };

/// Two readings of the close-to-starlike extremal denominator: (1 - z^n) or (1 - z).
/// They coincide for n = 1.
enum class CsReading { PowerN, Linear };

/// Class parameters. Each class reads only the fields it needs.
struct ParamSet {
    double A = 1.0;
    double B = -1.0;
    double alpha = 0.0;
    double beta = 2.0;
    int n = 1;
    CsReading cs_reading = CsReading::PowerN;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

/// Which ParamSet fields a class reads.
struct ParamUsage {
    bool A_B = false;
    bool alpha = false;
    bool beta = false;
    bool n = false;
};

using ExtremalFn = Complex (*)(const ParamSet&, Complex);

struct ClassSpec {
    ClassId id;
    std::string_view name;  // CLI identifier
    RadiusKind radius_kind;
    ParamUsage usage;
    ExtremalFn extremal_q;
    std::string_view touch_points;
};

/// Registry in ClassId order; every id appears exactly once.
[[nodiscard]] std::span<const ClassSpec, kClassCount> registry() noexcept;
[[nodiscard]] const ClassSpec& spec_of(ClassId id) noexcept;

[[nodiscard]] std::string_view to_string(ClassId id) noexcept;
[[nodiscard]] std::optional<ClassId> parse_class(std::string_view name) noexcept;

// Admissible-α upper bounds (exclusive).
[[nodiscard]] double alpha_upper_bound(ClassId id);

// k = sqrt(2) + 1 in the rational class.
inline constexpr double kRationalK = 2.414213562373095048801688724209698;

/// Throws DomainError when p is outside the class's parameter domain.
void validate(ClassId id, const ParamSet& p);

/// q(z) = z f'(z) / f(z) for the class's extremal function (for CONVEXITY_ORDER
/// this is the sigmoid itself). Throws DomainError at poles or for |z| >= 1.
[[nodiscard]] Complex extremal_q(ClassId id, const ParamSet& p, Complex z);

/// 1 + z f0''(z) / f0'(z) for the sigmoid extremal f0.
[[nodiscard]] Complex convexity_functional(Complex z);

/// True when the closed form for (id, p) has an unresolved reading and the oracle
/// is reported as arbiter rather than asserted against.
[[nodiscard]] bool is_ambiguous(ClassId id, const ParamSet& p) noexcept;

/// False for classes whose theorem states a radius without exhibiting an extremal.
[[nodiscard]] bool sharpness_claimed(ClassId id) noexcept;

}  // namespace sgr
