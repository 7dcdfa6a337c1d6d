#pragma once

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "sgradius/class_catalog.hpp"

namespace sgr {

/// Value and angle of an extremum over a circle |z| = r. Angles lie in [0, 2*pi).
struct CircleExtremum {
    double value = 0.0;
    double angle = 0.0;
};

/// 4096, or SG_RADIUS_SAMPLES when set (integer >= 64; anything else is a DomainError).
[[nodiscard]] int default_samples();

/// Maximum of a 2*pi-periodic function: dense sampling, golden-section refinement of the
/// near-maximal local peaks, sample count doubled until the result moves by < 1e-11.
/// Ties within 1e-12 go to the smallest angle. A non-finite sample yields +infinity.
[[nodiscard]] CircleExtremum maximize_periodic(const std::function<double(double)>& g, int samples);

/// Refined local maxima of g at `samples` points whose value is within `tolerance` of
/// the global maximum, sorted by angle.
[[nodiscard]] std::vector<CircleExtremum> periodic_peaks(const std::function<double(double)>& g,
                                                         int samples, double tolerance);

/// max over |z| = r of |log(q(z)/(2 - q(z)))| for the class's extremal q.
/// +infinity when q reaches 0, 2 or a pole on the closed disk of radius r.
[[nodiscard]] CircleExtremum circle_max_h(ClassId id, const ParamSet& p, double r,
                                          int samples = default_samples());

/// min over |z| = r of Re(1 + z f0''/f0').
[[nodiscard]] CircleExtremum circle_min_convexity(double r, int samples = default_samples());

struct OracleReport {
    ClassId id = ClassId::Janowski;
    ParamSet params;
    double oracle_radius = 0.0;
    double formula_radius = 0.0;
    double abs_gap = 0.0;
    double touch_angle = 0.0;
    /// Circle maximum of |log(q/(2-q))| at min(formula_radius, 1 - 1e-9). For
    /// CONVEXITY_ORDER: circle minimum of Re(1 + z f0''/f0') at the formula radius.
    double max_modulus_at_formula_radius = 0.0;
    /// Containment held up to 1 - 1e-9, the edge of the unit disk.
    bool saturated = false;
};

/// Largest r (bracket width <= 1e-12) with q(r D) inside the domain. The search starts on
/// [1e-6, min(1 - 1e-9, 1.5 * formula_radius)] and doubles the upper end while containment
/// still holds; `saturated` means it held all the way to 1 - 1e-9.
[[nodiscard]] OracleReport oracle_radius(ClassId id, const ParamSet& p,
                                         int samples = default_samples());

/// Largest r with min over |z| = r of Re(1 + z f0''/f0') > alpha.
[[nodiscard]] OracleReport convexity_oracle(double alpha, int samples = default_samples());

/// oracle_radius, or convexity_oracle for CONVEXITY_ORDER.
[[nodiscard]] OracleReport verify_class(ClassId id, const ParamSet& p,
                                        int samples = default_samples());

enum class VerifyStatus { Pass, Fail, Flagged, Finding };

inline constexpr double kAgreementTolerance = 1e-6;

[[nodiscard]] VerifyStatus classify(const OracleReport& report,
                                    double tolerance = kAgreementTolerance) noexcept;
[[nodiscard]] std::string_view to_string(VerifyStatus s) noexcept;

using GridPoint = std::pair<ClassId, ParamSet>;

/// Parameters used when a class is verified without --grid.
[[nodiscard]] ParamSet default_params(ClassId id);

/// alpha in {0, 0.25, 0.5, 0.75 * upper bound}, beta in {1.25, 2, 5},
/// (A, B) in {(1,-1), (1,0), (0.5,-0.5), (0.5,0.25)}, n in {1, 2, 3}.
[[nodiscard]] std::vector<GridPoint> parameter_grid(ClassId id);
[[nodiscard]] std::vector<GridPoint> full_parameter_grid();

/// Runs verify_class over `points` on up to `threads` workers (0 = hardware concurrency).
/// Reports come back in input order.
[[nodiscard]] std::vector<OracleReport> verify_all(const std::vector<GridPoint>& points,
                                                   unsigned threads = 0,
                                                   int samples = default_samples());

}  // namespace sgr
