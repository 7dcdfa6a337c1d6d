#include "sgradius/sharpness_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <string_view>
#include <thread>

#include <fmt/format.h>

#include "sgradius/constants.hpp"
#include "sgradius/errors.hpp"
#include "sgradius/radius_formulas.hpp"
#include "sgradius/sg_domain.hpp"

namespace sgr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kGolden = 1.6180339887498948482;
constexpr double kTieTolerance = 1e-12;
constexpr double kConvergence = 1e-11;
constexpr int kMaxDoublings = 4;
constexpr std::size_t kMaxCandidates = 8;
constexpr double kUnitCap = 1.0 - 1e-9;

double normalize_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) {
        t += kTwoPi;
    }
    return t >= kTwoPi ? 0.0 : t;
}

double safe_eval(const std::function<double(double)>& g, double t) {
    const double v = g(t);
    return std::isnan(v) ? kInf : v;
}

// Golden-section maximization of g on [a, b]; returns the best point seen.
CircleExtremum golden_max(const std::function<double(double)>& g, double a, double b) {
    double c = b - (b - a) / kGolden;
    double d = a + (b - a) / kGolden;
    double fc = safe_eval(g, c);
    double fd = safe_eval(g, d);
    for (int i = 0; i < 64 && (b - a) > 1e-13; ++i) {
        if (!std::isfinite(fc) || !std::isfinite(fd)) {
            break;
        }
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) / kGolden;
            fc = safe_eval(g, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) / kGolden;
            fd = safe_eval(g, d);
        }
    }
    return fc > fd ? CircleExtremum{fc, c} : CircleExtremum{fd, d};
}

struct Sampled {
    std::vector<double> values;
    double step = 0.0;
    std::size_t argmax = 0;
    bool finite = true;
};

Sampled sample(const std::function<double(double)>& g, int samples) {
    Sampled s;
    const auto count = static_cast<std::size_t>(samples);
    s.values.resize(count);
    s.step = kTwoPi / samples;
    for (std::size_t k = 0; k < count; ++k) {
        const double v = safe_eval(g, s.step * static_cast<double>(k));
        s.values[k] = v;
        if (!std::isfinite(v)) {
            s.finite = false;
            s.argmax = k;
            return s;
        }
        if (v > s.values[s.argmax]) {
            s.argmax = k;
        }
    }
    return s;
}

// Indices of local peaks (strict on the left, weak on the right) within `tol` of the max.
std::vector<std::size_t> peak_indices(const Sampled& s, double tol) {
    const std::size_t n = s.values.size();
    const double vmax = s.values[s.argmax];
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n; ++k) {
        const double v = s.values[k];
        const double prev = s.values[(k + n - 1) % n];
        const double next = s.values[(k + 1) % n];
        if (v > prev && v >= next && v >= vmax - tol) {
            out.push_back(k);
        }
    }
    if (out.empty()) {
        out.push_back(s.argmax);
    }
    return out;
}

CircleExtremum refine(const std::function<double(double)>& g, const Sampled& s, std::size_t k) {
    const double t = s.step * static_cast<double>(k);
    const CircleExtremum sampled{s.values[k], t};
    const CircleExtremum polished = golden_max(g, t - s.step, t + s.step);
    if (!std::isfinite(polished.value)) {
        return {kInf, normalize_angle(polished.angle)};
    }
    // Keep the exact sample angle unless refinement genuinely improves the value.
    if (polished.value > sampled.value + 1e-14) {
        return {polished.value, normalize_angle(polished.angle)};
    }
    return sampled;
}

bool better(const CircleExtremum& a, const CircleExtremum& b) {
    if (a.value > b.value + kTieTolerance) {
        return true;
    }
    if (b.value > a.value + kTieTolerance) {
        return false;
    }
    return a.angle < b.angle;
}

CircleExtremum single_pass(const std::function<double(double)>& g, int samples) {
    const Sampled s = sample(g, samples);
    if (!s.finite) {
        return {kInf, s.step * static_cast<double>(s.argmax)};
    }
    const double vmax = s.values[s.argmax];
    std::vector<std::size_t> peaks = peak_indices(s, 1e-4 * std::max(1.0, std::abs(vmax)));
    if (peaks.size() > kMaxCandidates) {
        std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) {
            return s.values[a] > s.values[b];
        });
        peaks.resize(kMaxCandidates);
    }
    CircleExtremum best{-kInf, 0.0};
    for (const std::size_t k : peaks) {
        const CircleExtremum c = refine(g, s, k);
        if (!std::isfinite(c.value)) {
            return c;
        }
        if (better(c, best)) {
            best = c;
        }
    }
    return best;
}

// True when q comes within 1e-12 of 0 or 2, or is undefined, on a coarse polar grid.
bool hits_singular_value(ClassId id, const ParamSet& p, double r) {
    constexpr int kRings = 8;
    constexpr int kSpokes = 64;
    for (int j = 1; j <= kRings; ++j) {
        const double rho = r * j / kRings;
        for (int k = 0; k < kSpokes; ++k) {
            try {
                const Complex q = extremal_q(id, p, std::polar(rho, kTwoPi * k / kSpokes));
                if (std::abs(q) < 1e-12 || std::abs(q - 2.0) < 1e-12) {
                    return true;
                }
            } catch (const DomainError&) {
                return true;
            }
        }
    }
    return false;
}

void require_radius(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError(fmt::format("circle radius {} outside (0, 1)", r));
    }
}

}  // namespace

int default_samples() {
    const char* env = std::getenv("SG_RADIUS_SAMPLES");
    if (env == nullptr || *env == '\0') {
        return 4096;
    }
    const std::string_view text{env};
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 64) {
        throw DomainError(fmt::format("SG_RADIUS_SAMPLES must be an integer >= 64, got '{}'", text));
    }
    return value;
}

CircleExtremum maximize_periodic(const std::function<double(double)>& g, int samples) {
    if (samples < 3) {
        throw DomainError("maximize_periodic: need at least 3 samples");
    }
    CircleExtremum current = single_pass(g, samples);
    for (int d = 0; d < kMaxDoublings && std::isfinite(current.value); ++d) {
        samples *= 2;
        const CircleExtremum next = single_pass(g, samples);
        const bool settled = std::abs(next.value - current.value) < kConvergence;
        current = next;
        if (settled) {
            break;
        }
    }
    return current;
}

std::vector<CircleExtremum> periodic_peaks(const std::function<double(double)>& g, int samples,
                                           double tolerance) {
    if (samples < 3) {
        throw DomainError("periodic_peaks: need at least 3 samples");
    }
    const Sampled s = sample(g, samples);
    if (!s.finite) {
        return {{kInf, s.step * static_cast<double>(s.argmax)}};
    }
    std::vector<CircleExtremum> refined;
    for (const std::size_t k : peak_indices(s, tolerance + 1e-4)) {
        refined.push_back(refine(g, s, k));
    }
    double top = -kInf;
    for (const auto& c : refined) {
        top = std::max(top, c.value);
    }
    std::erase_if(refined, [&](const CircleExtremum& c) { return c.value < top - tolerance; });
    std::sort(refined.begin(), refined.end(),
              [](const CircleExtremum& a, const CircleExtremum& b) { return a.angle < b.angle; });
    return refined;
}

CircleExtremum circle_max_h(ClassId id, const ParamSet& p, double r, int samples) {
    require_radius(r);
    if (hits_singular_value(id, p, r)) {
        return {kInf, 0.0};
    }
    const auto g = [&](double t) {
        try {
            return sg_log_modulus(extremal_q(id, p, std::polar(r, t)));
        } catch (const DomainError&) {
            return kInf;
        }
    };
    return maximize_periodic(g, samples);
}

CircleExtremum circle_min_convexity(double r, int samples) {
    require_radius(r);
    const auto g = [r](double t) { return -convexity_functional(std::polar(r, t)).real(); };
    const CircleExtremum m = maximize_periodic(g, samples);
    return {-m.value, m.angle};
}

namespace {

// Largest r in the bracket for which `inside(r)` holds; assumes monotone containment.
struct Search {
    double radius;
    bool saturated;
};

Search bisect_containment(const std::function<bool(double)>& inside, double formula) {
    double lo = 1e-6;
    double hi = std::min(kUnitCap, 1.5 * formula);
    if (!inside(lo)) {
        throw InternalError("oracle: containment fails at r = 1e-6");
    }
    // Grow the bracket until containment fails, so a formula that undershoots
    // cannot cap the oracle.
    while (inside(hi)) {
        if (hi >= kUnitCap) {
            return {hi, true};
        }
        lo = hi;
        hi = std::min(kUnitCap, 2.0 * hi);
    }
    while (hi - lo > 1e-12) {
        const double mid = lo + 0.5 * (hi - lo);
        if (inside(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, false};
}

}  // namespace

OracleReport oracle_radius(ClassId id, const ParamSet& p, int samples) {
    if (id == ClassId::ConvexityOrder) {
        return convexity_oracle(p.alpha, samples);
    }
    const RadiusResult formula = formula_radius(id, p);
    const auto inside = [&](double r) { return circle_max_h(id, p, r, samples).value < 1.0; };
    const Search found = bisect_containment(inside, formula.value);

    OracleReport report;
    report.id = id;
    report.params = p;
    report.oracle_radius = found.radius;
    report.formula_radius = formula.value;
    report.abs_gap = std::abs(found.radius - formula.value);
    report.touch_angle = circle_max_h(id, p, found.radius, samples).angle;
    report.max_modulus_at_formula_radius =
        circle_max_h(id, p, std::min(formula.value, kUnitCap), samples).value;
    report.saturated = found.saturated;
    return report;
}

OracleReport convexity_oracle(double alpha, int samples) {
    ParamSet p;
    p.alpha = alpha;
    const RadiusResult formula = root_radius(ClassId::ConvexityOrder, p);
    const auto inside = [&](double r) { return circle_min_convexity(r, samples).value > alpha; };
    const Search found = bisect_containment(inside, formula.value);

    OracleReport report;
    report.id = ClassId::ConvexityOrder;
    report.params = p;
    report.oracle_radius = found.radius;
    report.formula_radius = formula.value;
    report.abs_gap = std::abs(found.radius - formula.value);
    report.touch_angle = circle_min_convexity(found.radius, samples).angle;
    report.max_modulus_at_formula_radius = circle_min_convexity(formula.value, samples).value;
    report.saturated = found.saturated;
    return report;
}

OracleReport verify_class(ClassId id, const ParamSet& p, int samples) {
    return oracle_radius(id, p, samples);
}

VerifyStatus classify(const OracleReport& report, double tolerance) noexcept {
    if (is_ambiguous(report.id, report.params)) {
        return VerifyStatus::Flagged;
    }
    if (!sharpness_claimed(report.id)) {
        return VerifyStatus::Finding;
    }
    return report.abs_gap <= tolerance ? VerifyStatus::Pass : VerifyStatus::Fail;
}

std::string_view to_string(VerifyStatus s) noexcept {
    switch (s) {
    case VerifyStatus::Pass:
        return "PASS";
    case VerifyStatus::Fail:
        return "FAIL";
    case VerifyStatus::Flagged:
        return "FLAGGED";
    case VerifyStatus::Finding:
        return "FINDING";
    }
    return "UNKNOWN";
}

ParamSet default_params(ClassId) {
    return ParamSet{};
}

std::vector<GridPoint> parameter_grid(ClassId id) {
    const ParamUsage u = spec_of(id).usage;
    std::vector<ParamSet> sets{ParamSet{}};

    const auto expand = [&sets](auto&& apply, const auto& values) {
        std::vector<ParamSet> out;
        for (const ParamSet& base : sets) {
            for (const auto& v : values) {
                ParamSet next = base;
                apply(next, v);
                out.push_back(next);
            }
        }
        sets = std::move(out);
    };

    if (u.A_B) {
        const std::vector<std::pair<double, double>> pairs{{1.0, -1.0}, {1.0, 0.0}, {0.5, -0.5},
                                                           {0.5, 0.25}};
        expand([](ParamSet& p, const std::pair<double, double>& ab) {
            p.A = ab.first;
            p.B = ab.second;
        }, pairs);
    }
    if (u.alpha) {
        const double top = alpha_upper_bound(id);
        const std::vector<double> alphas{0.0, 0.25, 0.5, 0.75 * top};
        expand([](ParamSet& p, double a) { p.alpha = a; }, alphas);
    }
    if (u.beta) {
        expand([](ParamSet& p, double b) { p.beta = b; }, std::vector<double>{1.25, 2.0, 5.0});
    }
    if (u.n) {
        expand([](ParamSet& p, int n) { p.n = n; }, std::vector<int>{1, 2, 3});
    }

    std::vector<GridPoint> grid;
    grid.reserve(sets.size());
    for (const ParamSet& p : sets) {
        grid.emplace_back(id, p);
    }
    return grid;
}

std::vector<GridPoint> full_parameter_grid() {
    std::vector<GridPoint> grid;
    for (const ClassSpec& s : registry()) {
        auto part = parameter_grid(s.id);
        grid.insert(grid.end(), part.begin(), part.end());
    }
    return grid;
}

std::vector<OracleReport> verify_all(const std::vector<GridPoint>& points, unsigned threads,
                                     int samples) {
    std::vector<OracleReport> reports(points.size());
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, points.size())));

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            reports[i] = verify_class(points[i].first, points[i].second, samples);
        }
    };
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
        jobs.push_back(std::async(std::launch::async, worker));
    }
    for (auto& job : jobs) {
        job.get();
    }
    return reports;
}

}  // namespace sgr
