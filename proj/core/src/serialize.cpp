#include "sgradius/serialize.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

namespace sgr {

namespace {

std::string quoted(std::string_view s) {
    return fmt::format("\"{}\"", s);  // identifiers only; nothing to escape
}

std::vector<std::pair<std::string_view, std::string>> param_fields(ClassId id, const ParamSet& p,
                                                                  bool machine) {
    const ParamUsage u = spec_of(id).usage;
    const auto num = [machine](double x) { return machine ? json_number(x) : fmt::format("{:g}", x); };
    std::vector<std::pair<std::string_view, std::string>> out;
    if (u.A_B) {
        out.emplace_back("A", num(p.A));
        out.emplace_back("B", num(p.B));
    }
    if (u.alpha) {
        out.emplace_back("alpha", num(p.alpha));
    }
    if (u.beta) {
        out.emplace_back("beta", num(p.beta));
    }
    if (u.n) {
        out.emplace_back("n", fmt::format("{}", p.n));
    }
    if (id == ClassId::CloseToStarlike && p.n > 1) {
        const std::string_view reading = p.cs_reading == CsReading::PowerN ? "power" : "linear";
        out.emplace_back("cs_reading", machine ? quoted(reading) : std::string(reading));
    }
    return out;
}

}  // namespace

std::string json_number(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    return fmt::format("{:.17g}", x);
}

std::string params_json(ClassId id, const ParamSet& p) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : param_fields(id, p, true)) {
        out += fmt::format("{}\"{}\":{}", first ? "" : ",", key, value);
        first = false;
    }
    return out + "}";
}

std::string params_label(ClassId id, const ParamSet& p) {
    std::string out;
    for (const auto& [key, value] : param_fields(id, p, false)) {
        out += fmt::format("{}{}={}", out.empty() ? "" : " ", key, value);
    }
    return out.empty() ? "-" : out;
}

std::string to_json(const RadiusResult& r) {
    return fmt::format(R"({{"class":{},"params":{},"value":{},"method":{},"residual":{}}})",
                       quoted(to_string(r.id)), params_json(r.id, r.params), json_number(r.value),
                       quoted(to_string(r.method)), json_number(r.residual));
}

std::string to_json(const OracleReport& r, double tolerance) {
    return fmt::format(
        R"({{"class":{},"params":{},"oracle_radius":{},"formula_radius":{},"abs_gap":{},)"
        R"("touch_angle":{},"max_modulus_at_formula_radius":{},"saturated":{},"status":{}}})",
        quoted(to_string(r.id)), params_json(r.id, r.params), json_number(r.oracle_radius),
        json_number(r.formula_radius), json_number(r.abs_gap), json_number(r.touch_angle),
        json_number(r.max_modulus_at_formula_radius), r.saturated ? "true" : "false",
        quoted(to_string(classify(r, tolerance))));
}

}  // namespace sgr
