#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "sgradius/class_catalog.hpp"
#include "sgradius/constants.hpp"
#include "sgradius/errors.hpp"
#include "sgradius/radius_formulas.hpp"
#include "sgradius/serialize.hpp"
#include "sgradius/sg_domain.hpp"
#include "sgradius/sharpness_oracle.hpp"

namespace sgr::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// RFC 4180 quoting for cells that contain a comma or a quote.
std::string csv_cell(std::string_view s) {
    if (s.find_first_of(",\"") == std::string_view::npos) {
        return std::string{s};
    }
    std::string out = "\"";
    for (const char c : s) {
        out += c == '"' ? "\"\"" : std::string(1, c);
    }
    return out + "\"";
}

struct Options {
    std::string target;
    ParamSet params;
    std::string cs_reading = "power";
    std::optional<double> r;
    std::optional<int> samples;
    std::string format;
    std::string out_path;
    bool grid = false;
    double tolerance = kAgreementTolerance;
};

void add_param_flags(CLI::App& cmd, Options& o) {
    cmd.add_option("--alpha", o.params.alpha, "order alpha");
    cmd.add_option("--beta", o.params.beta, "beta > 1 for m-beta");
    cmd.add_option("-A", o.params.A, "Janowski A");
    cmd.add_option("-B", o.params.B, "Janowski B");
    cmd.add_option("-n", o.params.n, "index n of A_n");
    cmd.add_option("--cs-reading", o.cs_reading,
                   "close-to-starlike extremal denominator for n > 1: power (1-z^n) or linear (1-z)")
        ->check(CLI::IsMember({"power", "linear"}));
    cmd.add_option("--out", o.out_path, "write output to a file instead of stdout");
}

ClassId class_from(const std::string& name) {
    if (const auto id = parse_class(name)) {
        return *id;
    }
    std::string known;
    for (const ClassSpec& s : registry()) {
        known += fmt::format("{}{}", known.empty() ? "" : ", ", s.name);
    }
    throw UsageError(fmt::format("unknown class '{}' (known: {})", name, known));
}

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed,
                    std::string_view command) {
    for (const auto a : allowed) {
        if (format == a) {
            return;
        }
    }
    throw UsageError(fmt::format("--format {} is not available for '{}'", format, command));
}

// ---- radius ---------------------------------------------------------------

void cmd_radius(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "json" : o.format;
    require_format(format, {"json", "csv", "text"}, "radius");
    const RadiusResult r = formula_radius(class_from(o.target), o.params);
    if (format == "json") {
        fmt::print(out, "{}\n", to_json(r));
    } else if (format == "csv") {
        fmt::print(out, "class,params,value,method,residual\n{},{},{},{},{}\n", to_string(r.id),
                   params_label(r.id, r.params), json_number(r.value), to_string(r.method),
                   json_number(r.residual));
    } else {
        fmt::print(out, "{} ({}): {:.6f} [{}]\n", to_string(r.id), params_label(r.id, r.params),
                   r.value, to_string(r.method));
    }
}

// ---- verify ---------------------------------------------------------------

void render_reports(const std::vector<OracleReport>& reports, const std::string& format,
                    double tolerance, std::ostream& out) {
    if (format == "json") {
        fmt::print(out, "[\n");
        for (std::size_t i = 0; i < reports.size(); ++i) {
            fmt::print(out, "  {}{}\n", to_json(reports[i], tolerance),
                       i + 1 < reports.size() ? "," : "");
        }
        fmt::print(out, "]\n");
        return;
    }
    if (format == "csv") {
        fmt::print(out,
                   "class,params,formula_radius,oracle_radius,abs_gap,touch_angle,"
                   "max_modulus_at_formula_radius,saturated,status\n");
        for (const auto& r : reports) {
            fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", to_string(r.id),
                       params_label(r.id, r.params), json_number(r.formula_radius),
                       json_number(r.oracle_radius), json_number(r.abs_gap),
                       json_number(r.touch_angle), json_number(r.max_modulus_at_formula_radius),
                       r.saturated ? "true" : "false", to_string(classify(r, tolerance)));
        }
        return;
    }
    fmt::print(out, "{:<18} {:<34} {:>9} {:>9} {:>9} {:>7}  {}\n", "class", "params", "formula",
               "oracle", "gap", "touch", "status");
    for (const auto& r : reports) {
        const bool unit = r.saturated && r.formula_radius == 1.0;
        fmt::print(out, "{:<18} {:<34} {:>9.6f} {:>9.6f} {:>9.1e} {:>7.4f}  {}{}\n", to_string(r.id),
                   params_label(r.id, r.params), r.formula_radius, r.oracle_radius, r.abs_gap,
                   r.touch_angle, to_string(classify(r, tolerance)),
                   unit ? " (whole disk)" : (r.saturated ? " (not sharp at bracket)" : ""));
    }
}

int cmd_verify(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "text" : o.format;
    require_format(format, {"json", "csv", "text"}, "verify");

    std::vector<GridPoint> points;
    if (o.target == "all") {
        if (o.grid) {
            points = full_parameter_grid();
        } else {
            for (const ClassSpec& s : registry()) {
                points.emplace_back(s.id, o.params);
            }
        }
    } else {
        const ClassId id = class_from(o.target);
        points = o.grid ? parameter_grid(id) : std::vector<GridPoint>{{id, o.params}};
    }
    for (const auto& [id, p] : points) {
        validate(id, p);
    }
    const int samples = o.samples.value_or(default_samples());
    if (samples < 64) {
        throw UsageError("--samples must be >= 64 for verify");
    }
    const auto reports = verify_all(points, 0, samples);
    render_reports(reports, format, o.tolerance, out);

    bool failed = false;
    for (const auto& r : reports) {
        failed = failed || classify(r, o.tolerance) == VerifyStatus::Fail;
    }
    return failed ? kVerificationFailure : kSuccess;
}

// ---- boundary -------------------------------------------------------------

std::string svg_points(const std::vector<Complex>& pts) {
    std::string s;
    for (std::size_t i = 0; i <= pts.size(); ++i) {
        const Complex w = pts[i % pts.size()];  // repeat the first point to close the curve
        s += fmt::format("{}{:.17g},{:.17g}", i == 0 ? "" : " ", w.real(), -w.imag());
    }
    return s;
}

void cmd_boundary(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "csv" : o.format;
    require_format(format, {"csv", "svg"}, "boundary");
    const ClassId id = class_from(o.target);
    validate(id, o.params);
    if (!o.r) {
        throw UsageError("boundary requires --r");
    }
    const double r = *o.r;
    if (!(r > 0.0 && r < 1.0)) {
        throw UsageError(fmt::format("--r {} must lie in (0, 1)", r));
    }
    const int samples = o.samples.value_or(1024);
    if (samples < 3) {
        throw UsageError("--samples must be >= 3");
    }

    const BoundaryTrace domain = sg_boundary(samples);
    BoundaryTrace image;
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * kPi * k / samples;
        image.params.push_back(t);
        image.points.push_back(extremal_q(id, o.params, std::polar(r, t)));
    }

    if (format == "csv") {
        fmt::print(out, "curve,t,re,im\n");
        const auto rows = [&out](std::string_view curve, const BoundaryTrace& trace) {
            std::ostringstream body;
            write_csv(body, trace);
            std::istringstream lines(body.str());
            for (std::string line; std::getline(lines, line);) {
                fmt::print(out, "{},{}\n", curve, line);
            }
        };
        rows("sg-boundary", domain);
        rows("image", image);
        return;
    }

    fmt::print(out,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0.4 -0.6 1.2 1.2\" "
               "width=\"600\" height=\"600\">\n"
               "<title>{} image of |z| = {:.6f}</title>\n"
               "<style>.sg-boundary{{fill:none;stroke:#1f3b73;stroke-width:0.004}}"
               ".image{{fill:none;stroke:#b22222;stroke-width:0.004;stroke-dasharray:0.02 0.012}}"
               "</style>\n"
               "<polyline class=\"sg-boundary\" points=\"{}\"/>\n"
               "<polyline class=\"image\" points=\"{}\"/>\n"
               "</svg>\n",
               to_string(id), r, svg_points(domain.points), svg_points(image.points));
}

// ---- table ----------------------------------------------------------------

struct TableRow {
    std::string key;
    ClassId id;
    ParamSet params;
};

std::vector<TableRow> table_rows() {
    const auto with = [](auto&& set) {
        ParamSet p;
        set(p);
        return p;
    };
    return {
        {"rl", ClassId::RL, {}},
        {"cardioid", ClassId::CardioidC, {}},
        {"rational", ClassId::RationalR, {}},
        {"crescent", ClassId::Crescent, {}},
        {"pe", ClassId::PE, {}},
        {"nephroid", ClassId::Nephroid, {}},
        {"sine", ClassId::Sine, {}},
        {"convexity(0)", ClassId::ConvexityOrder, {}},
        {"janowski(1,-1,1)", ClassId::Janowski, {}},
        {"starlike-alpha(0)", ClassId::StarlikeAlpha, {}},
        {"starlike-alpha(0.5)", ClassId::StarlikeAlpha, with([](ParamSet& p) { p.alpha = 0.5; })},
        {"bs(0)", ClassId::BS, {}},
        {"bs(0.5)", ClassId::BS, with([](ParamSet& p) { p.alpha = 0.5; })},
        {"lemniscate-alpha(0)", ClassId::LemniscateAlpha, {}},
        {"exp-alpha(0)", ClassId::ExpAlpha, {}},
        {"g1(1)", ClassId::G1, {}},
        {"g2(1)", ClassId::G2, {}},
        {"g3(1)", ClassId::G3, {}},
        {"g4(1)", ClassId::G4, {}},
        {"w(1)", ClassId::WClass, {}},
        {"close-to-starlike(0,1)", ClassId::CloseToStarlike, {}},
        {"m-beta(2,1)", ClassId::MBeta, {}},
        {"convexity(0.5)", ClassId::ConvexityOrder, with([](ParamSet& p) { p.alpha = 0.5; })},
    };
}

void cmd_table(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "text" : o.format;
    require_format(format, {"csv", "text"}, "table");
    if (format == "csv") {
        fmt::print(out, "row,class,params,value,method\n");
    }
    for (const TableRow& row : table_rows()) {
        const RadiusResult r = formula_radius(row.id, row.params);
        if (format == "csv") {
            fmt::print(out, "{},{},{},{},{}\n", csv_cell(row.key), to_string(r.id),
                       params_label(r.id, r.params), json_number(r.value), to_string(r.method));
        } else {
            fmt::print(out, "{:<24} {:.6f}  {}\n", row.key, r.value, to_string(r.method));
        }
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radius constants for sigmoid starlike functions, with a numerical sharpness oracle",
                 "sgradius"};
    app.require_subcommand(1);
    Options o;

    auto* radius = app.add_subcommand("radius", "closed-form or root radius of a class");
    radius->add_option("class", o.target, "class id")->required();
    add_param_flags(*radius, o);
    radius->add_option("--format", o.format, "json|csv|text (default json)");

    auto* verify = app.add_subcommand("verify", "compare formula radii against the oracle");
    verify->add_option("class", o.target, "class id or 'all'")->required();
    add_param_flags(*verify, o);
    verify->add_flag("--grid", o.grid, "sweep the default parameter grid");
    verify->add_option("--samples", o.samples, "circle samples (default 4096 or SG_RADIUS_SAMPLES)");
    verify->add_option("--format", o.format, "text|json|csv (default text)");
    verify->add_option("--tolerance", o.tolerance, "agreement tolerance on |oracle - formula|")
        ->check(CLI::PositiveNumber);

    auto* boundary = app.add_subcommand("boundary", "sigmoid-domain boundary and image of |z| = r");
    boundary->add_option("class", o.target, "class id")->required();
    add_param_flags(*boundary, o);
    boundary->add_option("--r", o.r, "circle radius in (0, 1)")->required();
    boundary->add_option("--samples", o.samples, "points per curve (default 1024)");
    boundary->add_option("--format", o.format, "csv|svg (default csv)");

    auto* table = app.add_subcommand("table", "all fixed radius constants");
    table->add_option("--format", o.format, "text|csv (default text)");
    table->add_option("--out", o.out_path, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.out_path << " for writing\n";
            return kUsageError;
        }
    }
    std::ostream& sink = o.out_path.empty() ? out : file;
    o.params.cs_reading = o.cs_reading == "linear" ? CsReading::Linear : CsReading::PowerN;

    try {
        if (*radius) {
            cmd_radius(o, sink);
        } else if (*verify) {
            return cmd_verify(o, sink);
        } else if (*boundary) {
            cmd_boundary(o, sink);
        } else if (*table) {
            cmd_table(o, sink);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sgr::cli
