#ifndef REGSUM_CLI_HPP
#define REGSUM_CLI_HPP

// Command-line front end: request parsing, execution and report emission.
// Kept in a header so tests can drive it without spawning processes.

#include "regsum/identities.hpp"
#include "regsum/oracles.hpp"
#include "regsum/trig_series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace regsum::cli {

/// Bad command line: unknown flag, malformed value, out-of-domain point.
class UsageError : public Error {
public:
    using Error::Error;
};

/// --help was given; carries the help text.
struct HelpRequested {
    std::string text;
};

enum class Command { eval, verify, table };
enum class Format { text, json, csv };

struct CliRequest {
    Command command = Command::eval;
    SeriesSpec series;
    bool has_series = false;
    std::vector<std::string> identities;
    std::vector<XReal> points;
    int precision_digits = kDefaultPrecisionDigits;
    std::optional<XReal> tol_override;
    Format output_format = Format::text;
    std::optional<std::string> output_path;
};

/// Temporarily sets the default XReal precision (for parsing user numbers).
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits) : saved_(XReal::default_precision()) {
        XReal::default_precision(digits);
    }
    ~ScopedPrecision() { XReal::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

namespace detail {

inline XReal parse_real(const std::string& text, const std::string& flag) {
    const std::string t = text;
    if (t.empty())
        throw UsageError(flag + ": empty number");
    // Accept only plain decimal / scientific notation.
    std::size_t i = 0;
    if (t[i] == '+' || t[i] == '-')
        ++i;
    bool digits = false, dot = false;
    for (; i < t.size() && t[i] != 'e' && t[i] != 'E'; ++i) {
        if (std::isdigit(static_cast<unsigned char>(t[i])))
            digits = true;
        else if (t[i] == '.' && !dot)
            dot = true;
        else
            throw UsageError(flag + ": malformed number '" + text + "'");
    }
    if (!digits)
        throw UsageError(flag + ": malformed number '" + text + "'");
    if (i < t.size()) {
        ++i;
        if (i < t.size() && (t[i] == '+' || t[i] == '-'))
            ++i;
        if (i == t.size())
            throw UsageError(flag + ": malformed number '" + text + "'");
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw UsageError(flag + ": malformed number '" + text + "'");
        }
    }
    return XReal(t);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

/// "a:b:step" -> a, a+step, ..., up to b (inclusive within half a step).
inline std::vector<XReal> parse_range(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3)
        throw UsageError("--grid: expected start:stop:step, got '" + spec + "'");
    const XReal a = parse_real(parts[0], "--grid");
    const XReal b = parse_real(parts[1], "--grid");
    const XReal step = parse_real(parts[2], "--grid");
    if (!(step > 0))
        throw UsageError("--grid: step must be positive");
    if (b < a)
        throw UsageError("--grid: stop must not be below start");
    const XReal count = boost::multiprecision::floor((b - a) / step + XReal("0.5"));
    if (count > 100000)
        throw UsageError("--grid: too many points");
    std::vector<XReal> pts;
    for (long i = 0; i <= count.convert_to<long>(); ++i)
        pts.push_back(a + i * step);
    return pts;
}

inline std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
    std::string out;
    for (const auto& s : v)
        out += (out.empty() ? "" : sep) + s;
    return out;
}

}  // namespace detail

/// Parses argv (without the program name).  Throws UsageError or HelpRequested.
inline CliRequest parse_request(const std::vector<std::string>& argv) {
    CLI::App app{"Regularized trigonometric series and zeta-function identities", "regsum"};
    app.require_subcommand(1);
    auto* eval = app.add_subcommand("eval", "evaluate one series (or special value) at a point");
    auto* verify = app.add_subcommand("verify", "verify registry identities at points");
    auto* table = app.add_subcommand("table", "tabulate a series over a grid of x");

    std::string series, weight = "unit", s_text = "0", x_text, identity, grid, points, tol_text, format = "text",
                out;
    bool alternating = false;
    int prec = -1;
    for (auto* sub : {eval, verify, table}) {
        sub->fallthrough();
    }
    app.add_option("--series", series, "series kernel")->check(CLI::IsMember({"sin", "cos"}));
    app.add_flag("--alt", alternating, "alternating signs (-1)^{n+1}");
    app.add_option("--weight", weight, "term weight")->check(CLI::IsMember({"unit", "log"}));
    app.add_option("--s", s_text, "exponent s >= 0");
    app.add_option("--x", x_text, "frequency argument 0 < x < 1");
    app.add_option("--identity", identity, "identity name, comma list, or 'all'");
    app.add_option("--grid", grid, "range start:stop:step");
    app.add_option("--points", points, "comma-separated points");
    app.add_option("--prec", prec, "working precision in decimal digits (>= 30)");
    app.add_option("--tol", tol_text, "override tolerance");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out, "write output to this path");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliRequest req;
    req.command = eval->parsed() ? Command::eval : (verify->parsed() ? Command::verify : Command::table);
    if (prec >= 0) {
        if (prec < kMinPrecisionDigits)
            throw UsageError("--prec: precision must be >= " + std::to_string(kMinPrecisionDigits));
        req.precision_digits = prec;
    } else {
        req.precision_digits = precision_from_environment();
    }
    req.output_format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);
    if (!out.empty())
        req.output_path = out;

    ScopedPrecision scope(static_cast<unsigned>(req.precision_digits + kGuardDigits));
    if (!tol_text.empty()) {
        req.tol_override = detail::parse_real(tol_text, "--tol");
        if (!(*req.tol_override >= 0))
            throw UsageError("--tol: tolerance must be non-negative");
    }
    if (!grid.empty() && !points.empty())
        throw UsageError("--grid and --points are mutually exclusive");
    if (!grid.empty())
        req.points = detail::parse_range(grid);
    for (const auto& p : points.empty() ? std::vector<std::string>{} : detail::split(points, ','))
        req.points.push_back(detail::parse_real(p, "--points"));

    if (req.command == Command::verify) {
        if (identity.empty())
            throw UsageError("--identity is required for verify; known: " + detail::join(identity_names()));
        if (!series.empty() || !x_text.empty())
            throw UsageError("--series/--x are not used by verify");
        req.identities = identity == "all" ? identity_names() : detail::split(identity, ',');
        bool grid_needed = false;
        for (const auto& name : req.identities) {
            try {
                grid_needed = grid_needed || find_identity(name).mode == PointMode::grid;
            } catch (const LookupError&) {
                throw UsageError("--identity: unknown identity '" + name + "'; known: " +
                                 detail::join(identity_names()));
            }
        }
        const bool only_bernoulli = req.identities.size() == 1 && req.identities[0] == "bernoulli_odd";
        if (grid_needed && req.points.empty())
            throw UsageError("--grid or --points is required for point-dependent identities");
        for (const auto& p : req.points) {
            if (only_bernoulli) {
                if (!is_integer(p) || p < 0 || p > kBernoulliIdentityMaxM)
                    throw UsageError("--points: bernoulli_odd takes integers 0..20");
            } else if (!(p >= XReal("1e-3")) || !(p <= 1 - XReal("1e-3"))) {
                throw UsageError("--points/--grid: point " + p.str(12) + " must lie in [1e-3, 1 - 1e-3]");
            }
        }
        return req;
    }

    // eval / table
    if (!identity.empty())
        throw UsageError("--identity is only used by verify");
    if (series.empty())
        throw UsageError("--series is required for " + std::string(req.command == Command::eval ? "eval" : "table"));
    req.has_series = true;
    req.series.kernel = series == "sin" ? Kernel::sin : Kernel::cos;
    req.series.alternating = alternating;
    req.series.weight = weight == "log" ? Weight::log : Weight::unit;
    req.series.s = detail::parse_real(s_text, "--s");
    if (req.series.s < 0)
        throw UsageError("--s: exponent must be >= 0");
    if (req.command == Command::eval) {
        if (!x_text.empty()) {
            if (!req.points.empty())
                throw UsageError("--x cannot be combined with --grid/--points");
            req.points.push_back(detail::parse_real(x_text, "--x"));
        }
        if (req.points.empty())
            throw UsageError("--x is required for eval");
    } else {
        if (!x_text.empty())
            throw UsageError("--x is not used by table; give --grid or --points");
        if (req.points.empty())
            throw UsageError("--grid or --points is required for table");
    }
    for (const auto& p : req.points) {
        if (!(p > 0) || !(p < 1))
            throw UsageError("--x: point " + p.str(12) + " must lie strictly inside (0, 1)");
    }
    req.series.x = req.points.front();
    return req;
}

inline CliRequest parse_request(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return parse_request(args);
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

/// An evaluated series: IdentityReport fields (lhs = value, rhs = oracle) plus
/// the effort fields.
struct EvalRow {
    IdentityReport report;
    std::size_t terms_used = 0;
    Method method = Method::closed_form;
};

inline constexpr long kDirectOracleTerms = 100'000;
inline const char* kDefaultEvalTolerance = "1e-6";

inline EvalRow evaluate_row(const SeriesSpec& spec, const EvalConfig& cfg, const std::optional<XReal>& tol) {
    const RegularizedValue oracle =
        spec.s > 1 ? direct_oracle(spec, kDirectOracleTerms) : abel_oracle(spec, cfg);
    RegularizedValue value;
    std::string notes;
    try {
        value = evaluate(spec, cfg);
        notes = std::string("value by ") + to_string(value.method) + "; rhs by " + to_string(oracle.method) +
                " oracle (error estimate " + regsum::detail::sci(oracle.error_estimate) + ")";
    } catch (const CapabilityError&) {
        value = oracle;
        notes = std::string("no closed form for this weight at s > 0; value is the ") + to_string(oracle.method) +
                " oracle";
    }
    for (const auto& d : value.diagnostics)
        notes += "; " + d;
    EvalRow row;
    row.report = make_report(spec.label(), {{"x", spec.x}, {"s", spec.s}}, value.value, oracle.value,
                             tol.value_or(XReal(kDefaultEvalTolerance)), notes);
    row.terms_used = value.terms_used;
    row.method = value.method;
    return row;
}

/// Rows for a series over every requested point.  Errors at a point become
/// failing rows rather than aborting the table.
inline std::vector<EvalRow> run_series(const CliRequest& req, const EvalConfig& cfg) {
    std::vector<EvalRow> rows;
    for (const auto& x : req.points) {
        SeriesSpec spec = req.series;
        spec.x = x;
        try {
            rows.push_back(evaluate_row(spec, cfg, req.tol_override));
        } catch (const std::exception& e) {
            EvalRow row;
            row.report.identity_name = spec.label();
            row.report.inputs = {{"x", spec.x}, {"s", spec.s}};
            row.report.abs_residual = infinity();
            row.report.rel_residual = infinity();
            row.report.tolerance = req.tol_override.value_or(XReal(kDefaultEvalTolerance));
            row.report.method_notes = std::string("error: ") + e.what();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::vector<IdentityReport> run_identities(const CliRequest& req, const EvalConfig& cfg) {
    const bool explicit_m = req.identities.size() == 1 && req.identities[0] == "bernoulli_odd" &&
                            !req.points.empty();
    if (!explicit_m)
        return run_suite(req.identities, req.points, cfg, req.tol_override);
    std::vector<XReal> ms = req.points;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<IdentityReport> out;
    for (const auto& m : ms)
        out.push_back(verify_identity("bernoulli_odd", m, cfg, req.tol_override));
    return out;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

/// Reports to emit: identity reports, or eval rows carrying the extra fields.
struct ReportSet {
    std::vector<IdentityReport> reports;
    std::vector<std::optional<std::pair<std::size_t, Method>>> effort;  // parallel to reports

    static ReportSet from(std::vector<IdentityReport> r) {
        ReportSet set;
        set.effort.assign(r.size(), std::nullopt);
        set.reports = std::move(r);
        return set;
    }
    static ReportSet from(const std::vector<EvalRow>& rows) {
        ReportSet set;
        for (const auto& row : rows) {
            set.reports.push_back(row.report);
            set.effort.emplace_back(std::make_pair(row.terms_used, row.method));
        }
        return set;
    }
    bool all_pass() const {
        return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
    }
};

/// Unwritable output path.
class IoError : public Error {
public:
    using Error::Error;
};

/// Decimal text with `digits` significant digits; locale-independent.
inline std::string format_number(const XReal& v, int digits) {
    if (boost::multiprecision::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (boost::multiprecision::isnan(v))
        return "nan";
    return v.str(digits, std::ios_base::scientific);
}

inline std::string format_inputs(const IdentityReport& r, int digits, const char* sep, bool compact = false) {
    std::string out;
    for (const auto& [k, v] : r.inputs)
        out += (out.empty() ? "" : sep) + k + "=" + (compact ? v.str(digits) : format_number(v, digits));
    return out;
}

inline nlohmann::ordered_json to_json(const ReportSet& set, int digits) {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < set.reports.size(); ++i) {
        const auto& r = set.reports[i];
        nlohmann::ordered_json o;
        o["identity_name"] = r.identity_name;
        auto inputs = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.inputs)
            inputs[k] = format_number(v, digits);
        o["inputs"] = inputs;
        o["lhs"] = format_number(r.lhs, digits);
        o["rhs"] = format_number(r.rhs, digits);
        o["abs_residual"] = format_number(r.abs_residual, digits);
        o["rel_residual"] = format_number(r.rel_residual, digits);
        o["tolerance"] = format_number(r.tolerance, digits);
        o["pass"] = r.pass;
        o["method_notes"] = r.method_notes;
        if (set.effort[i]) {
            o["terms_used"] = set.effort[i]->first;
            o["method"] = to_string(set.effort[i]->second);
        }
        arr.push_back(std::move(o));
    }
    return arr;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::string render_csv(const ReportSet& set, int digits) {
    const bool effort = std::any_of(set.effort.begin(), set.effort.end(), [](const auto& e) { return e.has_value(); });
    std::ostringstream os;
    os << "identity_name,inputs,lhs,rhs,abs_residual,rel_residual,tolerance,pass,method_notes";
    if (effort)
        os << ",terms_used,method";
    os << "\n";
    for (std::size_t i = 0; i < set.reports.size(); ++i) {
        const auto& r = set.reports[i];
        os << csv_field(r.identity_name) << ',' << csv_field(format_inputs(r, digits, ";")) << ','
           << format_number(r.lhs, digits) << ',' << format_number(r.rhs, digits) << ','
           << format_number(r.abs_residual, digits) << ',' << format_number(r.rel_residual, digits) << ','
           << format_number(r.tolerance, digits) << ',' << (r.pass ? "true" : "false") << ','
           << csv_field(r.method_notes);
        if (effort) {
            os << ',';
            if (set.effort[i])
                os << set.effort[i]->first << ',' << to_string(set.effort[i]->second);
            else
                os << ',';
        }
        os << "\n";
    }
    return os.str();
}

/// Aligned columns; values are shortened to keep rows readable.
inline std::string render_text(const ReportSet& set, int digits) {
    const int shown = std::min(digits, 20);
    std::vector<std::array<std::string, 6>> rows;
    rows.push_back({"identity", "point", "lhs", "rhs", "abs_residual", "pass"});
    for (const auto& r : set.reports) {
        rows.push_back({r.identity_name, format_inputs(r, 8, " ", true), format_number(r.lhs, shown),
                        format_number(r.rhs, shown), format_number(r.abs_residual, 3), r.pass ? "PASS" : "FAIL"});
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 6; ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < 6; ++c) {
            os << rows[i][c];
            if (c + 1 < 6)
                os << std::string(width[c] - rows[i][c].size() + 2, ' ');
        }
        os << "\n";
        if (i > 0 && !set.reports[i - 1].pass && !set.reports[i - 1].method_notes.empty())
            os << "    note: " << set.reports[i - 1].method_notes << "\n";
    }
    const auto failed = std::count_if(set.reports.begin(), set.reports.end(), [](const auto& r) { return !r.pass; });
    os << set.reports.size() << " report(s), " << failed << " failed\n";
    return os.str();
}

inline std::string render(const ReportSet& set, Format format, int digits) {
    switch (format) {
        case Format::json:
            return to_json(set, digits).dump(2) + "\n";
        case Format::csv:
            return render_csv(set, digits);
        case Format::text:
            break;
    }
    return render_text(set, digits);
}

/// Writes the reports to `path` (or `out`).  Returns 0 if all pass, 1 otherwise.
inline int emit_report(const ReportSet& set, Format format, const std::optional<std::string>& path, int digits,
                       std::ostream& out) {
    const std::string text = render(set, format, digits);
    if (path) {
        std::ofstream file(*path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw IoError("cannot open '" + *path + "' for writing");
        file << text;
        file.flush();
        if (!file)
            throw IoError("failed writing '" + *path + "'");
    } else {
        out << text;
    }
    return set.all_pass() ? 0 : 1;
}

/// Full command: parse, run, emit.  Exit codes: 0 all pass, 1 any fail, 2 usage or I/O error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliRequest req;
    try {
        req = parse_request(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    EvalConfig cfg = active_config();
    cfg.precision_digits = req.precision_digits;
    configure(cfg);
    try {
        ReportSet set = req.command == Command::verify ? ReportSet::from(run_identities(req, cfg))
                                                       : ReportSet::from(run_series(req, cfg));
        return emit_report(set, req.output_format, req.output_path, req.precision_digits, out);
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace regsum::cli

#endif  // REGSUM_CLI_HPP
