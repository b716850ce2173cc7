#ifndef DPB_CLI_HPP
#define DPB_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <dpb/error.hpp>
#include <dpb/families.hpp>
#include <dpb/identities.hpp>
#include <dpb/parser.hpp>
#include <dpb/series.hpp>

// Command-line frontend: `dpb table|poly|verify|eval`. Exit codes are 0 on
// success, 1 when an identity fails and 2 on usage, parse or evaluation errors.

namespace dpb::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

// Largest precision accepted from the command line.
inline constexpr std::size_t max_precision = 512;

enum class Format { text, json, csv };

struct Row {
    std::size_t n = 0;
    // n! [t^n] of the generating function.
    std::string value;
    // [t^n] itself; only eval listings carry it.
    std::optional<std::string> coefficient;

    friend bool operator==(const Row &, const Row &) = default;
};

// One rendered listing: a family table or an evaluated expression.
struct OutputRecord {
    std::optional<std::string> family;
    std::optional<std::string> expr;
    long k = 1;
    long r = 1;
    // "symbolic" or the rational substituted for lambda.
    std::string lambda = "symbolic";
    std::vector<Row> rows;

    friend bool operator==(const OutputRecord &, const OutputRecord &) = default;
};

inline void to_json(nlohmann::ordered_json &j, const Row &row)
{
    j = nlohmann::ordered_json{{"n", row.n}};
    if (row.coefficient) {
        j["coefficient"] = *row.coefficient;
    }
    j["value"] = row.value;
}

inline void from_json(const nlohmann::ordered_json &j, Row &row)
{
    row.n = j.at("n").get<std::size_t>();
    row.value = j.at("value").get<std::string>();
    row.coefficient = j.contains("coefficient") ? std::optional(j["coefficient"].get<std::string>()) : std::nullopt;
}

inline void to_json(nlohmann::ordered_json &j, const OutputRecord &rec)
{
    j = nlohmann::ordered_json::object();
    if (rec.family) {
        j["family"] = *rec.family;
    }
    if (rec.expr) {
        j["expr"] = *rec.expr;
    }
    j["k"] = rec.k;
    j["r"] = rec.r;
    j["lambda"] = rec.lambda;
    j["rows"] = rec.rows;
}

inline void from_json(const nlohmann::ordered_json &j, OutputRecord &rec)
{
    rec.family = j.contains("family") ? std::optional(j["family"].get<std::string>()) : std::nullopt;
    rec.expr = j.contains("expr") ? std::optional(j["expr"].get<std::string>()) : std::nullopt;
    rec.k = j.at("k").get<long>();
    rec.r = j.at("r").get<long>();
    rec.lambda = j.at("lambda").get<std::string>();
    rec.rows = j.at("rows").get<std::vector<Row>>();
}

inline nlohmann::ordered_json report_json(const IdentityReport &rep)
{
    nlohmann::ordered_json params{{"k", rep.params.k}, {"r", rep.params.r}, {"n", rep.params.n_max}};
    std::vector<std::string> ys;
    for (const auto &y : rep.params.ys) {
        ys.push_back(y.to_string());
    }
    params["y"] = ys;
    params["lambda"] = rep.params.lambda ? rep.params.lambda->to_string() : std::string("symbolic");
    params["seed"] = rep.params.seed;
    nlohmann::ordered_json j{{"id", rep.id}, {"params", params}, {"status", rep.pass ? "pass" : "fail"}};
    if (rep.witness) {
        j["witness"] = {{"n", rep.witness->n}, {"lhs", rep.witness->lhs}, {"rhs", rep.witness->rhs}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

namespace detail
{

inline std::string pad(const std::string &s, std::size_t width)
{
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Left-aligned columns separated by two spaces; the last column is not padded.
inline void write_columns(std::ostream &out, const std::vector<std::vector<std::string>> &lines)
{
    std::vector<std::size_t> widths;
    for (const auto &line : lines) {
        widths.resize(std::max(widths.size(), line.size()));
        for (std::size_t c = 0; c < line.size(); ++c) {
            widths[c] = std::max(widths[c], line[c].size());
        }
    }
    for (const auto &line : lines) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out << (c + 1 == line.size() ? line[c] : pad(line[c], widths[c]) + "  ");
        }
        out << '\n';
    }
}

inline void write_record(std::ostream &out, const OutputRecord &rec, Format format)
{
    const bool with_coefficient = !rec.rows.empty() && rec.rows.front().coefficient.has_value();
    switch (format) {
        case Format::json: {
            nlohmann::ordered_json j = rec;
            out << j.dump(2) << '\n';
            return;
        }
        case Format::csv:
            out << (with_coefficient ? "n,coefficient,value\n" : "n,value\n");
            for (const auto &row : rec.rows) {
                out << row.n << ',' << (with_coefficient ? *row.coefficient + "," : "") << row.value << '\n';
            }
            return;
        case Format::text: {
            std::vector<std::vector<std::string>> lines;
            lines.push_back(with_coefficient ? std::vector<std::string>{"n", "coefficient", "sequence"}
                                             : std::vector<std::string>{"n", "value"});
            for (const auto &row : rec.rows) {
                if (with_coefficient) {
                    lines.push_back({std::to_string(row.n), *row.coefficient, row.value});
                } else {
                    lines.push_back({std::to_string(row.n), row.value});
                }
            }
            write_columns(out, lines);
            return;
        }
    }
}

inline std::string render_value(const LambdaPoly &v, const std::optional<Rational> &lambda)
{
    return lambda ? v.eval(*lambda).to_string() : v.to_string();
}

inline std::string render_value(const LambdaPolynomial &p, const std::optional<Rational> &lambda)
{
    if (!lambda) {
        return p.to_string();
    }
    std::vector<Rational> v;
    for (const auto &c : p.coeffs()) {
        v.push_back(c.eval(*lambda));
    }
    return RationalPolynomial(std::move(v)).to_string();
}

inline std::string lambda_label(const std::optional<Rational> &lambda)
{
    return lambda ? lambda->to_string() : std::string("symbolic");
}

inline void write_report(std::ostream &out, const IdentityReport &rep, Format format)
{
    switch (format) {
        case Format::json:
            out << report_json(rep).dump(2) << '\n';
            return;
        case Format::csv:
            out << rep.id << ',' << (rep.pass ? "pass" : "fail");
            if (rep.witness) {
                out << ',' << rep.witness->n << ',' << rep.witness->lhs << ',' << rep.witness->rhs;
            } else {
                out << ",,,";
            }
            out << '\n';
            return;
        case Format::text:
            if (rep.pass) {
                out << rep.id << ": pass (k=" << rep.params.k << ", r=" << rep.params.r
                    << ", n<=" << rep.params.n_max << ", lambda=" << lambda_label(rep.params.lambda) << ")\n";
            } else {
                out << rep.id << ": fail at n=" << rep.witness->n;
                if (!rep.witness->context.empty()) {
                    out << " (" << rep.witness->context << ")";
                }
                out << "\n  lhs: " << rep.witness->lhs << "\n  rhs: " << rep.witness->rhs << '\n';
            }
            return;
    }
}

struct Options {
    long k = 1;
    long r = 1;
    std::optional<std::size_t> n;
    std::size_t order = default_precision;
    std::string lambda = "symbolic";
    std::string format = "text";
    std::uint64_t seed = 0;
};

inline std::optional<Rational> parse_lambda_mode(const std::string &s)
{
    if (s == "symbolic") {
        return std::nullopt;
    }
    try {
        return Rational::parse(s);
    } catch (const Error &) {
        throw InvalidArgument("--lambda expects 'symbolic' or a rational p/q, got '" + s + "'");
    }
}

inline Format parse_format(const std::string &s)
{
    if (s == "json") {
        return Format::json;
    }
    if (s == "csv") {
        return Format::csv;
    }
    return Format::text;
}

inline void check_precision(std::size_t n, const char *flag)
{
    if (n == 0 || n > max_precision) {
        throw InvalidArgument(std::string(flag) + " must be between 1 and " + std::to_string(max_precision));
    }
}

inline Family require_family(const std::string &name)
{
    const auto f = parse_family(name);
    if (!f) {
        throw InvalidArgument("unknown family '" + name + "'");
    }
    return *f;
}

inline int cmd_table(const std::string &family_name, const Options &o, std::ostream &out)
{
    const Family family = require_family(family_name);
    const std::size_t rows = o.n.value_or(10);
    check_precision(rows, "--n");
    const auto lambda = parse_lambda_mode(o.lambda);
    const auto table = family_table(family, o.k, o.r, rows);
    OutputRecord rec{family_name, std::nullopt, o.k, o.r, lambda_label(lambda), {}};
    for (std::size_t n = 0; n < table.size(); ++n) {
        rec.rows.push_back({n, render_value(table[n], lambda), std::nullopt});
    }
    write_record(out, rec, parse_format(o.format));
    return exit_ok;
}

inline int cmd_poly(const std::string &family_name, const Options &o, std::ostream &out)
{
    const Family family = require_family(family_name);
    if (!o.n) {
        throw InvalidArgument("poly needs --n");
    }
    check_precision(*o.n + 1, "--n");
    const auto lambda = parse_lambda_mode(o.lambda);
    const auto p = family_polynomial(family, o.k, o.r, *o.n, *o.n + 1);
    switch (parse_format(o.format)) {
        case Format::json: {
            nlohmann::ordered_json j{{"family", family_name}, {"k", o.k},
                                     {"r", o.r},             {"n", *o.n},
                                     {"lambda", lambda_label(lambda)}, {"polynomial", render_value(p, lambda)}};
            out << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "power,coefficient\n";
            for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
                out << m << ',' << render_value(p.coeffs()[m], lambda) << '\n';
            }
            break;
        case Format::text:
            out << render_value(p, lambda) << '\n';
            break;
    }
    return exit_ok;
}

// Parses "lhs == rhs", reporting syntax errors at offsets into the whole text.
inline std::pair<Expr, Expr> parse_equation(const std::string &text)
{
    const auto at = text.find("==");
    if (at == std::string::npos || text.find("==", at + 2) != std::string::npos) {
        throw SyntaxError(at == std::string::npos ? text.size() : text.find("==", at + 2), {"a single '=='"},
                          "equation");
    }
    auto side = [&](std::size_t begin, std::size_t len) {
        try {
            return parse(std::string_view(text).substr(begin, len));
        } catch (const SyntaxError &e) {
            throw SyntaxError(begin + e.offset(), e.expected(), e.found());
        }
    };
    return {side(0, at), side(at + 2, std::string::npos)};
}

inline int cmd_verify_equation(const std::string &text, const Options &o, std::ostream &out)
{
    check_precision(o.order, "--order");
    const auto lambda = parse_lambda_mode(o.lambda);
    const auto [lhs_ast, rhs_ast] = parse_equation(text);
    const auto lhs = eval_expr(lhs_ast, o.order);
    const auto rhs = eval_expr(rhs_ast, o.order);
    std::optional<Witness> witness;
    for (std::size_t n = 0; n < o.order && !witness; ++n) {
        const bool same = lambda ? lhs[n].eval(*lambda) == rhs[n].eval(*lambda) : lhs[n] == rhs[n];
        if (!same) {
            witness = Witness{n, render_value(lhs[n], lambda), render_value(rhs[n], lambda), {}};
        }
    }
    const Format format = parse_format(o.format);
    if (format == Format::json) {
        nlohmann::ordered_json j{{"id", "equation"},
                                 {"params", {{"equation", text}, {"order", o.order}, {"lambda", lambda_label(lambda)}}},
                                 {"status", witness ? "fail" : "pass"}};
        j["witness"] = witness ? nlohmann::ordered_json{{"n", witness->n}, {"lhs", witness->lhs}, {"rhs", witness->rhs}}
                               : nlohmann::ordered_json(nullptr);
        out << j.dump(2) << '\n';
    } else if (format == Format::csv) {
        out << "id,status,n,lhs,rhs\nequation," << (witness ? "fail" : "pass");
        if (witness) {
            out << ',' << witness->n << ',' << witness->lhs << ',' << witness->rhs << '\n';
        } else {
            out << ",,,\n";
        }
    } else if (witness) {
        out << "equation: fail at n=" << witness->n << "\n  lhs: " << witness->lhs << "\n  rhs: " << witness->rhs
            << '\n';
    } else {
        out << "equation: pass (order=" << o.order << ", lambda=" << lambda_label(lambda) << ")\n";
    }
    return witness ? exit_fail : exit_ok;
}

inline int cmd_verify(const std::string &target, const Options &o, std::ostream &out)
{
    if (target.find("==") != std::string::npos) {
        return cmd_verify_equation(target, o, out);
    }
    IdentityParams params;
    params.k = o.k;
    params.r = o.r;
    params.n_max = o.n.value_or(10);
    check_precision(params.n_max + 1, "--n");
    params.lambda = parse_lambda_mode(o.lambda);
    params.seed = o.seed;

    std::vector<IdentityReport> reports;
    if (target == "all") {
        reports = verify_all(params);
    } else {
        reports.push_back(verify(target, params));
    }
    const Format format = parse_format(o.format);
    if (format == Format::json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto &rep : reports) {
            j.push_back(report_json(rep));
        }
        out << (target == "all" ? j : j[0]).dump(2) << '\n';
    } else {
        if (format == Format::csv) {
            out << "id,status,n,lhs,rhs\n";
        }
        for (const auto &rep : reports) {
            write_report(out, rep, format);
        }
    }
    const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.pass; });
    return pass ? exit_ok : exit_fail;
}

inline int cmd_eval(const std::string &text, const Options &o, std::ostream &out)
{
    check_precision(o.order, "--order");
    const auto lambda = parse_lambda_mode(o.lambda);
    const auto series = eval_expr(text, o.order);
    const auto seq = sequence(series);
    OutputRecord rec{std::nullopt, text, o.k, o.r, lambda_label(lambda), {}};
    for (std::size_t n = 0; n < series.precision(); ++n) {
        rec.rows.push_back({n, render_value(seq[n], lambda), render_value(series[n], lambda)});
    }
    write_record(out, rec, parse_format(o.format));
    return exit_ok;
}

inline constexpr const char *usage_text = "usage: dpb table FAMILY [--k INT] [--r INT] [--n INT] [--lambda RAT|symbolic]\n"
                                          "       dpb poly FAMILY --n INT [--k INT] [--r INT] [--lambda RAT|symbolic]\n"
                                          "       dpb verify ID|\"LHS == RHS\" [--k INT] [--r INT] [--n INT] [--order INT]\n"
                                          "                  [--lambda RAT|symbolic] [--seed INT]\n"
                                          "       dpb eval EXPR [--order INT] [--lambda RAT|symbolic]\n"
                                          "all commands take --format text|json|csv\n";

} // namespace detail

// Runs the command line `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    using namespace detail;
    CLI::App app{"Degenerate poly-Bernoulli numbers and identities, computed exactly", "dpb"};
    app.require_subcommand(1);

    Options o;
    std::string target;
    const std::vector<std::string> formats = {"text", "json", "csv"};
    std::string families_help = "one of:";
    for (auto f : all_families) {
        families_help += " " + std::string(family_name(f));
    }

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember(formats));
        sub->add_option("--lambda", o.lambda, "'symbolic' or a rational to substitute for lambda");
    };
    auto add_kr = [&](CLI::App *sub) {
        sub->add_option("--k", o.k, "polylogarithm order (any integer)");
        sub->add_option("--r", o.r, "order of the higher-order family (at least 1)");
    };

    auto *table = app.add_subcommand("table", "tabulate n! [t^n] of a family");
    table->add_option("family", target, families_help)->required();
    add_kr(table);
    table->add_option("--n", o.n, "number of rows (default 10)");
    add_common(table);

    auto *poly = app.add_subcommand("poly", "the n-th polynomial of a family, in x");
    poly->add_option("family", target, families_help)->required();
    add_kr(poly);
    poly->add_option("--n", o.n, "polynomial index")->required();
    add_common(poly);

    auto *verify_cmd = app.add_subcommand("verify", "check a catalog identity, 'all', or an equation 'lhs == rhs'");
    verify_cmd->add_option("target", target, "identity id, 'all', or an equation")->required();
    add_kr(verify_cmd);
    verify_cmd->add_option("--n", o.n, "check n = 0 .. N (default 10)");
    verify_cmd->add_option("--order", o.order, "series precision for equations (default 32)");
    verify_cmd->add_option("--seed", o.seed, "seed for the random samples (default 0)");
    add_common(verify_cmd);

    auto *eval_cmd = app.add_subcommand("eval", "expand an expression in t");
    eval_cmd->add_option("expr", target, "expression, e.g. 't/(elam(1)-1)'")->required();
    eval_cmd->add_option("--order", o.order, "number of coefficients (default 32)");
    add_common(eval_cmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n' << usage_text;
        return exit_usage;
    }

    try {
        if (o.r < 1) {
            throw InvalidArgument("--r must be at least 1");
        }
        if (table->parsed()) {
            return cmd_table(target, o, out);
        }
        if (poly->parsed()) {
            return cmd_poly(target, o, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(target, o, out);
        }
        return cmd_eval(target, o, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        if (dynamic_cast<const InvalidArgument *>(&e) || dynamic_cast<const UnknownIdentity *>(&e)) {
            err << usage_text;
        }
        return exit_usage;
    }
}

} // namespace dpb::cli

#endif // DPB_CLI_HPP
