#include "qsw/cli.hpp"

#include "qsw/dsl.hpp"
#include "qsw/error.hpp"
#include "qsw/identities.hpp"
#include "qsw/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

namespace qsw {

namespace {

struct Outcome {
    std::string report;
    int code = 0;
};

Rational parse_rational_arg(const std::string& flag, const std::string& text) {
    static const std::regex shape(R"(^-?[0-9]+(/[0-9]+)?$)");
    if (!std::regex_match(text, shape))
        throw Error(Errc::bad_usage,
                    flag + " expects an integer or fraction like 61/2, got '" + text + "'");
    const auto slash = text.find('/');
    Int num(text.substr(0, slash));
    Int den = slash == std::string::npos ? Int(1) : Int(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::bad_usage, flag + " has a zero denominator");
    return rat(num, den);
}

Rational positive_order(const std::string& flag, const std::string& text) {
    Rational r = parse_rational_arg(flag, text);
    if (r <= 0) throw Error(Errc::bad_usage, flag + " must be positive, got '" + text + "'");
    return r;
}

void check_even_positive(const std::string& flag, long long v) {
    if (v <= 0 || v % 2 != 0)
        throw Error(Errc::bad_usage, flag + " must be even and positive, got " +
                                         std::to_string(v));
}

// Leaves are generated with two q-orders of slack so that divisions inside
// the expression do not eat into the requested display range; the honest
// validity is still reported when the slack was not enough.
Outcome do_expand(const std::string& expr, const RunConfig& cfg) {
    const Rational generate_to = cfg.order + 2;
    AnalyticSeries s = eval(expr, generate_to, cfg.grid_E, cfg.ring_M);
    if (s.body.valid_to() > cfg.order) s = s.truncated(cfg.order);
    return {render_series(s, cfg.format), 0};
}

Outcome do_verify(bool all, const std::vector<std::string>& names, bool negative_control,
                  const std::optional<Rational>& order, const RunConfig& cfg) {
    const int modes = (all ? 1 : 0) + (names.empty() ? 0 : 1) + (negative_control ? 1 : 0);
    if (modes != 1)
        throw Error(Errc::bad_usage,
                    "choose exactly one of --all, --name NAME, --negative-control");
    std::vector<VerifyReport> reports;
    if (negative_control) {
        reports.push_back(verify_negative_control(order));
    } else if (all) {
        reports = verify_all(order, cfg.jobs);
    } else {
        reports.reserve(names.size());
        for (const auto& name : names) reports.push_back(verify(name, order));
    }
    const bool ok =
        std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.pass; });
    return {render_reports(reports, cfg.format), ok ? 0 : 1};
}

Outcome do_count(const std::string& form_name, long long max_n, const RunConfig& cfg) {
    const FormTheorem* theorem = nullptr;
    std::string known;
    for (const auto& t : form_theorems()) {
        if (!known.empty()) known += ", ";
        known += t.name;
        if (t.name == form_name) theorem = &t;
    }
    if (!theorem)
        throw Error(Errc::bad_usage, "unknown form '" + form_name + "'; known forms: " + known);
    if (max_n < theorem->n_start)
        throw Error(Errc::bad_usage, "--max must be at least " +
                                         std::to_string(theorem->n_start) + " for form '" +
                                         form_name + "'");
    std::vector<TableRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n - theorem->n_start + 1));
    for (long long n = theorem->n_start; n <= max_n; ++n) {
        Int brute(static_cast<long>(rep_count(theorem->form, n)));
        Int formula = theorem->formula(n);
        const bool match = brute == formula;
        rows.push_back(TableRow{n, std::move(brute), std::move(formula), match});
    }
    const bool ok =
        std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.match; });
    return {render_table("count", "formula", rows, cfg.format), ok ? 0 : 1};
}

Outcome do_convolution(const std::string& name, long long max_n, const RunConfig& cfg) {
    const ConvTheorem* theorem = nullptr;
    std::string known;
    for (const auto& t : conv_theorems()) {
        if (!known.empty()) known += ", ";
        known += t.name;
        if (t.name == name) theorem = &t;
    }
    if (!theorem)
        throw Error(Errc::bad_usage, "unknown theorem '" + name + "'; known names: " + known);
    if (max_n < theorem->n_start)
        throw Error(Errc::bad_usage, "--max must be at least " +
                                         std::to_string(theorem->n_start) + " for '" + name +
                                         "'");
    std::vector<TableRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n - theorem->n_start + 1));
    for (long long n = theorem->n_start; n <= max_n; ++n) {
        Int lhs = theorem->lhs(n);
        Int rhs = theorem->rhs(n);
        const bool match = lhs == rhs;
        rows.push_back(TableRow{n, std::move(lhs), std::move(rhs), match});
    }
    const bool ok =
        std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.match; });
    return {render_table("lhs", "rhs", rows, cfg.format), ok ? 0 : 1};
}

Outcome do_fk(long k, const RunConfig& cfg) {
    AnalyticSeries s = fk_cusp_series(k, cfg.order);
    return {render_verdict_series(k, s, cfg.format), 0};
}

Outcome do_selftest(const RunConfig& cfg) {
    std::vector<SelfTestResult> results = selftest(cfg.order);
    const bool ok = std::all_of(results.begin(), results.end(),
                                [](const SelfTestResult& r) { return r.pass; });
    return {render_selftest(results, cfg.format), ok ? 0 : 1};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series workbench: expand expressions, verify the identity "
                 "registry, and cross-check brute-force counts against closed formulas.",
                 "qsw"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string out_path;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Report format: text, json, or csv")
            ->capture_default_str();
        sub->add_option("--out", out_path, "Write the report to PATH instead of stdout");
    };

    std::string expand_expr, expand_order;
    long long grid_E = 48;
    int ring_M = 48;
    CLI::App* sc_expand =
        app.add_subcommand("expand", "Evaluate an expression and print its q-expansion");
    sc_expand->add_option("expr", expand_expr, "Expression, e.g. \"theta[0,0](2t)\"")->required();
    sc_expand->add_option("--order", expand_order, "Display terms below this q-order (rational)")
        ->required();
    sc_expand->add_option("--grid", grid_E, "Exponent grid denominator E")->capture_default_str();
    sc_expand->add_option("--ring", ring_M, "Coefficient ring order M")->capture_default_str();
    add_common(sc_expand);

    bool verify_all_flag = false, verify_negative = false;
    std::vector<std::string> verify_names;
    std::string verify_order;
    int jobs = 1;
    CLI::App* sc_verify =
        app.add_subcommand("verify", "Run registry cases and print verification reports");
    sc_verify->add_flag("--all", verify_all_flag, "Run every registered case");
    sc_verify->add_option("--name", verify_names, "Run the named case (repeatable)");
    sc_verify->add_flag("--negative-control", verify_negative,
                        "Run the deliberately perturbed fixture (expected to fail)");
    sc_verify->add_option("--order", verify_order,
                          "Raise the verification order (never lowers the default)");
    sc_verify->add_option("--jobs", jobs, "Worker threads for --all")->capture_default_str();
    add_common(sc_verify);

    std::string count_form;
    long long count_max = 0;
    CLI::App* sc_count = app.add_subcommand(
        "count", "Brute-force representation counts against the closed formula");
    sc_count->add_option("--form", count_form, "Form name, e.g. s4, t4, m1244")->required();
    sc_count->add_option("--max", count_max, "Last index n to tabulate")->required();
    add_common(sc_count);

    std::string conv_name;
    long long conv_max = 0;
    CLI::App* sc_conv = app.add_subcommand(
        "convolution", "Divisor-sum convolution LHS against its closed RHS");
    sc_conv->add_option("--name", conv_name, "Theorem name, e.g. conv_delta_delta")->required();
    sc_conv->add_option("--max", conv_max, "Last index n to tabulate")->required();
    add_common(sc_conv);

    long fk_k = 0;
    std::string fk_order;
    CLI::App* sc_fk = app.add_subcommand(
        "fk", "Cusp-family combination for one k, with vanishing verdict");
    sc_fk->add_option("--k", fk_k, "Odd prime k in {3, 5, 7, 11, 13}")->required();
    sc_fk->add_option("--order", fk_order, "Expand below this q-order (rational)")->required();
    add_common(sc_fk);

    std::string selftest_order = "8";
    CLI::App* sc_selftest = app.add_subcommand(
        "selftest", "Generator cross-checks: triple product, heat equation, lemmas");
    sc_selftest->add_option("--order", selftest_order, "q-order of every cross-check")
        ->capture_default_str();
    add_common(sc_selftest);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        cfg.format = parse_format(format_name);
        cfg.grid_E = grid_E;
        cfg.ring_M = ring_M;
        cfg.jobs = jobs;

        Outcome outcome;
        if (app.got_subcommand(sc_expand)) {
            cfg.order = positive_order("--order", expand_order);
            check_even_positive("--grid", cfg.grid_E);
            check_even_positive("--ring", cfg.ring_M);
            outcome = do_expand(expand_expr, cfg);
        } else if (app.got_subcommand(sc_verify)) {
            if (cfg.jobs < 1 || cfg.jobs > 256)
                throw Error(Errc::bad_usage, "--jobs must be between 1 and 256");
            std::optional<Rational> order;
            if (!verify_order.empty()) order = positive_order("--order", verify_order);
            outcome = do_verify(verify_all_flag, verify_names, verify_negative, order, cfg);
        } else if (app.got_subcommand(sc_count)) {
            outcome = do_count(count_form, count_max, cfg);
        } else if (app.got_subcommand(sc_conv)) {
            outcome = do_convolution(conv_name, conv_max, cfg);
        } else if (app.got_subcommand(sc_fk)) {
            cfg.order = positive_order("--order", fk_order);
            outcome = do_fk(fk_k, cfg);
        } else {
            cfg.order = positive_order("--order", selftest_order);
            outcome = do_selftest(cfg);
        }

        if (out_path.empty()) {
            out << outcome.report;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw Error(Errc::bad_usage, "cannot open '" + out_path + "' for writing");
            file << outcome.report;
            file.flush();
            if (!file) throw Error(Errc::bad_usage, "failed writing '" + out_path + "'");
        }
        return outcome.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qsw
