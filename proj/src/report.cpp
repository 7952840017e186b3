#include "qsw/report.hpp"

#include "qsw/error.hpp"

#include <json.hpp>

#include <sstream>

namespace qsw {

namespace {

using json = nlohmann::ordered_json;

// A field is quoted only when it must be, so simple values stay bare and the
// bytes stay stable.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json json_int(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

json json_rat(const Rational& r) {
    return json{{"num", json_int(Int(r.get_num()))}, {"den", json_int(Int(r.get_den()))}};
}

Rational term_exponent(const QSeries& body, long long grid_units) {
    return rat(Int(static_cast<long>(grid_units)), Int(static_cast<long>(body.grid())));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void series_text_lines(std::ostringstream& out, const AnalyticSeries& s) {
    out << "pi-degree: " << s.pi_power << "\n";
    out << "valid-to: " << s.body.valid_to().get_str() << "\n";
    if (s.is_zero()) {
        out << "(zero)\n";
        return;
    }
    for (const auto& [n, c] : s.body.terms())
        out << "q^" << term_exponent(s.body, n).get_str() << ": " << c.str() << "\n";
}

json series_json_object(const AnalyticSeries& s) {
    json terms = json::array();
    for (const auto& [n, c] : s.body.terms())
        terms.push_back(json{{"exp", json_rat(term_exponent(s.body, n))}, {"coeff", c.str()}});
    return json{{"pi_power", s.pi_power},
                {"valid_to", json_rat(s.body.valid_to())},
                {"terms", std::move(terms)}};
}

void series_csv_rows(std::ostringstream& out, const AnalyticSeries& s) {
    out << "exponent,coefficient\n";
    for (const auto& [n, c] : s.body.terms())
        out << term_exponent(s.body, n).get_str() << "," << csv_field(c.str()) << "\n";
}

} // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw Error(Errc::bad_usage, "unknown format '" + name + "' (expected text, json, or csv)");
}

std::string render_series(const AnalyticSeries& s, ReportFormat f) {
    std::ostringstream out;
    switch (f) {
    case ReportFormat::text:
        series_text_lines(out, s);
        break;
    case ReportFormat::json:
        return dump(series_json_object(s));
    case ReportFormat::csv:
        series_csv_rows(out, s);
        break;
    }
    return out.str();
}

std::string render_reports(const std::vector<VerifyReport>& reports, ReportFormat f) {
    std::ostringstream out;
    switch (f) {
    case ReportFormat::text: {
        std::size_t passed = 0;
        for (const auto& r : reports) {
            if (r.pass) {
                ++passed;
                out << "[PASS] " << r.name << " order=" << r.order.get_str() << "\n";
            } else {
                out << "[FAIL] " << r.name << " order=" << r.order.get_str();
                if (r.failure) {
                    out << " diverges at " << r.failure->exponent.get_str()
                        << ": lhs = " << r.failure->lhs << ", rhs = " << r.failure->rhs;
                }
                out << "\n";
            }
        }
        out << passed << "/" << reports.size() << " passed\n";
        break;
    }
    case ReportFormat::json: {
        json arr = json::array();
        for (const auto& r : reports) {
            json o{{"name", r.name}, {"order", json_rat(r.order)}, {"pass", r.pass}};
            if (r.failure) {
                o["first_failure"] =
                    json{{"exp_num", json_int(Int(r.failure->exponent.get_num()))},
                         {"exp_den", json_int(Int(r.failure->exponent.get_den()))},
                         {"lhs", r.failure->lhs},
                         {"rhs", r.failure->rhs}};
            } else {
                o["first_failure"] = nullptr;
            }
            arr.push_back(std::move(o));
        }
        return dump(arr);
    }
    case ReportFormat::csv: {
        out << "name,order,pass,exponent,lhs,rhs\n";
        for (const auto& r : reports) {
            out << csv_field(r.name) << "," << r.order.get_str() << ","
                << (r.pass ? "true" : "false") << ",";
            if (r.failure) {
                out << r.failure->exponent.get_str() << "," << csv_field(r.failure->lhs) << ","
                    << csv_field(r.failure->rhs);
            } else {
                out << ",,";
            }
            out << "\n";
        }
        break;
    }
    }
    return out.str();
}

std::string render_table(const std::string& lhs_label, const std::string& rhs_label,
                         const std::vector<TableRow>& rows, ReportFormat f) {
    std::ostringstream out;
    switch (f) {
    case ReportFormat::text: {
        out << "n\t" << lhs_label << "\t" << rhs_label << "\tmatch\n";
        std::size_t bad = 0;
        for (const auto& row : rows) {
            if (!row.match) ++bad;
            out << row.n << "\t" << row.lhs.get_str() << "\t" << row.rhs.get_str() << "\t"
                << (row.match ? "ok" : "MISMATCH") << "\n";
        }
        if (bad == 0)
            out << "all " << rows.size() << " rows match\n";
        else
            out << bad << " of " << rows.size() << " rows MISMATCH\n";
        break;
    }
    case ReportFormat::json: {
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back(json{{"n", row.n},
                               {lhs_label, json_int(row.lhs)},
                               {rhs_label, json_int(row.rhs)},
                               {"match", row.match}});
        return dump(arr);
    }
    case ReportFormat::csv: {
        out << "n," << csv_field(lhs_label) << "," << csv_field(rhs_label) << ",match\n";
        for (const auto& row : rows)
            out << row.n << "," << row.lhs.get_str() << "," << row.rhs.get_str() << ","
                << (row.match ? "true" : "false") << "\n";
        break;
    }
    }
    return out.str();
}

std::string render_selftest(const std::vector<SelfTestResult>& results, ReportFormat f) {
    std::ostringstream out;
    switch (f) {
    case ReportFormat::text: {
        std::size_t passed = 0;
        for (const auto& r : results) {
            if (r.pass) ++passed;
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
        }
        out << passed << "/" << results.size() << " passed\n";
        break;
    }
    case ReportFormat::json: {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(json{{"name", r.name}, {"pass", r.pass}});
        return dump(arr);
    }
    case ReportFormat::csv: {
        out << "name,pass\n";
        for (const auto& r : results)
            out << csv_field(r.name) << "," << (r.pass ? "true" : "false") << "\n";
        break;
    }
    }
    return out.str();
}

std::string render_verdict_series(long k, const AnalyticSeries& s, ReportFormat f) {
    std::ostringstream out;
    const bool vanishes = s.is_zero();
    switch (f) {
    case ReportFormat::text: {
        out << "k: " << k << "\n";
        series_text_lines(out, s);
        if (vanishes)
            out << "verdict: vanishes identically below q^" << s.body.valid_to().get_str()
                << "\n";
        else
            out << "verdict: nonzero, first term at q^" << s.body.ord().get_str() << "\n";
        break;
    }
    case ReportFormat::json: {
        json o = series_json_object(s);
        json full{{"k", k}};
        for (auto& [key, value] : o.items()) full[key] = std::move(value);
        full["vanishes"] = vanishes;
        return dump(full);
    }
    case ReportFormat::csv: {
        series_csv_rows(out, s);
        out << "verdict," << (vanishes ? "zero" : "nonzero") << "\n";
        break;
    }
    }
    return out.str();
}

} // namespace qsw
