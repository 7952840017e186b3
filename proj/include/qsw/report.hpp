#pragma once

/// Exact rendering of workbench results as plain text, JSON, or CSV.
///
/// Everything prints as rationals or explicit zeta_M-basis tuples -- no
/// floating point appears anywhere -- and the rendered bytes depend only on
/// the values themselves, never on how they were computed, so reports are
/// reproducible across runs and thread counts.
///
/// The JSON schema for verification reports is stable:
///   [{name, order: {num, den}, pass,
///     first_failure: {exp_num, exp_den, lhs, rhs} | null}, ...]

#include "qsw/identities.hpp"
#include "qsw/series.hpp"

#include <string>
#include <vector>

namespace qsw {

enum class ReportFormat { text, json, csv };

/// Accepts "text", "json", "csv"; BadUsage otherwise.
ReportFormat parse_format(const std::string& name);

/// One row of a two-column comparison table (brute-force count vs closed
/// formula, or convolution LHS vs RHS).
struct TableRow {
    long long n = 0;
    Int lhs;
    Int rhs;
    bool match = false;
};

/// Expansion of an analytic series: pi-degree, validity, and every stored
/// term, exponents ascending.
std::string render_series(const AnalyticSeries& s, ReportFormat f);

/// Verification reports, in the order given.
std::string render_reports(const std::vector<VerifyReport>& reports, ReportFormat f);

/// Comparison table; lhs_label / rhs_label name the two value columns
/// (e.g. "count" / "formula").
std::string render_table(const std::string& lhs_label, const std::string& rhs_label,
                         const std::vector<TableRow>& rows, ReportFormat f);

/// Generator self-test outcomes.
std::string render_selftest(const std::vector<SelfTestResult>& results, ReportFormat f);

/// Expansion of the cusp-family combination for one k, plus an explicit
/// vanishes / nonzero verdict line.
std::string render_verdict_series(long k, const AnalyticSeries& s, ReportFormat f);

} // namespace qsw
