#pragma once

/// Command-line front end: expand expressions, run the verification
/// registry, compare brute-force counts against closed formulas, and emit
/// text / JSON / CSV reports.
///
/// Subcommands (see `--help` for flags):
///   expand       evaluate an expression and print its q-expansion
///   verify       run registry cases and print verification reports
///   count        brute-force representation counts vs closed formula
///   convolution  divisor-sum convolution LHS vs closed RHS
///   fk           cusp-family combination for one k, with verdict
///   selftest     generator cross-checks (triple product, heat, lemmas)
///
/// Exit codes: 0 when every requested check passed, 1 when some check found
/// a mathematical mismatch, 2 on usage or parse errors.

#include "qsw/rational.hpp"
#include "qsw/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qsw {

/// Effective settings of one invocation after flag parsing.
struct RunConfig {
    Rational order;               ///< q-units; must be > 0
    long long grid_E = 48;        ///< exponent grid denominator (even, positive)
    int ring_M = 48;              ///< coefficient ring Q(zeta_M) (even, positive)
    int jobs = 1;                 ///< verify --all parallelism
    ReportFormat format = ReportFormat::text;
};

/// Run one invocation.  `args` excludes the program name.  The report goes
/// to `out` (or to the file named by --out), diagnostics to `err`.  Never
/// throws: every failure is folded into the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsw
