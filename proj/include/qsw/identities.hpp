#pragma once

/// Verification registry: every identity the workbench certifies, addressed
/// by a stable name.  Each case re-derives both sides of its statement from
/// independent generators (defining sums, eta products, brute-force lattice
/// counts, divisor sums) and compares them exactly — coefficient by
/// coefficient in Q(zeta_M), pi-degree included — up to a per-case order.
///
/// Case kinds and the meaning of a verification order:
///   series    order is a q-exponent bound T: both sides agree below q^T
///   sequence  order is an index bound N: both sides agree for all n <= N
///   jet       order is a q-exponent bound applied to every z^m coefficient
///
/// An explicit order override raises (never lowers) the default of the parts
/// matching the case's kind, so a pass always certifies at least the
/// documented default range.

#include "qsw/arith.hpp"
#include "qsw/series.hpp"
#include "qsw/thetagen.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsw {

enum class IdentityKind { series, sequence, jet };

/// Registry metadata for one verifiable identity.
struct IdentityCase {
    std::string name;
    IdentityKind kind;
    Rational default_order;
};

/// Where (and how) a failed comparison first diverged.  For series and jet
/// cases `exponent` is the q-exponent (jet failures prefix the sides with
/// "z^m: "); for sequence cases it is the index n.  The side strings carry
/// the exact values, pi-degree included.
struct VerifyFailure {
    Rational exponent;
    std::string lhs;
    std::string rhs;

    bool operator==(const VerifyFailure&) const = default;
};

struct VerifyReport {
    std::string name;
    Rational order; ///< effective order of the case's primary checks
    bool pass = false;
    std::optional<VerifyFailure> failure;

    bool operator==(const VerifyReport&) const = default;
};

/// All identity cases, in fixed registry order.
const std::vector<IdentityCase>& registry();

/// Run one case.  UnknownIdentity for an unregistered name.  An explicit
/// order is combined as max(order, default).
VerifyReport verify(const std::string& name,
                    const std::optional<Rational>& order = std::nullopt);

/// Run every registered case, reports in registry order.  `jobs` worker
/// threads may be used; the reports are identical regardless of jobs.
std::vector<VerifyReport> verify_all(const std::optional<Rational>& order = std::nullopt,
                                     int jobs = 1);

/// Deliberately perturbed variant of a true identity (one right-hand-side
/// coefficient is off by one).  Exercises the failure path end to end: the
/// report comes back pass = false with the exact first divergent exponent.
VerifyReport verify_negative_control(const std::optional<Rational>& order = std::nullopt);

/// The weight-2 cusp-form combination
///   d/dtau log(eta(k tau)/eta(tau))
///     + (1/(2 pi i (k-2))) sum_{l=0}^{(k-3)/2} (theta'/theta[1,(1+2l)/k])^2
/// expanded to validity T on the E = 24 grid over Q(zeta_lcm(4k,24)).
/// Vanishes identically (checked exactly to q^20) for every supported k.
/// UnsupportedK unless k is one of {3,5,7,11,13}.
AnalyticSeries fk_cusp_series(long k, const Rational& T);

/// A representation-count theorem: rep_count(form, n) == formula(n) for all
/// n >= n_start (verified up to default_max by the registry case named by
/// identity_name).
struct FormTheorem {
    std::string name;          ///< CLI form key, e.g. "s4", "m1244"
    std::string identity_name; ///< registry case covering this theorem
    QFormSpec form;
    long long n_start = 0;
    long long default_max = 0;
    std::function<Int(long long)> formula;
};
const std::vector<FormTheorem>& form_theorems();

/// A divisor-sum convolution theorem: lhs(n) == rhs(n) for n >= n_start.
struct ConvTheorem {
    std::string name; ///< also the registry case name
    long long n_start = 0;
    long long default_max = 0;
    std::function<Int(long long)> lhs;
    std::function<Int(long long)> rhs;
};
const std::vector<ConvTheorem>& conv_theorems();

/// Structural cross-checks of the generators themselves: defining sum vs
/// triple product for every characteristic in use, the heat equation,
/// the two square/product doubling lemmas, and the derivative product
/// formula.  All checked to q-order T.
struct SelfTestResult {
    std::string name;
    bool pass = false;
};
std::vector<SelfTestResult> selftest(const Rational& T);

} // namespace qsw
