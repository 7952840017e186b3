#pragma once

/// Truncated Puiseux series in q with exact cyclotomic coefficients.
///
/// A QSeries lives on the exponent grid (1/E)Z: exponents are stored as
/// integer multiples n of 1/E (negative n allowed), coefficients in
/// Q(zeta_M).  Truncation is tracked by an exact rational `valid_to` V: the
/// series is a faithful expansion for every exponent e < V, and no term at
/// or above V is ever stored.  Validity propagates through arithmetic
/// (min for addition; min(V_f + ord g, V_g + ord f) for products; V - 2 ord f
/// for inverses), so downstream results never claim more precision than the
/// inputs support.
///
/// An AnalyticSeries is pi^p times a QSeries.  The pi-degree p is carried
/// symbolically, never numerically, which keeps every identity in the
/// workbench exact: both sides of a claimed identity must agree in p before
/// coefficients are even compared.

#include "qsw/cyclotomic.hpp"
#include "qsw/error.hpp"
#include "qsw/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace qsw {

class QSeries {
  public:
    using TermMap = std::map<long long, CycloNum>;

    QSeries() = delete;

    static QSeries zero(long long grid, int ring_order, const Rational& valid_to);
    /// Single term c * q^e; OffGrid unless e * grid is an integer.  A term at
    /// or above valid_to is silently absent (the series is still valid).
    static QSeries monomial(long long grid, int ring_order, const Rational& valid_to,
                            const Rational& exponent, const CycloNum& coeff);
    /// Adopt a raw grid-unit term map; zero coefficients and terms at or
    /// above valid_to are dropped.
    static QSeries from_terms(long long grid, int ring_order, const Rational& valid_to,
                              TermMap terms);

    long long grid() const { return grid_; }
    int ring_order() const { return ring_order_; }
    const Rational& valid_to() const { return valid_to_; }
    const TermMap& terms() const { return terms_; }

    /// True when no term is stored (i.e. the series vanishes below valid_to).
    bool is_zero() const { return terms_.empty(); }
    /// Least stored exponent; equals valid_to for the zero series.
    Rational ord() const;

    QSeries operator-() const;
    QSeries operator+(const QSeries&) const;
    QSeries operator-(const QSeries&) const;
    QSeries operator*(const QSeries&) const;
    QSeries scaled(const CycloNum&) const;
    QSeries scaled(const Rational&) const;
    /// Multiplicative inverse; requires a stored leading term (ZeroLeading
    /// otherwise).  Validity shrinks to V - 2 ord(f).
    QSeries inverse() const;
    QSeries operator/(const QSeries& g) const { return *this * g.inverse(); }
    /// tau -> k tau, i.e. e -> k e on exponents (k > 0); OffGrid if any
    /// stored exponent leaves the grid.  Validity becomes k V.
    QSeries rescaled_tau(const Rational& k) const;
    /// Same series with validity lowered to new_valid_to (<= current).
    QSeries truncated(const Rational& new_valid_to) const;

    /// Exact coefficient of q^e; BeyondValidity when e >= valid_to.
    CycloNum coeff_at(const Rational& e) const;

    bool operator==(const QSeries&) const = default;

    std::string str() const;

  private:
    QSeries(long long grid, int ring_order, Rational valid_to)
        : grid_(grid), ring_order_(ring_order), valid_to_(std::move(valid_to)) {}
    void insert_term(long long n, CycloNum c);

    long long grid_;
    int ring_order_;
    Rational valid_to_;
    TermMap terms_;
};

/// pi^pi_power * body.  Normalized so the zero body carries pi_power 0.
struct AnalyticSeries {
    int pi_power;
    QSeries body;

    static AnalyticSeries make(int pi_power, QSeries body);

    bool is_zero() const { return body.is_zero(); }

    AnalyticSeries operator-() const;
    /// PiPowerMismatch when both operands are nonzero with different
    /// pi-degree; validity still narrows to the min in every case.
    AnalyticSeries operator+(const AnalyticSeries&) const;
    AnalyticSeries operator-(const AnalyticSeries&) const;
    AnalyticSeries operator*(const AnalyticSeries&) const;
    AnalyticSeries operator/(const AnalyticSeries&) const;
    AnalyticSeries scaled(const CycloNum&) const;
    AnalyticSeries scaled(const Rational&) const;
    /// Multiply by pi^k.
    AnalyticSeries pi_shifted(int k) const;
    AnalyticSeries inverse() const;
    AnalyticSeries rescaled_tau(const Rational& k) const;
    AnalyticSeries truncated(const Rational& new_valid_to) const;

    std::string str() const;
};

/// d/dtau, acting as q^e -> 2 pi i e q^e (so pi-degree rises by one).
AnalyticSeries tau_deriv(const AnalyticSeries& f);

/// (d/dtau f) / f; the result has pi-degree 1 regardless of f's.  Constant
/// term of the body is 2 i ord(f).
AnalyticSeries tau_dlog(const AnalyticSeries& f);

/// Outcome of an exact comparison below T.
struct Divergence {
    Rational exponent;
    int lhs_pi, rhs_pi;
    CycloNum lhs, rhs;
};
struct CompareResult {
    bool equal;
    std::optional<Divergence> where;
};

/// Compare the expansions of f and g for all exponents e < T.  Both the
/// coefficients and the pi-degrees must agree wherever either side is
/// nonzero.  BeyondValidity when T exceeds either operand's validity.
CompareResult eq_upto(const AnalyticSeries& f, const AnalyticSeries& g, const Rational& T);

} // namespace qsw
