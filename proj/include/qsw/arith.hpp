#pragma once

/// Divisor-sum arithmetic and brute-force lattice counting.
///
/// Divisor functions evaluate over Q: every kind is 0 at arguments that are
/// not positive integers, which makes formulas like sigma(n/4) - sigma(n/8)
/// directly transcribable.  Representation counts enumerate lattice points
/// exhaustively (with exact per-variable bounds and an exact solve for the
/// final variable), entirely independently of the series engine, so the two
/// can vouch for each other.

#include "qsw/rational.hpp"
#include "qsw/series.hpp"

#include <functional>
#include <vector>

namespace qsw {

/// chi_8(m) = +1 for m = +-1 (mod 8), -1 for m = +-3 (mod 8), 0 for even m.
int char8(long long m);

struct DivisorFn {
    enum class Kind {
        sigma,            ///< sum of divisors
        sigma_star,       ///< sigma(n) - sigma(n/2)
        d_cong,           ///< #{d | n : d = j (mod k)}
        d_cong_star,      ///< d_cong(n) - d_cong(n/2)
        delta,            ///< d_{1,3} - d_{2,3}
        delta_star,       ///< d*_{1,3} - d*_{2,3}
        epsilon_star,     ///< d*_{1,6} + d*_{2,6} - d*_{4,6} - d*_{5,6}
        char8_n_over_d,   ///< sum_{d | n} (n/d) chi_8(d)
        char8_d,          ///< sum_{d | n} d chi_8(d)
    };

    Kind kind;
    long j = 0, k = 0; // residue data for d_cong / d_cong_star

    static DivisorFn sigma() { return {Kind::sigma}; }
    static DivisorFn sigma_star() { return {Kind::sigma_star}; }
    static DivisorFn d_cong(long j, long k) { return {Kind::d_cong, j, k}; }
    static DivisorFn d_cong_star(long j, long k) { return {Kind::d_cong_star, j, k}; }
    static DivisorFn delta() { return {Kind::delta}; }
    static DivisorFn delta_star() { return {Kind::delta_star}; }
    static DivisorFn epsilon_star() { return {Kind::epsilon_star}; }
    static DivisorFn char8_n_over_d() { return {Kind::char8_n_over_d}; }
    static DivisorFn char8_d() { return {Kind::char8_d}; }
};

/// Exact value at a rational argument (0 unless x is a positive integer).
Int divisor_eval(const DivisorFn& f, const Rational& x);
Int divisor_eval(const DivisorFn& f, long long n);

/// Quaternary (or binary-block) form description for rep_count.
struct QFormSpec {
    enum class Shape {
        square,     ///< c * x^2,  x in Z
        triangular, ///< c * x(x+1)/2,  x in Z (so each value is hit twice)
        hex_pair,   ///< c * (x^2 + x y + y^2),  (x, y) in Z^2
    };
    struct Term {
        long coeff;
        Shape shape;
    };
    std::vector<Term> terms;
};

/// Number of representations of n by the form, counting signs/branches.
long long rep_count(const QFormSpec& form, long long n);

/// sum_{k=1}^{n-1} f(k) g(n-k); defined for n >= 2.
Int conv_sum(const DivisorFn& f, const DivisorFn& g, long long n);
/// sum_{2k + l = n, k,l >= 1} f(k) g(l); defined for n >= 3.
Int weighted_conv_sum(const DivisorFn& f, const DivisorFn& g, long long n);

/// sum_{n >= n0} value(n) q^(emap(n)) assembled until emap(n) >= T.
/// emap must be strictly increasing (checked).
AnalyticSeries seq_to_series(const std::function<Rational(long long)>& value,
                             const std::function<Rational(long long)>& emap, long long n0,
                             const Rational& T, long long E = 48, int M = 48);

} // namespace qsw
