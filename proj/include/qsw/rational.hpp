#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace qsw {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational from a (possibly non-reduced) fraction.
inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// The integer value of r if r is a (not necessarily positive) integer.
inline std::optional<Int> as_int(const Rational& r) {
    if (!is_integer(r)) return std::nullopt;
    return r.get_num();
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// "p" or "p/q", always in lowest terms.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

} // namespace qsw
