#pragma once

/// Exact arithmetic in cyclotomic fields Q(zeta_M).
///
/// Elements are stored on the power basis 1, x, ..., x^(phi(M)-1) modulo the
/// M-th cyclotomic polynomial, with arbitrary-precision rational coordinates,
/// and are reduced eagerly after every operation, so equality is coordinate
/// equality.  M must be even (so that -1 = zeta^(M/2) is sharp) and stays
/// desk-sized: the intended orders are 48 and lcm(4k, 24) for small odd
/// primes k.

#include "qsw/error.hpp"
#include "qsw/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsw {

/// Dense integer-coefficient polynomial, lowest degree first.  Zero is the
/// empty vector; otherwise the top coefficient is nonzero.
struct IntPolynomial {
    std::vector<Int> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool operator==(const IntPolynomial&) const = default;
    std::string str() const;
};

/// M-th cyclotomic polynomial via the Moebius product
/// prod_{d | M} (x^d - 1)^{mu(M/d)}, computed with exact division and cached.
/// Requires M >= 1.
const IntPolynomial& cyclo_poly(int M);

class CycloNum {
  public:
    CycloNum() = delete;

    static CycloNum zero(int M);
    static CycloNum one(int M);
    static CycloNum from_rational(int M, const Rational& r);
    /// zeta_M^k for any integer k (reduced mod M).
    static CycloNum root(int M, long k);

    int order() const { return order_; }
    /// Power-basis coordinates; always exactly phi(M) entries.
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a rational if it lies in the prime field.
    std::optional<Rational> as_rational() const;

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum&) const;
    CycloNum operator-(const CycloNum&) const;
    CycloNum operator*(const CycloNum&) const;
    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    CycloNum inv() const;
    CycloNum operator/(const CycloNum& b) const { return *this * b.inv(); }

    CycloNum operator*(const Rational&) const;
    CycloNum operator/(const Rational&) const;
    CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }

    bool operator==(const CycloNum&) const = default;

    /// Complex conjugation zeta |-> zeta^(-1) (a field automorphism).
    CycloNum conj() const;

    /// "3/2" for rationals, otherwise the full basis tuple, e.g.
    /// "zeta48[0,1,0,...,0]".
    std::string str() const;

  private:
    CycloNum(int order, std::vector<Rational> coords)
        : order_(order), coords_(std::move(coords)) {}

    int order_;
    std::vector<Rational> coords_;
};

/// sqrt(2) = zeta_M^(M/8) + zeta_M^(-M/8); requires 8 | M.
CycloNum sqrt2(int M);
/// sqrt(3) = zeta_M^(M/12) + zeta_M^(-M/12); requires 12 | M.
CycloNum sqrt3(int M);
/// i = zeta_M^(M/4); requires 4 | M.
CycloNum imag_unit(int M);

/// Horner evaluation of an integer polynomial at a ring element.
CycloNum eval(const IntPolynomial& p, const CycloNum& x);

/// Euler phi, by trial-division factorization (M is desk-sized).
int euler_phi(int M);

} // namespace qsw
