#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsw/series.hpp"

#include <random>

using namespace qsw;

namespace {

constexpr long long E = 48;
constexpr int M = 48;

QSeries mono(const Rational& e, const Rational& c, const Rational& V = rat(30)) {
    return QSeries::monomial(E, M, V, e, CycloNum::from_rational(M, c));
}

QSeries random_series(std::mt19937& rng, bool allow_negative = true) {
    std::uniform_int_distribution<int> nterms(0, 6), pos(allow_negative ? -24 : 0, 30 * 8),
        num(-4, 4), den(1, 2), root(0, 47), kind(0, 3);
    std::uniform_int_distribution<int> vnum(4, 40);
    QSeries s = QSeries::zero(E, M, rat(vnum(rng)));
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        CycloNum c = CycloNum::from_rational(M, rat(num(rng), den(rng)));
        if (kind(rng) == 0) c = c * CycloNum::root(M, root(rng));
        s = s + QSeries::monomial(E, M, s.valid_to(), rat(pos(rng), 8), c);
    }
    return s;
}

} // namespace

TEST_CASE("monomials and grid discipline") {
    QSeries s = mono(rat(1, 8), rat(-2));
    CHECK(s.terms().size() == 1);
    CHECK(s.terms().begin()->first == 6); // (1/8) * 48
    CHECK(s.ord() == rat(1, 8));
    CHECK(s.valid_to() == rat(30));

    CHECK_THROWS_AS(mono(rat(1, 5), rat(1)), Error); // 48/5 not integral
    try {
        mono(rat(1, 5), rat(1));
    } catch (const Error& e) {
        CHECK(e.code == Errc::off_grid);
    }

    // beyond-validity monomial is just absent
    CHECK(QSeries::monomial(E, M, rat(2), rat(3), CycloNum::one(M)).is_zero());
    // zero coefficient is never stored
    CHECK(mono(rat(1), rat(0)).is_zero());
}

TEST_CASE("addition narrows validity and cancels exactly") {
    QSeries a = mono(rat(0), rat(1), rat(10)) + mono(rat(2), rat(5), rat(10));
    QSeries b = mono(rat(2), rat(-5), rat(7));
    QSeries c = a + b;
    CHECK(c.valid_to() == rat(7));
    CHECK(c.terms().size() == 1);
    CHECK(c.coeff_at(rat(0)).as_rational() == rat(1));
    CHECK(c.coeff_at(rat(2)).is_zero());

    CHECK_THROWS_AS(a + QSeries::zero(24, M, rat(5)), Error);
    CHECK_THROWS_AS(a + QSeries::zero(E, 24, rat(5)), Error);
    try {
        a + QSeries::zero(24, M, rat(5));
    } catch (const Error& e) {
        CHECK(e.code == Errc::grid_mismatch);
    }
    try {
        a + QSeries::zero(E, 24, rat(5));
    } catch (const Error& e) {
        CHECK(e.code == Errc::ring_mismatch);
    }
}

TEST_CASE("multiplication: values and validity bookkeeping") {
    QSeries one = mono(rat(0), rat(1), rat(10));
    QSeries q = mono(rat(1), rat(1), rat(10));
    QSeries p = (one - q) * (one + q);
    CHECK(p.coeff_at(rat(0)).as_rational() == rat(1));
    CHECK(p.coeff_at(rat(1)).is_zero());
    CHECK(p.coeff_at(rat(2)).as_rational() == rat(-1));

    // min(V_f + ord g, V_g + ord f): (V=10, ord=2) x (V=8, ord=3) -> 10 + 3 vs 8 + 2
    QSeries f = QSeries::monomial(E, M, rat(10), rat(2), CycloNum::one(M));
    QSeries g = QSeries::monomial(E, M, rat(8), rat(3), CycloNum::one(M));
    CHECK((f * g).valid_to() == rat(10));
    CHECK((f * g).coeff_at(rat(5)).as_rational() == rat(1));

    // negative exponents participate fully
    QSeries qinv = QSeries::monomial(E, M, rat(10), rat(-1), CycloNum::one(M));
    CHECK((q * qinv).coeff_at(rat(0)).as_rational() == rat(1));

    // multiplying by an (apparently) zero series keeps validity honest:
    // zero valid to 5 with ord() = 5 times q^2 gives zero valid to 7... vs
    // f-side rule 10 + 5; min is 7.
    QSeries z5 = QSeries::zero(E, M, rat(5));
    CHECK((f * z5).is_zero());
    CHECK((f * z5).valid_to() == rat(7));
}

TEST_CASE("series inversion") {
    QSeries one = mono(rat(0), rat(1), rat(12));
    QSeries q = mono(rat(1), rat(1), rat(12));
    QSeries geom = (one - q).inverse();
    CHECK(geom.valid_to() == rat(12));
    for (int n = 0; n < 12; ++n) CHECK(geom.coeff_at(rat(n)).as_rational() == rat(1));

    // leading term q^2: validity of the inverse drops by 2 ord = 4
    QSeries f = mono(rat(2), rat(3), rat(12)) + mono(rat(5, 2), rat(1, 7), rat(12));
    QSeries fi = f.inverse();
    CHECK(fi.valid_to() == rat(8));
    CHECK(fi.ord() == rat(-2));
    AnalyticSeries prod = AnalyticSeries::make(0, f * fi);
    AnalyticSeries unit = AnalyticSeries::make(0, mono(rat(0), rat(1), rat(100)));
    CHECK(eq_upto(prod, unit, prod.body.valid_to()).equal);
    // inverse is involutive where defined
    CHECK(eq_upto(AnalyticSeries::make(0, fi.inverse()), AnalyticSeries::make(0, f), rat(8)).equal);

    CHECK_THROWS_AS(QSeries::zero(E, M, rat(3)).inverse(), Error);
    try {
        QSeries::zero(E, M, rat(3)).inverse();
    } catch (const Error& e) {
        CHECK(e.code == Errc::zero_leading);
    }
}

TEST_CASE("random algebra: commutativity, associativity, inverse round-trips") {
    std::mt19937 rng(20260816);
    for (int rep = 0; rep < 40; ++rep) {
        QSeries a = random_series(rng);
        QSeries b = random_series(rng);
        QSeries c = random_series(rng);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        // associativity compared on the common validity
        QSeries l = (a * b) * c, r = a * (b * c);
        Rational v = std::min(l.valid_to(), r.valid_to());
        CHECK(eq_upto(AnalyticSeries::make(0, l), AnalyticSeries::make(0, r), v).equal);
        QSeries dl = a * (b + c), dr = a * b + a * c;
        Rational dv = std::min(dl.valid_to(), dr.valid_to());
        CHECK(eq_upto(AnalyticSeries::make(0, dl), AnalyticSeries::make(0, dr), dv).equal);
    }
    for (int rep = 0; rep < 25; ++rep) {
        QSeries f = random_series(rng);
        if (f.is_zero()) continue;
        QSeries p = f * f.inverse();
        CHECK(p.coeff_at(rat(0)).as_rational() == rat(1));
        AnalyticSeries ap = AnalyticSeries::make(0, p);
        AnalyticSeries unit = AnalyticSeries::make(0, mono(rat(0), rat(1), rat(1000)));
        CHECK(eq_upto(ap, unit, p.valid_to()).equal);
    }
}

TEST_CASE("truncation consistency: computing low orders never depends on the cutoff") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 25; ++rep) {
        QSeries a = random_series(rng);
        QSeries b = random_series(rng);
        QSeries hi = a * b;
        QSeries lo = a.truncated(a.valid_to() - rat(2)) * b;
        Rational v = std::min(hi.valid_to(), lo.valid_to());
        CHECK(eq_upto(AnalyticSeries::make(0, hi), AnalyticSeries::make(0, lo), v).equal);
    }
}

TEST_CASE("tau rescaling") {
    QSeries s = mono(rat(1, 2), rat(3), rat(10));
    QSeries d = s.rescaled_tau(rat(2));
    CHECK(d.coeff_at(rat(1)).as_rational() == rat(3));
    CHECK(d.valid_to() == rat(20));
    QSeries h = s.rescaled_tau(rat(1, 2));
    CHECK(h.coeff_at(rat(1, 4)).as_rational() == rat(3));
    CHECK(h.valid_to() == rat(5));

    QSeries fine = mono(rat(1, 48), rat(1), rat(10));
    CHECK_THROWS_AS(fine.rescaled_tau(rat(1, 2)), Error); // 1/96 leaves the grid
    try {
        fine.rescaled_tau(rat(1, 2));
    } catch (const Error& e) {
        CHECK(e.code == Errc::off_grid);
    }
}

TEST_CASE("coefficient access respects validity") {
    QSeries s = mono(rat(2), rat(5), rat(10));
    CHECK(s.coeff_at(rat(2)).as_rational() == rat(5));
    CHECK(s.coeff_at(rat(7, 48)).is_zero());
    CHECK(s.coeff_at(rat(1, 96)).is_zero()); // off grid but below validity: zero
    CHECK_THROWS_AS(s.coeff_at(rat(10)), Error);
    CHECK_THROWS_AS(s.coeff_at(rat(11)), Error);
    try {
        s.coeff_at(rat(10));
    } catch (const Error& e) {
        CHECK(e.code == Errc::beyond_validity);
    }
    CHECK_THROWS_AS(s.truncated(rat(11)), Error);
}

TEST_CASE("pi-degree bookkeeping") {
    AnalyticSeries a = AnalyticSeries::make(1, mono(rat(1), rat(2)));
    AnalyticSeries b = AnalyticSeries::make(2, mono(rat(1), rat(3)));
    CHECK((a * b).pi_power == 3);
    CHECK_THROWS_AS(a + b, Error);
    try {
        a + b;
    } catch (const Error& e) {
        CHECK(e.code == Errc::pi_power_mismatch);
    }
    // adding zero is fine whatever the pi-degrees
    AnalyticSeries z = AnalyticSeries::make(0, QSeries::zero(E, M, rat(20)));
    CHECK((a + z).pi_power == 1);
    CHECK((a + z).body.valid_to() == rat(20));
    CHECK((z + b).pi_power == 2);
    // zero normalizes its pi-degree away
    CHECK(AnalyticSeries::make(5, QSeries::zero(E, M, rat(4))).pi_power == 0);
    CHECK((a - a).pi_power == 0);
    CHECK(a.inverse().pi_power == -1);
    CHECK(a.pi_shifted(3).pi_power == 4);
}

TEST_CASE("tau derivative and logarithmic derivative") {
    // d/dtau log q^(1/8) = 2 pi i / 8 = pi * (i/4)
    AnalyticSeries f = AnalyticSeries::make(0, mono(rat(1, 8), rat(-2), rat(6)));
    AnalyticSeries dl = tau_dlog(f);
    CHECK(dl.pi_power == 1);
    CHECK(dl.body.coeff_at(rat(0)) == imag_unit(M) * rat(1, 4));
    CHECK(dl.body.terms().size() == 1);

    // tau_deriv: q^e -> 2 i e q^e (with one extra pi)
    AnalyticSeries g = AnalyticSeries::make(0, mono(rat(0), rat(7), rat(6)) + mono(rat(3), rat(5), rat(6)));
    AnalyticSeries dg = tau_deriv(g);
    CHECK(dg.pi_power == 1);
    CHECK(dg.body.coeff_at(rat(0)).is_zero());
    CHECK(dg.body.coeff_at(rat(3)) == imag_unit(M) * rat(30));

    // dlog turns products into sums
    std::mt19937 rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        QSeries u = random_series(rng);
        QSeries v = random_series(rng);
        if (u.is_zero() || v.is_zero()) continue;
        AnalyticSeries au = AnalyticSeries::make(0, u), av = AnalyticSeries::make(0, v);
        AnalyticSeries lhs = tau_dlog(au * av);
        AnalyticSeries rhs = tau_dlog(au) + tau_dlog(av);
        Rational t = std::min(lhs.body.valid_to(), rhs.body.valid_to());
        CHECK(eq_upto(lhs, rhs, t).equal);
    }

    // constants drop out of dlog
    AnalyticSeries c = AnalyticSeries::make(0, mono(rat(0), rat(7), rat(1000)));
    AnalyticSeries fg = AnalyticSeries::make(0, mono(rat(1, 8), rat(-2), rat(6)));
    CHECK(eq_upto(tau_dlog(c * fg), tau_dlog(fg), rat(5)).equal);
}

TEST_CASE("exact comparison reports the first divergent exponent") {
    QSeries a = mono(rat(0), rat(1), rat(10)) + mono(rat(3, 2), rat(4), rat(10)) +
                mono(rat(5), rat(2), rat(10));
    QSeries b = mono(rat(0), rat(1), rat(10)) + mono(rat(3, 2), rat(4), rat(10)) +
                mono(rat(5), rat(3), rat(10));
    AnalyticSeries fa = AnalyticSeries::make(0, a), fb = AnalyticSeries::make(0, b);
    CHECK(eq_upto(fa, fb, rat(5)).equal);
    CompareResult r = eq_upto(fa, fb, rat(6));
    CHECK(!r.equal);
    REQUIRE(r.where.has_value());
    CHECK(r.where->exponent == rat(5));
    CHECK(r.where->lhs.as_rational() == rat(2));
    CHECK(r.where->rhs.as_rational() == rat(3));

    // pi-degree disagreement on a nonzero coefficient is a divergence
    AnalyticSeries pa = AnalyticSeries::make(1, a);
    CompareResult rp = eq_upto(pa, fa, rat(1));
    CHECK(!rp.equal);
    CHECK(rp.where->exponent == rat(0));
    CHECK(rp.where->lhs_pi == 1);
    CHECK(rp.where->rhs_pi == 0);

    CHECK_THROWS_AS(eq_upto(fa, fb, rat(11)), Error);

    // comparison never looks at or past T itself
    QSeries c = mono(rat(0), rat(1), rat(10));
    QSeries d = mono(rat(0), rat(1), rat(10)) + mono(rat(5), rat(9), rat(10));
    CHECK(eq_upto(AnalyticSeries::make(0, c), AnalyticSeries::make(0, d), rat(5)).equal);
    CHECK(!eq_upto(AnalyticSeries::make(0, c), AnalyticSeries::make(0, d), rat(11, 2)).equal);
}
