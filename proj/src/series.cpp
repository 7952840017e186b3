#include "qsw/series.hpp"

#include <sstream>
#include <vector>

namespace qsw {

namespace {

// Smallest integer b with b/E >= V, i.e. ceil(V*E).  Terms live at grid
// positions n < b.
long long grid_ceil(const Rational& V, long long E) {
    Rational ve = V * Rational(static_cast<long>(E));
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), ve.get_num_mpz_t(), ve.get_den_mpz_t());
    if (!q.fits_slong_p()) throw Error(Errc::off_grid, "validity bound out of range");
    return q.get_si();
}

void check_compatible(const QSeries& a, const QSeries& b) {
    if (a.grid() != b.grid())
        throw Error(Errc::grid_mismatch, "exponent grids differ: 1/" + std::to_string(a.grid()) +
                                             " vs 1/" + std::to_string(b.grid()));
    if (a.ring_order() != b.ring_order())
        throw Error(Errc::ring_mismatch,
                    "coefficient rings differ: Q(zeta_" + std::to_string(a.ring_order()) +
                        ") vs Q(zeta_" + std::to_string(b.ring_order()) + ")");
}

std::string exponent_str(long long n, long long E) {
    Rational e = rat(n, E);
    if (e == 0) return "";
    std::string s = "q^(" + rat_str(e) + ")";
    return s;
}

} // namespace

void QSeries::insert_term(long long n, CycloNum c) {
    if (c.is_zero()) return;
    if (c.order() != ring_order_)
        throw Error(Errc::ring_mismatch, "coefficient ring Q(zeta_" + std::to_string(c.order()) +
                                             ") does not match series ring Q(zeta_" +
                                             std::to_string(ring_order_) + ")");
    if (n >= grid_ceil(valid_to_, grid_)) return;
    terms_.insert_or_assign(n, std::move(c));
}

QSeries QSeries::zero(long long grid, int ring_order, const Rational& valid_to) {
    if (grid < 1) throw Error(Errc::off_grid, "grid denominator must be >= 1");
    CycloNum::zero(ring_order); // validates the ring order
    return QSeries(grid, ring_order, valid_to);
}

QSeries QSeries::monomial(long long grid, int ring_order, const Rational& valid_to,
                          const Rational& exponent, const CycloNum& coeff) {
    QSeries s = zero(grid, ring_order, valid_to);
    Rational ne = exponent * Rational(static_cast<long>(grid));
    auto n = as_int(ne);
    if (!n)
        throw Error(Errc::off_grid,
                    "exponent " + rat_str(exponent) + " not on grid (1/" + std::to_string(grid) + ")Z");
    if (!n->fits_slong_p()) throw Error(Errc::off_grid, "exponent out of range");
    s.insert_term(n->get_si(), coeff);
    return s;
}

QSeries QSeries::from_terms(long long grid, int ring_order, const Rational& valid_to,
                            TermMap terms) {
    QSeries s = zero(grid, ring_order, valid_to);
    for (auto& [n, c] : terms) s.insert_term(n, std::move(c));
    return s;
}

Rational QSeries::ord() const {
    if (terms_.empty()) return valid_to_;
    return rat(terms_.begin()->first, grid_);
}

QSeries QSeries::operator-() const {
    QSeries r(grid_, ring_order_, valid_to_);
    for (const auto& [n, c] : terms_) r.terms_.emplace(n, -c);
    return r;
}

QSeries QSeries::operator+(const QSeries& b) const {
    check_compatible(*this, b);
    Rational v = std::min(valid_to_, b.valid_to_);
    QSeries r = zero(grid_, ring_order_, v);
    auto it = terms_.begin();
    auto jt = b.terms_.begin();
    while (it != terms_.end() || jt != b.terms_.end()) {
        if (jt == b.terms_.end() || (it != terms_.end() && it->first < jt->first)) {
            r.insert_term(it->first, it->second);
            ++it;
        } else if (it == terms_.end() || jt->first < it->first) {
            r.insert_term(jt->first, jt->second);
            ++jt;
        } else {
            r.insert_term(it->first, it->second + jt->second);
            ++it, ++jt;
        }
    }
    return r;
}

QSeries QSeries::operator-(const QSeries& b) const { return *this + (-b); }

QSeries QSeries::operator*(const QSeries& b) const {
    check_compatible(*this, b);
    // valid_to = min(V_f + ord g, V_g + ord f); ord of a zero series is its
    // validity, which makes products with (apparent) zero degrade gracefully.
    Rational v = std::min(valid_to_ + b.ord(), b.valid_to_ + ord());
    QSeries r = zero(grid_, ring_order_, v);
    long long bound = grid_ceil(v, grid_);
    TermMap acc;
    for (const auto& [n, cn] : terms_) {
        for (const auto& [m, cm] : b.terms_) {
            long long t = n + m;
            if (t >= bound) break; // b.terms_ ascending: later m only larger
            CycloNum prod = cn * cm;
            auto it = acc.find(t);
            if (it == acc.end())
                acc.emplace(t, std::move(prod));
            else
                it->second += prod;
        }
    }
    for (auto& [n, c] : acc) r.insert_term(n, std::move(c));
    return r;
}

QSeries QSeries::scaled(const CycloNum& s) const {
    QSeries r = zero(grid_, ring_order_, valid_to_);
    if (s.is_zero()) return r;
    for (const auto& [n, c] : terms_) r.insert_term(n, c * s);
    return r;
}

QSeries QSeries::scaled(const Rational& s) const {
    return scaled(CycloNum::from_rational(ring_order_, s));
}

QSeries QSeries::inverse() const {
    if (terms_.empty())
        throw Error(Errc::zero_leading, "inverse needs a leading term (series is zero to q^(" +
                                            rat_str(valid_to_) + "))");
    const long long na = terms_.begin()->first;
    const Rational a = rat(na, grid_);
    const Rational v_out = valid_to_ - a - a;
    QSeries r = zero(grid_, ring_order_, v_out);
    // Output offsets t: term exponent (t - na)/E must stay below v_out.
    long long L = grid_ceil(v_out, grid_) + na;
    if (L <= 0) return r;

    const CycloNum lead_inv = terms_.begin()->second.inv();
    std::vector<CycloNum> g;
    g.reserve(static_cast<size_t>(L));
    g.push_back(lead_inv);
    for (long long t = 1; t < L; ++t) {
        CycloNum s = CycloNum::zero(ring_order_);
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
            long long k = it->first - na;
            if (k > t) break;
            s += it->second * g[static_cast<size_t>(t - k)];
        }
        g.push_back((-s) * lead_inv);
    }
    for (long long t = 0; t < L; ++t) r.insert_term(t - na, std::move(g[static_cast<size_t>(t)]));
    return r;
}

QSeries QSeries::rescaled_tau(const Rational& k) const {
    if (k <= 0) throw Error(Errc::off_grid, "tau rescale factor must be positive");
    QSeries r = zero(grid_, ring_order_, valid_to_ * k);
    for (const auto& [n, c] : terms_) {
        Rational nk = Rational(static_cast<long>(n)) * k;
        auto n2 = as_int(nk);
        if (!n2)
            throw Error(Errc::off_grid, "exponent " + rat_str(rat(n, grid_)) + " leaves grid (1/" +
                                            std::to_string(grid_) + ")Z under tau -> " +
                                            rat_str(k) + " tau");
        if (!n2->fits_slong_p()) throw Error(Errc::off_grid, "exponent out of range");
        r.insert_term(n2->get_si(), c);
    }
    return r;
}

QSeries QSeries::truncated(const Rational& new_valid_to) const {
    if (new_valid_to > valid_to_)
        throw Error(Errc::beyond_validity, "cannot extend validity from q^(" + rat_str(valid_to_) +
                                               ") to q^(" + rat_str(new_valid_to) + ")");
    QSeries r = zero(grid_, ring_order_, new_valid_to);
    for (const auto& [n, c] : terms_) r.insert_term(n, c);
    return r;
}

CycloNum QSeries::coeff_at(const Rational& e) const {
    if (e >= valid_to_)
        throw Error(Errc::beyond_validity, "coefficient at q^(" + rat_str(e) +
                                               ") requested, series only valid below q^(" +
                                               rat_str(valid_to_) + ")");
    auto n = as_int(e * Rational(static_cast<long>(grid_)));
    if (!n || !n->fits_slong_p()) return CycloNum::zero(ring_order_);
    auto it = terms_.find(n->get_si());
    if (it == terms_.end()) return CycloNum::zero(ring_order_);
    return it->second;
}

std::string QSeries::str() const {
    std::ostringstream os;
    if (terms_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [n, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            std::string e = exponent_str(n, grid_);
            os << "(" << c.str() << ")";
            if (!e.empty()) os << "*" << e;
        }
    }
    os << " + O(q^(" << rat_str(valid_to_) << "))";
    return os.str();
}

AnalyticSeries AnalyticSeries::make(int pi_power, QSeries body) {
    if (body.is_zero()) pi_power = 0;
    return AnalyticSeries{pi_power, std::move(body)};
}

AnalyticSeries AnalyticSeries::operator-() const { return {pi_power, -body}; }

AnalyticSeries AnalyticSeries::operator+(const AnalyticSeries& b) const {
    Rational v = std::min(body.valid_to(), b.body.valid_to());
    if (is_zero()) return b.truncated(v);
    if (b.is_zero()) return truncated(v);
    if (pi_power != b.pi_power)
        throw Error(Errc::pi_power_mismatch, "adding pi^" + std::to_string(pi_power) +
                                                 " term to pi^" + std::to_string(b.pi_power) +
                                                 " term");
    return make(pi_power, body + b.body);
}

AnalyticSeries AnalyticSeries::operator-(const AnalyticSeries& b) const { return *this + (-b); }

AnalyticSeries AnalyticSeries::operator*(const AnalyticSeries& b) const {
    return make(pi_power + b.pi_power, body * b.body);
}

AnalyticSeries AnalyticSeries::operator/(const AnalyticSeries& b) const {
    return *this * b.inverse();
}

AnalyticSeries AnalyticSeries::scaled(const CycloNum& s) const {
    return make(pi_power, body.scaled(s));
}

AnalyticSeries AnalyticSeries::scaled(const Rational& s) const {
    return make(pi_power, body.scaled(s));
}

AnalyticSeries AnalyticSeries::pi_shifted(int k) const {
    if (is_zero()) return *this;
    return {pi_power + k, body};
}

AnalyticSeries AnalyticSeries::inverse() const { return {-pi_power, body.inverse()}; }

AnalyticSeries AnalyticSeries::rescaled_tau(const Rational& k) const {
    return {pi_power, body.rescaled_tau(k)};
}

AnalyticSeries AnalyticSeries::truncated(const Rational& v) const {
    return make(pi_power, body.truncated(v));
}

std::string AnalyticSeries::str() const {
    std::string b = body.str();
    if (pi_power == 0) return b;
    return "pi^" + std::to_string(pi_power) + " * [" + b + "]";
}

AnalyticSeries tau_deriv(const AnalyticSeries& f) {
    const long long E = f.body.grid();
    const int M = f.body.ring_order();
    const CycloNum two_i = imag_unit(M) * rat(2);
    QSeries::TermMap out;
    for (const auto& [n, c] : f.body.terms()) {
        if (n == 0) continue;
        out.emplace(n, c * two_i * rat(n, E));
    }
    return AnalyticSeries::make(f.pi_power + 1,
                                QSeries::from_terms(E, M, f.body.valid_to(), std::move(out)));
}

AnalyticSeries tau_dlog(const AnalyticSeries& f) {
    // (d/dtau f)/f; the pi-degree of f cancels, leaving exactly one power of
    // pi from the 2 pi i.
    AnalyticSeries df = tau_deriv(AnalyticSeries::make(0, f.body));
    return AnalyticSeries::make(1, (df.body * f.body.inverse()));
}

CompareResult eq_upto(const AnalyticSeries& f, const AnalyticSeries& g, const Rational& T) {
    check_compatible(f.body, g.body);
    if (T > f.body.valid_to() || T > g.body.valid_to())
        throw Error(Errc::beyond_validity,
                    "comparison to q^(" + rat_str(T) + ") exceeds validity (lhs q^(" +
                        rat_str(f.body.valid_to()) + "), rhs q^(" + rat_str(g.body.valid_to()) +
                        "))");
    const long long E = f.body.grid();
    const int M = f.body.ring_order();
    const long long bound = grid_ceil(T, E);
    const CycloNum zero = CycloNum::zero(M);

    auto it = f.body.terms().begin();
    auto jt = g.body.terms().begin();
    const auto fend = f.body.terms().end();
    const auto gend = g.body.terms().end();
    while ((it != fend && it->first < bound) || (jt != gend && jt->first < bound)) {
        long long n;
        const CycloNum* cf = &zero;
        const CycloNum* cg = &zero;
        bool have_f = it != fend && it->first < bound;
        bool have_g = jt != gend && jt->first < bound;
        if (have_f && (!have_g || it->first <= jt->first)) n = it->first;
        else n = jt->first;
        if (have_f && it->first == n) cf = &(it++)->second;
        if (have_g && jt->first == n) cg = &(jt++)->second;

        bool pi_ok = cf->is_zero() || cg->is_zero() || f.pi_power == g.pi_power;
        if (!pi_ok || !(*cf == *cg)) {
            return {false, Divergence{rat(n, E), f.pi_power, g.pi_power, *cf, *cg}};
        }
    }
    return {true, std::nullopt};
}

} // namespace qsw
