#include "qsw/arith.hpp"

#include "qsw/error.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace qsw {

namespace {

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    return out;
}

Int sigma_of(long long n) {
    Int s = 0;
    for (long long d : divisors_of(n)) s += static_cast<long>(d);
    return s;
}

Int d_cong_of(long long n, long long j, long long k) {
    Int s = 0;
    long long jj = ((j % k) + k) % k;
    for (long long d : divisors_of(n)) {
        if (d % k == jj) s += 1;
    }
    return s;
}

Int d_cong_star_of(long long n, long long j, long long k) {
    Int s = d_cong_of(n, j, k);
    if (n % 2 == 0) s -= d_cong_of(n / 2, j, k);
    return s;
}

long long isqrt_ll(long long n) {
    Int r = isqrt(Int(static_cast<long>(n)));
    return r.get_si();
}

/// table[m] = #{(x, y) in Z^2 : x^2 + x y + y^2 = m}, grown on demand.
long long hex_pairs(long long m) {
    static std::vector<long long> table;
    static std::mutex mu;
    if (m < 0) return 0;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<long long>(table.size()) <= m) {
        long long lim = std::max<long long>(2 * m + 16, 256);
        std::vector<long long> t(static_cast<std::size_t>(lim) + 1, 0);
        // x^2 + x y + y^2 = (x + y/2)^2 + 3 y^2 / 4 >= 3 max(x^2, y^2) / 4.
        long long b = isqrt_ll(4 * lim / 3) + 1;
        for (long long x = -b; x <= b; ++x) {
            for (long long y = -b; y <= b; ++y) {
                long long v = x * x + x * y + y * y;
                if (v <= lim) ++t[static_cast<std::size_t>(v)];
            }
        }
        table = std::move(t);
    }
    return table[static_cast<std::size_t>(m)];
}

long long tri_of(long long x) {
    return x * (x + 1) / 2;
}

long long count_rec(const std::vector<QFormSpec::Term>& ts, std::size_t i, long long r) {
    const QFormSpec::Term& t = ts[i];
    if (i + 1 == ts.size()) {
        if (r % t.coeff != 0) return 0;
        long long s = r / t.coeff;
        switch (t.shape) {
        case QFormSpec::Shape::square:
            if (s == 0) return 1;
            return is_square(Int(static_cast<long>(s))) ? 2 : 0;
        case QFormSpec::Shape::triangular:
            // x(x+1)/2 = s has the two solutions x0 >= 0 and -x0 - 1.
            return is_square(Int(static_cast<long>(8 * s + 1))) ? 2 : 0;
        case QFormSpec::Shape::hex_pair:
            return hex_pairs(s);
        }
        return 0;
    }
    long long total = 0;
    switch (t.shape) {
    case QFormSpec::Shape::square:
        for (long long x = 0;; ++x) {
            long long v = t.coeff * x * x;
            if (v > r) break;
            total += (x == 0 ? 1 : 2) * count_rec(ts, i + 1, r - v);
        }
        break;
    case QFormSpec::Shape::triangular:
        for (long long x = 0;; ++x) {
            long long v = t.coeff * tri_of(x);
            if (v > r) break;
            total += 2 * count_rec(ts, i + 1, r - v);
        }
        break;
    case QFormSpec::Shape::hex_pair:
        for (long long m = 0; t.coeff * m <= r; ++m) {
            long long pairs = hex_pairs(m);
            if (pairs != 0) total += pairs * count_rec(ts, i + 1, r - t.coeff * m);
        }
        break;
    }
    return total;
}

} // namespace

int char8(long long m) {
    long long r = ((m % 8) + 8) % 8;
    if (r == 1 || r == 7) return 1;
    if (r == 3 || r == 5) return -1;
    return 0;
}

Int divisor_eval(const DivisorFn& f, long long n) {
    if (n <= 0) return 0;
    switch (f.kind) {
    case DivisorFn::Kind::sigma:
        return sigma_of(n);
    case DivisorFn::Kind::sigma_star:
        return n % 2 == 0 ? Int(sigma_of(n) - sigma_of(n / 2)) : sigma_of(n);
    case DivisorFn::Kind::d_cong:
        return d_cong_of(n, f.j, f.k);
    case DivisorFn::Kind::d_cong_star:
        return d_cong_star_of(n, f.j, f.k);
    case DivisorFn::Kind::delta:
        return d_cong_of(n, 1, 3) - d_cong_of(n, 2, 3);
    case DivisorFn::Kind::delta_star:
        return d_cong_star_of(n, 1, 3) - d_cong_star_of(n, 2, 3);
    case DivisorFn::Kind::epsilon_star:
        return d_cong_star_of(n, 1, 6) + d_cong_star_of(n, 2, 6) - d_cong_star_of(n, 4, 6) -
               d_cong_star_of(n, 5, 6);
    case DivisorFn::Kind::char8_n_over_d: {
        Int s = 0;
        for (long long d : divisors_of(n)) s += Int(static_cast<long>(n / d)) * char8(d);
        return s;
    }
    case DivisorFn::Kind::char8_d: {
        Int s = 0;
        for (long long d : divisors_of(n)) s += Int(static_cast<long>(d)) * char8(d);
        return s;
    }
    }
    return 0;
}

Int divisor_eval(const DivisorFn& f, const Rational& x) {
    if (!is_integer(x) || x <= 0) return 0;
    Int n = x.get_num();
    if (!n.fits_slong_p()) throw Error(Errc::bad_usage, "divisor argument out of range");
    return divisor_eval(f, n.get_si());
}

long long rep_count(const QFormSpec& form, long long n) {
    if (n < 0) return 0;
    if (form.terms.empty()) return n == 0 ? 1 : 0;
    return count_rec(form.terms, 0, n);
}

Int conv_sum(const DivisorFn& f, const DivisorFn& g, long long n) {
    Int s = 0;
    for (long long k = 1; k <= n - 1; ++k) s += divisor_eval(f, k) * divisor_eval(g, n - k);
    return s;
}

Int weighted_conv_sum(const DivisorFn& f, const DivisorFn& g, long long n) {
    Int s = 0;
    for (long long k = 1; 2 * k <= n - 1; ++k)
        s += divisor_eval(f, k) * divisor_eval(g, n - 2 * k);
    return s;
}

AnalyticSeries seq_to_series(const std::function<Rational(long long)>& value,
                             const std::function<Rational(long long)>& emap, long long n0,
                             const Rational& T, long long E, int M) {
    QSeries::TermMap terms;
    Rational prev;
    bool have_prev = false;
    for (long long n = n0;; ++n) {
        Rational e = emap(n);
        if (have_prev && e <= prev)
            throw Error(Errc::bad_usage, "seq_to_series: exponent map is not increasing");
        prev = e;
        have_prev = true;
        if (e >= T) break;
        Rational pos = e * Rational(static_cast<long>(E));
        if (!is_integer(pos)) throw Error(Errc::off_grid, "seq_to_series: exponent off grid");
        Rational v = value(n);
        if (v != 0) terms.emplace(pos.get_num().get_si(), CycloNum::from_rational(M, v));
    }
    return AnalyticSeries::make(0, QSeries::from_terms(E, M, T, std::move(terms)));
}

} // namespace qsw
