#include "qsw/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qsw {

namespace {

int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.c.empty() || b.c.empty()) return {};
    IntPolynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

// Exact division; the quotient is integral by construction (Moebius product).
IntPolynomial poly_divexact(IntPolynomial a, const IntPolynomial& b) {
    IntPolynomial q;
    if (a.c.size() < b.c.size()) throw std::logic_error("cyclo_poly: bad division");
    q.c.assign(a.c.size() - b.c.size() + 1, Int(0));
    const Int& lead = b.c.back();
    for (int k = static_cast<int>(q.c.size()) - 1; k >= 0; --k) {
        Int t = a.c[k + b.degree()];
        if (t == 0) continue;
        if (!mpz_divisible_p(t.get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("cyclo_poly: division not exact");
        q.c[k] = t / lead;
        for (size_t j = 0; j < b.c.size(); ++j) a.c[k + j] -= q.c[k] * b.c[j];
    }
    for (const Int& v : a.c)
        if (v != 0) throw std::logic_error("cyclo_poly: nonzero remainder");
    return q;
}

IntPolynomial x_pow_minus_1(int d) {
    IntPolynomial p;
    p.c.assign(d + 1, Int(0));
    p.c[0] = -1;
    p.c[d] = 1;
    return p;
}

// Per-order immutable tables: the cyclotomic polynomial, reduction rows for
// x^phi .. x^(2 phi - 2), and all M reduced roots zeta_M^k.
struct CycloContext {
    int M;
    int phi;
    std::vector<std::vector<Rational>> red;   // red[t] = x^(phi+t) mod Phi_M
    std::vector<std::vector<Rational>> roots; // roots[k] = x^k mod Phi_M

    explicit CycloContext(int order) : M(order) {
        const IntPolynomial& Phi = cyclo_poly(M);
        phi = Phi.degree();
        // x^phi = -(Phi - x^phi), Phi monic.
        std::vector<Rational> base(phi);
        for (int j = 0; j < phi; ++j) base[j] = -Rational(Phi.c[j]);
        red.push_back(base);
        for (int t = 1; t + phi <= 2 * phi - 2; ++t) {
            std::vector<Rational> row(phi);
            const std::vector<Rational>& prev = red.back();
            for (int j = 0; j + 1 < phi; ++j) row[j + 1] = prev[j];
            if (prev[phi - 1] != 0)
                for (int j = 0; j < phi; ++j) row[j] += prev[phi - 1] * base[j];
            red.push_back(std::move(row));
        }
        roots.reserve(M);
        std::vector<Rational> cur(phi);
        cur[0] = 1;
        roots.push_back(cur);
        for (int k = 1; k < M; ++k) {
            std::vector<Rational> nxt(phi);
            for (int j = 0; j + 1 < phi; ++j) nxt[j + 1] = cur[j];
            if (cur[phi - 1] != 0)
                for (int j = 0; j < phi; ++j) nxt[j] += cur[phi - 1] * base[j];
            roots.push_back(nxt);
            cur = std::move(nxt);
        }
    }
};

const CycloContext& context(int M) {
    if (M < 2 || M % 2 != 0)
        throw Error(Errc::unsupported_order,
                    "ring order must be even and >= 2, got " + std::to_string(M));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it == cache.end()) it = cache.emplace(M, std::make_unique<CycloContext>(M)).first;
    return *it->second;
}

void check_same_order(const CycloNum& a, const CycloNum& b) {
    if (a.order() != b.order())
        throw Error(Errc::order_mismatch, "ring orders differ: " + std::to_string(a.order()) +
                                              " vs " + std::to_string(b.order()));
}

// Rational polynomials, for the extended Euclidean inverse only.
using QPoly = std::vector<Rational>;

int qdeg(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

} // namespace

std::string IntPolynomial::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c[k] == 0) continue;
        Int a = c[k];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int abs_a = abs(a);
        if (abs_a != 1 || k == 0) os << abs_a.get_str();
        if (k > 0) os << "x";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

const IntPolynomial& cyclo_poly(int M) {
    if (M < 1) throw Error(Errc::unsupported_order, "cyclo_poly: M must be >= 1");
    static std::mutex mu;
    static std::map<int, IntPolynomial> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    IntPolynomial num{{Int(1)}};
    std::vector<int> dens;
    for (int d = 1; d <= M; ++d) {
        if (M % d) continue;
        int mu_ = mobius(M / d);
        if (mu_ == 1)
            num = poly_mul(num, x_pow_minus_1(d));
        else if (mu_ == -1)
            dens.push_back(d);
    }
    for (int d : dens) num = poly_divexact(std::move(num), x_pow_minus_1(d));
    return cache.emplace(M, std::move(num)).first->second;
}

int euler_phi(int M) {
    int result = M;
    for (int p = 2; p * p <= M; ++p) {
        if (M % p) continue;
        while (M % p == 0) M /= p;
        result -= result / p;
    }
    if (M > 1) result -= result / M;
    return result;
}

CycloNum CycloNum::zero(int M) {
    const CycloContext& ctx = context(M);
    return CycloNum(M, std::vector<Rational>(ctx.phi));
}

CycloNum CycloNum::one(int M) { return from_rational(M, Rational(1)); }

CycloNum CycloNum::from_rational(int M, const Rational& r) {
    const CycloContext& ctx = context(M);
    std::vector<Rational> c(ctx.phi);
    c[0] = r;
    return CycloNum(M, std::move(c));
}

CycloNum CycloNum::root(int M, long k) {
    const CycloContext& ctx = context(M);
    long r = k % M;
    if (r < 0) r += M;
    return CycloNum(M, ctx.roots[static_cast<size_t>(r)]);
}

bool CycloNum::is_zero() const {
    for (const Rational& v : coords_)
        if (v != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t j = 1; j < coords_.size(); ++j)
        if (coords_[j] != 0) return false;
    return true;
}

std::optional<Rational> CycloNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coords_[0];
}

CycloNum CycloNum::operator-() const {
    std::vector<Rational> c(coords_.size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = -coords_[j];
    return CycloNum(order_, std::move(c));
}

CycloNum CycloNum::operator+(const CycloNum& b) const {
    check_same_order(*this, b);
    std::vector<Rational> c(coords_.size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = coords_[j] + b.coords_[j];
    return CycloNum(order_, std::move(c));
}

CycloNum CycloNum::operator-(const CycloNum& b) const {
    check_same_order(*this, b);
    std::vector<Rational> c(coords_.size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = coords_[j] - b.coords_[j];
    return CycloNum(order_, std::move(c));
}

CycloNum CycloNum::operator*(const CycloNum& b) const {
    check_same_order(*this, b);
    const CycloContext& ctx = context(order_);
    const int phi = ctx.phi;
    std::vector<Rational> acc(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.coords_[j] == 0) continue;
            acc[i + j] += coords_[i] * b.coords_[j];
        }
    }
    for (int t = 2 * phi - 2; t >= phi; --t) {
        if (acc[t] == 0) continue;
        const std::vector<Rational>& row = ctx.red[t - phi];
        for (int j = 0; j < phi; ++j)
            if (row[j] != 0) acc[j] += acc[t] * row[j];
    }
    acc.resize(phi);
    return CycloNum(order_, std::move(acc));
}

CycloNum CycloNum::operator*(const Rational& r) const {
    std::vector<Rational> c(coords_.size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = coords_[j] * r;
    return CycloNum(order_, std::move(c));
}

CycloNum CycloNum::operator/(const Rational& r) const {
    if (r == 0) throw Error(Errc::division_by_zero, "division by rational zero");
    std::vector<Rational> c(coords_.size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = coords_[j] / r;
    return CycloNum(order_, std::move(c));
}

CycloNum CycloNum::inv() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero ring element");
    const CycloContext& ctx = context(order_);
    const IntPolynomial& Phi = cyclo_poly(order_);

    // Extended Euclid on (Phi, a): maintain r = s * a  (mod Phi).
    QPoly r0(Phi.c.size());
    for (size_t j = 0; j < Phi.c.size(); ++j) r0[j] = Rational(Phi.c[j]);
    QPoly r1(coords_.begin(), coords_.end());
    QPoly s0(1, Rational(0)), s1(1, Rational(1));

    while (true) {
        int d1 = qdeg(r1);
        if (d1 < 0) throw std::logic_error("cyclotomic inverse: gcd hit zero");
        if (d1 == 0) break;
        int d0 = qdeg(r0);
        // r0 -= (lead0/lead1) x^(d0-d1) * r1, repeatedly: full division step.
        QPoly q(d0 - d1 + 1, Rational(0));
        QPoly rem = r0;
        for (int k = d0 - d1; k >= 0; --k) {
            if (rem[k + d1] == 0) continue;
            Rational f = rem[k + d1] / r1[d1];
            q[k] = f;
            for (int j = 0; j <= d1; ++j) rem[k + j] -= f * r1[j];
        }
        // (r0, s0) <- (r1, s1); (r1, s1) <- (rem, s0 - q*s1)
        QPoly s_next(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t j = 0; j < s0.size(); ++j) s_next[j] = s0[j];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        r1.resize(d1 + 1);
        s1 = std::move(s_next);
    }
    // r1 is a nonzero constant c with s1 * a = c (mod Phi): inverse = s1 / c.
    Rational c = r1[0];
    std::vector<Rational> out(ctx.phi);
    // s1 may exceed phi-1 in nominal size; reduce (degrees < 2 phi - 1 here
    // are guaranteed because deg s stays below deg Phi in the Euclid loop).
    std::vector<Rational> acc(std::max<size_t>(s1.size(), ctx.phi));
    for (size_t j = 0; j < s1.size(); ++j) acc[j] = s1[j];
    for (int t = static_cast<int>(acc.size()) - 1; t >= ctx.phi; --t) {
        if (acc[t] == 0) continue;
        const std::vector<Rational>& row = ctx.red.at(t - ctx.phi);
        for (int j = 0; j < ctx.phi; ++j)
            if (row[j] != 0) acc[j] += acc[t] * row[j];
    }
    for (int j = 0; j < ctx.phi; ++j) out[j] = acc[j] / c;
    return CycloNum(order_, std::move(out));
}

CycloNum CycloNum::conj() const {
    CycloNum result = zero(order_);
    for (size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        result += root(order_, -static_cast<long>(j)) * coords_[j];
    }
    return result;
}

std::string CycloNum::str() const {
    if (auto r = as_rational()) return rat_str(*r);
    std::ostringstream os;
    os << "zeta" << order_ << "[";
    for (size_t j = 0; j < coords_.size(); ++j) {
        if (j) os << ",";
        os << rat_str(coords_[j]);
    }
    os << "]";
    return os.str();
}

CycloNum sqrt2(int M) {
    if (M % 8)
        throw Error(Errc::unsupported_order, "sqrt2 needs 8 | M, got M=" + std::to_string(M));
    return CycloNum::root(M, M / 8) + CycloNum::root(M, -(M / 8));
}

CycloNum sqrt3(int M) {
    if (M % 12)
        throw Error(Errc::unsupported_order, "sqrt3 needs 12 | M, got M=" + std::to_string(M));
    return CycloNum::root(M, M / 12) + CycloNum::root(M, -(M / 12));
}

CycloNum imag_unit(int M) {
    if (M % 4)
        throw Error(Errc::unsupported_order, "i needs 4 | M, got M=" + std::to_string(M));
    return CycloNum::root(M, M / 4);
}

CycloNum eval(const IntPolynomial& p, const CycloNum& x) {
    CycloNum acc = CycloNum::zero(x.order());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * x + CycloNum::from_rational(x.order(), Rational(p.c[k]));
    }
    return acc;
}

} // namespace qsw
