#include "qsw/thetagen.hpp"

#include <cstdlib>

namespace qsw {

namespace {

// zeta_M^(turns * M); the caller guarantees integrality (checked).
CycloNum root_from_turns(int M, const Rational& turns) {
    auto mt = as_int(turns * Rational(M));
    if (!mt)
        throw Error(Errc::unsupported_char,
                    "phase " + rat_str(turns) + " turns not representable in Q(zeta_" +
                        std::to_string(M) + ")");
    Int r = *mt % M;
    return CycloNum::root(M, r.get_si());
}

bool on_grid(const Rational& e, long long E) { return is_integer(e * Rational(static_cast<long>(E))); }

long long grid_pos(const Rational& e, long long E) {
    auto n = as_int(e * Rational(static_cast<long>(E)));
    if (!n || !n->fits_slong_p()) throw Error(Errc::off_grid, "exponent out of range");
    return n->get_si();
}

void add_term(QSeries::TermMap& acc, long long n, const CycloNum& c) {
    auto it = acc.find(n);
    if (it == acc.end())
        acc.emplace(n, c);
    else
        it->second += c;
}

// 1 + c * q^e as an exactly-known polynomial (validity V).
QSeries one_plus(long long E, int M, const Rational& V, const CycloNum& c, const Rational& e) {
    QSeries::TermMap t;
    add_term(t, 0, CycloNum::one(M));
    add_term(t, grid_pos(e, E), c);
    return QSeries::from_terms(E, M, V, std::move(t));
}

// Defining sum, without the public z_order cap (the jet needs m = 4).
AnalyticSeries theta_sum_raw(const Rational& eps, const Rational& eps_prime, const Rational& k,
                             int m, const Rational& T, long long E, int M) {
    if (k <= 0)
        throw Error(Errc::unsupported_char, "tau multiplier must be positive, got " + rat_str(k));
    // Phase embedding: the turn fraction (n + eps/2) eps'/2 is integral times
    // 1/M for all n iff it is for the constant part and the step.
    if (!is_integer(Rational(M) * eps_prime / 2) ||
        !is_integer(Rational(M) * eps * eps_prime / 4))
        throw Error(Errc::unsupported_char, "characteristic [" + rat_str(eps) + "," +
                                                rat_str(eps_prime) + "] does not embed in Q(zeta_" +
                                                std::to_string(M) + ")");
    // Exponent grid: k (2n + eps)^2 / 8 on (1/E)Z; integrality is periodic in
    // n with period 2 den(eps) den(k), so checking one period suffices.
    long period = 2 * static_cast<long>(eps.get_den().get_si() * k.get_den().get_si());
    for (long n = 0; n < period; ++n) {
        Rational w = Rational(2 * n) + eps;
        if (!on_grid(k * w * w / 8, E))
            throw Error(Errc::unsupported_char,
                        "theta[" + rat_str(eps) + "," + rat_str(eps_prime) + "](0," + rat_str(k) +
                            "t) exponents leave grid (1/" + std::to_string(E) + ")Z");
    }
    if (m > 0 && M % 4)
        throw Error(Errc::unsupported_order, "z-derivatives need 4 | M");

    QSeries::TermMap acc;
    auto emit = [&](long n) {
        Rational w = Rational(2 * n) + eps; // 2 (n + eps/2)
        Rational e = k * w * w / 8;
        if (e >= T) return false;
        // (2 pi i (n+eps/2))^m exp(pi i (n+eps/2) eps') = pi^m i^m w^m zeta^phase
        Rational turns = w * eps_prime / 4;
        CycloNum c = root_from_turns(M, turns);
        if (m > 0) {
            Rational wm(1);
            for (int j = 0; j < m; ++j) wm *= w;
            c = c * CycloNum::root(M, static_cast<long>(m) * (M / 4)) * wm;
        }
        add_term(acc, grid_pos(e, E), c);
        return true;
    };
    for (long n = 0;; ++n) {
        if (!emit(n) && Rational(2 * n) + eps >= 0) break;
    }
    for (long n = -1;; --n) {
        if (!emit(n) && Rational(2 * n) + eps <= 0) break;
    }
    return AnalyticSeries::make(m, QSeries::from_terms(E, M, T, std::move(acc)));
}

Rational factorial(int m) {
    Rational f(1);
    for (int j = 2; j <= m; ++j) f *= j;
    return f;
}

} // namespace

AnalyticSeries theta_series(const ThetaSpec& spec, const Rational& T, long long E, int M) {
    if (spec.z_order < 0 || spec.z_order > 3)
        throw Error(Errc::bad_usage,
                    "theta_series computes z-derivatives 0..3, got " + std::to_string(spec.z_order));
    return theta_sum_raw(spec.eps, spec.eps_prime, spec.tau_mult, spec.z_order, T, E, M);
}

AnalyticSeries theta_triple_product(const Rational& eps, const Rational& eps_prime,
                                    const Rational& k, const Rational& T, long long E, int M) {
    if (k <= 0)
        throw Error(Errc::unsupported_char, "tau multiplier must be positive, got " + rat_str(k));
    if (eps != 0 && eps != 1)
        throw Error(Errc::unsupported_char,
                    "triple product implemented for eps in {0,1}, got " + rat_str(eps));
    if (!is_integer(Rational(M) * eps_prime / 2) ||
        !is_integer(Rational(M) * eps * eps_prime / 4))
        throw Error(Errc::unsupported_char, "characteristic [" + rat_str(eps) + "," +
                                                rat_str(eps_prime) + "] does not embed in Q(zeta_" +
                                                std::to_string(M) + ")");
    const Rational lead = k * eps * eps / 8; // x^(eps^2/4), x = q^(k/2)
    if (!on_grid(lead, E) || !on_grid(eps == 1 ? k : k / 2, E))
        throw Error(Errc::unsupported_char, "theta[" + rat_str(eps) + "," + rat_str(eps_prime) +
                                                "](0," + rat_str(k) + "t) exponents leave grid (1/" +
                                                std::to_string(E) + ")Z");

    const CycloNum phase_pos = root_from_turns(M, eps_prime / 2);
    const CycloNum phase_neg = root_from_turns(M, -eps_prime / 2);
    const Rational V = T + lead + 1;

    QSeries p = QSeries::monomial(E, M, V, lead, root_from_turns(M, eps * eps_prime / 4));
    for (long n = 1;; ++n) {
        // x-exponents 2n, 2n-1+eps, 2n-1-eps; in q-units multiply by k/2.
        Rational a1 = k * Rational(n);
        Rational a2 = k * (Rational(2 * n - 1) + eps) / 2;
        Rational a3 = k * (Rational(2 * n - 1) - eps) / 2;
        if (a3 >= T) break;
        if (a1 < T) p = p * one_plus(E, M, V, -CycloNum::one(M), a1);
        if (a2 < T) p = p * one_plus(E, M, V, phase_pos, a2);
        p = p * one_plus(E, M, V, phase_neg, a3);
    }
    return AnalyticSeries::make(0, p.truncated(T));
}

AnalyticSeries eta_series(const Rational& k, const Rational& T, long long E, int M) {
    if (k <= 0)
        throw Error(Errc::unsupported_char, "eta multiplier must be positive, got " + rat_str(k));
    if (!on_grid(k / 24, E))
        throw Error(Errc::unsupported_char, "eta(" + rat_str(k) + "t) leading exponent " +
                                                rat_str(k / 24) + " leaves grid (1/" +
                                                std::to_string(E) + ")Z");
    QSeries::TermMap acc;
    const CycloNum one = CycloNum::one(M);
    auto emit = [&](long j) {
        Rational e = k / 24 + k * Rational(j * (3 * j - 1), 2);
        if (e >= T) return false;
        add_term(acc, grid_pos(e, E), j % 2 ? -one : one);
        return true;
    };
    emit(0);
    for (long j = 1;; ++j) {
        bool a = emit(j);
        bool b = emit(-j);
        if (!a && !b) break;
    }
    return AnalyticSeries::make(0, QSeries::from_terms(E, M, T, std::move(acc)));
}

AnalyticSeries eta_quotient(const EtaQuotientSpec& spec, const Rational& T, long long E, int M) {
    if (spec.factors.empty())
        return AnalyticSeries::make(0, QSeries::monomial(E, M, T, rat(0), CycloNum::one(M)));
    // Leading exponents o_i = k_i/24.  Generating every factor to validity
    // W makes the quotient valid to W + sum_i a_i o_i - max_i o_i; pick W to
    // land exactly on T (never below any single leading exponent).
    Rational O(0), maxo;
    bool first = true;
    for (const auto& [k, a] : spec.factors) {
        Rational o = k / 24;
        O += o * a;
        if (first || o > maxo) maxo = o;
        first = false;
    }
    Rational W = T - O + maxo;
    if (W <= maxo) W = maxo + 1;

    QSeries p = QSeries::monomial(E, M, W + rat(1), rat(0), CycloNum::one(M));
    for (const auto& [k, a] : spec.factors) {
        if (a == 0) continue;
        QSeries f = eta_series(k, W, E, M).body;
        if (a < 0) f = f.inverse();
        for (int j = 0; j < std::abs(a); ++j) p = p * f;
    }
    if (p.valid_to() < T)
        throw std::logic_error("eta_quotient: validity fell short of the target");
    return AnalyticSeries::make(0, p.truncated(T));
}

ThetaJet theta_jet(const Rational& eps, const Rational& eps_prime, const Rational& tau_mult,
                   int J, const Rational& T, long long E, int M) {
    if (J < 0 || J > 4)
        throw Error(Errc::bad_usage, "jet order capped at 4, got " + std::to_string(J));
    ThetaJet jet{J, {}};
    for (int m = 0; m <= J; ++m) {
        AnalyticSeries d = theta_sum_raw(eps, eps_prime, tau_mult, m, T, E, M);
        jet.entry.push_back(d.scaled(rat(1) / factorial(m)));
    }
    return jet;
}

ThetaJet jet_add(const ThetaJet& a, const ThetaJet& b) {
    int cap = std::min(a.z_cap, b.z_cap);
    ThetaJet r{cap, {}};
    for (int m = 0; m <= cap; ++m) r.entry.push_back(a.entry[m] + b.entry[m]);
    return r;
}

ThetaJet jet_sub(const ThetaJet& a, const ThetaJet& b) {
    int cap = std::min(a.z_cap, b.z_cap);
    ThetaJet r{cap, {}};
    for (int m = 0; m <= cap; ++m) r.entry.push_back(a.entry[m] - b.entry[m]);
    return r;
}

ThetaJet jet_mul(const ThetaJet& a, const ThetaJet& b) {
    int cap = std::min(a.z_cap, b.z_cap);
    ThetaJet r{cap, {}};
    for (int m = 0; m <= cap; ++m) {
        AnalyticSeries s = a.entry[0] * b.entry[m];
        for (int i = 1; i <= m; ++i) s = s + a.entry[i] * b.entry[m - i];
        r.entry.push_back(s);
    }
    return r;
}

ThetaJet jet_scale(const ThetaJet& a, const AnalyticSeries& s) {
    ThetaJet r{a.z_cap, {}};
    for (const AnalyticSeries& e : a.entry) r.entry.push_back(e * s);
    return r;
}

ThetaJet jet_z_deriv(const ThetaJet& a) {
    if (a.z_cap < 1) throw Error(Errc::bad_usage, "jet too short to differentiate");
    ThetaJet r{a.z_cap - 1, {}};
    for (int m = 1; m <= a.z_cap; ++m) r.entry.push_back(a.entry[m].scaled(rat(m)));
    return r;
}

ThetaJet jet_inv(const ThetaJet& a) {
    ThetaJet r{a.z_cap, {}};
    AnalyticSeries c0 = a.entry[0].inverse();
    r.entry.push_back(c0);
    for (int m = 1; m <= a.z_cap; ++m) {
        AnalyticSeries s = a.entry[1] * r.entry[m - 1];
        for (int j = 2; j <= m; ++j) s = s + a.entry[j] * r.entry[m - j];
        r.entry.push_back(-(c0 * s));
    }
    return r;
}

ThetaJet jet_div(const ThetaJet& a, const ThetaJet& b) { return jet_mul(a, jet_inv(b)); }

bool jet_is_zero(const ThetaJet& a) {
    for (const AnalyticSeries& e : a.entry)
        if (!e.is_zero()) return false;
    return true;
}

AnalyticSeries a_series(const Rational& T, long long E, int M) {
    // x^2 + x y + y^2 >= 3/4 max(x,y)^2, so |x|,|y| <= sqrt(4T/3) + 1 covers
    // every lattice point below the truncation.
    Rational bound = T * rat(4, 3);
    Int b4 = bound.get_num() / bound.get_den() + 1;
    long long B = isqrt(b4).get_si() + 1;
    QSeries::TermMap acc;
    const CycloNum one = CycloNum::one(M);
    for (long long x = -B; x <= B; ++x) {
        for (long long y = -B; y <= B; ++y) {
            long long v = x * x + x * y + y * y;
            if (Rational(static_cast<long>(v)) >= T) continue;
            add_term(acc, v * E, one);
        }
    }
    return AnalyticSeries::make(0, QSeries::from_terms(E, M, T, std::move(acc)));
}

} // namespace qsw
