#pragma once

/// Generators: theta constants with characteristics, Dedekind eta, and
/// truncated z-jets of theta functions.
///
/// Conventions.  q = exp(2 pi i tau); all series are in q on the grid
/// (1/E)Z with coefficients in Q(zeta_M).  theta[eps,eps'](z, k tau) is the
/// theta constant with rational characteristic; its m-th z-derivative at
/// z = 0 carries pi-degree m.  Two independent generators are provided for
/// the m = 0 constants (defining sum and Jacobi triple product) and are kept
/// permanently as mutual oracles.

#include "qsw/series.hpp"

#include <vector>

namespace qsw {

struct ThetaSpec {
    Rational eps;
    Rational eps_prime;
    Rational tau_mult{1}; // theta evaluated at (tau_mult * tau)
    int z_order{0};       // which z-derivative at z = 0; 0 <= z_order <= 3

    static ThetaSpec make(const Rational& eps, const Rational& eps_prime,
                          const Rational& tau_mult = rat(1), int z_order = 0) {
        return ThetaSpec{eps, eps_prime, tau_mult, z_order};
    }
};

/// theta^(z_order)[eps,eps'](0, tau_mult * tau) by the defining sum
///   sum_n (2 pi i (n+eps/2))^m exp(pi i (n+eps/2) eps') q^(k (n+eps/2)^2 / 2).
/// UnsupportedCharacteristic when a phase or exponent doesn't embed in
/// (zeta_M, grid E).
AnalyticSeries theta_series(const ThetaSpec& spec, const Rational& T, long long E = 48,
                            int M = 48);

/// Same constant (z_order = 0) via the Jacobi triple product
///   exp(pi i eps eps'/2) x^(eps^2/4) prod (1-x^2n)(1+e^(pi i eps')x^(2n-1+eps))
///   (1+e^(-pi i eps')x^(2n-1-eps)),  x = q^(tau_mult/2);
/// requires eps in {0, 1}.
AnalyticSeries theta_triple_product(const Rational& eps, const Rational& eps_prime,
                                    const Rational& tau_mult, const Rational& T, long long E = 48,
                                    int M = 48);

/// eta(k tau) by the pentagonal-number theorem:
///   q^(k/24) sum_j (-1)^j q^(k j (3j-1) / 2).
AnalyticSeries eta_series(const Rational& k, const Rational& T, long long E = 48, int M = 48);

/// Product of eta(k_i tau)^(a_i); a_i may be negative (series inversion).
struct EtaQuotientSpec {
    std::vector<std::pair<Rational, int>> factors; // (multiplier k, exponent a)
};
AnalyticSeries eta_quotient(const EtaQuotientSpec& spec, const Rational& T, long long E = 48,
                            int M = 48);

/// Truncated z-jet of theta[eps,eps'](z, k tau) at z = 0: entry m holds
/// (1/m!) theta^(m), so entry m has pi-degree m (unless it vanishes).
struct ThetaJet {
    int z_cap; // entries 0..z_cap
    std::vector<AnalyticSeries> entry;
};

/// Jet with entries 0..J; J <= 4.
ThetaJet theta_jet(const Rational& eps, const Rational& eps_prime, const Rational& tau_mult,
                   int J, const Rational& T, long long E = 48, int M = 48);

ThetaJet jet_add(const ThetaJet& a, const ThetaJet& b);
ThetaJet jet_sub(const ThetaJet& a, const ThetaJet& b);
/// Cauchy product in z, truncated at min(a.z_cap, b.z_cap).
ThetaJet jet_mul(const ThetaJet& a, const ThetaJet& b);
/// Multiply every entry by a z-independent series.
ThetaJet jet_scale(const ThetaJet& a, const AnalyticSeries& s);
/// d/dz: entry m becomes (m+1) * entry[m+1]; the cap drops by one.
ThetaJet jet_z_deriv(const ThetaJet& a);
/// Multiplicative jet inverse; entry 0 must have a leading term.
ThetaJet jet_inv(const ThetaJet& a);
ThetaJet jet_div(const ThetaJet& a, const ThetaJet& b);
/// True when every entry vanishes (below its validity).
bool jet_is_zero(const ThetaJet& a);

/// a(q) = sum_{x,y in Z} q^(x^2+xy+y^2), the hexagonal-lattice theta, by a
/// brute-force double sum.
AnalyticSeries a_series(const Rational& T, long long E = 48, int M = 48);

} // namespace qsw
