#pragma once

/// Small closed-term expression language over the engine's objects, so the
/// command-line tool can expand and compare theta/eta expressions without
/// recompiling.  The parser is a deterministic single-lookahead recursive
/// descent over a whitespace-insensitive token stream; the evaluator lowers
/// compositionally to AnalyticSeries operations.
///
/// Grammar (public surface, stable across versions):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := atom ('^' int)?
///   atom   := rational | 'pi' | 'sqrt2' | 'sqrt3' | 'i' | theta | eta
///           | 'Dtau' '(' expr ')' | 'Dlog' '(' expr ')' | '(' expr ')'
///           | '-' atom
///   theta  := 'theta' '[' rational ',' rational ']' prime* '(' rational 't' ')'
///   eta    := 'eta' '(' rational 't' ')'
/// where prime is the ASCII apostrophe (at most three, counting
/// z-derivatives) and 't' marks the tau variable ("4t" means 4*tau).
/// Rational literals inside theta/eta brackets and arguments may carry one
/// leading '-'; at expression level '-' is the usual prefix operator and '/'
/// the usual binary operator, which evaluates to the same value.
///
/// Offsets in SyntaxError are 1-based byte positions; end-of-input reports
/// the position one past the last byte.

#include "qsw/series.hpp"

#include <memory>
#include <string>

namespace qsw {

/// Source byte range [begin, end), 1-based, kept on every node so evaluation
/// errors can point back into the text.
struct SrcSpan {
    std::size_t begin{0};
    std::size_t end{0};
};

struct ExprAst;
using ExprPtr = std::shared_ptr<const ExprAst>;

/// One node of the expression tree.  `kind` selects which fields are
/// meaningful; unary nodes use child `a`, binary nodes `a` and `b`.
/// `rescale` has no surface syntax: it is produced programmatically (the
/// evaluator maps it to rescaled_tau) and render() refuses it.
struct ExprAst {
    enum class Kind {
        rational_lit, ///< value
        pi_pow,       ///< pi_exp (the parser always produces pi_exp == 1)
        const_sym,    ///< sym
        theta,        ///< eps, eps_prime, derivs (0..3), tau_mult
        eta,          ///< tau_mult
        neg,          ///< a
        add,          ///< a, b
        sub,          ///< a, b
        mul,          ///< a, b
        div,          ///< a, b
        int_pow,      ///< a, exponent
        dtau,         ///< a
        dlog,         ///< a
        rescale,      ///< a, rescale_k
    };
    enum class Sym { sqrt2, sqrt3, imag_i };

    Kind kind{Kind::rational_lit};
    SrcSpan span{};

    Rational value{0};
    int pi_exp{0};
    Sym sym{Sym::sqrt2};
    Rational eps{0};
    Rational eps_prime{0};
    int derivs{0};
    Rational tau_mult{1};
    long long exponent{0};
    Rational rescale_k{1};
    ExprPtr a;
    ExprPtr b;
};

/// Structural equality, ignoring source spans.
bool equal(const ExprAst& x, const ExprAst& y);
inline bool equal(const ExprPtr& x, const ExprPtr& y) { return equal(*x, *y); }

/// Node factories (spans default to empty; the parser fills real ones).
ExprPtr make_lit(const Rational& v);
ExprPtr make_pi(int exp = 1);
ExprPtr make_const(ExprAst::Sym s);
ExprPtr make_theta(const Rational& eps, const Rational& eps_prime, int derivs,
                   const Rational& tau_mult);
ExprPtr make_eta(const Rational& tau_mult);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_int_pow(ExprPtr a, long long e);
ExprPtr make_dtau(ExprPtr a);
ExprPtr make_dlog(ExprPtr a);
ExprPtr make_rescale(ExprPtr a, const Rational& k);

/// Parse source text to a tree.  SyntaxError (with 1-based byte offset and
/// the set of acceptable tokens) on malformed input.
ExprPtr parse(const std::string& text);

/// Render a tree back to surface syntax with minimal parentheses.  For every
/// parser-produced tree, parse(render(t)) is structurally equal to t.
/// BadUsage for rescale nodes, which have no surface syntax.
std::string render(const ExprAst& ast);
inline std::string render(const ExprPtr& ast) { return render(*ast); }

/// Evaluate to a truncated series: leaves are generated at order T on grid E
/// with coefficients in Q(zeta_M), and validity then propagates through the
/// operations (so it can end below T after division; callers wanting exactly
/// T pad the order and truncate).  Engine errors are rethrown with the source
/// span of the node that raised them prefixed to the message; the error code
/// is preserved.
AnalyticSeries eval(const ExprAst& ast, const Rational& T, long long E = 48, int M = 48);
inline AnalyticSeries eval(const ExprPtr& ast, const Rational& T, long long E = 48, int M = 48) {
    return eval(*ast, T, E, M);
}

/// parse + eval in one step.
AnalyticSeries eval(const std::string& text, const Rational& T, long long E = 48, int M = 48);

} // namespace qsw
