#include "qsw/dsl.hpp"

#include "qsw/thetagen.hpp"

#include <cctype>
#include <cstring>
#include <utility>
#include <vector>

namespace qsw {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
    enum class K { number, ident, punct, eof };
    K k;
    std::string text;
    std::size_t begin; // 1-based byte position of the first character
    std::size_t end;   // one past the last character, 1-based
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::K::number, s.substr(i, j - i), i + 1, j + 1});
            i = j;
            continue;
        }
        if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < n && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::K::ident, s.substr(i, j - i), i + 1, j + 1});
            i = j;
            continue;
        }
        if (std::strchr("+-*/^()[],'", s[i]) != nullptr) {
            out.push_back({Token::K::punct, std::string(1, s[i]), i + 1, i + 2});
            ++i;
            continue;
        }
        throw SyntaxError(i + 1, {"token"},
                          "syntax error at offset " + std::to_string(i + 1) +
                              ": unexpected character '" + std::string(1, s[i]) + "'");
    }
    out.push_back({Token::K::eof, "", n + 1, n + 1});
    return out;
}

// ---------------------------------------------------------------------------
// Parser: deterministic single-lookahead recursive descent
// ---------------------------------------------------------------------------

std::shared_ptr<ExprAst> node(ExprAst::Kind k, SrcSpan span) {
    auto p = std::make_shared<ExprAst>();
    p->kind = k;
    p->span = span;
    return p;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    const Token& take() { return toks[pos++]; }

    bool at_punct(char c) const {
        return peek().k == Token::K::punct && peek().text[0] == c;
    }
    bool eat_punct(char c) {
        if (!at_punct(c)) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string msg = "syntax error at offset " + std::to_string(t.begin) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", got ";
        msg += t.k == Token::K::eof ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.begin, std::move(expected), msg);
    }

    void expect_punct(char c) {
        if (!eat_punct(c)) fail({std::string(1, c)});
    }

    /// Rational literal as it appears inside theta/eta brackets and argument
    /// lists: optional leading '-', digits, optional '/' digits.
    Rational rational_field() {
        const bool negated = eat_punct('-');
        if (peek().k != Token::K::number) fail({"number"});
        Int num(take().text);
        Int den(1);
        if (eat_punct('/')) {
            if (peek().k != Token::K::number) fail({"number"});
            const Token& d = peek();
            den = Int(d.text);
            if (den == 0)
                throw SyntaxError(d.begin, {"nonzero denominator"},
                                  "syntax error at offset " + std::to_string(d.begin) +
                                      ": zero denominator in rational literal");
            ++pos;
        }
        Rational r = rat(num, den);
        return negated ? Rational(-r) : r;
    }

    /// Signed integer literal (exponent position).
    long long int_literal() {
        const bool negated = eat_punct('-');
        if (peek().k != Token::K::number) fail({"integer"});
        const Token& t = peek();
        long long v = 0;
        try {
            v = std::stoll(t.text);
        } catch (const std::out_of_range&) {
            throw SyntaxError(t.begin, {"integer"},
                              "syntax error at offset " + std::to_string(t.begin) +
                                  ": integer literal out of range");
        }
        ++pos;
        return negated ? -v : v;
    }

    /// '(' rational 't' ')' — the shared argument-list tail of theta and eta.
    /// Returns the multiplier; `close_end` receives the span end.
    Rational tau_argument(std::size_t& close_end) {
        expect_punct('(');
        const std::size_t arg_off = peek().begin;
        Rational k = rational_field();
        if (!(peek().k == Token::K::ident && peek().text == "t")) fail({"t"});
        ++pos;
        if (k <= 0)
            throw SyntaxError(arg_off, {"positive tau multiplier"},
                              "syntax error at offset " + std::to_string(arg_off) +
                                  ": tau multiplier must be positive");
        if (!at_punct(')')) fail({")"});
        close_end = peek().end;
        ++pos;
        return k;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (at_punct('+') || at_punct('-')) {
            const bool plus = peek().text[0] == '+';
            ++pos;
            ExprPtr rhs = parse_term();
            auto p = node(plus ? ExprAst::Kind::add : ExprAst::Kind::sub,
                          {lhs->span.begin, rhs->span.end});
            p->a = std::move(lhs);
            p->b = std::move(rhs);
            lhs = std::move(p);
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (at_punct('*') || at_punct('/')) {
            const bool times = peek().text[0] == '*';
            ++pos;
            ExprPtr rhs = parse_factor();
            auto p = node(times ? ExprAst::Kind::mul : ExprAst::Kind::div,
                          {lhs->span.begin, rhs->span.end});
            p->a = std::move(lhs);
            p->b = std::move(rhs);
            lhs = std::move(p);
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (eat_punct('^')) {
            const long long e = int_literal();
            auto p = node(ExprAst::Kind::int_pow, {base->span.begin, toks[pos - 1].end});
            p->a = std::move(base);
            p->exponent = e;
            return p;
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        if (t.k == Token::K::number) {
            ++pos;
            auto p = node(ExprAst::Kind::rational_lit, {t.begin, t.end});
            p->value = rat(Int(t.text), Int(1));
            return p;
        }
        if (at_punct('-')) {
            const std::size_t begin = t.begin;
            ++pos;
            ExprPtr inner = parse_atom();
            auto p = node(ExprAst::Kind::neg, {begin, inner->span.end});
            p->a = std::move(inner);
            return p;
        }
        if (at_punct('(')) {
            ++pos;
            ExprPtr inner = parse_expr();
            if (!at_punct(')')) fail({")"});
            ++pos;
            return inner;
        }
        if (t.k == Token::K::ident) {
            if (t.text == "pi") {
                ++pos;
                auto p = node(ExprAst::Kind::pi_pow, {t.begin, t.end});
                p->pi_exp = 1;
                return p;
            }
            if (t.text == "sqrt2" || t.text == "sqrt3" || t.text == "i") {
                ++pos;
                auto p = node(ExprAst::Kind::const_sym, {t.begin, t.end});
                p->sym = t.text == "sqrt2"  ? ExprAst::Sym::sqrt2
                         : t.text == "sqrt3" ? ExprAst::Sym::sqrt3
                                             : ExprAst::Sym::imag_i;
                return p;
            }
            if (t.text == "theta") return parse_theta();
            if (t.text == "eta") return parse_eta();
            if (t.text == "Dtau" || t.text == "Dlog") {
                const bool is_dtau = t.text == "Dtau";
                ++pos;
                expect_punct('(');
                ExprPtr inner = parse_expr();
                if (!at_punct(')')) fail({")"});
                const std::size_t end = peek().end;
                ++pos;
                auto p = node(is_dtau ? ExprAst::Kind::dtau : ExprAst::Kind::dlog,
                              {t.begin, end});
                p->a = std::move(inner);
                return p;
            }
        }
        fail({"number", "pi", "sqrt2", "sqrt3", "i", "theta", "eta", "Dtau", "Dlog", "(", "-"});
    }

    ExprPtr parse_theta() {
        const std::size_t begin = peek().begin;
        ++pos; // 'theta'
        expect_punct('[');
        Rational eps = rational_field();
        expect_punct(',');
        Rational eps_prime = rational_field();
        expect_punct(']');
        int primes = 0;
        while (at_punct('\'')) {
            if (primes == 3) fail({"("});
            ++pos;
            ++primes;
        }
        std::size_t end = 0;
        Rational k = tau_argument(end);
        auto p = node(ExprAst::Kind::theta, {begin, end});
        p->eps = std::move(eps);
        p->eps_prime = std::move(eps_prime);
        p->derivs = primes;
        p->tau_mult = std::move(k);
        return p;
    }

    ExprPtr parse_eta() {
        const std::size_t begin = peek().begin;
        ++pos; // 'eta'
        std::size_t end = 0;
        Rational k = tau_argument(end);
        auto p = node(ExprAst::Kind::eta, {begin, end});
        p->tau_mult = std::move(k);
        return p;
    }
};

// ---------------------------------------------------------------------------
// Renderer
// ---------------------------------------------------------------------------

// Binding strength used to decide parenthesization: additive 1,
// multiplicative 2, integer power 3, prefix minus 4, self-delimiting atoms 5.
// A child is parenthesized when its own level is below the level its
// position requires, which reproduces the parse exactly for every tree the
// parser can produce.
int prec(ExprAst::Kind k) {
    switch (k) {
    case ExprAst::Kind::add:
    case ExprAst::Kind::sub: return 1;
    case ExprAst::Kind::mul:
    case ExprAst::Kind::div: return 2;
    case ExprAst::Kind::int_pow: return 3;
    case ExprAst::Kind::neg: return 4;
    default: return 5;
    }
}

void render_at(const ExprAst& nd, int min_prec, std::string& out) {
    const bool parens = prec(nd.kind) < min_prec;
    if (parens) out += '(';
    switch (nd.kind) {
    case ExprAst::Kind::rational_lit: out += rat_str(nd.value); break;
    case ExprAst::Kind::pi_pow:
        out += nd.pi_exp == 1 ? "pi" : "pi^" + std::to_string(nd.pi_exp);
        break;
    case ExprAst::Kind::const_sym:
        out += nd.sym == ExprAst::Sym::sqrt2   ? "sqrt2"
               : nd.sym == ExprAst::Sym::sqrt3 ? "sqrt3"
                                               : "i";
        break;
    case ExprAst::Kind::theta:
        out += "theta[" + rat_str(nd.eps) + "," + rat_str(nd.eps_prime) + "]";
        out.append(static_cast<std::size_t>(nd.derivs), '\'');
        out += "(" + rat_str(nd.tau_mult) + "t)";
        break;
    case ExprAst::Kind::eta:
        out += "eta(" + rat_str(nd.tau_mult) + "t)";
        break;
    case ExprAst::Kind::neg:
        out += '-';
        render_at(*nd.a, 4, out);
        break;
    case ExprAst::Kind::add:
    case ExprAst::Kind::sub:
        render_at(*nd.a, 1, out);
        out += nd.kind == ExprAst::Kind::add ? '+' : '-';
        render_at(*nd.b, 2, out);
        break;
    case ExprAst::Kind::mul:
    case ExprAst::Kind::div:
        render_at(*nd.a, 2, out);
        out += nd.kind == ExprAst::Kind::mul ? '*' : '/';
        render_at(*nd.b, 3, out);
        break;
    case ExprAst::Kind::int_pow:
        render_at(*nd.a, 4, out);
        out += '^' + std::to_string(nd.exponent);
        break;
    case ExprAst::Kind::dtau:
    case ExprAst::Kind::dlog:
        out += nd.kind == ExprAst::Kind::dtau ? "Dtau(" : "Dlog(";
        render_at(*nd.a, 0, out);
        out += ')';
        break;
    case ExprAst::Kind::rescale:
        throw Error(Errc::bad_usage, "render: rescale nodes have no surface syntax");
    }
    if (parens) out += ')';
}

// ---------------------------------------------------------------------------
// Evaluator
// ---------------------------------------------------------------------------

std::string span_str(const SrcSpan& sp) {
    if (sp.begin == 0) return "offset ?";
    if (sp.end > sp.begin + 1)
        return "offset " + std::to_string(sp.begin) + ".." + std::to_string(sp.end - 1);
    return "offset " + std::to_string(sp.begin);
}

template <typename F>
AnalyticSeries with_span(const SrcSpan& sp, F&& f) {
    try {
        return f();
    } catch (const SyntaxError&) {
        throw;
    } catch (const Error& e) {
        throw Error(e.code, "at " + span_str(sp) + ": " + e.what());
    }
}

AnalyticSeries const_series(const CycloNum& c, const Rational& T, long long E, int M) {
    return AnalyticSeries::make(0, QSeries::monomial(E, M, T, rat(0), c));
}

} // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

bool equal(const ExprAst& x, const ExprAst& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
    case ExprAst::Kind::rational_lit: return x.value == y.value;
    case ExprAst::Kind::pi_pow: return x.pi_exp == y.pi_exp;
    case ExprAst::Kind::const_sym: return x.sym == y.sym;
    case ExprAst::Kind::theta:
        return x.eps == y.eps && x.eps_prime == y.eps_prime && x.derivs == y.derivs &&
               x.tau_mult == y.tau_mult;
    case ExprAst::Kind::eta: return x.tau_mult == y.tau_mult;
    case ExprAst::Kind::neg:
    case ExprAst::Kind::dtau:
    case ExprAst::Kind::dlog: return equal(*x.a, *y.a);
    case ExprAst::Kind::add:
    case ExprAst::Kind::sub:
    case ExprAst::Kind::mul:
    case ExprAst::Kind::div: return equal(*x.a, *y.a) && equal(*x.b, *y.b);
    case ExprAst::Kind::int_pow: return x.exponent == y.exponent && equal(*x.a, *y.a);
    case ExprAst::Kind::rescale: return x.rescale_k == y.rescale_k && equal(*x.a, *y.a);
    }
    return false;
}

ExprPtr make_lit(const Rational& v) {
    auto p = node(ExprAst::Kind::rational_lit, {});
    p->value = v;
    return p;
}
ExprPtr make_pi(int exp) {
    auto p = node(ExprAst::Kind::pi_pow, {});
    p->pi_exp = exp;
    return p;
}
ExprPtr make_const(ExprAst::Sym s) {
    auto p = node(ExprAst::Kind::const_sym, {});
    p->sym = s;
    return p;
}
ExprPtr make_theta(const Rational& eps, const Rational& eps_prime, int derivs,
                   const Rational& tau_mult) {
    auto p = node(ExprAst::Kind::theta, {});
    p->eps = eps;
    p->eps_prime = eps_prime;
    p->derivs = derivs;
    p->tau_mult = tau_mult;
    return p;
}
ExprPtr make_eta(const Rational& tau_mult) {
    auto p = node(ExprAst::Kind::eta, {});
    p->tau_mult = tau_mult;
    return p;
}

namespace {
std::shared_ptr<ExprAst> unary(ExprAst::Kind k, ExprPtr a) {
    auto p = node(k, {});
    p->a = std::move(a);
    return p;
}
std::shared_ptr<ExprAst> binary(ExprAst::Kind k, ExprPtr a, ExprPtr b) {
    auto p = node(k, {});
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}
} // namespace

ExprPtr make_neg(ExprPtr a) { return unary(ExprAst::Kind::neg, std::move(a)); }
ExprPtr make_add(ExprPtr a, ExprPtr b) { return binary(ExprAst::Kind::add, std::move(a), std::move(b)); }
ExprPtr make_sub(ExprPtr a, ExprPtr b) { return binary(ExprAst::Kind::sub, std::move(a), std::move(b)); }
ExprPtr make_mul(ExprPtr a, ExprPtr b) { return binary(ExprAst::Kind::mul, std::move(a), std::move(b)); }
ExprPtr make_div(ExprPtr a, ExprPtr b) { return binary(ExprAst::Kind::div, std::move(a), std::move(b)); }
ExprPtr make_int_pow(ExprPtr a, long long e) {
    auto p = unary(ExprAst::Kind::int_pow, std::move(a));
    p->exponent = e;
    return p;
}
ExprPtr make_dtau(ExprPtr a) { return unary(ExprAst::Kind::dtau, std::move(a)); }
ExprPtr make_dlog(ExprPtr a) { return unary(ExprAst::Kind::dlog, std::move(a)); }
ExprPtr make_rescale(ExprPtr a, const Rational& k) {
    auto p = unary(ExprAst::Kind::rescale, std::move(a));
    p->rescale_k = k;
    return p;
}

ExprPtr parse(const std::string& text) {
    Parser parser{lex(text)};
    ExprPtr root = parser.parse_expr();
    if (parser.peek().k != Token::K::eof)
        parser.fail({"+", "-", "*", "/", "^", "end of input"});
    return root;
}

std::string render(const ExprAst& ast) {
    std::string out;
    render_at(ast, 0, out);
    return out;
}

AnalyticSeries eval(const ExprAst& ast, const Rational& T, long long E, int M) {
    switch (ast.kind) {
    case ExprAst::Kind::rational_lit:
        return const_series(CycloNum::from_rational(M, ast.value), T, E, M);
    case ExprAst::Kind::pi_pow:
        return with_span(ast.span, [&] {
            return AnalyticSeries::make(ast.pi_exp,
                                        QSeries::monomial(E, M, T, rat(0), CycloNum::one(M)));
        });
    case ExprAst::Kind::const_sym:
        return with_span(ast.span, [&] {
            const CycloNum c = ast.sym == ExprAst::Sym::sqrt2   ? sqrt2(M)
                               : ast.sym == ExprAst::Sym::sqrt3 ? sqrt3(M)
                                                                : imag_unit(M);
            return const_series(c, T, E, M);
        });
    case ExprAst::Kind::theta:
        return with_span(ast.span, [&] {
            return theta_series(
                ThetaSpec::make(ast.eps, ast.eps_prime, ast.tau_mult, ast.derivs), T, E, M);
        });
    case ExprAst::Kind::eta:
        return with_span(ast.span, [&] { return eta_series(ast.tau_mult, T, E, M); });
    case ExprAst::Kind::neg: return -eval(*ast.a, T, E, M);
    case ExprAst::Kind::add: {
        const AnalyticSeries x = eval(*ast.a, T, E, M);
        const AnalyticSeries y = eval(*ast.b, T, E, M);
        return with_span(ast.span, [&] { return x + y; });
    }
    case ExprAst::Kind::sub: {
        const AnalyticSeries x = eval(*ast.a, T, E, M);
        const AnalyticSeries y = eval(*ast.b, T, E, M);
        return with_span(ast.span, [&] { return x - y; });
    }
    case ExprAst::Kind::mul: {
        const AnalyticSeries x = eval(*ast.a, T, E, M);
        const AnalyticSeries y = eval(*ast.b, T, E, M);
        return with_span(ast.span, [&] { return x * y; });
    }
    case ExprAst::Kind::div: {
        const AnalyticSeries x = eval(*ast.a, T, E, M);
        const AnalyticSeries y = eval(*ast.b, T, E, M);
        return with_span(ast.span, [&] { return x / y; });
    }
    case ExprAst::Kind::int_pow: {
        if (ast.exponent > 4096 || ast.exponent < -4096)
            throw Error(Errc::bad_usage,
                        "at " + span_str(ast.span) + ": power exponent out of range");
        const AnalyticSeries x = eval(*ast.a, T, E, M);
        return with_span(ast.span, [&] {
            if (ast.exponent == 0)
                return AnalyticSeries::make(0, QSeries::monomial(E, M, x.body.valid_to(),
                                                                 rat(0), CycloNum::one(M)));
            AnalyticSeries base = ast.exponent < 0 ? x.inverse() : x;
            AnalyticSeries acc = base;
            long long reps = ast.exponent < 0 ? -ast.exponent : ast.exponent;
            for (long long j = 1; j < reps; ++j) acc = acc * base;
            return acc;
        });
    }
    case ExprAst::Kind::dtau: {
        const AnalyticSeries x = eval(*ast.a, T, E, M);
        return with_span(ast.span, [&] { return tau_deriv(x); });
    }
    case ExprAst::Kind::dlog: {
        const AnalyticSeries x = eval(*ast.a, T, E, M);
        return with_span(ast.span, [&] { return tau_dlog(x); });
    }
    case ExprAst::Kind::rescale: {
        const AnalyticSeries x = eval(*ast.a, T, E, M);
        return with_span(ast.span, [&] { return x.rescaled_tau(ast.rescale_k); });
    }
    }
    throw Error(Errc::bad_usage, "eval: malformed expression node");
}

AnalyticSeries eval(const std::string& text, const Rational& T, long long E, int M) {
    return eval(*parse(text), T, E, M);
}

} // namespace qsw
