#ifndef DPB_PARSER_HPP
#define DPB_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <dpb/error.hpp>
#include <dpb/families.hpp>
#include <dpb/lambda_poly.hpp>
#include <dpb/rational.hpp>
#include <dpb/series.hpp>

// Expression language for generating functions in t over Q[lambda]:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')? power
//   power  := atom ('^' int)?
//   atom   := rational | 'lambda' | 't' | call | '(' expr ')'
//   call   := ('log'|'exp') '(' expr ')' | 'li' '(' int ',' expr ')' | 'elam' '(' rational ')'
//
// "p/q" written without spaces is a single rational literal; with spaces the
// slash is division. "λ" is accepted for "lambda". elam(c) is
// (1 + lambda t)^{c/lambda} and li(k, f) is Li_k(f).

namespace dpb
{

enum class ExprKind { rational, lambda, t, add, sub, mul, div, neg, pow, call };

enum class Builtin { log, exp, li, elam };

struct Expr {
    ExprKind kind = ExprKind::rational;
    Span span;
    // Literal value, or the argument of elam.
    Rational value;
    // Exponent of pow, or the order k of li.
    long integer = 0;
    Builtin fn = Builtin::log;
    std::vector<Expr> args;

    static Expr literal(Rational v, Span s = {})
    {
        Expr e;
        e.kind = ExprKind::rational;
        e.value = std::move(v);
        e.span = s;
        return e;
    }
    static Expr leaf(ExprKind kind, Span s = {})
    {
        Expr e;
        e.kind = kind;
        e.span = s;
        return e;
    }
    static Expr binary(ExprKind kind, Expr lhs, Expr rhs, Span s = {})
    {
        Expr e = leaf(kind, s);
        e.args.push_back(std::move(lhs));
        e.args.push_back(std::move(rhs));
        return e;
    }
    static Expr negate(Expr operand, Span s = {})
    {
        Expr e = leaf(ExprKind::neg, s);
        e.args.push_back(std::move(operand));
        return e;
    }
    static Expr power(Expr base, long exponent, Span s = {})
    {
        Expr e = leaf(ExprKind::pow, s);
        e.integer = exponent;
        e.args.push_back(std::move(base));
        return e;
    }
    static Expr call(Builtin fn, std::vector<Expr> args, Span s = {})
    {
        Expr e = leaf(ExprKind::call, s);
        e.fn = fn;
        e.args = std::move(args);
        return e;
    }
    static Expr li(long k, Expr arg, Span s = {})
    {
        Expr e = call(Builtin::li, {}, s);
        e.integer = k;
        e.args.push_back(std::move(arg));
        return e;
    }
    static Expr elam(Rational c, Span s = {})
    {
        Expr e = call(Builtin::elam, {}, s);
        e.value = std::move(c);
        return e;
    }
};

// Equality of everything but the source spans.
inline bool same_structure(const Expr &a, const Expr &b)
{
    if (a.kind != b.kind || a.args.size() != b.args.size()) {
        return false;
    }
    switch (a.kind) {
        case ExprKind::rational:
            if (a.value != b.value) {
                return false;
            }
            break;
        case ExprKind::pow:
            if (a.integer != b.integer) {
                return false;
            }
            break;
        case ExprKind::call:
            if (a.fn != b.fn || (a.fn == Builtin::li && a.integer != b.integer)
                || (a.fn == Builtin::elam && a.value != b.value)) {
                return false;
            }
            break;
        default:
            break;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!same_structure(a.args[i], b.args[i])) {
            return false;
        }
    }
    return true;
}

namespace detail
{

enum class Tok { number, ident, lambda, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind = Tok::end;
    std::string_view text;
    std::size_t offset = 0;
};

inline std::string describe(const Token &t)
{
    return t.kind == Tok::end ? std::string("end of input") : "'" + std::string(t.text) + "'";
}

inline bool is_digit(char c)
{
    return c >= '0' && c <= '9';
}

inline bool is_alpha(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline std::vector<Token> tokenize(std::string_view in)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < in.size()) {
        const char c = in[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        auto single = [&](Tok kind) {
            out.push_back({kind, in.substr(start, 1), start});
            ++i;
        };
        switch (c) {
            case '+':
                single(Tok::plus);
                continue;
            case '-':
                single(Tok::minus);
                continue;
            case '*':
                single(Tok::star);
                continue;
            case '/':
                single(Tok::slash);
                continue;
            case '^':
                single(Tok::caret);
                continue;
            case '(':
                single(Tok::lparen);
                continue;
            case ')':
                single(Tok::rparen);
                continue;
            case ',':
                single(Tok::comma);
                continue;
            default:
                break;
        }
        if (is_digit(c)) {
            while (i < in.size() && is_digit(in[i])) {
                ++i;
            }
            // "p/q" with no spaces is one literal.
            if (i + 1 < in.size() && in[i] == '/' && is_digit(in[i + 1])) {
                i += 1;
                while (i < in.size() && is_digit(in[i])) {
                    ++i;
                }
            }
            out.push_back({Tok::number, in.substr(start, i - start), start});
        } else if (is_alpha(c)) {
            while (i < in.size() && (is_alpha(in[i]) || is_digit(in[i]))) {
                ++i;
            }
            const auto word = in.substr(start, i - start);
            out.push_back({word == "lambda" ? Tok::lambda : Tok::ident, word, start});
        } else if (in.substr(i, 2) == "\xCE\xBB") {
            i += 2;
            out.push_back({Tok::lambda, in.substr(start, 2), start});
        } else {
            throw SyntaxError(start, {"expression"}, "'" + std::string(1, c) + "'");
        }
    }
    out.push_back({Tok::end, {}, in.size()});
    return out;
}

class Parser
{
public:
    explicit Parser(std::string_view input) : tokens_(tokenize(input)) {}

    Expr parse_all()
    {
        Expr e = expr();
        if (peek().kind != Tok::end) {
            fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
        }
        return e;
    }

private:
    const Token &peek() const
    {
        return tokens_[pos_];
    }
    const Token &advance()
    {
        return tokens_[pos_++];
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        throw SyntaxError(peek().offset, std::move(expected), describe(peek()));
    }
    const Token &expect(Tok kind, const char *what)
    {
        if (peek().kind != kind) {
            fail({what});
        }
        return advance();
    }
    std::size_t last_end() const
    {
        const auto &t = tokens_[pos_ - 1];
        return t.offset + t.text.size();
    }

    Expr expr()
    {
        const std::size_t begin = peek().offset;
        Expr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const auto kind = advance().kind == Tok::plus ? ExprKind::add : ExprKind::sub;
            Expr rhs = term();
            lhs = Expr::binary(kind, std::move(lhs), std::move(rhs), {begin, last_end()});
        }
        return lhs;
    }

    Expr term()
    {
        const std::size_t begin = peek().offset;
        Expr lhs = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const auto kind = advance().kind == Tok::star ? ExprKind::mul : ExprKind::div;
            Expr rhs = factor();
            lhs = Expr::binary(kind, std::move(lhs), std::move(rhs), {begin, last_end()});
        }
        return lhs;
    }

    Expr factor()
    {
        if (peek().kind == Tok::minus) {
            const std::size_t begin = advance().offset;
            Expr operand = power();
            return Expr::negate(std::move(operand), {begin, last_end()});
        }
        return power();
    }

    Expr power()
    {
        const std::size_t begin = peek().offset;
        Expr base = atom();
        if (peek().kind == Tok::caret) {
            advance();
            const long e = integer_literal();
            return Expr::power(std::move(base), e, {begin, last_end()});
        }
        return base;
    }

    // Optionally signed literal, as used for exponents and builtin parameters.
    Rational signed_literal(const char *what)
    {
        bool negative = false;
        if (peek().kind == Tok::minus) {
            advance();
            negative = true;
        }
        const Rational v = Rational::parse(expect(Tok::number, what).text);
        return negative ? -v : v;
    }

    long integer_literal()
    {
        const std::size_t at = peek().offset;
        const Rational v = signed_literal("integer");
        if (!v.is_integer() || !v.numerator().fits_slong_p()) {
            throw SyntaxError(at, {"integer"}, "'" + v.to_string() + "'");
        }
        return v.numerator().get_si();
    }

    Expr atom()
    {
        const Token &tok = peek();
        const std::size_t begin = tok.offset;
        switch (tok.kind) {
            case Tok::number:
                advance();
                return Expr::literal(Rational::parse(tok.text), {begin, last_end()});
            case Tok::lambda:
                advance();
                return Expr::leaf(ExprKind::lambda, {begin, last_end()});
            case Tok::lparen: {
                advance();
                Expr inner = expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::ident:
                if (tok.text == "t") {
                    advance();
                    return Expr::leaf(ExprKind::t, {begin, last_end()});
                }
                if (tok.text == "log" || tok.text == "exp" || tok.text == "li" || tok.text == "elam") {
                    return call();
                }
                break;
            default:
                break;
        }
        fail({"rational", "'lambda'", "'t'", "'log'", "'exp'", "'li'", "'elam'", "'('"});
    }

    Expr call()
    {
        const Token &name = advance();
        const std::size_t begin = name.offset;
        expect(Tok::lparen, "'('");
        // Arguments are collected first so that a wrong count is reported as
        // an arity error rather than a syntax error.
        struct Arg {
            std::size_t token;
            Expr expr;
        };
        std::vector<Arg> args;
        if (peek().kind != Tok::rparen) {
            for (;;) {
                const std::size_t token = pos_;
                args.push_back({token, expr()});
                if (peek().kind != Tok::comma) {
                    break;
                }
                advance();
            }
        }
        expect(Tok::rparen, "')'");
        const Span span{begin, last_end()};
        const std::size_t arity = name.text == "li" ? 2 : 1;
        if (args.size() != arity) {
            throw ArityError(span, std::string(name.text), arity, args.size());
        }
        if (name.text == "log" || name.text == "exp") {
            std::vector<Expr> a;
            a.push_back(std::move(args[0].expr));
            return Expr::call(name.text == "log" ? Builtin::log : Builtin::exp, std::move(a), span);
        }
        if (name.text == "li") {
            const long k = reparse_literal(args[0].token, "integer", true).numerator().get_si();
            return Expr::li(k, std::move(args[1].expr), span);
        }
        return Expr::elam(reparse_literal(args[0].token, "rational", false), span);
    }

    // Re-reads a builtin parameter that must be a bare (optionally negated)
    // literal rather than a general expression.
    Rational reparse_literal(std::size_t token, const char *what, bool integral)
    {
        const std::size_t saved = pos_;
        pos_ = token;
        const std::size_t at = peek().offset;
        Rational v;
        try {
            v = signed_literal(what);
        } catch (const SyntaxError &) {
            pos_ = token;
            fail({what});
        }
        if (peek().kind != Tok::comma && peek().kind != Tok::rparen) {
            fail({"','", "')'"});
        }
        if (integral && (!v.is_integer() || !v.numerator().fits_slong_p())) {
            throw SyntaxError(at, {what}, "'" + v.to_string() + "'");
        }
        pos_ = saved;
        return v;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline int precedence(const Expr &e)
{
    switch (e.kind) {
        case ExprKind::add:
        case ExprKind::sub:
            return 1;
        case ExprKind::mul:
        case ExprKind::div:
            return 2;
        case ExprKind::neg:
            return 3;
        case ExprKind::pow:
            return 4;
        default:
            return 5;
    }
}

inline std::string render_at(const Expr &e, int min_precedence);

inline std::string render_expr(const Expr &e)
{
    switch (e.kind) {
        case ExprKind::rational:
            return e.value.to_string();
        case ExprKind::lambda:
            return "lambda";
        case ExprKind::t:
            return "t";
        case ExprKind::add:
            return render_at(e.args[0], 1) + " + " + render_at(e.args[1], 2);
        case ExprKind::sub:
            return render_at(e.args[0], 1) + " - " + render_at(e.args[1], 2);
        case ExprKind::mul:
            return render_at(e.args[0], 2) + " * " + render_at(e.args[1], 3);
        case ExprKind::div:
            return render_at(e.args[0], 2) + " / " + render_at(e.args[1], 3);
        case ExprKind::neg:
            return "-" + render_at(e.args[0], 4);
        case ExprKind::pow:
            return render_at(e.args[0], 5) + "^" + std::to_string(e.integer);
        case ExprKind::call:
            switch (e.fn) {
                case Builtin::log:
                    return "log(" + render_expr(e.args[0]) + ")";
                case Builtin::exp:
                    return "exp(" + render_expr(e.args[0]) + ")";
                case Builtin::li:
                    return "li(" + std::to_string(e.integer) + ", " + render_expr(e.args[0]) + ")";
                case Builtin::elam:
                    return "elam(" + e.value.to_string() + ")";
            }
    }
    return {};
}

inline std::string render_at(const Expr &e, int min_precedence)
{
    std::string s = render_expr(e);
    return precedence(e) < min_precedence ? "(" + s + ")" : s;
}

inline std::size_t count_divisions(const Expr &e)
{
    std::size_t n = e.kind == ExprKind::div ? 1 : 0;
    for (const auto &a : e.args) {
        n += count_divisions(a);
    }
    return n;
}

class Evaluator
{
public:
    explicit Evaluator(std::size_t precision) : precision_(precision) {}

    LambdaSeries eval(const Expr &e) const
    {
        try {
            return eval_node(e);
        } catch (const EvalError &) {
            throw;
        } catch (const Error &err) {
            throw EvalError(e.span, err.what());
        }
    }

private:
    LambdaSeries eval_node(const Expr &e) const
    {
        switch (e.kind) {
            case ExprKind::rational:
                return LambdaSeries::constant(LambdaPoly(e.value), precision_);
            case ExprKind::lambda:
                return LambdaSeries::constant(LambdaPoly::lambda(), precision_);
            case ExprKind::t:
                return LambdaSeries::variable(precision_);
            case ExprKind::add:
                return eval(e.args[0]) + eval(e.args[1]);
            case ExprKind::sub:
                return eval(e.args[0]) - eval(e.args[1]);
            case ExprKind::mul:
                return eval(e.args[0]) * eval(e.args[1]);
            case ExprKind::div:
                return div(eval(e.args[0]), eval(e.args[1]));
            case ExprKind::neg:
                return -eval(e.args[0]);
            case ExprKind::pow:
                return pow(eval(e.args[0]), e.integer);
            case ExprKind::call:
                switch (e.fn) {
                    case Builtin::log:
                        return log_series(eval(e.args[0]));
                    case Builtin::exp:
                        return exp_series(eval(e.args[0]));
                    case Builtin::li: {
                        const auto inner = eval(e.args[0]);
                        return compose(promote(polylog_series(e.integer, inner.precision())), inner);
                    }
                    case Builtin::elam:
                        return elam(e.value, precision_);
                }
        }
        throw EvalError(e.span, "unknown node");
    }

    std::size_t precision_;
};

inline bool is_t_free(const Expr &e)
{
    if (e.kind == ExprKind::t || e.kind == ExprKind::call) {
        return false;
    }
    for (const auto &a : e.args) {
        if (!is_t_free(a)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

inline Expr parse(std::string_view input)
{
    return detail::Parser(input).parse_all();
}

// Canonical text of an AST; parse(render(e)) has the same structure as e.
inline std::string render(const Expr &e)
{
    return detail::render_expr(e);
}

// Exact series to the given precision. Every cancelling division loses one
// coefficient, so evaluation runs that many coefficients higher and the result
// is truncated back.
inline LambdaSeries eval_expr(const Expr &ast, std::size_t precision = default_precision)
{
    const detail::Evaluator ev(precision + detail::count_divisions(ast));
    return ev.eval(ast).truncated(precision);
}

inline LambdaSeries eval_expr(std::string_view input, std::size_t precision = default_precision)
{
    return eval_expr(parse(input), precision);
}

// Reads back the canonical LambdaPoly rendering (or any t-free expression).
inline LambdaPoly parse_lambda_poly(std::string_view input)
{
    const Expr ast = parse(input);
    if (!detail::is_t_free(ast)) {
        throw InvalidArgument("'" + std::string(input) + "' is not a polynomial in lambda");
    }
    return eval_expr(ast, 1)[0];
}

} // namespace dpb

#endif // DPB_PARSER_HPP
