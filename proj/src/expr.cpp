#include <craut/expr.hpp>

#include <cctype>

namespace craut {

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), kind_(kind), offset_(offset)
{
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

class Parser {
public:
    Parser(std::string_view src, const ExprContext& ctx) : src_(src), ctx_(ctx) {}

    Polynomial run()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::Syntax) const
    {
        throw ParseError(kind, pos_, msg);
    }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg, ParseError::Kind kind) const
    {
        throw ParseError(kind, at, msg);
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    char peek()
    {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Polynomial constant(const Scalar& c) const { return Polynomial::constant(ctx_.vt, ctx_.ring, c); }

    Polynomial expr()
    {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor()
    {
        if (accept('-')) return -factor();
        Polynomial base = atom();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= src_.size() || !is_digit(src_[pos_])) fail("expected non-negative integer exponent");
            std::size_t start = pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
            if (pos_ - start > 4) fail_at(start, "exponent too large", ParseError::Kind::Syntax);
            unsigned e = static_cast<unsigned>(std::stoul(std::string(src_.substr(start, pos_ - start))));
            base = pow(base, e);
        }
        return base;
    }

    Polynomial atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            expect(')');
            return p;
        }
        if (is_digit(c)) return constant(Scalar(rational()));
        if (is_alpha(c)) return identifier();
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational rational()
    {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        Integer num(std::string(src_.substr(start, pos_ - start)), 10);
        Integer den = 1;
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' && is_digit(src_[pos_ + 1])) {
            std::size_t dstart = ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
            den = Integer(std::string(src_.substr(dstart, pos_ - dstart)), 10);
            if (den == 0) fail_at(dstart, "zero denominator", ParseError::Kind::ZeroDenominator);
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Polynomial identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_]))) ++pos_;
        const std::string_view id = src_.substr(start, pos_ - start);
        if (id == "i") return constant(Scalar::i());
        if (id == "conj") {
            if (ctx_.ring != Ring::Real)
                fail_at(start, "conj() is only allowed in the REAL ring", ParseError::Kind::WrongRing);
            expect('(');
            Polynomial inner = expr();
            expect(')');
            return conjugate(inner);
        }
        return variable(id, start);
    }

    Polynomial variable(std::string_view id, std::size_t at)
    {
        std::size_t k = 0;
        while (k < id.size() && is_alpha(id[k])) ++k;
        const std::string_view prefix = id.substr(0, k);
        const std::string_view digits = id.substr(k);
        auto unknown = [&] {
            fail_at(at, "unknown variable '" + std::string(id) + "'", ParseError::Kind::UnknownVariable);
        };
        if (digits.empty() || digits[0] == '0' || digits.size() > 6) unknown();
        for (char c : digits)
            if (!is_digit(c)) unknown();
        const int index = std::stoi(std::string(digits)) - 1;
        const VarTable& vt = *ctx_.vt;

        auto wrong_ring = [&] {
            fail_at(at, "variable '" + std::string(id) + "' is not allowed in the " + ring_name(ctx_.ring) + " ring",
                    ParseError::Kind::WrongRing);
        };
        int var = -1;
        if (prefix == "z") {
            if (index >= vt.n()) unknown();
            var = vt.z(index);
        } else if (prefix == "zb") {
            if (index >= vt.n()) unknown();
            if (ctx_.ring != Ring::Real) wrong_ring();
            var = vt.zbar(index);
        } else if (prefix == "u") {
            if (index >= vt.d()) unknown();
            if (ctx_.ring != Ring::Real) wrong_ring();
            var = vt.u(index);
        } else if (prefix == "w") {
            if (index >= vt.d()) unknown();
            if (ctx_.ring != Ring::Hol) wrong_ring();
            var = vt.w(index);
        } else {
            unknown();
        }
        return Polynomial::variable(ctx_.vt, ctx_.ring, var);
    }

    std::string_view src_;
    const ExprContext& ctx_;
    std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m, const VarTable& vt, Ring ring)
{
    std::string out;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += vt.var_name(ring, static_cast<int>(v));
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out;
}

// Coefficient body without its overall sign; returns true when negative.
bool coefficient_body(const Scalar& c, bool has_monomial, std::string& body)
{
    if (c.is_real()) {
        Rational a = abs(c.re());
        body = (a == 1 && has_monomial) ? "" : to_string(a);
        return sgn(c.re()) < 0;
    }
    if (sgn(c.re()) == 0) {
        Rational b = abs(c.im());
        body = b == 1 ? "i" : to_string(b) + "*i";
        return sgn(c.im()) < 0;
    }
    Rational b = abs(c.im());
    body = "(" + to_string(c.re()) + (sgn(c.im()) > 0 ? "+" : "-") + (b == 1 ? "i" : to_string(b) + "*i") + ")";
    return false;
}

} // namespace

Polynomial parse_poly(std::string_view src, const ExprContext& ctx)
{
    if (!ctx.vt) throw std::invalid_argument("parse_poly: context has no VarTable");
    return Parser(src, ctx).run();
}

std::string format_poly(const Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string mono = format_monomial(m, p.vartable(), p.ring());
        std::string body;
        bool neg = coefficient_body(c, !mono.empty(), body);
        if (neg) {
            out += '-';
        } else if (!first) {
            out += '+';
        }
        out += body;
        if (!body.empty() && !mono.empty()) out += '*';
        out += mono;
        first = false;
    }
    return out;
}

std::string format_scalar(const Scalar& s)
{
    if (s.is_zero()) return "0";
    std::string body;
    bool neg = coefficient_body(s, false, body);
    return neg ? "-" + body : body;
}

Scalar parse_scalar(std::string_view src)
{
    static const VarTablePtr vt = std::make_shared<const VarTable>(1, std::vector<Block>{{2, 1}});
    ExprContext ctx{vt, Ring::Hol};
    Polynomial p = parse_poly(src, ctx);
    if (p.is_zero()) return Scalar();
    if (p.size() != 1 || !p.terms().front().first.is_constant())
        throw ParseError(ParseError::Kind::Syntax, 0, "expected a constant, got '" + std::string(src) + "'");
    return p.terms().front().second;
}

} // namespace craut
