#ifndef CRAUT_EXPR_HPP
#define CRAUT_EXPR_HPP

#include <craut/polynomial.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace craut {

/// Which ring and variable table names in a source string resolve against.
struct ExprContext {
    VarTablePtr vt;
    Ring ring = Ring::Real;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownVariable, WrongRing, ZeroDenominator };

    ParseError(Kind kind, std::size_t offset, const std::string& what);

    Kind kind() const { return kind_; }
    /// Byte offset into the source string.
    std::size_t offset() const { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ('^' uint)?
///   atom   := rational | 'i' | var | 'conj' '(' expr ')' | '(' expr ')'
///   rational := int ('/' uint)?
/// Variables: z1..zn, u1..ud (REAL), zb1..zbn or conj(zk) (REAL), w1..wd (HOL).
Polynomial parse_poly(std::string_view src, const ExprContext& ctx);

/// Canonical text, terms in the global monomial order. Round-trips through parse_poly.
std::string format_poly(const Polynomial& p);

/// Canonical text of a constant, e.g. "-3/2", "i", "(1+1/2*i)".
std::string format_scalar(const Scalar& s);
/// Parses a constant expression (no variables).
Scalar parse_scalar(std::string_view src);

} // namespace craut

#endif // CRAUT_EXPR_HPP
