#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrkit/bpoly.hpp"
#include "rrkit/function_field.hpp"
#include "rrkit/ratfun.hpp"
#include "rrkit/upoly.hpp"

namespace rrkit {

/// Syntax tree for polynomial and rational-function expressions.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor | factor)*
///   factor := '-' factor | atom ('^' uint)?
///   atom   := literal | 'z' | 'w' | '(' expr ')'
///
/// Literals are integers or p/q. Juxtaposition multiplies only when a
/// literal or parenthesized group is followed by a variable ("2z", "(z+1)w").
/// '/' between factors is accepted only by parse_ratfun.
struct Expr {
  enum class Kind { Literal, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Group };

  Kind kind = Kind::Literal;
  std::size_t offset = 0;
  Rat value;             ///< Literal
  char variable = 'z';   ///< Variable
  unsigned exponent = 0; ///< Power
  std::vector<std::shared_ptr<const Expr>> children;

  std::string to_string() const;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Syntax only; ParseError with byte offset and expected tokens.
ExprPtr parse_expr(std::string_view text, bool allow_division = false);

BPoly lower_bpoly(const Expr& e);
/// ParseError if w occurs.
RatFun lower_ratfun(const Expr& e);

BPoly parse_poly(std::string_view text);
/// Polynomial in z only.
UPoly parse_upoly(std::string_view text);
RatFun parse_ratfun(std::string_view text);

/// "lhs = rhs", returned as lhs - rhs.
BPoly parse_equation(std::string_view text);

/// "w^m = f(z)" (any equation of the shape c w^m + g(z) = 0), as (m, f).
std::pair<int, UPoly> parse_superelliptic(std::string_view text);

/// "2*(z) + (z^2 + 1) - 3*inf" or "0". Places are normalized to monic;
/// reducible or constant place polynomials raise DomainError.
Divisor parse_divisor(std::string_view text);

}  // namespace rrkit
