#include "rrkit/expr.hpp"

#include <cctype>
#include <limits>

#include "rrkit/error.hpp"

namespace rrkit {

namespace {

constexpr unsigned kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, bool allow_division) : s_(text), division_(allow_division) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    expect_end();
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip();
      if (peek() != '+' && peek() != '-') return lhs;
      const std::size_t at = pos_;
      const auto kind = get() == '+' ? Expr::Kind::Add : Expr::Kind::Subtract;
      lhs = binary(kind, at, lhs, term());
    }
  }

  void expect_end() {
    skip();
    if (pos_ != s_.size()) fail("unexpected character", pos_, after_operand());
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip();
    return pos_ == s_.size();
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at, std::vector<std::string> expected) const {
    std::string msg = what + " at offset " + std::to_string(at);
    if (!expected.empty()) {
      msg += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    }
    throw ParseError(msg, at, std::move(expected));
  }

  std::vector<std::string> after_operand() const {
    std::vector<std::string> out{"'+'", "'-'", "'*'"};
    if (division_) out.push_back("'/'");
    out.push_back("'^'");
    out.push_back("end of input");
    return out;
  }

  static std::vector<std::string> operand() { return {"number", "'z'", "'w'", "'('", "'-'"}; }

  unsigned uint_literal(std::size_t& digits_start) {
    skip();
    digits_start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent", pos_, {"nonnegative integer"});
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(get() - '0');
      if (v > kMaxExponent) fail("exponent too large", digits_start, {"integer <= 100000"});
    }
    return static_cast<unsigned>(v);
  }

 private:
  static ExprPtr binary(Expr::Kind k, std::size_t at, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->offset = at;
    e->children = {std::move(a), std::move(b)};
    return e;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      skip();
      const char c = peek();
      const std::size_t at = pos_;
      if (c == '*') {
        get();
        lhs = binary(Expr::Kind::Multiply, at, lhs, factor());
      } else if (c == '/' && division_) {
        get();
        lhs = binary(Expr::Kind::Divide, at, lhs, factor());
      } else if ((c == 'z' || c == 'w') && juxtaposable(*lhs)) {
        lhs = binary(Expr::Kind::Multiply, at, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  static bool juxtaposable(const Expr& e) {
    const Expr* x = &e;
    while (x->kind == Expr::Kind::Multiply || x->kind == Expr::Kind::Negate) x = x->children.back().get();
    if (x->kind == Expr::Kind::Power) x = x->children.front().get();
    return x->kind == Expr::Kind::Literal || x->kind == Expr::Kind::Group;
  }

  ExprPtr factor() {
    skip();
    const std::size_t at = pos_;
    if (peek() == '-') {
      get();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Negate;
      e->offset = at;
      e->children = {factor()};
      return e;
    }
    ExprPtr base = atom();
    skip();
    if (peek() != '^') return base;
    const std::size_t caret = pos_;
    get();
    std::size_t digits = 0;
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Power;
    e->offset = caret;
    e->exponent = uint_literal(digits);
    e->children = {std::move(base)};
    return e;
  }

  ExprPtr atom() {
    skip();
    const std::size_t at = pos_;
    auto e = std::make_shared<Expr>();
    e->offset = at;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        get();
        while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      }
      e->kind = Expr::Kind::Literal;
      try {
        e->value = Rat::parse(s_.substr(at, pos_ - at));
      } catch (const DomainError&) {
        fail("zero denominator", at, {"nonzero denominator"});
      }
      return e;
    }
    if (c == 'z' || c == 'w') {
      get();
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        fail("unknown identifier", at, {"'z'", "'w'"});
      }
      e->kind = Expr::Kind::Variable;
      e->variable = c;
      return e;
    }
    if (c == '(') {
      get();
      e->kind = Expr::Kind::Group;
      e->children = {expr()};
      skip();
      if (peek() != ')') {
        auto expected = after_operand();
        expected.back() = "')'";
        fail("unbalanced parenthesis", pos_, std::move(expected));
      }
      get();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown variable", at, {"'z'", "'w'"});
    fail(c == '\0' ? "unexpected end of input" : "unexpected character", at, operand());
  }

  std::string_view s_;
  bool division_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Expr::to_string() const {
  auto child = [&](std::size_t i) { return children[i]->to_string(); };
  switch (kind) {
    case Kind::Literal: return value.to_string();
    case Kind::Variable: return std::string(1, variable);
    case Kind::Negate: return "-" + child(0);
    case Kind::Add: return child(0) + " + " + child(1);
    case Kind::Subtract: return child(0) + " - " + child(1);
    case Kind::Multiply: return child(0) + "*" + child(1);
    case Kind::Divide: return child(0) + "/" + child(1);
    case Kind::Power: return child(0) + "^" + std::to_string(exponent);
    case Kind::Group: return "(" + child(0) + ")";
  }
  return "";
}

ExprPtr parse_expr(std::string_view text, bool allow_division) { return Parser(text, allow_division).parse_all(); }

BPoly lower_bpoly(const Expr& e) {
  auto child = [&](std::size_t i) { return lower_bpoly(*e.children[i]); };
  switch (e.kind) {
    case Expr::Kind::Literal: return BPoly(e.value);
    case Expr::Kind::Variable: return e.variable == 'w' ? BPoly::w() : BPoly::z();
    case Expr::Kind::Negate: return -child(0);
    case Expr::Kind::Add: return child(0) + child(1);
    case Expr::Kind::Subtract: return child(0) - child(1);
    case Expr::Kind::Multiply: return child(0) * child(1);
    case Expr::Kind::Divide: {
      const BPoly d = child(1);
      if (d.is_zero()) throw DomainError("division by zero");
      if (d.terms().size() != 1 || d.terms().begin()->first != BPoly::Exponent{0, 0}) {
        throw ParseError("polynomial division is not allowed here", e.offset, {"'*'", "'+'", "'-'"});
      }
      return child(0) * BPoly(d.terms().begin()->second.inverse());
    }
    case Expr::Kind::Power: return child(0).pow(e.exponent);
    case Expr::Kind::Group: return child(0);
  }
  throw InternalError("unknown expression kind");
}

RatFun lower_ratfun(const Expr& e) {
  auto child = [&](std::size_t i) { return lower_ratfun(*e.children[i]); };
  switch (e.kind) {
    case Expr::Kind::Literal: return RatFun(e.value);
    case Expr::Kind::Variable:
      if (e.variable == 'w') throw ParseError("w is not allowed in a function of z", e.offset, {"'z'"});
      return RatFun::variable();
    case Expr::Kind::Negate: return -child(0);
    case Expr::Kind::Add: return child(0) + child(1);
    case Expr::Kind::Subtract: return child(0) - child(1);
    case Expr::Kind::Multiply: return child(0) * child(1);
    case Expr::Kind::Divide: return child(0) / child(1);
    case Expr::Kind::Power: return child(0).pow(static_cast<int>(e.exponent));
    case Expr::Kind::Group: return child(0);
  }
  throw InternalError("unknown expression kind");
}

BPoly parse_poly(std::string_view text) { return lower_bpoly(*parse_expr(text)); }

UPoly parse_upoly(std::string_view text) {
  const ExprPtr e = parse_expr(text);
  const BPoly f = lower_bpoly(*e);
  if (f.degree_w() > Degree(0)) throw ParseError("w is not allowed in a polynomial in z", 0, {"'z'"});
  return f.coeff_w(0);
}

RatFun parse_ratfun(std::string_view text) { return lower_ratfun(*parse_expr(text, true)); }

BPoly parse_equation(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("missing '='", text.size(), {"'='"});
  if (text.find('=', eq + 1) != std::string_view::npos) {
    throw ParseError("more than one '='", text.find('=', eq + 1), {"end of input"});
  }
  const BPoly lhs = parse_poly(text.substr(0, eq));
  BPoly rhs;
  try {
    rhs = parse_poly(text.substr(eq + 1));
  } catch (const ParseError& err) {
    throw ParseError(err.what(), err.offset() + eq + 1, err.expected());
  }
  return lhs - rhs;
}

std::pair<int, UPoly> parse_superelliptic(std::string_view text) {
  const BPoly f = parse_equation(text);
  const std::vector<std::string> shape{"w^m = f(z)"};
  int m = 0;
  Rat lead;
  BPoly rest;
  for (const auto& [key, c] : f.terms()) {
    if (key.first == 0) {
      rest += BPoly::term(c, 0, key.second);
    } else if (key.second == 0 && m == 0) {
      m = key.first;
      lead = c;
    } else {
      throw ParseError("not of the form w^m = f(z)", 0, shape);
    }
  }
  if (m == 0) throw ParseError("w does not occur", 0, shape);
  return {m, rest.coeff_w(0).scaled(-lead.inverse())};
}

Divisor parse_divisor(std::string_view text) {
  Parser p(text, false);
  Divisor d;
  if (p.at_end()) p.fail("empty divisor", p.pos(), {"place", "'0'"});
  {
    // The zero divisor.
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t == "0") return d;
  }
  bool first = true;
  while (!p.at_end()) {
    int sign = 1;
    p.skip();
    if (p.peek() == '+' || p.peek() == '-') {
      sign = p.get() == '-' ? -1 : 1;
    } else if (!first) {
      p.fail("expected '+' or '-'", p.pos(), {"'+'", "'-'", "end of input"});
    }
    first = false;
    p.skip();
    long n = 1;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      std::size_t start = 0;
      n = p.uint_literal(start);
      p.skip();
      if (p.peek() == '*') p.get();
      p.skip();
    }
    const std::size_t at = p.pos();
    if (text.substr(at, 3) == "inf") {
      for (int i = 0; i < 3; ++i) p.get();
      d.add(Place::infinity(), static_cast<int>(sign * n));
      continue;
    }
    if (p.peek() != '(') p.fail("expected a place", at, {"'('", "'inf'"});
    p.get();
    const ExprPtr e = p.expr();
    p.skip();
    if (p.peek() != ')') p.fail("unbalanced parenthesis", p.pos(), {"')'"});
    p.get();
    const BPoly f = lower_bpoly(*e);
    if (f.degree_w() > Degree(0)) throw ParseError("w is not allowed in a place", at, {"'z'"});
    d.add(Place::finite(f.coeff_w(0)), static_cast<int>(sign * n));
  }
  return d;
}

}  // namespace rrkit
