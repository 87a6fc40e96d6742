#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rrkit/rational.hpp"

namespace rrkit {

/// Degree of a polynomial. The zero polynomial has degree "minus infinity",
/// which is a distinct state rather than a negative integer; value() refuses
/// to hand it out.
class Degree {
 public:
  constexpr Degree(int d) : d_(d), neg_inf_(false) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const noexcept { return neg_inf_; }
  int value() const;

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.d_ == b.d_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
    return a.d_ <=> b.d_;
  }
  /// Degree of a product.
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_inf();
    return Degree(a.d_ + b.d_);
  }

  std::string to_string() const;

 private:
  constexpr Degree() : d_(0), neg_inf_(true) {}
  int d_;
  bool neg_inf_;
};

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rat constant);  // NOLINT(google-explicit-constructor)
  UPoly(std::int64_t constant) : UPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rat> coefficients_low_first);

  static UPoly variable() { return monomial(Rat(1), 1); }
  static UPoly monomial(const Rat& c, std::size_t exponent);
  /// z - a
  static UPoly linear_root(const Rat& a);

  Degree degree() const;
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }

  /// Coefficient of z^k (zero past the degree).
  Rat coeff(std::size_t k) const;
  const std::vector<Rat>& coefficients() const noexcept { return c_; }
  /// Leading coefficient; zero for the zero polynomial.
  Rat leading() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly scaled(const Rat& s) const;
  UPoly pow(unsigned exponent) const;
  UPoly derivative() const;
  Rat eval(const Rat& x) const;
  /// this(inner(z))
  UPoly compose(const UPoly& inner) const;
  /// z^deg * this(1/z); the reciprocal polynomial.
  UPoly reversed() const;
  /// Divides by the leading coefficient. Zero stays zero.
  UPoly monic() const;

  /// Text form using `var`, parseable back by the expression parser,
  /// e.g. "3/2*z^3 - z + 1".
  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// Euclidean division a = q*b + r, deg r < deg b. Throws DomainError if b = 0.
DivMod divmod(const UPoly& a, const UPoly& b);

/// Quotient of an exact division; throws InternalError on a nonzero remainder.
UPoly exact_div(const UPoly& a, const UPoly& b);

/// Monic greatest common divisor, computed with a primitive
/// pseudo-remainder sequence over the integers. gcd(f, 0) = monic(f).
/// Throws DomainError when both inputs are zero.
UPoly gcd(const UPoly& a, const UPoly& b);

bool is_squarefree(const UPoly& f);

/// Multiplicity of the nonconstant polynomial q as a factor of nonzero f.
int multiplicity(const UPoly& f, const UPoly& q);

struct SquarefreeFactorization {
  Rat leading;
  /// Monic, squarefree, pairwise coprime; ordered by increasing multiplicity.
  std::vector<std::pair<UPoly, int>> factors;
};

/// Yun's algorithm: f = leading * prod q_i^{k_i}. Throws DomainError on zero.
SquarefreeFactorization squarefree_factorization(const UPoly& f);

/// Total ordering used for deterministic output: by degree, then
/// coefficients from the top down.
bool upoly_less(const UPoly& a, const UPoly& b);

}  // namespace rrkit
