#pragma once

#include <map>
#include <string>
#include <utility>

#include "rrkit/upoly.hpp"

namespace rrkit {

/// Sparse bivariate polynomial in w and z over the rationals.
/// Terms are keyed by (power of w, power of z); zero coefficients are never stored.
class BPoly {
 public:
  using Exponent = std::pair<int, int>;  // (w, z)

  BPoly() = default;
  BPoly(Rat constant);  // NOLINT(google-explicit-constructor)
  BPoly(std::int64_t constant) : BPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)

  static BPoly w();
  static BPoly z();
  static BPoly term(const Rat& c, int w_exp, int z_exp);
  /// Embeds a polynomial in z.
  static BPoly from_z(const UPoly& f);
  /// Sum over i of coeffs[i] * w^i.
  static BPoly from_w_coefficients(const std::vector<UPoly>& coeffs);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponent, Rat>& terms() const noexcept { return terms_; }
  Rat coeff(int w_exp, int z_exp) const;

  Degree degree_w() const;
  Degree degree_z() const;
  /// Coefficient of w^i as a polynomial in z.
  UPoly coeff_w(int i) const;
  /// Leading coefficient in w, as a polynomial in z.
  UPoly leading_w() const;

  BPoly operator-() const;
  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  BPoly& operator*=(const BPoly& o) { return *this = *this * o; }
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.terms_ == b.terms_; }

  BPoly pow(unsigned exponent) const;
  BPoly derivative_w() const;
  BPoly derivative_z() const;
  /// F(w, z0) as a polynomial in w.
  UPoly eval_z(const Rat& z0) const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rat& c);
  std::map<Exponent, Rat> terms_;
};

/// Resultant with respect to w: the determinant of the Sylvester matrix whose
/// first deg_w(G) rows hold F's coefficients (leading first) and whose last
/// deg_w(F) rows hold G's. Throws DomainError if either has w-degree zero.
UPoly resultant_w(const BPoly& F, const BPoly& G);

/// (-1)^{n(n-1)/2} * Res_w(F, dF/dw) / lc_w(F), with n = deg_w F.
UPoly discriminant_w(const BPoly& F);

/// Determinant of a square matrix over Q[z] by fraction-free (Bareiss)
/// elimination with row pivoting.
UPoly determinant(std::vector<std::vector<UPoly>> m);

}  // namespace rrkit
