#pragma once

#include <string>

#include "rrkit/upoly.hpp"

namespace rrkit {

/// Rational function num/den in z, kept reduced with a monic denominator.
class RatFun {
 public:
  RatFun() : den_(Rat(1)) {}
  RatFun(UPoly num);  // NOLINT(google-explicit-constructor)
  RatFun(Rat c) : RatFun(UPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  RatFun(std::int64_t c) : RatFun(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError if den is zero.
  RatFun(const UPoly& num, const UPoly& den);

  static RatFun variable() { return RatFun(UPoly::variable()); }

  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFun inverse() const;
  RatFun pow(int exponent) const;
  RatFun derivative() const;
  /// Throws DomainError at a pole.
  Rat eval(const Rat& x) const;

  std::string to_string(char var = 'z') const;

 private:
  UPoly num_;
  UPoly den_;
};

}  // namespace rrkit
