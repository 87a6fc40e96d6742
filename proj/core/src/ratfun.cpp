#include "rrkit/ratfun.hpp"

#include "rrkit/error.hpp"

namespace rrkit {

RatFun::RatFun(UPoly num) : num_(std::move(num)), den_(Rat(1)) {}

RatFun::RatFun(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(Rat(1));
    return;
  }
  const UPoly g = gcd(num, den);
  UPoly n = g.is_constant() ? num : exact_div(num, g);
  UPoly d = g.is_constant() ? den : exact_div(den, g);
  const Rat lc = d.leading();
  num_ = n.scaled(lc.inverse());
  den_ = d.scaled(lc.inverse());
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DomainError("division by the zero function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero function");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return RatFun(num_.pow(e), den_.pow(e));
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFun::eval(const Rat& x) const {
  const Rat d = den_.eval(x);
  if (d.is_zero()) throw DomainError("evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RatFun::to_string(char var) const {
  if (den_.is_constant()) return num_.to_string(var);
  auto wrap = [var](const UPoly& p) {
    const std::string s = p.to_string(var);
    const bool atomic = p.coefficients().size() <= 1 ||
                        (p.is_monic() && p == UPoly::monomial(Rat(1), static_cast<std::size_t>(p.degree().value())));
    return atomic ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace rrkit
