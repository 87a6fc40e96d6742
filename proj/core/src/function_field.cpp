#include "rrkit/function_field.hpp"

#include <sstream>

#include "rrkit/error.hpp"
#include "rrkit/factor.hpp"
#include "rrkit/series.hpp"

namespace rrkit {

// Builds places from polynomials already known to be monic irreducible.
class PlaceFactory {
 public:
  static Place trusted(UPoly q) { return Place(std::move(q)); }
};

Place Place::finite(const UPoly& q) {
  if (q.is_zero() || q.is_constant()) throw DomainError("a place needs a nonconstant polynomial, got " + q.to_string());
  if (!is_irreducible(q)) throw DomainError("not irreducible over Q: " + q.to_string());
  return Place(q.monic());
}

Place Place::rational(const Rat& a) { return Place(UPoly::linear_root(a)); }

const UPoly& Place::poly() const {
  if (infinity_) throw DomainError("the place at infinity has no defining polynomial");
  return q_;
}

int Place::degree() const { return infinity_ ? 1 : q_.degree().value(); }

std::string Place::to_string() const { return infinity_ ? "inf" : "(" + q_.to_string() + ")"; }

bool operator<(const Place& a, const Place& b) {
  if (a.infinity_ != b.infinity_) return b.infinity_;
  if (a.infinity_) return false;
  return upoly_less(a.q_, b.q_);
}

Divisor::Divisor(std::initializer_list<std::pair<const Place, int>> init) {
  for (const auto& [p, n] : init) add(p, n);
}

Divisor Divisor::of(const Place& p, int n) {
  Divisor d;
  d.add(p, n);
  return d;
}

int Divisor::coefficient(const Place& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, n] : terms_) d += static_cast<long>(n) * p.degree();
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [p, n] : terms_) {
    if (n < 0) return false;
  }
  return true;
}

bool Divisor::dominates(const Divisor& other) const { return (*this - other).is_effective(); }

Divisor& Divisor::add(const Place& p, int n) {
  if (n == 0) return *this;
  auto [it, inserted] = terms_.emplace(p, n);
  if (!inserted) {
    it->second += n;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor r = *this;
  for (auto& [p, n] : r.terms_) n = -n;
  return r;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [p, n] : o.terms_) add(p, n);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [p, n] : o.terms_) add(p, -n);
  return *this;
}

Divisor operator*(int k, const Divisor& d) {
  Divisor r;
  for (const auto& [p, n] : d.terms_) r.add(p, k * n);
  return r;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, n] : terms_) {
    if (first) {
      if (n < 0) os << '-';
    } else {
      os << (n < 0 ? " - " : " + ");
    }
    first = false;
    os << (n < 0 ? -n : n) << '*' << p.to_string();
  }
  return os.str();
}

int ord_at(const RatFun& f, const Place& p) {
  if (f.is_zero()) throw DomainError("order of the zero function is +infinity; refused");
  if (p.is_infinity()) return f.den().degree().value() - f.num().degree().value();
  return multiplicity(f.num(), p.poly()) - multiplicity(f.den(), p.poly());
}

Divisor principal_divisor(const RatFun& f) {
  if (f.is_zero()) throw DomainError("principal divisor of the zero function");
  Divisor d;
  if (!f.num().is_constant()) {
    for (const auto& [q, k] : factor(f.num()).factors) d.add(PlaceFactory::trusted(q), k);
  }
  if (!f.den().is_constant()) {
    for (const auto& [q, k] : factor(f.den()).factors) d.add(PlaceFactory::trusted(q), -k);
  }
  d.add(Place::infinity(), ord_at(f, Place::infinity()));
  if (d.degree() != 0) throw InternalError("principal divisor of nonzero degree: " + d.to_string());
  return d;
}

std::optional<RatFun> linearly_equivalent_p1(const Divisor& d1, const Divisor& d2) {
  const Divisor e = d1 - d2;
  if (e.degree() != 0) return std::nullopt;
  UPoly num(Rat(1));
  UPoly den(Rat(1));
  for (const auto& [p, n] : e.terms()) {
    if (p.is_infinity()) continue;
    if (n > 0) num *= p.poly().pow(static_cast<unsigned>(n));
    else den *= p.poly().pow(static_cast<unsigned>(-n));
  }
  RatFun f(num, den);
  if (principal_divisor(f) != e) throw InternalError("linear-equivalence witness has the wrong divisor");
  return f;
}

namespace {

// Coefficient of t^k in num(t)/den(t) as a power series; den(0) != 0.
Rat series_coefficient(const UPoly& num, const UPoly& den, int k) {
  if (k < 0) return Rat(0);
  const auto prec = static_cast<std::size_t>(k) + 1;
  const PowerSeries q = PowerSeries::from_poly(num, prec) * PowerSeries::from_poly(den, prec).inverse();
  return q.coeff(static_cast<std::size_t>(k));
}

}  // namespace

Rat residue_at(const RatFun& f, const Place& p) {
  if (f.is_zero()) return Rat(0);
  if (p.is_infinity()) {
    // z = 1/t, dz = -dt/t^2: f(1/t) = t^e * num_rev(t) / den_rev(t), e = deg den - deg num.
    const int e = f.den().degree().value() - f.num().degree().value();
    return -series_coefficient(f.num().reversed(), f.den().reversed(), 1 - e);
  }
  if (p.degree() != 1) throw DomainError("residues at places of degree >= 2 are not supported: " + p.to_string());
  const Rat a = -p.poly().coeff(0);
  // Shift to t = z - a, then strip the pole order k from the denominator.
  const UPoly shift = UPoly(std::vector<Rat>{a, Rat(1)});
  const UPoly num_t = f.num().compose(shift);
  UPoly den_t = f.den().compose(shift);
  int k = 0;
  while (den_t.coeff(0).is_zero()) {
    den_t = exact_div(den_t, UPoly::variable());
    ++k;
  }
  return series_coefficient(num_t, den_t, k - 1);
}

std::vector<ResidueEntry> residues(const RatFun& f) {
  std::vector<ResidueEntry> out;
  if (!f.den().is_constant()) {
    for (const auto& [q, k] : factor(f.den()).factors) {
      if (q.degree() != Degree(1)) {
        throw DomainError("denominator does not split over Q (factor " + q.to_string() + ")");
      }
      const Place p = PlaceFactory::trusted(q);
      out.push_back({p, residue_at(f, p)});
    }
  }
  out.push_back({Place::infinity(), residue_at(f, Place::infinity())});
  return out;
}

Rat residue_sum_check(const RatFun& f) {
  Rat sum(0);
  for (const auto& r : residues(f)) sum += r.residue;
  return sum;
}

}  // namespace rrkit
