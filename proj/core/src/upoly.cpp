#include "rrkit/upoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "rrkit/error.hpp"
#include "zpoly.hpp"

namespace rrkit {

int Degree::value() const {
  if (neg_inf_) throw InternalError("degree of the zero polynomial requested as an integer");
  return d_;
}

std::string Degree::to_string() const { return neg_inf_ ? "-inf" : std::to_string(d_); }

UPoly::UPoly(Rat constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rat> coefficients_low_first) : c_(std::move(coefficients_low_first)) { trim(); }

UPoly UPoly::monomial(const Rat& c, std::size_t exponent) {
  if (c.is_zero()) return {};
  std::vector<Rat> v(exponent + 1);
  v[exponent] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Rat& a) { return UPoly(std::vector<Rat>{-a, Rat(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Degree UPoly::degree() const {
  if (c_.empty()) return Degree::neg_inf();
  return Degree(static_cast<int>(c_.size()) - 1);
}

Rat UPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

Rat UPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].mpq() * b.c_[j].mpq();
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly UPoly::scaled(const Rat& s) const {
  if (s.is_zero()) return {};
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

UPoly UPoly::pow(unsigned exponent) const {
  UPoly result(Rat(1));
  UPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<std::int64_t>(i));
  return UPoly(std::move(d));
}

Rat UPoly::eval(const Rat& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x.mpq() + it->mpq();
  return Rat(acc);
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UPoly(*it);
  return acc;
}

UPoly UPoly::reversed() const {
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (c_.empty() || is_monic()) return *this;
  return scaled(leading().inverse());
}

std::string UPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rat& c = c_[k];
    if (c.is_zero()) continue;
    const Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rat(1)) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& bc = b.coefficients();
  const int db = b.degree().value();
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<mpq_class> r;
  r.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) r.push_back(c.mpq());
  const int da = a.degree().value();
  std::vector<Rat> q(static_cast<std::size_t>(da - db + 1));
  const mpq_class inv_lead = mpq_class(1) / bc.back().mpq();
  for (int k = da - db; k >= 0; --k) {
    mpq_class coef = r[static_cast<std::size_t>(k + db)] * inv_lead;
    if (sgn(coef) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= coef * bc[static_cast<std::size_t>(j)].mpq();
    q[static_cast<std::size_t>(k)] = Rat(coef);
  }
  r.resize(static_cast<std::size_t>(db));
  std::vector<Rat> rem;
  rem.reserve(r.size());
  for (auto& v : r) rem.emplace_back(std::move(v));
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UPoly(Rat(1));
  detail::ZPoly x = detail::to_zpoly_primitive(a);
  detail::ZPoly y = detail::to_zpoly_primitive(b);
  if (detail::zdeg(x) < detail::zdeg(y)) std::swap(x, y);
  while (!y.empty()) {
    detail::ZPoly r = detail::zprem(x, y);
    x = std::move(y);
    y = r.empty() ? detail::ZPoly{} : detail::zprimitive(std::move(r));
  }
  return detail::to_upoly(x).monic();
}

bool is_squarefree(const UPoly& f) {
  if (f.is_zero()) return false;
  if (f.is_constant()) return true;
  return gcd(f, f.derivative()).is_constant();
}

int multiplicity(const UPoly& f, const UPoly& q) {
  if (f.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  if (q.is_constant()) throw DomainError("multiplicity of a constant factor");
  int k = 0;
  UPoly cur = f;
  for (;;) {
    auto [quo, rem] = divmod(cur, q);
    if (!rem.is_zero()) return k;
    cur = std::move(quo);
    ++k;
  }
}

SquarefreeFactorization squarefree_factorization(const UPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree factorization of the zero polynomial");
  SquarefreeFactorization out{f.leading(), {}};
  if (f.is_constant()) return out;
  const UPoly g = f.monic();
  const UPoly dg = g.derivative();
  const UPoly a0 = gcd(g, dg);
  UPoly b = exact_div(g, a0);
  UPoly c = exact_div(dg, a0);
  UPoly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    UPoly a = gcd(b, d);
    if (!a.is_constant()) out.factors.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t k = ac.size(); k-- > 0;) {
    if (ac[k] != bc[k]) return ac[k] < bc[k];
  }
  return false;
}

}  // namespace rrkit
