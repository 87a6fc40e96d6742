#include "rrkit/series.hpp"

#include <algorithm>
#include <sstream>

#include "rrkit/error.hpp"

namespace rrkit {

Valuation min_valuation(const Valuation& a, const Valuation& b) {
  if (a.known() && b.known()) return Valuation::of(std::min(*a.exact, *b.exact));
  if (a.known() && *a.exact < b.lower_bound) return a;
  if (b.known() && *b.exact < a.lower_bound) return b;
  return Valuation::at_least(std::min(a.lower_bound, b.lower_bound));
}

PowerSeries::PowerSeries(std::vector<Rat> coefficients, std::size_t precision) : c_(std::move(coefficients)) {
  c_.resize(precision);
}

PowerSeries PowerSeries::constant(const Rat& c, std::size_t precision) {
  return PowerSeries({c}, precision);
}

PowerSeries PowerSeries::variable(std::size_t precision) { return PowerSeries({Rat(0), Rat(1)}, precision); }

PowerSeries PowerSeries::from_poly(const UPoly& f, std::size_t precision) {
  return PowerSeries(f.coefficients(), precision);
}

PowerSeries PowerSeries::compose(const UPoly& f, const PowerSeries& inner) {
  const std::size_t prec = inner.precision();
  PowerSeries acc = constant(Rat(0), prec);
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + constant(*it, prec);
  return acc;
}

const Rat& PowerSeries::coeff(std::size_t k) const {
  if (k >= c_.size()) throw InternalError("series coefficient requested beyond precision");
  return c_[k];
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Rat> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.c_[i] + b.c_[i];
  return PowerSeries(std::move(v), n);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<mpq_class> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) acc[i + j] += a.c_[i].mpq() * b.c_[j].mpq();
  }
  std::vector<Rat> v;
  v.reserve(n);
  for (auto& x : acc) v.emplace_back(std::move(x));
  return PowerSeries(std::move(v), n);
}

PowerSeries PowerSeries::scaled(const Rat& s) const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

PowerSeries PowerSeries::inverse() const {
  if (c_.empty() || c_[0].is_zero()) throw DomainError("series inverse needs a nonzero constant term");
  const std::size_t n = c_.size();
  std::vector<Rat> inv(n);
  const Rat i0 = c_[0].inverse();
  inv[0] = i0;
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += c_[j].mpq() * inv[k - j].mpq();
    inv[k] = -Rat(s) * i0;
  }
  return PowerSeries(std::move(inv), n);
}

PowerSeries PowerSeries::derivative() const {
  if (c_.empty()) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<std::int64_t>(k));
  const std::size_t n = d.size();
  return PowerSeries(std::move(d), n);
}

PowerSeries PowerSeries::sqrt() const {
  if (c_.empty() || c_[0].is_zero() || !c_[0].is_square()) {
    throw DomainError("series square root needs a nonzero square constant term");
  }
  const std::size_t n = c_.size();
  std::vector<Rat> s(n);
  s[0] = c_[0].sqrt();
  const Rat inv2s0 = (Rat(2) * s[0]).inverse();
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class acc = c_[k].mpq();
    for (std::size_t i = 1; i < k; ++i) acc -= s[i].mpq() * s[k - i].mpq();
    s[k] = Rat(acc) * inv2s0;
  }
  return PowerSeries(std::move(s), n);
}

PowerSeries PowerSeries::shift_down(std::size_t k) const {
  if (k > c_.size()) throw InternalError("series shift beyond precision");
  for (std::size_t i = 0; i < k; ++i) {
    if (!c_[i].is_zero()) throw InternalError("series shift would drop a nonzero coefficient");
  }
  std::vector<Rat> v(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  const std::size_t n = v.size();
  return PowerSeries(std::move(v), n);
}

PowerSeries PowerSeries::shift_up(std::size_t k) const {
  std::vector<Rat> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  const std::size_t n = v.size();
  return PowerSeries(std::move(v), n);
}

PowerSeries PowerSeries::truncated(std::size_t precision) const {
  if (precision > c_.size()) throw InternalError("cannot extend series precision by truncation");
  return PowerSeries(std::vector<Rat>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(precision)), precision);
}

Valuation PowerSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return Valuation::of(static_cast<int>(k));
  }
  return Valuation::at_least(static_cast<int>(c_.size()));
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[k] << ")*t^" << k;
  }
  if (first) os << '0';
  os << " + O(t^" << c_.size() << ')';
  return os.str();
}

}  // namespace rrkit
