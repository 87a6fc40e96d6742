#include "rrkit/hyperelliptic.hpp"

#include <algorithm>
#include <sstream>

#include "rrkit/determinant.hpp"
#include "rrkit/error.hpp"
#include "rrkit/factor.hpp"

namespace rrkit {

HypCurve::HypCurve(UPoly p) : p_(std::move(p)), n_(0) {
  if (p_.is_zero() || p_.degree() < Degree(3)) {
    throw DomainError("hyperelliptic model needs deg p >= 3, got " + p_.degree().to_string());
  }
  if (!is_squarefree(p_)) throw DomainError("p has multiple roots: " + p_.to_string());
  n_ = p_.degree().value();
  for (auto& [q, k] : factor(p_).factors) factors_.push_back(q);
}

std::string HypCurve::to_string() const { return "w^2 = " + p_.to_string(); }

int genus_hyp(const HypCurve& curve) { return curve.genus(); }

CurvePlace CurvePlace::branch(const HypCurve& curve, const UPoly& q) {
  const UPoly m = q.monic();
  if (std::find(curve.factors().begin(), curve.factors().end(), m) == curve.factors().end()) {
    throw DomainError(q.to_string() + " is not an irreducible factor of " + curve.p().to_string());
  }
  return CurvePlace(Kind::Branch, m);
}

CurvePlace CurvePlace::above_finite(const HypCurve& curve, const UPoly& q) {
  if (!is_irreducible(q)) throw DomainError("not irreducible over Q: " + q.to_string());
  if (!gcd(q, curve.p()).is_constant()) throw DomainError(q.to_string() + " divides p; use a branch place");
  return CurvePlace(Kind::AboveFinite, q.monic());
}

CurvePlace CurvePlace::at_infinity(const HypCurve& curve) {
  return CurvePlace(curve.odd() ? Kind::AboveInfinityOdd : Kind::AboveInfinityEvenPair, UPoly());
}

const UPoly& CurvePlace::base() const {
  if (is_infinity()) throw DomainError("places at infinity have no base polynomial");
  return q_;
}

int CurvePlace::point_count() const {
  switch (kind_) {
    case Kind::Branch: return q_.degree().value();
    case Kind::AboveFinite: return 2 * q_.degree().value();
    case Kind::AboveInfinityOdd: return 1;
    case Kind::AboveInfinityEvenPair: return 2;
  }
  return 0;
}

int CurvePlace::ramification_index() const {
  return kind_ == Kind::Branch || kind_ == Kind::AboveInfinityOdd ? 1 : 0;
}

std::string CurvePlace::to_string() const {
  switch (kind_) {
    case Kind::Branch: return "branch(" + q_.to_string() + ")";
    case Kind::AboveFinite: return "above(" + q_.to_string() + ")";
    case Kind::AboveInfinityOdd: return "inf";
    case Kind::AboveInfinityEvenPair: return "inf-pair";
  }
  return "?";
}

std::vector<CurvePlace> branch_places(const HypCurve& curve) {
  std::vector<CurvePlace> out;
  for (const auto& q : curve.factors()) out.push_back(CurvePlace::branch(curve, q));
  if (curve.odd()) out.push_back(CurvePlace::at_infinity(curve));
  return out;
}

int branch_point_count(const HypCurve& curve) {
  int n = 0;
  for (const auto& pl : branch_places(curve)) n += pl.point_count();
  if (n != 2 * curve.genus() + 2) throw InternalError("branch point count differs from 2g + 2");
  return n;
}

// ---------------------------------------------------------------------------
// CurveFun

CurveFun::CurveFun(const HypCurve& curve, RatFun a, RatFun b)
    : p_(std::make_shared<const UPoly>(curve.p())), a_(std::move(a)), b_(std::move(b)) {}

CurveFun::CurveFun(std::shared_ptr<const UPoly> p, RatFun a, RatFun b)
    : p_(std::move(p)), a_(std::move(a)), b_(std::move(b)) {}

CurveFun CurveFun::w(const HypCurve& curve) { return CurveFun(curve, RatFun(), RatFun(1)); }

namespace {

void require_same_curve(const CurveFun& x, const CurveFun& y) {
  if (x.p() != y.p()) throw DomainError("functions on different curves");
}

}  // namespace

CurveFun CurveFun::operator-() const { return CurveFun(p_, -a_, -b_); }

CurveFun operator+(const CurveFun& x, const CurveFun& y) {
  require_same_curve(x, y);
  return CurveFun(x.p_, x.a_ + y.a_, x.b_ + y.b_);
}

CurveFun operator-(const CurveFun& x, const CurveFun& y) {
  require_same_curve(x, y);
  return CurveFun(x.p_, x.a_ - y.a_, x.b_ - y.b_);
}

CurveFun operator*(const CurveFun& x, const CurveFun& y) {
  require_same_curve(x, y);
  const RatFun p(*x.p_);
  return CurveFun(x.p_, x.a_ * y.a_ + x.b_ * y.b_ * p, x.a_ * y.b_ + x.b_ * y.a_);
}

bool operator==(const CurveFun& x, const CurveFun& y) {
  return x.p() == y.p() && x.a_ == y.a_ && x.b_ == y.b_;
}

CurveFun CurveFun::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero function");
  const RatFun norm = a_ * a_ - b_ * b_ * RatFun(*p_);
  return CurveFun(p_, a_ / norm, -b_ / norm);
}

CurveFun CurveFun::derivative() const {
  const RatFun p(*p_);
  const RatFun log_dw = RatFun(p_->derivative()) / (RatFun(2) * p);
  return CurveFun(p_, a_.derivative(), b_.derivative() + b_ * log_dw);
}

std::string CurveFun::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  const std::string bw = "(" + b_.to_string() + ")*w";
  if (a_.is_zero()) return bw;
  return "(" + a_.to_string() + ") + " + bw;
}

// ---------------------------------------------------------------------------
// Differentials

int diff_order_at(const HypCurve& curve, const UPoly& h, const CurvePlace& place) {
  if (h.is_zero()) throw DomainError("divisor of the zero differential");
  const int g = curve.genus();
  switch (place.kind()) {
    case CurvePlace::Kind::Branch:
      // z = a + t^2, dz = 2t dt, ord w = 1.
      return 2 * multiplicity(h, place.base());
    case CurvePlace::Kind::AboveFinite:
      return multiplicity(h, place.base());
    case CurvePlace::Kind::AboveInfinityOdd:
      // z = t^-2, dz = -2 t^-3 dt, ord w = -(2g + 1).
      if (!curve.odd()) break;
      return 2 * g - 2 - 2 * h.degree().value();
    case CurvePlace::Kind::AboveInfinityEvenPair:
      // z = 1/t, dz = -t^-2 dt, ord w = -(g + 1) at each point.
      if (curve.odd()) break;
      return g - 1 - h.degree().value();
  }
  throw DomainError("place " + place.to_string() + " does not belong to " + curve.to_string());
}

std::vector<DifferentialTerm> differential_divisor(const HypCurve& curve, const UPoly& h) {
  std::vector<DifferentialTerm> out;
  for (const auto& q : curve.factors()) {
    auto pl = CurvePlace::branch(curve, q);
    out.push_back({pl, diff_order_at(curve, h, pl), pl.point_count()});
  }
  if (!h.is_constant()) {
    for (const auto& [q, k] : factor(h).factors) {
      if (!gcd(q, curve.p()).is_constant()) continue;
      auto pl = CurvePlace::above_finite(curve, q);
      out.push_back({pl, diff_order_at(curve, h, pl), pl.point_count()});
    }
  }
  auto inf = CurvePlace::at_infinity(curve);
  out.push_back({inf, diff_order_at(curve, h, inf), inf.point_count()});
  return out;
}

long differential_degree(const std::vector<DifferentialTerm>& divisor) {
  long d = 0;
  for (const auto& t : divisor) d += static_cast<long>(t.order_per_point) * t.points;
  return d;
}

std::vector<UPoly> holo_diff_basis(const HypCurve& curve) {
  std::vector<UPoly> out;
  for (int i = 0; i < curve.genus(); ++i) {
    UPoly h = UPoly::monomial(Rat(1), static_cast<std::size_t>(i));
    for (const auto& t : differential_divisor(curve, h)) {
      if (t.order_per_point < 0) {
        throw InternalError("z^" + std::to_string(i) + " dz/w has a pole at " + t.place.to_string());
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

int canonical_degree_check(const HypCurve& curve) {
  const long d = differential_degree(differential_divisor(curve, UPoly(Rat(1))));
  if (d != 2L * curve.genus() - 2) {
    throw InternalError("deg (dz/w) = " + std::to_string(d) + " on a genus " + std::to_string(curve.genus()) +
                        " curve");
  }
  return static_cast<int>(d);
}

// ---------------------------------------------------------------------------
// L(m * inf) on odd models

int order_at_infinity_odd(const HypCurve& curve, const CurveFun& f) {
  if (!curve.odd()) throw DomainError("order at infinity needs an odd-degree model");
  if (f.is_zero()) throw DomainError("order of the zero function");
  auto base_ord = [](const RatFun& r) { return 2 * (r.den().degree().value() - r.num().degree().value()); };
  const int ord_w = -curve.degree();
  if (f.b().is_zero()) return base_ord(f.a());
  if (f.a().is_zero()) return base_ord(f.b()) + ord_w;
  // Even versus odd orders: the two terms cannot cancel.
  return std::min(base_ord(f.a()), base_ord(f.b()) + ord_w);
}

InfinityBasis lspace_infinity_basis(const HypCurve& curve, int m) {
  if (!curve.odd()) throw DomainError("L(m inf) bases are implemented for odd-degree models only");
  if (m < 0) throw DomainError("L(m inf) needs m >= 0");
  const int g = curve.genus();
  InfinityBasis out;
  out.m = m;
  std::vector<std::pair<int, CurveFun>> elems;
  for (int i = 0; 2 * i <= m; ++i) {
    elems.emplace_back(2 * i, CurveFun(curve, RatFun(UPoly::monomial(Rat(1), static_cast<std::size_t>(i)))));
  }
  for (int j = 0; 2 * j + 2 * g + 1 <= m; ++j) {
    elems.emplace_back(2 * j + 2 * g + 1,
                       CurveFun(curve, RatFun(), RatFun(UPoly::monomial(Rat(1), static_cast<std::size_t>(j)))));
  }
  std::sort(elems.begin(), elems.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [pole, f] : elems) {
    const int ord = order_at_infinity_odd(curve, f);
    if (-ord != pole || pole > m) throw InternalError("pole order mismatch for " + f.to_string());
    if (!out.pole_orders.empty() && out.pole_orders.back() == pole) {
      throw InternalError("repeated pole order in L(m inf) basis");
    }
    out.pole_orders.push_back(pole);
    out.basis.push_back(std::move(f));
  }
  return out;
}

std::vector<int> gap_sequence_at_infinity(const HypCurve& curve) {
  if (!curve.odd()) throw DomainError("gap sequences at infinity need an odd-degree model");
  const int g = curve.genus();
  std::vector<int> gaps;
  std::size_t prev = lspace_infinity_basis(curve, 0).dimension();
  for (int m = 1; m <= 2 * g; ++m) {
    const std::size_t cur = lspace_infinity_basis(curve, m).dimension();
    if (cur - prev > 1) throw InternalError("dim L(m inf) jumped by more than one");
    if (cur == prev) gaps.push_back(m);
    prev = cur;
  }
  if (static_cast<int>(gaps.size()) != g) throw InternalError("gap count differs from the genus");
  return gaps;
}

bool is_weierstrass_at_infinity(const HypCurve& curve) {
  const auto gaps = gap_sequence_at_infinity(curve);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] != static_cast<int>(i) + 1) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Wronskians

namespace {

template <typename T>
std::vector<std::vector<T>> derivative_matrix(const std::vector<T>& fs) {
  const std::size_t n = fs.size();
  std::vector<std::vector<T>> m;
  m.reserve(n);
  for (const auto& f : fs) {
    std::vector<T> row;
    row.reserve(n);
    T cur = f;
    for (std::size_t k = 0; k < n; ++k) {
      row.push_back(cur);
      if (k + 1 < n) cur = cur.derivative();
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

CurveFun wronskian(const std::vector<CurveFun>& fs) {
  if (fs.empty()) throw DomainError("Wronskian of an empty family");
  return laplace_determinant(derivative_matrix(fs), fs.front());
}

RatFun wronskian(const std::vector<RatFun>& fs) {
  if (fs.empty()) throw DomainError("Wronskian of an empty family");
  return laplace_determinant(derivative_matrix(fs), RatFun(1));
}

// ---------------------------------------------------------------------------
// LocalPair

LocalPair::LocalPair(PowerSeries a, PowerSeries b, std::shared_ptr<const PowerSeries> v_squared)
    : a_(std::move(a)), b_(std::move(b)), s_(std::move(v_squared)) {
  if (s_->precision() == 0 || s_->coeff(0).is_zero()) throw DomainError("v^2 must be a unit series");
}

std::size_t LocalPair::precision() const { return std::min(a_.precision(), b_.precision()); }

LocalPair operator+(const LocalPair& x, const LocalPair& y) { return LocalPair(x.a_ + y.a_, x.b_ + y.b_, x.s_); }

LocalPair operator-(const LocalPair& x, const LocalPair& y) { return LocalPair(x.a_ - y.a_, x.b_ - y.b_, x.s_); }

LocalPair operator*(const LocalPair& x, const LocalPair& y) {
  return LocalPair(x.a_ * y.a_ + x.b_ * y.b_ * *x.s_, x.a_ * y.b_ + x.b_ * y.a_, x.s_);
}

LocalPair LocalPair::derivative() const {
  const PowerSeries log_dv = s_->derivative() * (s_->scaled(Rat(2))).inverse();
  return LocalPair(a_.derivative(), b_.derivative() + b_ * log_dv, s_);
}

Valuation LocalPair::valuation() const {
  if (s_->coeff(0).is_square()) {
    const PowerSeries v = s_->sqrt();
    return (a_ + b_ * v).valuation();
  }
  return min_valuation(a_.valuation(), b_.valuation());
}

std::vector<LocalPair> holo_diff_chart(const HypCurve& curve, const CurvePlace& place, std::size_t precision) {
  const int g = curve.genus();
  std::vector<LocalPair> out;
  const PowerSeries zero = PowerSeries::constant(Rat(0), precision);
  if (place.kind() == CurvePlace::Kind::Branch) {
    if (place.base().degree() != Degree(1)) {
      throw DomainError("Wronskian at an irrational branch point is not supported: " + place.to_string());
    }
    const Rat a = -place.base().coeff(0);
    // z = a + t^2, w = t v, v^2 = p(a + t^2) / t^2; omega_j = 2 (a + t^2)^j v / v^2 dt.
    const PowerSeries z = PowerSeries({a, Rat(0), Rat(1)}, precision + 2);
    const auto s = std::make_shared<const PowerSeries>(PowerSeries::compose(curve.p(), z).shift_down(2));
    const PowerSeries s_inv = s->inverse();
    const PowerSeries zt = z.truncated(precision);
    PowerSeries zj = PowerSeries::constant(Rat(1), precision);
    for (int j = 0; j < g; ++j) {
      out.emplace_back(zero, (zj * s_inv).scaled(Rat(2)), s);
      zj = zj * zt;
    }
    return out;
  }
  if (place.kind() == CurvePlace::Kind::AboveInfinityOdd && curve.odd()) {
    // z = t^-2, w = t^-(2g+1) v, v^2 = rev(p)(t^2); omega_j = -2 t^(2g-2-2j) v / v^2 dt.
    const PowerSeries t2 = PowerSeries({Rat(0), Rat(0), Rat(1)}, precision);
    const auto s = std::make_shared<const PowerSeries>(PowerSeries::compose(curve.p().reversed(), t2));
    const PowerSeries s_inv = s->inverse();
    for (int j = 0; j < g; ++j) {
      const auto shift = static_cast<std::size_t>(2 * g - 2 - 2 * j);
      out.emplace_back(zero, s_inv.scaled(Rat(-2)).shift_up(shift).truncated(precision), s);
    }
    return out;
  }
  throw DomainError("Wronskian orders are supported at rational branch points and odd-model infinity, not " +
                    place.to_string());
}

int wronskian_order_at(const HypCurve& curve, const CurvePlace& place) {
  const int g = curve.genus();
  std::size_t precision = static_cast<std::size_t>(2 * g + 4);
  for (int attempt = 0; attempt < 2; ++attempt, precision *= 2) {
    const auto fs = holo_diff_chart(curve, place, precision);
    const LocalPair one(PowerSeries::constant(Rat(1), precision), PowerSeries::constant(Rat(0), precision),
                        std::make_shared<const PowerSeries>(fs.front().v_squared()));
    const LocalPair w = laplace_determinant(derivative_matrix(fs), one);
    const Valuation v = w.valuation();
    if (v.known()) return *v.exact;
  }
  throw DomainError("truncation insufficient to determine the Wronskian order at " + place.to_string());
}

}  // namespace rrkit
