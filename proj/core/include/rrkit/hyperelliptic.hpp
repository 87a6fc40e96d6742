#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rrkit/ratfun.hpp"
#include "rrkit/series.hpp"
#include "rrkit/upoly.hpp"

namespace rrkit {

/// The hyperelliptic model w^2 = p(z) with p squarefree of degree n >= 3.
class HypCurve {
 public:
  /// Throws DomainError if deg p < 3 or p has multiple roots.
  explicit HypCurve(UPoly p);

  const UPoly& p() const noexcept { return p_; }
  int degree() const noexcept { return n_; }
  /// floor((n - 1) / 2)
  int genus() const noexcept { return (n_ - 1) / 2; }
  /// Odd degree: one ramified point at infinity.
  bool odd() const noexcept { return n_ % 2 == 1; }
  /// Monic irreducible factors of p.
  const std::vector<UPoly>& factors() const noexcept { return factors_; }

  std::string to_string() const;

 private:
  UPoly p_;
  int n_;
  std::vector<UPoly> factors_;
};

int genus_hyp(const HypCurve& curve);

/// A class of points on the curve lying over one base place.
class CurvePlace {
 public:
  enum class Kind {
    Branch,            ///< over a factor q of p: one ramified point per root
    AboveFinite,       ///< over q coprime to p: two points per root
    AboveInfinityOdd,  ///< n odd: a single ramified point
    AboveInfinityEvenPair,  ///< n even: two unramified points
  };

  /// q must be an irreducible factor of p.
  static CurvePlace branch(const HypCurve& curve, const UPoly& q);
  /// q must be irreducible and coprime to p.
  static CurvePlace above_finite(const HypCurve& curve, const UPoly& q);
  static CurvePlace at_infinity(const HypCurve& curve);

  Kind kind() const noexcept { return kind_; }
  bool is_infinity() const noexcept {
    return kind_ == Kind::AboveInfinityOdd || kind_ == Kind::AboveInfinityEvenPair;
  }
  /// Monic irreducible base polynomial; throws DomainError at infinity.
  const UPoly& base() const;
  /// Number of geometric points in this class.
  int point_count() const;
  /// Ramification index e - 1 of each point over the line.
  int ramification_index() const;

  std::string to_string() const;

 private:
  CurvePlace(Kind k, UPoly q) : kind_(k), q_(std::move(q)) {}
  Kind kind_;
  UPoly q_;
};

/// One Branch class per irreducible factor of p, plus the point at infinity
/// when n is odd.
std::vector<CurvePlace> branch_places(const HypCurve& curve);

/// Geometric branch points, weighted by base-place degree: always 2g + 2.
int branch_point_count(const HypCurve& curve);

/// A(z) + B(z) w on the curve; products reduce w^2 to p(z).
class CurveFun {
 public:
  CurveFun(const HypCurve& curve, RatFun a, RatFun b = RatFun());

  static CurveFun w(const HypCurve& curve);

  const RatFun& a() const noexcept { return a_; }
  const RatFun& b() const noexcept { return b_; }
  const UPoly& p() const noexcept { return *p_; }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

  CurveFun operator-() const;
  friend CurveFun operator+(const CurveFun& x, const CurveFun& y);
  friend CurveFun operator-(const CurveFun& x, const CurveFun& y);
  friend CurveFun operator*(const CurveFun& x, const CurveFun& y);
  friend bool operator==(const CurveFun& x, const CurveFun& y);

  /// (A - Bw) / (A^2 - B^2 p)
  CurveFun inverse() const;
  /// d/dz with (A + Bw)' = A' + (B' + B p'/(2p)) w.
  CurveFun derivative() const;

  std::string to_string() const;

 private:
  CurveFun(std::shared_ptr<const UPoly> p, RatFun a, RatFun b);
  std::shared_ptr<const UPoly> p_;
  RatFun a_;
  RatFun b_;
};

/// Coefficients z^i of the holomorphic differentials z^i dz / w, 0 <= i < g.
/// Each is verified to have an effective divisor.
std::vector<UPoly> holo_diff_basis(const HypCurve& curve);

/// Order of h(z) dz / w at each point of the class `place`.
///   Branch over q:            2 * ord_q(h)
///   AboveFinite over q:       ord_q(h)
///   infinity, n odd:          2g - 2 - 2 deg h
///   infinity, n even (each):  g - 1 - deg h
/// Throws DomainError for h = 0.
int diff_order_at(const HypCurve& curve, const UPoly& h, const CurvePlace& place);

struct DifferentialTerm {
  CurvePlace place;
  int order_per_point;
  int points;
};

/// Divisor of h dz / w: every branch class, every class above a factor of h,
/// and infinity.
std::vector<DifferentialTerm> differential_divisor(const HypCurve& curve, const UPoly& h);
long differential_degree(const std::vector<DifferentialTerm>& divisor);

/// Degree of the divisor of dz / w; InternalError unless it equals 2g - 2.
int canonical_degree_check(const HypCurve& curve);

/// Order at the single point at infinity of an odd model, with z of order -2
/// and w of order -(2g + 1). Throws DomainError for even models or zero.
int order_at_infinity_odd(const HypCurve& curve, const CurveFun& f);

struct InfinityBasis {
  int m = 0;
  std::vector<CurveFun> basis;
  std::vector<int> pole_orders;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Basis {z^i : 2i <= m} and {z^j w : 2j + 2g + 1 <= m} of L(m * inf) on an
/// odd model, sorted by pole order. Throws DomainError for even models.
InfinityBasis lspace_infinity_basis(const HypCurve& curve, int m);

/// The g integers m in [1, 2g] with dim L(m inf) = dim L((m - 1) inf).
std::vector<int> gap_sequence_at_infinity(const HypCurve& curve);

/// True iff the gap sequence at infinity differs from {1, ..., g}.
bool is_weierstrass_at_infinity(const HypCurve& curve);

/// det(f_j^{(k)}), derivatives in z.
CurveFun wronskian(const std::vector<CurveFun>& fs);
RatFun wronskian(const std::vector<RatFun>& fs);

/// A + B v over truncated series, with v^2 = S a known series, S(0) != 0.
class LocalPair {
 public:
  LocalPair(PowerSeries a, PowerSeries b, std::shared_ptr<const PowerSeries> v_squared);

  const PowerSeries& a() const noexcept { return a_; }
  const PowerSeries& b() const noexcept { return b_; }
  const PowerSeries& v_squared() const noexcept { return *s_; }
  std::size_t precision() const;

  friend LocalPair operator+(const LocalPair& x, const LocalPair& y);
  friend LocalPair operator-(const LocalPair& x, const LocalPair& y);
  friend LocalPair operator*(const LocalPair& x, const LocalPair& y);

  /// d/dt with v' = S' v / (2 S).
  LocalPair derivative() const;

  /// Order in t. v is a unit, so this is min(ord A, ord B) unless S(0) is a
  /// rational square; then v is itself a rational series and A + B v is
  /// expanded and inspected directly.
  Valuation valuation() const;

 private:
  PowerSeries a_;
  PowerSeries b_;
  std::shared_ptr<const PowerSeries> s_;
};

/// Chart coefficients f_j of the basis differentials (omega_j = f_j dt) at a
/// rational branch point or at infinity of an odd model, to `precision` terms.
std::vector<LocalPair> holo_diff_chart(const HypCurve& curve, const CurvePlace& place, std::size_t precision);

/// Order of vanishing of the Wronskian of the chart coefficients of the
/// holomorphic differentials (the Weierstrass weight of the point).
/// Supported places: Branch over a linear factor, AboveInfinityOdd.
/// Starts at 2g + 4 terms and doubles once before giving up.
int wronskian_order_at(const HypCurve& curve, const CurvePlace& place);

}  // namespace rrkit
