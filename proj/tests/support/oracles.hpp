#pragma once

// Independent reference computations for the test suite. Nothing here calls
// the library routine it is meant to check.

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rrkit/bpoly.hpp"
#include "rrkit/function_field.hpp"
#include "rrkit/hyperelliptic.hpp"
#include "rrkit/ratfun.hpp"
#include "rrkit/upoly.hpp"

namespace oracle {

using rrkit::BPoly;
using rrkit::Rat;
using rrkit::UPoly;

/// Determinant over Q by Gaussian elimination with pivoting.
Rat det(std::vector<std::vector<Rat>> m);

/// Sylvester matrix of a (top rows) and b, as rationals.
std::vector<std::vector<Rat>> sylvester(const UPoly& a, const UPoly& b);

/// Res(a, b) from the Sylvester determinant.
Rat resultant(const UPoly& a, const UPoly& b);

/// Res_w(F, G) at z = z0, assuming the leading w-coefficients do not vanish
/// there.
Rat resultant_at(const BPoly& f, const BPoly& g, const Rat& z0);

/// Squarefree iff Res(f, f') != 0 (f nonconstant).
bool squarefree_by_resultant(const UPoly& f);

/// Rational roots via the rational root theorem on the integer-scaled
/// polynomial (small coefficients only). Ascending, distinct.
std::vector<Rat> rational_roots_bruteforce(const UPoly& f);

/// Irreducibility for degree <= 3: no rational root.
bool irreducible_low_degree(const UPoly& f);

/// Number of lattice points strictly inside the convex hull of `pts`, from
/// cross sections over all pairs of points; zero for degenerate hulls.
long interior_points_by_sections(const std::vector<std::pair<int, int>>& pts);

/// Multiplicity of z - a in nonzero f by repeated evaluation of derivatives.
int root_order(const UPoly& f, const Rat& a);

/// Order of A + B w at each point of a branch class over z - a, from
/// parity: ord_t z - a = 2, ord_t w = 1.
int curve_order_at_branch(const rrkit::CurveFun& f, const Rat& a);

/// Wronskian order at a branch point or odd infinity via the chart-change law
///   ord W_t = g(g+1)/2 * ord(dz/dt) + ord W_z(z^j / w).
int wronskian_order_by_transformation(const rrkit::HypCurve& c, const rrkit::CurvePlace& place);

/// Residue of N/D dz at a simple or multiple rational pole via a Laurent
/// expansion computed by undetermined coefficients.
Rat residue_laurent(const rrkit::RatFun& f, const Rat& a);

// ---------------------------------------------------------------------------
// Random generators (deterministic seeds).

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  Rat rational(int max_num, int max_den);
  Rat nonzero_rational(int max_num, int max_den);
  UPoly poly(int degree, int max_coeff);
  UPoly monic_poly(int degree, int max_coeff);
  /// Squarefree of exact degree, leading coefficient nonzero.
  UPoly squarefree_poly(int degree, int max_coeff);
  /// Monic irreducible of degree 1..3, certified by the low-degree oracle.
  UPoly irreducible(int degree, int max_coeff);
  rrkit::RatFun ratfun(int max_degree, int max_coeff);
  /// Divisor with at most `places` places of degree <= max_place_degree and
  /// total degree in [lo, hi].
  rrkit::Divisor divisor(int places, int max_place_degree, int lo, int hi);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
