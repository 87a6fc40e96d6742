#pragma once

#include <vector>

#include "rrkit/function_field.hpp"

namespace rrkit {

/// Basis of L(D) = { f : (f) + D >= 0 } on the projective line.
struct LSpaceBasis {
  Divisor divisor;
  std::vector<RatFun> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Basis of Omega(-D) = { omega : (omega) >= D }, each element stored as the
/// coefficient f of f dz.
struct OmegaBasis {
  Divisor divisor;
  std::vector<RatFun> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Membership test (f) + D >= 0. The zero function is always a member.
bool in_lspace(const RatFun& f, const Divisor& d);

/// Explicit basis {f0 * z^k : 0 <= k <= deg D}, f0 = prod q^{-n_q} over
/// the finite part of D; empty when deg D < 0. Each element is re-checked,
/// and the strictly increasing pole order at infinity certifies independence.
LSpaceBasis lspace_basis_p1(const Divisor& d);

/// The divisor of dz: -2 * inf.
Divisor canonical_divisor_p1();

/// Image of L(K - D) under f -> f dz.
OmegaBasis omega_basis_p1(const Divisor& d);

struct RiemannRochReport {
  Divisor divisor;
  long degree = 0;
  int genus = 0;
  long dim_l = 0;           ///< dim L(D)
  long dim_l_k_minus_d = 0; ///< dim L(K - D)
  long dim_omega = 0;       ///< dim Omega(-D), equal to the previous by f -> f dz
  long lhs = 0;             ///< dim L(D) - dim L(K - D)
  long rhs = 0;             ///< deg D - g + 1
  bool balanced = false;
};

/// Computes both sides of Riemann-Roch with g = 0. An imbalance is an
/// InternalError, never a reported result.
RiemannRochReport riemann_roch_verify_p1(const Divisor& d);

/// deg D - g + 1
long euler_characteristic(const Divisor& d, int genus);

}  // namespace rrkit
