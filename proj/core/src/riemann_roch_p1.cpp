#include "rrkit/riemann_roch_p1.hpp"

#include "rrkit/error.hpp"

namespace rrkit {

bool in_lspace(const RatFun& f, const Divisor& d) {
  if (f.is_zero()) return true;
  return (principal_divisor(f) + d).is_effective();
}

LSpaceBasis lspace_basis_p1(const Divisor& d) {
  LSpaceBasis out{d, {}};
  const long deg = d.degree();
  if (deg < 0) return out;
  UPoly num(Rat(1));
  UPoly den(Rat(1));
  for (const auto& [p, n] : d.terms()) {
    if (p.is_infinity()) continue;
    if (n < 0) num *= p.poly().pow(static_cast<unsigned>(-n));
    else den *= p.poly().pow(static_cast<unsigned>(n));
  }
  const RatFun f0(num, den);
  const RatFun z = RatFun::variable();
  RatFun cur = f0;
  int last_ord_inf = 0;
  for (long k = 0; k <= deg; ++k) {
    if (!in_lspace(cur, d)) throw InternalError("L(D) basis element fails membership: " + cur.to_string());
    const int o = ord_at(cur, Place::infinity());
    if (k > 0 && o >= last_ord_inf) throw InternalError("L(D) basis pole orders not strictly increasing");
    last_ord_inf = o;
    out.basis.push_back(cur);
    cur = cur * z;
  }
  return out;
}

Divisor canonical_divisor_p1() { return Divisor::of(Place::infinity(), -2); }

OmegaBasis omega_basis_p1(const Divisor& d) {
  const Divisor k = canonical_divisor_p1();
  OmegaBasis out{d, lspace_basis_p1(k - d).basis};
  for (const auto& f : out.basis) {
    if (!(principal_divisor(f) + k).dominates(d)) {
      throw InternalError("differential fails (omega) >= D: " + f.to_string() + " dz");
    }
  }
  return out;
}

RiemannRochReport riemann_roch_verify_p1(const Divisor& d) {
  RiemannRochReport r;
  r.divisor = d;
  r.degree = d.degree();
  r.genus = 0;
  r.dim_l = static_cast<long>(lspace_basis_p1(d).dimension());
  r.dim_l_k_minus_d = static_cast<long>(lspace_basis_p1(canonical_divisor_p1() - d).dimension());
  r.dim_omega = static_cast<long>(omega_basis_p1(d).dimension());
  r.lhs = r.dim_l - r.dim_l_k_minus_d;
  r.rhs = euler_characteristic(d, 0);
  r.balanced = r.lhs == r.rhs && r.dim_omega == r.dim_l_k_minus_d;
  if (!r.balanced) {
    throw InternalError("Riemann-Roch imbalance on the line for D = " + d.to_string());
  }
  return r;
}

long euler_characteristic(const Divisor& d, int genus) { return d.degree() - genus + 1; }

}  // namespace rrkit
