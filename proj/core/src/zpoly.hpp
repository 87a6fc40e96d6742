#pragma once

// Integer-coefficient polynomial helpers shared by gcd and factorization.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "rrkit/upoly.hpp"

namespace rrkit::detail {

/// Lowest degree first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p);
int zdeg(const ZPoly& p);
mpz_class zcontent(const ZPoly& p);
/// Divides out the content and makes the leading coefficient positive.
ZPoly zprimitive(ZPoly p);
/// Scales a rational polynomial to a primitive integer polynomial.
ZPoly to_zpoly_primitive(const UPoly& f);
UPoly to_upoly(const ZPoly& p);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zderivative(const ZPoly& p);
/// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly zprem(ZPoly a, const ZPoly& b);
/// Exact quotient over Z, or nullopt if b does not divide a.
std::optional<ZPoly> zdivexact(ZPoly a, const ZPoly& b);

}  // namespace rrkit::detail
