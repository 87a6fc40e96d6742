#pragma once

#include <utility>
#include <vector>

#include "rrkit/upoly.hpp"

namespace rrkit {

struct Factorization {
  Rat unit;
  /// Monic irreducible factors with multiplicities, in upoly_less order.
  std::vector<std::pair<UPoly, int>> factors;
};

/// Complete factorization over the rationals.
///
/// Squarefree parts come from Yun's algorithm. Each squarefree part is made
/// primitive over Z and factored modulo a single prime larger than twice a
/// Mignotte-style coefficient bound (distinct-degree then Cantor-Zassenhaus
/// equal-degree splitting); true factors are recovered by trial division of
/// symmetric lifts of subset products. No Hensel lifting is needed because
/// the prime already dominates the bound.
Factorization factor(const UPoly& f);

/// True iff f is nonconstant and has no nontrivial factorization over Q.
/// Degree 1 and degree 2 (discriminant not a square) take fast paths.
bool is_irreducible(const UPoly& f);

/// Distinct rational roots of nonzero f, ascending.
std::vector<Rat> rational_roots(const UPoly& f);

}  // namespace rrkit
