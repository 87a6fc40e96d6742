#pragma once

#include <string>
#include <vector>

#include "rrkit/upoly.hpp"

namespace rrkit {

/// True iff w^m - f(z) is irreducible over the complex numbers: no prime
/// divisor of m divides every multiplicity in the squarefree factorization
/// of f. When 4 | m and f has the shape -4 h^4 with h over Q the question is
/// refused with DomainError ("indeterminate") rather than decided.
bool check_geometric_irreducibility(int m, const UPoly& f);

/// w^m = f(z), irreducible, m >= 2, f nonconstant.
class SuperCurve {
 public:
  /// Throws DomainError for m < 2, constant f or a reducible equation.
  SuperCurve(int m, UPoly f);

  int m() const noexcept { return m_; }
  const UPoly& f() const noexcept { return f_; }
  const SquarefreeFactorization& squarefree() const noexcept { return sqf_; }

  std::string to_string() const;

 private:
  int m_;
  UPoly f_;
  SquarefreeFactorization sqf_;
};

/// One fiber class of the cover: `points` points above each root of `base`
/// (or above infinity), each with ramification index `index` = e - 1.
struct RamificationEntry {
  bool at_infinity = false;
  UPoly base;  ///< squarefree factor of f; zero at infinity
  int base_degree = 1;
  int points = 0;
  int index = 0;

  /// base_degree * points * index
  long contribution() const noexcept { return static_cast<long>(base_degree) * points * index; }
  std::string to_string() const;
};

struct RamificationProfile {
  std::vector<RamificationEntry> entries;
  long total = 0;  ///< V
  int m = 0;
};

RamificationProfile ramification_profile(const SuperCurve& curve);

/// m(0 - 1) + 1 + V/2; InternalError if V is odd or the result is negative.
int genus_superelliptic(const SuperCurve& curve);
int genus_superelliptic(int m, const UPoly& f);

/// Every entry satisfies points * (index + 1) = m.
bool sheet_count_identity_check(const RamificationProfile& profile);

}  // namespace rrkit
