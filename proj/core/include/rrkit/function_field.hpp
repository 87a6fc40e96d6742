#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrkit/ratfun.hpp"
#include "rrkit/upoly.hpp"

namespace rrkit {

/// A place of the rational function field Q(z): a monic irreducible
/// polynomial (bundling its conjugate roots) or the point at infinity.
class Place {
 public:
  /// Normalizes q to monic and validates irreducibility; throws DomainError
  /// for constant or reducible q.
  static Place finite(const UPoly& q);
  static Place infinity() { return Place(); }
  /// z - a
  static Place rational(const Rat& a);

  bool is_infinity() const noexcept { return infinity_; }
  /// The defining polynomial; throws DomainError at infinity.
  const UPoly& poly() const;
  /// Number of geometric points bundled: deg q for finite places, 1 at infinity.
  int degree() const;

  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.infinity_ == b.infinity_ && a.q_ == b.q_;
  }
  /// Finite places first (by degree, then coefficients), infinity last.
  friend bool operator<(const Place& a, const Place& b);

 private:
  friend class PlaceFactory;
  Place() : infinity_(true) {}
  explicit Place(UPoly q) : q_(std::move(q)), infinity_(false) {}
  UPoly q_;
  bool infinity_;
};

/// Finite formal integer combination of places; no zero coefficients stored.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const Place, int>> init);

  static Divisor of(const Place& p, int n = 1);

  const std::map<Place, int>& terms() const noexcept { return terms_; }
  int coefficient(const Place& p) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// sum n_p * deg(p)
  long degree() const;
  bool is_effective() const;
  /// this - other is effective
  bool dominates(const Divisor& other) const;

  Divisor& add(const Place& p, int n);
  Divisor operator-() const;
  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, const Divisor& d);
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

  /// e.g. "2*(z) + 1*(z^2 + 1) - 3*inf"; "0" for the zero divisor.
  std::string to_string() const;

 private:
  std::map<Place, int> terms_;
};

/// ord_p f. Throws DomainError for the zero function.
int ord_at(const RatFun& f, const Place& p);

/// (f) = sum ord_p f * p. The coefficient at infinity is derived from the
/// finite part; degree zero is re-checked (InternalError on failure).
Divisor principal_divisor(const RatFun& f);

/// A function f with (f) = d1 - d2 when deg d1 = deg d2, else nothing.
std::optional<RatFun> linearly_equivalent_p1(const Divisor& d1, const Divisor& d2);

/// Residue of the differential f dz at a degree-one place or infinity.
/// Throws DomainError for places of degree >= 2.
Rat residue_at(const RatFun& f, const Place& p);

struct ResidueEntry {
  Place place;
  Rat residue;
};

/// Residues of f dz at every pole (all rational) and at infinity.
/// Throws DomainError when the denominator does not split over Q.
std::vector<ResidueEntry> residues(const RatFun& f);

/// Sum of all residues of f dz; zero by the residue theorem.
Rat residue_sum_check(const RatFun& f);

}  // namespace rrkit
