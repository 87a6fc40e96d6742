#pragma once

#include <vector>

#include "rrkit/rational.hpp"
#include "rrkit/report.hpp"

namespace rrkit {

/// A holomorphic map of degree m onto a curve of genus base_genus with total
/// ramification V.
struct CoveringData {
  int m = 1;
  int base_genus = 0;
  std::vector<long> indices;  ///< empty when only the total was given
  long total = 0;

  static CoveringData from_total(int m, int base_genus, long total);
  /// Every index must be positive.
  static CoveringData from_indices(int m, int base_genus, std::vector<long> indices);
};

/// m(g(Y) - 1) + 1 + V/2. DomainError for odd V or a negative result.
long rh_genus(const CoveringData& data);

/// Genericity checks for the Kowalewski curve
///   (w^2 - 1)((w^2 - 1) z^4 - p(z)) + c = 0,  p = a z^2 - 2 b z - 1,
/// with quotient u^2 = q = p^2 - 4 c z^4 and branch polynomial r = z^4 + p + c.
std::vector<Certificate> kowalewski_certificates(const Rat& a, const Rat& b, const Rat& c);

/// Genus 3 via Riemann-Hurwitz over the elliptic quotient. DomainError naming
/// the first failing certificate for degenerate parameters.
GenusReport kowalewski_genus(const Rat& a, const Rat& b, const Rat& c);

}  // namespace rrkit
