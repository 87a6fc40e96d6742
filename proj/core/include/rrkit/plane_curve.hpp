#pragma once

#include <utility>
#include <vector>

#include "rrkit/bpoly.hpp"
#include "rrkit/upoly.hpp"

namespace rrkit {

/// Lattice point (w-exponent, z-exponent).
using LatticePoint = std::pair<int, int>;

struct NewtonPolygon {
  std::vector<LatticePoint> support;  ///< sorted
  std::vector<LatticePoint> hull;     ///< counterclockwise, no collinear vertices
};

/// Throws DomainError for the zero polynomial.
NewtonPolygon newton_polygon(const BPoly& f);

struct LatticeCount {
  long interior = 0;
  long boundary = 0;
  long area2 = 0;  ///< twice the area
};

/// Strict interior points by enumeration over the bounding box, cross-checked
/// against Pick's theorem. Degenerate hulls have no interior.
LatticeCount lattice_count(const NewtonPolygon& poly);
long interior_lattice_count(const NewtonPolygon& poly);

struct SimpleBranching {
  int sheets = 0;
  UPoly discriminant;
  int discriminant_degree = 0;
  int v_infinity = 0;
  long v_total = 0;
  int genus = 0;
};

/// Riemann-Hurwitz for the projection to z, assuming every affine branch
/// point is simple: V = deg disc_w(F) + V_inf. The discriminant is checked to
/// be squarefree; DomainError otherwise, or for deg_w F < 2, odd V, or a
/// negative genus.
SimpleBranching simple_branching(const BPoly& f, int v_infinity);
int genus_simple_branching(const BPoly& f, int v_infinity);

}  // namespace rrkit
