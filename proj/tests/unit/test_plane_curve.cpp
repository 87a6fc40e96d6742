#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrkit/error.hpp"
#include "rrkit/hyperelliptic.hpp"
#include "rrkit/plane_curve.hpp"
#include "rrkit/superelliptic.hpp"

using rrkit::BPoly;
using rrkit::LatticePoint;
using rrkit::Rat;
using rrkit::UPoly;

namespace {

const BPoly w = BPoly::w();
const BPoly z = BPoly::z();

BPoly trigonal() {
  return w.pow(3) + (BPoly(1) - BPoly(2) * z.pow(2)) * w.pow(2) + (z - z.pow(4)) * w + BPoly(2) * z.pow(6) +
         BPoly(1);
}

}  // namespace

TEST(NewtonPolygon, FermatTriangle) {
  const auto np = rrkit::newton_polygon(w.pow(5) + z.pow(5) - BPoly(1));
  EXPECT_EQ(np.hull, (std::vector<LatticePoint>{{0, 0}, {5, 0}, {0, 5}}));
}

TEST(NewtonPolygon, HyperellipticTriangle) {
  const auto np = rrkit::newton_polygon(w.pow(2) - z.pow(5) + BPoly(1));
  EXPECT_EQ(np.hull, (std::vector<LatticePoint>{{0, 0}, {2, 0}, {0, 5}}));
  EXPECT_EQ(rrkit::interior_lattice_count(np), 2);
}

TEST(NewtonPolygon, DropsCollinearAndDegenerate) {
  const auto line = rrkit::newton_polygon(BPoly(1) + z + z.pow(2));
  EXPECT_EQ(line.hull.size(), 2u);
  EXPECT_EQ(rrkit::interior_lattice_count(line), 0);
  const auto point = rrkit::newton_polygon(BPoly::term(Rat(3), 2, 2));
  EXPECT_EQ(point.hull.size(), 1u);
  EXPECT_EQ(rrkit::interior_lattice_count(point), 0);
  const auto square = rrkit::newton_polygon(BPoly(1) + w + z + w * z + w.pow(2) + BPoly(2) * w.pow(2) * z.pow(2));
  EXPECT_EQ(square.hull.size(), 4u);
  EXPECT_THROW(rrkit::newton_polygon(BPoly()), rrkit::DomainError);
}

TEST(NewtonPolygon, TrigonalAndKowalewski) {
  EXPECT_EQ(rrkit::interior_lattice_count(rrkit::newton_polygon(trigonal())), 4);
  // Quadrilateral (0,0), (2,0), (4,4), (0,4) in (w, z) exponents.
  const BPoly kow = (w.pow(2) - BPoly(1)) * ((w.pow(2) - BPoly(1)) * z.pow(4) - (BPoly(2) * z.pow(2) - BPoly(2) * z - BPoly(1))) + BPoly(3);
  const auto np = rrkit::newton_polygon(kow);
  EXPECT_EQ(np.hull, (std::vector<LatticePoint>{{0, 0}, {2, 0}, {4, 4}, {0, 4}}));
  EXPECT_EQ(rrkit::interior_lattice_count(np), 7);
}

TEST(NewtonPolygon, EnumerationMatchesSectionOracle) {
  oracle::Gen gen(101);
  for (int i = 0; i < 60; ++i) {
    BPoly f;
    for (int k = gen.integer(1, 7); k > 0; --k) f += BPoly::term(Rat(gen.integer(1, 3)), gen.integer(0, 6), gen.integer(0, 6));
    const auto np = rrkit::newton_polygon(f);
    const auto count = rrkit::lattice_count(np);
    EXPECT_EQ(count.interior, oracle::interior_points_by_sections(np.support));
    if (np.hull.size() >= 3) {
      EXPECT_EQ(2 * count.interior, count.area2 - count.boundary + 2);
      for (std::size_t v = 0; v < np.hull.size(); ++v) {
        const auto& a = np.hull[v];
        const auto& b = np.hull[(v + 1) % np.hull.size()];
        const auto& c = np.hull[(v + 2) % np.hull.size()];
        const long cross = static_cast<long>(b.first - a.first) * (c.second - a.second) -
                           static_cast<long>(b.second - a.second) * (c.first - a.first);
        EXPECT_GT(cross, 0);
      }
    }
  }
}

TEST(NewtonPolygon, BoundsSuperellipticGenus) {
  oracle::Gen gen(102);
  for (int i = 0; i < 30; ++i) {
    const int m = gen.integer(2, 5);
    const UPoly f = gen.squarefree_poly(gen.integer(2, 7), 4);
    if (!rrkit::check_geometric_irreducibility(m, f)) continue;
    const BPoly F = w.pow(static_cast<unsigned>(m)) - BPoly::from_z(f);
    EXPECT_GE(rrkit::interior_lattice_count(rrkit::newton_polygon(F)), rrkit::genus_superelliptic(m, f));
  }
  for (int n = 2; n <= 8; ++n) {
    const UPoly f = UPoly(1) - UPoly::variable().pow(static_cast<unsigned>(n));
    const BPoly F = w.pow(static_cast<unsigned>(n)) - BPoly::from_z(f);
    EXPECT_EQ(rrkit::interior_lattice_count(rrkit::newton_polygon(F)), rrkit::genus_superelliptic(n, f));
  }
}

TEST(SimpleBranching, Trigonal) {
  const auto sb = rrkit::simple_branching(trigonal(), 0);
  EXPECT_EQ(sb.discriminant_degree, 12);
  EXPECT_EQ(sb.v_total, 12);
  EXPECT_EQ(sb.genus, 4);
}

TEST(SimpleBranching, HyperellipticAgreement) {
  oracle::Gen gen(103);
  for (int i = 0; i < 20; ++i) {
    const UPoly p = gen.squarefree_poly(gen.integer(3, 9), 5);
    const rrkit::HypCurve c(p);
    const int v_inf = c.odd() ? 1 : 0;
    EXPECT_EQ(rrkit::genus_simple_branching(w.pow(2) - BPoly::from_z(p), v_inf), c.genus()) << p.to_string();
  }
}

TEST(SimpleBranching, SmallCases) {
  EXPECT_EQ(rrkit::genus_simple_branching(w.pow(2) - (z.pow(2) - BPoly(1)), 0), 0);
  EXPECT_EQ(rrkit::genus_simple_branching(w.pow(2) - z.pow(5) + BPoly(1), 1), 2);
}

TEST(SimpleBranching, Refusals) {
  // disc = 4 (z-1)^2 z: not squarefree
  EXPECT_THROW(rrkit::genus_simple_branching(w.pow(2) - (z - BPoly(1)).pow(2) * z, 1), rrkit::DomainError);
  EXPECT_THROW(rrkit::genus_simple_branching(w - z, 0), rrkit::DomainError);
  EXPECT_THROW(rrkit::genus_simple_branching(w.pow(2) - z.pow(5) + BPoly(1), 0), rrkit::DomainError);
}
