#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrkit/error.hpp"
#include "rrkit/function_field.hpp"

using rrkit::Divisor;
using rrkit::Place;
using rrkit::Rat;
using rrkit::RatFun;
using rrkit::UPoly;

namespace {
const UPoly z = UPoly::variable();
}

TEST(Place, ValidationAndNormalization) {
  EXPECT_EQ(Place::finite(UPoly(2) * z.pow(2) + UPoly(2)).poly(), z.pow(2) + UPoly(1));
  EXPECT_THROW(Place::finite(z.pow(2) - UPoly(1)), rrkit::DomainError);
  EXPECT_THROW(Place::finite(UPoly(3)), rrkit::DomainError);
  EXPECT_THROW((void)Place::infinity().poly(), rrkit::DomainError);
  EXPECT_EQ(Place::finite(z.pow(3) - UPoly(2)).degree(), 3);
  EXPECT_TRUE(Place::rational(Rat(5)) < Place::infinity());
}

TEST(Divisor, DegreeWeighsPlaceDegree) {
  const Divisor d{{Place::finite(z.pow(2) + UPoly(1)), 2}, {Place::infinity(), -3}};
  EXPECT_EQ(d.degree(), 1);
  EXPECT_FALSE(d.is_effective());
  EXPECT_TRUE((d - d).is_zero());
  EXPECT_EQ((2 * d).degree(), 2);
  EXPECT_EQ(d.to_string(), "2*(z^2 + 1) - 3*inf");
}

TEST(PrincipalDivisor, Example) {
  const RatFun f(z.pow(2) - UPoly(1), z.pow(3));
  const Divisor d = rrkit::principal_divisor(f);
  EXPECT_EQ(d.coefficient(Place::rational(Rat(0))), -3);
  EXPECT_EQ(d.coefficient(Place::rational(Rat(1))), 1);
  EXPECT_EQ(d.coefficient(Place::infinity()), 1);
  EXPECT_EQ(d.degree(), 0);
  EXPECT_THROW(rrkit::principal_divisor(RatFun()), rrkit::DomainError);
}

TEST(PrincipalDivisor, OrdersMatchRootCounts) {
  oracle::Gen gen(61);
  for (int i = 0; i < 40; ++i) {
    const RatFun f = gen.ratfun(4, 3);
    if (f.is_zero()) continue;
    for (int a = -3; a <= 3; ++a) {
      const int expected = oracle::root_order(f.num(), Rat(a)) - oracle::root_order(f.den(), Rat(a));
      EXPECT_EQ(rrkit::ord_at(f, Place::rational(Rat(a))), expected);
    }
    EXPECT_EQ(rrkit::ord_at(f, Place::infinity()),
              f.den().degree().value() - f.num().degree().value());
  }
}

TEST(PrincipalDivisor, Homomorphism) {
  oracle::Gen gen(62);
  for (int i = 0; i < 50; ++i) {
    const RatFun f = gen.ratfun(4, 3), g = gen.ratfun(4, 3);
    if (f.is_zero() || g.is_zero()) continue;
    const Divisor df = rrkit::principal_divisor(f), dg = rrkit::principal_divisor(g);
    EXPECT_EQ(df.degree(), 0);
    EXPECT_EQ(rrkit::principal_divisor(f * g), df + dg);
    EXPECT_EQ(rrkit::principal_divisor(f.inverse()), -df);
  }
}

TEST(LinearEquivalence, P1AllSameDegree) {
  oracle::Gen gen(63);
  for (int i = 0; i < 20; ++i) {
    const Divisor a = gen.divisor(3, 2, -4, 4);
    Divisor b = gen.divisor(3, 2, -4, 4);
    b.add(Place::infinity(), static_cast<int>(a.degree() - b.degree()));
    const auto f = rrkit::linearly_equivalent_p1(a, b);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(rrkit::principal_divisor(*f), a - b);
  }
  EXPECT_FALSE(rrkit::linearly_equivalent_p1(Divisor::of(Place::infinity()), Divisor()).has_value());
}

TEST(Residues, LaurentOracleAndSum) {
  oracle::Gen gen(64);
  for (int i = 0; i < 30; ++i) {
    UPoly den(1);
    std::vector<Rat> poles;
    for (int k = gen.integer(1, 3); k > 0; --k) {
      const Rat a(gen.integer(-4, 4));
      if (std::find(poles.begin(), poles.end(), a) != poles.end()) continue;
      poles.push_back(a);
      den = den * UPoly::linear_root(a).pow(static_cast<unsigned>(gen.integer(1, 3)));
    }
    const RatFun f(gen.poly(gen.integer(0, 5), 4), den);
    for (const auto& a : poles) {
      EXPECT_EQ(rrkit::residue_at(f, Place::rational(a)), oracle::residue_laurent(f, a));
    }
    EXPECT_TRUE(rrkit::residue_sum_check(f).is_zero());
  }
}

TEST(Residues, InfinityAndErrors) {
  // 1/z dz has residue -1 at infinity.
  EXPECT_EQ(rrkit::residue_at(RatFun(1) / RatFun::variable(), Place::infinity()), Rat(-1));
  EXPECT_THROW(rrkit::residue_at(RatFun(UPoly(1), z.pow(2) + UPoly(1)), Place::finite(z.pow(2) + UPoly(1))),
               rrkit::DomainError);
  EXPECT_THROW(rrkit::residues(RatFun(UPoly(1), z.pow(2) + UPoly(1))), rrkit::DomainError);
}
