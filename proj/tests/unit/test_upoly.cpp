#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrkit/error.hpp"
#include "rrkit/upoly.hpp"

using rrkit::Degree;
using rrkit::Rat;
using rrkit::UPoly;

namespace {

UPoly P(std::initializer_list<int> low_first) {
  std::vector<Rat> c;
  for (int v : low_first) c.push_back(Rat(v));
  return UPoly(c);
}

const UPoly z = UPoly::variable();

}  // namespace

TEST(Degree, ZeroPolynomialIsNegInf) {
  EXPECT_TRUE(UPoly().degree().is_neg_inf());
  EXPECT_THROW((void)UPoly().degree().value(), rrkit::InternalError);
  EXPECT_LT(UPoly().degree(), Degree(0));
  EXPECT_TRUE((UPoly().degree() + Degree(3)).is_neg_inf());
}

TEST(UPoly, TrimAndDegree) {
  EXPECT_EQ(P({1, 2, 0, 0}).degree(), Degree(1));
  EXPECT_TRUE(P({0, 0}).is_zero());
}

TEST(UPoly, ToStringRoundTripShape) {
  EXPECT_EQ(P({1, -1, 0, 3}).to_string(), "3*z^3 - z + 1");
  EXPECT_EQ(UPoly(Rat(3, 2)).to_string(), "3/2");
  EXPECT_EQ(UPoly().to_string(), "0");
}

TEST(UPoly, DivModIdentity) {
  oracle::Gen gen(11);
  for (int i = 0; i < 50; ++i) {
    const UPoly a = gen.poly(gen.integer(0, 7), 9);
    const UPoly b = gen.poly(gen.integer(0, 4), 9);
    const auto qr = rrkit::divmod(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_LT(qr.remainder.degree(), b.degree());
  }
  EXPECT_THROW(rrkit::divmod(z, UPoly()), rrkit::DomainError);
}

TEST(UPoly, GcdOfConstructedProducts) {
  oracle::Gen gen(12);
  for (int i = 0; i < 40; ++i) {
    const UPoly g = gen.monic_poly(gen.integer(1, 3), 5);
    const UPoly a = g * gen.poly(gen.integer(0, 4), 5);
    const UPoly b = g * gen.poly(gen.integer(0, 4), 5);
    const UPoly d = rrkit::gcd(a, b);
    EXPECT_TRUE(d.is_monic());
    EXPECT_TRUE(rrkit::divmod(a, d).remainder.is_zero());
    EXPECT_TRUE(rrkit::divmod(b, d).remainder.is_zero());
    EXPECT_TRUE(rrkit::divmod(d, g).remainder.is_zero());
    // Cofactors are coprime exactly when their resultant is nonzero.
    const UPoly ca = rrkit::exact_div(a, d), cb = rrkit::exact_div(b, d);
    if (!ca.is_constant() && !cb.is_constant()) EXPECT_FALSE(oracle::resultant(ca, cb).is_zero());
  }
  EXPECT_THROW(rrkit::gcd(UPoly(), UPoly()), rrkit::DomainError);
  EXPECT_EQ(rrkit::gcd(P({2, 4}), UPoly()), P({1, 2}).monic());
}

TEST(UPoly, SquarefreeAgreesWithResultant) {
  oracle::Gen gen(13);
  for (int i = 0; i < 60; ++i) {
    UPoly f = gen.poly(gen.integer(1, 6), 4);
    if (gen.coin()) f = f * gen.monic_poly(1, 3).pow(2);
    EXPECT_EQ(rrkit::is_squarefree(f), oracle::squarefree_by_resultant(f)) << f.to_string();
  }
}

TEST(UPoly, YunRemultiplies) {
  oracle::Gen gen(14);
  for (int i = 0; i < 40; ++i) {
    UPoly f = gen.poly(gen.integer(0, 2), 5);
    for (int k = 1; k <= 3; ++k) {
      if (gen.coin()) f = f * gen.monic_poly(gen.integer(1, 2), 4).pow(static_cast<unsigned>(k));
    }
    if (f.is_zero()) continue;
    const auto s = rrkit::squarefree_factorization(f);
    UPoly back(s.leading);
    int prev = 0;
    for (const auto& [q, k] : s.factors) {
      EXPECT_TRUE(q.is_monic());
      EXPECT_TRUE(rrkit::is_squarefree(q));
      EXPECT_GT(k, prev);
      prev = k;
      back = back * q.pow(static_cast<unsigned>(k));
    }
    EXPECT_EQ(back, f) << f.to_string();
  }
}

TEST(UPoly, MultiplicityMatchesRootOrder) {
  const UPoly f = (z - UPoly(1)).pow(3) * (z + UPoly(2));
  EXPECT_EQ(rrkit::multiplicity(f, z - UPoly(1)), 3);
  EXPECT_EQ(rrkit::multiplicity(f, z + UPoly(2)), 1);
  EXPECT_EQ(rrkit::multiplicity(f, z), 0);
  EXPECT_EQ(oracle::root_order(f, Rat(1)), 3);
}

TEST(UPoly, ComposeAndReverse) {
  const UPoly f = P({1, 2, 3});
  EXPECT_EQ(f.compose(z + UPoly(1)), P({6, 8, 3}));
  EXPECT_EQ(f.reversed(), P({3, 2, 1}));
  oracle::Gen gen(15);
  for (int i = 0; i < 20; ++i) {
    const UPoly a = gen.poly(gen.integer(0, 4), 5), b = gen.poly(gen.integer(0, 3), 5);
    const Rat x = gen.rational(5, 3);
    EXPECT_EQ(a.compose(b).eval(x), a.eval(b.eval(x)));
    EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
  }
}
