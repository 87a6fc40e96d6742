#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrkit/error.hpp"
#include "rrkit/series.hpp"

using rrkit::PowerSeries;
using rrkit::Rat;
using rrkit::UPoly;

TEST(Series, InverseTimesSelfIsOne) {
  oracle::Gen gen(41);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rat> c{gen.nonzero_rational(5, 3)};
    for (int k = 0; k < 7; ++k) c.push_back(gen.rational(5, 3));
    const PowerSeries s(c, 8);
    const PowerSeries one = s * s.inverse();
    EXPECT_EQ(one.coeff(0), Rat(1));
    for (std::size_t k = 1; k < 8; ++k) EXPECT_TRUE(one.coeff(k).is_zero());
  }
  EXPECT_THROW(PowerSeries::variable(4).inverse(), rrkit::DomainError);
}

TEST(Series, SqrtSquares) {
  const PowerSeries s({Rat(4), Rat(1), Rat(-3), Rat(2)}, 6);
  const PowerSeries r = s.sqrt();
  EXPECT_EQ(r.coeff(0), Rat(2));
  const PowerSeries back = r * r;
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(back.coeff(k), s.coeff(k));
  EXPECT_THROW(PowerSeries::constant(Rat(2), 3).sqrt(), rrkit::DomainError);
}

TEST(Series, ValuationKnownOrBounded) {
  const PowerSeries s({Rat(0), Rat(0), Rat(5)}, 4);
  ASSERT_TRUE(s.valuation().known());
  EXPECT_EQ(*s.valuation().exact, 2);
  const PowerSeries zero = PowerSeries::constant(Rat(0), 4);
  EXPECT_FALSE(zero.valuation().known());
  EXPECT_EQ(zero.valuation().lower_bound, 4);
}

TEST(Series, ComposeAgreesWithPolynomial) {
  const UPoly z = UPoly::variable();
  const UPoly f = z.pow(3) - UPoly(2) * z + UPoly(1);
  const UPoly inner = UPoly(Rat(1)) + z.pow(2);
  const PowerSeries s = PowerSeries::compose(f, PowerSeries::from_poly(inner, 10));
  const UPoly exact = f.compose(inner);
  for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(s.coeff(k), exact.coeff(k));
}

TEST(Series, ShiftsAndDerivative) {
  const PowerSeries s({Rat(0), Rat(0), Rat(1), Rat(3)}, 4);
  EXPECT_EQ(s.shift_down(2).coeff(1), Rat(3));
  EXPECT_EQ(s.shift_down(2).precision(), 2u);
  EXPECT_THROW(s.shift_down(3), rrkit::InternalError);
  EXPECT_EQ(s.derivative().coeff(2), Rat(9));
  EXPECT_EQ(s.derivative().precision(), 3u);
  EXPECT_THROW((void)s.coeff(4), rrkit::InternalError);
}
