#include <gtest/gtest.h>

#include "rrkit/error.hpp"
#include "rrkit/expr.hpp"

using rrkit::BPoly;
using rrkit::Divisor;
using rrkit::Place;
using rrkit::Rat;
using rrkit::UPoly;

namespace {

const BPoly w = BPoly::w();
const BPoly z = BPoly::z();

std::size_t error_offset(std::string_view text) {
  try {
    rrkit::parse_poly(text);
  } catch (const rrkit::ParseError& e) {
    return e.offset();
  }
  return std::string_view::npos;
}

}  // namespace

TEST(Parser, Lowering) {
  EXPECT_EQ(rrkit::parse_poly("w^2 - (z^5 - 1)"), w.pow(2) - z.pow(5) + BPoly(1));
  EXPECT_EQ(rrkit::parse_poly("3/2 z^2"), BPoly(Rat(3, 2)) * z.pow(2));
  EXPECT_EQ(rrkit::parse_poly("2 z*w"), BPoly(2) * z * w);
  EXPECT_THROW(rrkit::parse_poly("2z w"), rrkit::ParseError);
  EXPECT_EQ(rrkit::parse_poly("(z+1)w"), (z + BPoly(1)) * w);
  EXPECT_EQ(rrkit::parse_poly("-z^2"), -(z.pow(2)));
  EXPECT_EQ(rrkit::parse_poly("--z"), z);
  EXPECT_EQ(rrkit::parse_poly("  z   *  z "), z.pow(2));
  EXPECT_EQ(rrkit::parse_poly("(z-1)^0"), BPoly(1));
}

TEST(Parser, KowalewskiExpansion) {
  const BPoly parsed = rrkit::parse_poly("(w^2-1)*((w^2-1)*z^4 - (2*z^2 - 2*z - 1)) + 1");
  // Expanded by hand: w^4 z^4 - 2 w^2 z^4 + z^4 - 2 w^2 z^2 + 2 w^2 z + w^2 + 2 z^2 - 2 z - 1 + 1
  BPoly expected;
  expected += BPoly::term(Rat(1), 4, 4);
  expected += BPoly::term(Rat(-2), 2, 4);
  expected += BPoly::term(Rat(1), 0, 4);
  expected += BPoly::term(Rat(-2), 2, 2);
  expected += BPoly::term(Rat(2), 2, 1);
  expected += BPoly::term(Rat(1), 2, 0);
  expected += BPoly::term(Rat(2), 0, 2);
  expected += BPoly::term(Rat(-2), 0, 1);
  EXPECT_EQ(parsed, expected);
}

TEST(Parser, Errors) {
  EXPECT_EQ(error_offset("w^^2"), 2u);
  EXPECT_EQ(error_offset("z + x"), 4u);
  EXPECT_EQ(error_offset("(z + 1"), 6u);
  EXPECT_EQ(error_offset("z w"), 2u);
  EXPECT_EQ(error_offset("z^-1"), 2u);
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("z/2"), 1u);
  try {
    rrkit::parse_poly("w^^2");
  } catch (const rrkit::ParseError& e) {
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Parser, RatFun) {
  const auto f = rrkit::parse_ratfun("(z^2 - 1)/z^3");
  EXPECT_EQ(f.num(), rrkit::parse_upoly("z^2 - 1"));
  EXPECT_EQ(f.den(), rrkit::parse_upoly("z^3"));
  EXPECT_THROW(rrkit::parse_ratfun("1/(z - z)"), rrkit::DomainError);
  EXPECT_THROW(rrkit::parse_ratfun("w/z"), rrkit::ParseError);
}

TEST(Parser, Equations) {
  EXPECT_EQ(rrkit::parse_equation("w^2 = z^3 + 1"), w.pow(2) - z.pow(3) - BPoly(1));
  const auto [m, f] = rrkit::parse_superelliptic("w^4 = z^4 - 1");
  EXPECT_EQ(m, 4);
  EXPECT_EQ(f, rrkit::parse_upoly("z^4 - 1"));
  const auto [m2, f2] = rrkit::parse_superelliptic("w^3 + z^3 = 1");
  EXPECT_EQ(m2, 3);
  EXPECT_EQ(f2, rrkit::parse_upoly("1 - z^3"));
  EXPECT_THROW(rrkit::parse_superelliptic("w^2 + z w = 1"), rrkit::ParseError);
  EXPECT_THROW(rrkit::parse_equation("w^2"), rrkit::ParseError);
  try {
    rrkit::parse_equation("w = z +");
    FAIL();
  } catch (const rrkit::ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
}

TEST(Parser, Divisors) {
  const Divisor d = rrkit::parse_divisor("2*(z) + (2z^2+2) - 3*inf");
  EXPECT_EQ(d.coefficient(Place::rational(Rat(0))), 2);
  EXPECT_EQ(d.coefficient(Place::finite(rrkit::parse_upoly("z^2 + 1"))), 1);
  EXPECT_EQ(d.coefficient(Place::infinity()), -3);
  EXPECT_EQ(d.degree(), 1);
  EXPECT_TRUE(rrkit::parse_divisor("0").is_zero());
  EXPECT_EQ(rrkit::parse_divisor("-inf").degree(), -1);
  EXPECT_EQ(rrkit::parse_divisor(d.to_string()), d);
  EXPECT_THROW(rrkit::parse_divisor("(z^2 - 1)"), rrkit::DomainError);
  EXPECT_THROW(rrkit::parse_divisor("2*(z"), rrkit::ParseError);
  EXPECT_THROW(rrkit::parse_divisor("2*z"), rrkit::ParseError);
  EXPECT_THROW(rrkit::parse_divisor(""), rrkit::ParseError);
}

TEST(Parser, PrintedPolynomialsReparse) {
  const UPoly p = rrkit::parse_upoly("3/2*z^3 - z + 1");
  EXPECT_EQ(rrkit::parse_upoly(p.to_string()), p);
  const BPoly f = rrkit::parse_poly("w^3 + (1 - 2z^2) w^2 + (z - z^4) w + 2z^6 + 1");
  EXPECT_EQ(rrkit::parse_poly(f.to_string()), f);
}
