#include <gtest/gtest.h>

#include "dioph/interval.hpp"

using namespace dioph;

TEST(Interval, ExactRationalEnclosed) {
  const Interval third = Interval::from_rational(mpq_class(1, 3), 64);
  EXPECT_TRUE(third.contains(mpq_class(1, 3)));
  EXPECT_FALSE(third.contains(mpq_class(1, 3) + mpq_class(1, 1000000)));
  EXPECT_LT(third.rel_width(), 1e-18);
}

TEST(Interval, ArithmeticEnclosesExactResults) {
  const mpfr_prec_t p = 80;
  const Interval x = Interval::from_rational(mpq_class(2, 7), p);
  const Interval y = Interval::from_rational(mpq_class(-5, 11), p);
  EXPECT_TRUE((x + y).contains(mpq_class(2, 7) + mpq_class(-5, 11)));
  EXPECT_TRUE((x - y).contains(mpq_class(2, 7) - mpq_class(-5, 11)));
  EXPECT_TRUE((x * y).contains(mpq_class(2, 7) * mpq_class(-5, 11)));
  EXPECT_TRUE((x / y).contains(mpq_class(2, 7) / mpq_class(-5, 11)));
  EXPECT_TRUE((x * -3L).contains(mpq_class(-6, 7)));
}

TEST(Interval, SqrtTwoBracketsAndSquares) {
  const Interval r = sqrt(Interval(2, 128));
  EXPECT_TRUE(r.gt(Interval::from_rational(mpq_class(1414213562, 1000000000), 128)));
  EXPECT_TRUE(r.lt(Interval::from_rational(mpq_class(1414213563, 1000000000), 128)));
  const Interval sq = sqr(r);
  EXPECT_TRUE(sq.contains(mpq_class(2)));
  EXPECT_LT(r.rel_width(), 1e-35);
}

TEST(Interval, LogExpRoundTripContainsInput) {
  const Interval x = Interval::from_decimal("1.9e16", 128);
  EXPECT_TRUE(exp(log(x)).contains(mpq_class("19000000000000000")));
}

TEST(Interval, DecimalIsOutwardRounded) {
  const Interval x = Interval::from_decimal("0.1", 53);
  EXPECT_TRUE(x.contains(mpq_class(1, 10)));
  EXPECT_FALSE(x.lo_q() == x.hi_q());
}

TEST(Interval, CertifiedComparisons) {
  const Interval a(1, 64), b(2, 64);
  EXPECT_TRUE(a.lt(b));
  EXPECT_TRUE(b.gt(a));
  const Interval h = Interval::hull(a, b);
  EXPECT_FALSE(h.lt(b));
  EXPECT_FALSE(h.gt(a));
  EXPECT_FALSE(h.contains_zero());
}

TEST(Interval, DistToIntIsEnclosure) {
  const Interval x = Interval::from_rational(mpq_class(37, 10), 64);
  const Interval d = dist_to_int(x);
  EXPECT_TRUE(d.contains(mpq_class(3, 10)));
}

TEST(Interval, CeilAndFloor) {
  const Interval x = Interval::from_rational(mpq_class(7, 2), 64);
  EXPECT_EQ(x.ceil_hi(), 4);
  EXPECT_EQ(x.floor_lo(), 3);
}
