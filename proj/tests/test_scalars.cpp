#include <gtest/gtest.h>

#include "twistalg/scalars.hpp"

using namespace twistalg;

namespace {

HSeries series(int order, std::vector<Rational> c) {
  HSeries s(order);
  for (size_t i = 0; i < c.size(); ++i) s[static_cast<int>(i)] = c[i];
  return s;
}

}  // namespace

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(rational(-2, 4)), "-1/2");
  EXPECT_EQ(to_string(rational(6, 3)), "2");
  EXPECT_EQ(parse_rational("4/-8"), rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
}

TEST(Rational, Rejects) {
  EXPECT_THROW(parse_rational("1/0"), ConfigError);
  EXPECT_THROW(parse_rational("one half"), ConfigError);
  EXPECT_THROW(rational(1, 0), DomainError);
}

TEST(HSeries, TruncatedProduct) {
  // (1 + h)(1 - h + h^2) = 1 + h^3, dropped at order 2
  const HSeries a = series(2, {1, 1}), b = series(2, {1, -1, 1});
  EXPECT_EQ(a * b, series(2, {1, 0, 0}));
  EXPECT_EQ(series(3, {1, 1}) * series(3, {1, -1, 1}), series(3, {1, 0, 0, 1}));
}

TEST(HSeries, InverseIsGeometricSeries) {
  EXPECT_EQ(series(4, {1, -1}).inverse(), series(4, {1, 1, 1, 1, 1}));
  EXPECT_EQ(series(2, {2}).inverse(), series(2, {rational(1, 2)}));
  EXPECT_THROW(series(2, {0, 1}).inverse(), NotInvertible);
}

TEST(HSeries, ExpLogCoefficients) {
  const HSeries e = series(4, {0, 1}).exp();
  EXPECT_EQ(e, series(4, {1, 1, rational(1, 2), rational(1, 6), rational(1, 24)}));
  // log(1 + h) = h - h^2/2 + h^3/3 - h^4/4
  EXPECT_EQ(series(4, {1, 1}).log(), series(4, {0, 1, rational(-1, 2), rational(1, 3), rational(-1, 4)}));
  EXPECT_EQ(e.log(), series(4, {0, 1}));
  EXPECT_THROW(series(2, {1}).exp(), DomainError);
  EXPECT_THROW(series(2, {2}).log(), DomainError);
}

TEST(HSeries, ShiftAndValuation) {
  const HSeries s = series(3, {0, 0, 5});
  EXPECT_EQ(s.valuation(), 2);
  EXPECT_EQ(s.shifted(1), series(3, {0, 0, 0, 5}));
  EXPECT_TRUE(s.shifted(2).is_zero());
}

TEST(HSeries, OrderMismatch) {
  EXPECT_THROW(series(2, {1}) + series(3, {1}), ConfigError);
}
