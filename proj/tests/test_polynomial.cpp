#include <gtest/gtest.h>

#include <cmath>

#include "szego/polynomial.hpp"

using szego::Polynomial;

TEST(Polynomial, EvaluateAndDifferentiate) {
  const Polynomial p{1.0, -2.0, 0.0, 3.0}; // 1 - 2x + 3x^3
  EXPECT_EQ(p.degree(), 3);
  EXPECT_DOUBLE_EQ(p(2.0), 1 - 4 + 24);
  const auto d = p.derivative();
  EXPECT_DOUBLE_EQ(d(2.0), -2 + 36);
  EXPECT_DOUBLE_EQ(p.shifted(1.0)(2.0), 20.0);
  EXPECT_DOUBLE_EQ(p.magnitude(-2.0), 1 + 4 + 24);
}

TEST(Polynomial, Coercive) {
  EXPECT_TRUE((Polynomial{0, 0, 1}.coercive()));
  EXPECT_FALSE((Polynomial{0, 0, -1}.coercive()));
  EXPECT_FALSE((Polynomial{0, 0, 0, 1}.coercive()));
  EXPECT_FALSE((Polynomial{5}.coercive()));
}

TEST(Polynomial, SimpleRoots) {
  // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
  const Polynomial p{6, -7, 0, 1};
  const auto r = p.real_roots();
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], -3.0, 1e-14);
  EXPECT_NEAR(r[1], 1.0, 1e-14);
  EXPECT_NEAR(r[2], 2.0, 1e-14);
  for (double x : r)
    EXPECT_LE(std::abs(x), p.root_bound());
}

TEST(Polynomial, DoubleRootAtExtremum) {
  const Polynomial p{1, -2, 1}; // (x - 1)^2
  const auto r = p.real_roots();
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], 1.0, 1e-12);
}

TEST(Polynomial, NoRealRoots) {
  EXPECT_TRUE((Polynomial{1, 0, 1}.real_roots().empty()));
}
