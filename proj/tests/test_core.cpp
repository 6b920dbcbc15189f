#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>

#include "szego/config.hpp"
#include "szego/curve.hpp"

using szego::QuarticCurve;

TEST(Curve, EvalBExamples) {
  const QuarticCurve c(-1, 0);
  EXPECT_EQ(szego::eval_b(c, 0.0), 0.0);
  // 1/4 - 1/2 by hand.
  EXPECT_DOUBLE_EQ(szego::eval_b(c, 1.0), -0.25);
  EXPECT_DOUBLE_EQ(szego::eval_b(c, -1.0), -0.25);
}

TEST(Curve, EvalBigBExamples) {
  const QuarticCurve c(-1, 0);
  EXPECT_DOUBLE_EQ(szego::eval_B(c, 0.0, 1.0), 0.25);
  EXPECT_DOUBLE_EQ(szego::eval_B(c, 2.0, 1.0), 2.25);
  for (double eta : {-3.0, 0.5, 17.0})
    EXPECT_EQ(szego::eval_B(QuarticCurve(-2.5, 0.7), eta, 0.0), 0.0);
}

TEST(Curve, EvenWhenQIsZero) {
  const QuarticCurve c(-1.7, 0);
  for (int i = 0; i <= 400; ++i) {
    const double x = -10.0 + 0.05 * i;
    EXPECT_EQ(szego::eval_b(c, x), szego::eval_b(c, -x));
  }
}

TEST(Curve, BigBIsLinearInEta) {
  const QuarticCurve c(-1.3, 0.4);
  for (double eta : {-7.0, -0.25, 0.0, 3.0, 12.5})
    for (double lam : {-2.0, -0.5, 0.0, 1.0, 4.0})
      EXPECT_NEAR(szego::eval_B(c, eta, lam) - szego::eval_B(c, 0.0, lam), eta * lam,
                  1e-14 * (1 + std::abs(szego::eval_b(c, lam)) + std::abs(eta * lam)));
}

TEST(Curve, FiniteDifferenceMatchesDerivative) {
  const QuarticCurve c(-1, 0.3);
  const double h = 1e-5;
  for (int i = 0; i <= 200; ++i) {
    const double x = -10.0 + 0.1 * i + 0.013;
    const double fd = (c.b(x + h) - c.b(x - h)) / (2 * h);
    EXPECT_LT(std::abs(fd / c.db(x) - 1.0), 1e-6) << "x = " << x;
  }
}

TEST(Curve, HigherDerivatives) {
  const QuarticCurve c(-2, 1);
  for (double x : {-1.5, 0.0, 0.7, 3.0}) {
    EXPECT_DOUBLE_EQ(c.d2b(x), 3 * x * x - 2);
    EXPECT_DOUBLE_EQ(c.d3b(x), 6 * x);
    EXPECT_DOUBLE_EQ(c.db(x), x * x * x - 2 * x + 1);
  }
}

TEST(Curve, RejectsNonNegativeP) {
  for (double p : {0.0, 1.0, std::numeric_limits<double>::quiet_NaN()}) {
    try {
      QuarticCurve c(p, 0);
      FAIL() << "accepted p = " << p;
    } catch (const szego::InvalidArgument &e) {
      EXPECT_NE(std::string(e.what()).find("curve.p"), std::string::npos);
    }
  }
}

TEST(Config, DefaultsAndValidation) {
  szego::NumericConfig cfg;
  EXPECT_EQ(cfg.rel_tol, 1e-8);
  EXPECT_EQ(cfg.abs_tol, 1e-14);
  EXPECT_EQ(cfg.exponent_cutoff, 40.0);
  EXPECT_EQ(cfg.max_subdivisions, 60);
  EXPECT_NO_THROW(cfg.validate());

  auto bad = cfg;
  bad.exponent_cutoff = 19.0;
  EXPECT_THROW(bad.validate(), szego::InvalidArgument);
  bad = cfg;
  bad.rel_tol = 0.0;
  EXPECT_THROW(bad.validate(), szego::InvalidArgument);
  bad = cfg;
  bad.max_subdivisions = 0;
  EXPECT_THROW(bad.validate(), szego::InvalidArgument);
}

TEST(PointPair, CoordinatesRoundTrip) {
  const QuarticCurve c(-1, 0.5);
  const szego::PointPair pp{0.3, 0.2, 0.1, 0.5, -0.4, -0.1, 0.0, 0.7};
  EXPECT_DOUBLE_EQ(pp.delta(), 1.2);
  EXPECT_TRUE(pp.in_closure());
  EXPECT_FALSE(pp.on_boundary());
  const auto back = szego::PointPair::from_complex(c, pp.z1(), pp.z2(c), pp.w1(), pp.w2(c));
  EXPECT_DOUBLE_EQ(back.x, pp.x);
  EXPECT_DOUBLE_EQ(back.s, pp.s);
  EXPECT_NEAR(back.h, pp.h, 1e-15);
  EXPECT_NEAR(back.k, pp.k, 1e-15);
  const auto sw = pp.swapped();
  EXPECT_EQ(sw.x, pp.r);
  EXPECT_EQ(sw.h, pp.k);
  EXPECT_FALSE((szego::PointPair{0, 0, 0, -0.1, 0, 0, 0, 0}.in_closure()));
}
