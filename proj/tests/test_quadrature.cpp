#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "szego/quadrature.hpp"

namespace quad = szego::quad;

TEST(Quadrature, FiniteInterval) {
  const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi,
                                 quad::Options{});
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, WholeLineGaussian) {
  const auto r = quad::integrate_line([](double x) { return std::exp(-x * x); }, {0.0},
                                      quad::Options{});
  EXPECT_NEAR(r.value, std::sqrt(std::numbers::pi), 1e-12);
}

TEST(Quadrature, HalfLine) {
  const auto r = quad::integrate_to_infinity([](double x) { return std::exp(-x); }, 1.0,
                                             quad::Options{});
  EXPECT_NEAR(r.value, std::exp(-1.0), 1e-12);
}

TEST(Quadrature, ComplexValued) {
  using cplx = std::complex<double>;
  // int_R e^{-x^2} e^{i x} dx = sqrt(pi) e^{-1/4}
  const auto r = quad::integrate_line<cplx>(
      [](double x) { return std::exp(-x * x) * cplx{std::cos(x), std::sin(x)}; }, {0.0},
      quad::Options{});
  EXPECT_NEAR(r.value.real(), std::sqrt(std::numbers::pi) * std::exp(-0.25), 1e-12);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-13);
}

TEST(Quadrature, BreakpointsResolveKinks) {
  const auto r = quad::integrate([](double x) { return std::abs(x - 0.3); }, -1.0, 1.0,
                                 quad::Options{}, {0.3});
  EXPECT_NEAR(r.value, 0.5 * 1.3 * 1.3 + 0.5 * 0.7 * 0.7, 1e-14);
}

TEST(Quadrature, BitReproducible) {
  auto f = [](double x) { return std::exp(-x * x) * std::cos(3 * x) / (1 + x * x); };
  const auto a = quad::integrate_line(f, {-1.0, 0.0, 2.0}, quad::Options{});
  const auto b = quad::integrate_line(f, {-1.0, 0.0, 2.0}, quad::Options{});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.abs_error, b.abs_error);
}

TEST(Quadrature, ReportsNonConvergence) {
  quad::Options opt;
  opt.max_panels = 3;
  const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  EXPECT_FALSE(r.converged);
}
