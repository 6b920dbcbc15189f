// Evaluates the main quantities for b(x) = x^4/4 - x^2/2.

#include <cstdio>

#include "szego/szego.hpp"

int main() {
  const szego::QuarticCurve curve(-1.0, 0.0);
  const szego::NumericConfig cfg;

  std::printf("lambda(0) = %.12g, b*(0) = %.12g, b**(0) = %.12g\n",
              szego::lambda_of_eta(curve, 0.0), szego::b_star(curve, 0.0),
              szego::b_star_star(curve, 0.0));

  const auto n = szego::n_integral(curve, 0.0, 1.0, cfg);
  std::printf("N(0, 1) = %.12g (envelope ratio %.4g)\n", n.value, n.ratio());

  for (auto [x, r] : {std::pair{0.0, 0.0}, {2.0, 2.0}, {1.0, -1.0}}) {
    const auto c = szego::classify(curve, {x, 0, 0, 0, r, 0, 0, 0});
    std::printf("(%g, %g): %s, margin %.6g\n", x, r, szego::to_string(c.verdict), c.margin);
  }

  const szego::PointPair pair{0.3, 0.2, 0.1, 0.5, -0.4, -0.1, 0.0, 0.7};
  const auto s = szego::szego_eval(curve, pair, cfg);
  std::printf("S(z, w) = %.10g %+.10gi\n", s.real(), s.imag());
}
