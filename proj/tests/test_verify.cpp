#include <gtest/gtest.h>

#include <limits>

#include "szego/report_json.hpp"
#include "szego/svg.hpp"
#include "szego/verify.hpp"

namespace {
const szego::QuarticCurve curve(-1.0, 0.0);
const szego::NumericConfig cfg;

std::size_t count(const std::string &s, const std::string &needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
    ++n;
  return n;
}
} // namespace

TEST(Report, JsonWritesNonFiniteAsStrings) {
  szego::SweepReport r;
  r.suite = "x";
  r.observe(2.0, {{"a", 1.0}});
  r.record("big", std::numeric_limits<double>::infinity());
  r.pass = true;
  const auto j = szego::to_json(r);
  EXPECT_EQ(j["n_samples"], 1);
  EXPECT_EQ(j["ratio_min"], 2.0);
  EXPECT_EQ(j["metrics"]["big"], "inf");
  EXPECT_EQ(j["worst_case_params"]["at_max"]["a"], 1.0);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(szego::to_json(szego::SweepReport{})["ratio_min"], "inf");
}

TEST(Report, SpreadAndMetricLookup) {
  szego::SweepReport r;
  EXPECT_TRUE(std::isinf(r.spread()));
  r.observe(2.0, {});
  r.observe(8.0, {});
  EXPECT_DOUBLE_EQ(r.spread(), 4.0);
  r.record("k", 3.0);
  EXPECT_EQ(r.metric("k"), 3.0);
  EXPECT_TRUE(std::isnan(r.metric("missing")));
}

TEST(Verify, SuitesAreDeterministic) {
  szego::verify::Options opt{200, 42};
  const auto a = szego::to_json(szego::verify::envelope_suite(cfg, opt)).dump();
  const auto b = szego::to_json(szego::verify::envelope_suite(cfg, opt)).dump();
  EXPECT_EQ(a, b);
  opt.seed = 7;
  EXPECT_NE(a, szego::to_json(szego::verify::envelope_suite(cfg, opt)).dump());
}

TEST(Verify, FastSuitesPass) {
  const szego::verify::Options opt{300, 42};
  for (const char *name : {"envelope", "sublevel", "legendre", "asymptoticA", "localA"})
    EXPECT_TRUE(szego::verify::run_suite(name, curve, cfg, opt).pass) << name;
}

TEST(Verify, UnknownSuite) {
  EXPECT_FALSE(szego::verify::is_suite("bogus"));
  EXPECT_THROW(szego::verify::run_suite("bogus", curve, cfg, {}), szego::InvalidArgument);
  EXPECT_EQ(szego::verify::suite_names().size(), 8u);
}

TEST(Svg, LineChartIsWellFormed) {
  szego::svg::LineChart c{"t <&>", "x", "y", true, true,
                          {{"s", {1e-5, 1e-3, 1e-1}, {1e7, 1e4, 10.0}}}};
  const auto s = szego::svg::render(c);
  EXPECT_EQ(s.rfind("<svg", 0), 0u);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  EXPECT_NE(s.find("t &lt;&amp;&gt;"), std::string::npos);
  EXPECT_EQ(count(s, "<polyline"), 1u);
  EXPECT_EQ(count(s, "<text"), count(s, "</text>"));
}

TEST(Svg, HeatmapHasOneCellPerValue) {
  szego::svg::Heatmap h{"m", "x", "r", "margin", {0, 1, 2}, {0, 1}, {{0, 1, 2}, {3, 4, 5}}};
  const auto s = szego::svg::render(h);
  // background + 6 cells + frame + 21 colour-bar swatches
  EXPECT_EQ(count(s, "<rect"), 1u + 6u + 2u + 21u);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}
