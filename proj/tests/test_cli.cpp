#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output when `merge`.
Result run(const std::string &args, bool merge = false) {
  const std::string cmd = std::string(SZEGO_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE *pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ','))
      cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string temp_path(const std::string &name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST(Cli, LegendreTable) {
  const auto r = run("--p -1 --q 0 legendre --eta-min -5 --eta-max 5 --step 0.1");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 102u);
  EXPECT_EQ(rows[0][0], "eta");
  EXPECT_EQ(rows[0][1], "lambda");
  EXPECT_EQ(rows[0][2], "b_star");
  const auto &mid = rows[51];
  EXPECT_NEAR(std::stod(mid[0]), 0.0, 1e-12);
  EXPECT_NEAR(std::stod(mid[1]), 1.0, 1e-12);
  EXPECT_NEAR(std::stod(mid[2]), 0.25, 1e-12);
}

TEST(Cli, LegendreEmptyRangeAndBiconjugate) {
  const auto r = run("--p -1 legendre --eta-min 1 --eta-max 0 --step 0.1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(csv(r.out).size(), 1u);
  const auto b = run("--p -1 legendre --eta-min 0 --eta-max 0 --step 1 --biconjugate");
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(csv(b.out)[0].size(), 4u);
}

TEST(Cli, RejectsPositiveP) {
  const auto r = run("--p 1 legendre", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("p"), std::string::npos);
  EXPECT_NE(r.out.find("config error"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("--p abc legendre").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("--config /nonexistent/run.json legendre").code, 2);
}

TEST(Cli, ConfigFileAndFlagOverride) {
  const auto path = temp_path("szego_cli_test.json");
  std::ofstream(path) << R"({"curve": {"p": -2, "q": 0}, "legendre": {"eta_min": 0, "eta_max": 0, "step": 1}})";
  const auto r = run("--config " + path + " legendre");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(std::stod(csv(r.out)[1][1]), std::sqrt(2.0), 1e-12);
  const auto o = run("--config " + path + " --p -1 legendre");
  EXPECT_NEAR(std::stod(csv(o.out)[1][1]), 1.0, 1e-12);
  std::ofstream(path) << R"({"curve": {"p": -1, "bogus": 1}})";
  const auto bad = run("--config " + path + " legendre", true);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("bogus"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ClassifyGridAndPoints) {
  const auto r = run("--p -1 classify --min -2 --max 2 --step 0.5");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 82u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]), y = std::stod(rows[i][1]);
    if (x == y && std::abs(x) > 1)
      EXPECT_EQ(rows[i][2], "SigmaDiagonal");
    if (std::abs(x) == 1 && std::abs(y) == 1)
      EXPECT_EQ(rows[i][2], "SigmaAntidiagonal");
  }
  const auto p = run("--p -1 classify --point 1,-1 --point 0,0");
  ASSERT_EQ(p.code, 0);
  const auto pr = csv(p.out);
  EXPECT_EQ(pr[1][2], "SigmaAntidiagonal");
  EXPECT_EQ(pr[2][2], "Converges");
  EXPECT_NEAR(std::stod(pr[2][3]), 0.5, 1e-10);
}

TEST(Cli, EvalMarksSigmaRowsAndContinues) {
  const auto r = run("--p -1 eval --point 2,0,0,0,2,0,0,0 --point 0.3,0.2,0.1,0.5,-0.4,-0.1,0,0.7");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("NotInConvergenceRegion"), std::string::npos);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  const auto &h = rows[0];
  const auto col = [&](const std::string &name) {
    return static_cast<std::size_t>(std::find(h.begin(), h.end(), name) - h.begin());
  };
  EXPECT_NEAR(std::stod(rows[2][col("re")]), 0.273999032861, 1e-4 * 0.274);
}

TEST(Cli, EvalRejectsBadDerivative) {
  EXPECT_EQ(run("--p -1 eval --point 0,0,0,1,0,0,0,1 --derivative 7,0,0,0").code, 2);
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run("--p -1 verify --suite envelope --suite legendre --samples 100");
  EXPECT_EQ(ok.code, 0);
  const auto j = nlohmann::json::parse(ok.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["suite"], "envelope");
  EXPECT_TRUE(j[1]["pass"].get<bool>());
  // The degree-6 growth reaches about 5.7, short of the required factor 8.
  EXPECT_EQ(run("--p -1 verify --suite counterexample6").code, 1);
  EXPECT_EQ(run("--p -1 verify --suite bogus").code, 2);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run("--seed 9 verify --suite envelope --samples 150");
  const auto b = run("--seed 9 verify --suite envelope --samples 150");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, PlotdataKinds) {
  const auto svg = temp_path("szego_cli_test.svg");
  const auto h = run("--p -1 plotdata --kind sigma-heatmap --n 21 --min -2 --max 2 --svg " + svg);
  ASSERT_EQ(h.code, 0);
  const auto rows = csv(h.out);
  ASSERT_EQ(rows.size(), 1u + 21 * 21);
  double diag_max = -1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]), r = std::stod(rows[i][1]);
    if (x == r && std::abs(x) > 1)
      diag_max = std::max(diag_max, std::stod(rows[i][2]));
  }
  EXPECT_LE(diag_max, 1e-8);
  std::ifstream in(svg);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("</svg>"), std::string::npos);
  std::filesystem::remove(svg);

  const auto p = run("--p -1 plotdata --kind probe --x 2 --r 2 --delta 1e-1 --delta 1e-2 "
                     "--delta 1e-3 --delta 1e-4 --delta 1e-5");
  ASSERT_EQ(p.code, 0);
  const auto pr = csv(p.out);
  ASSERT_EQ(pr.size(), 6u);
  for (std::size_t i = 2; i < pr.size(); ++i)
    EXPECT_GT(std::stod(pr[i][1]), std::stod(pr[i - 1][1]));

  const auto k = run("--p -1 plotdata --kind kernel-slice --n 0 --height 0.5");
  EXPECT_EQ(k.code, 0);
  EXPECT_EQ(csv(k.out).size(), 1u);
  EXPECT_EQ(run("--p -1 plotdata --kind nothing").code, 2);
  EXPECT_EQ(run("--p -1 plotdata --kind probe --x 0 --r 0 --delta 0.1").code, 2);
}

TEST(Cli, JsonFormat) {
  const auto r = run("--p -1 --format json legendre --eta-min 0 --eta-max 1 --step 0.5");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_DOUBLE_EQ(j[0]["lambda"].get<double>(), 1.0);
}
