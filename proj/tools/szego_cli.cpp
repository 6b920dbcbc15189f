// szego: command-line front end for the kernel library.
//
//   szego [global flags] legendre|classify|eval|verify|plotdata [command flags]
//
// Settings come from an optional JSON file (--config) whose keys mirror
// RunConfig below; command-line flags override it. Exit status: 0 success,
// 1 a verification suite failed (or a computation raised), 2 configuration
// error.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "szego/report_json.hpp"
#include "szego/szego.hpp"

using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LegendreParams {
  double eta_min = -5.0, eta_max = 5.0, step = 0.1;
  bool biconjugate = false;
};

struct ClassifyParams {
  double min = -2.0, max = 2.0, step = 0.5;
  std::vector<std::pair<double, double>> points;
};

struct EvalParams {
  std::vector<szego::PointPair> points;
  std::array<int, 4> derivative{0, 0, 0, 0};
};

struct VerifyParams {
  std::vector<std::string> suites;
  std::size_t samples = 1000;
};

struct PlotParams {
  std::string kind;
  int n = -1; // kind-dependent default
  double min = -2.0, max = 2.0;
  double x = 2.0, r = 2.0;
  double height = 0.1;
  std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  std::string svg;
};

struct RunConfig {
  double p = -1.0, q = 0.0;
  szego::NumericConfig numeric;
  std::string format; ///< csv or json; empty selects the command default
  std::string path;
  std::uint64_t seed = 42;
  LegendreParams legendre;
  ClassifyParams classify;
  EvalParams eval;
  VerifyParams verify;
  PlotParams plot;
};

// --- JSON config -------------------------------------------------------------

void check_keys(const json &j, const std::string &where,
                std::initializer_list<const char *> allowed) {
  if (!j.is_object())
    throw ConfigError(where + " must be an object");
  for (const auto &[k, v] : j.items()) {
    bool ok = false;
    for (const char *a : allowed)
      ok = ok || k == a;
    if (!ok)
      throw ConfigError("unknown field " + (where.empty() ? k : where + "." + k));
  }
}

template <class T> void read(const json &j, const char *key, const std::string &where, T &out) {
  if (!j.contains(key))
    return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception &) {
    throw ConfigError("field " + (where.empty() ? std::string(key) : where + "." + key) +
                      " has the wrong type");
  }
}

szego::PointPair pair_from_json(const json &j, const std::string &where) {
  check_keys(j, where, {"x", "y", "t", "h", "r", "s", "u", "k"});
  szego::PointPair pp;
  read(j, "x", where, pp.x);
  read(j, "y", where, pp.y);
  read(j, "t", where, pp.t);
  read(j, "h", where, pp.h);
  read(j, "r", where, pp.r);
  read(j, "s", where, pp.s);
  read(j, "u", where, pp.u);
  read(j, "k", where, pp.k);
  return pp;
}

void load_config_file(const std::string &file, RunConfig &rc) {
  std::ifstream in(file);
  if (!in)
    throw ConfigError("cannot open config file " + file);
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw ConfigError("config file is not valid JSON: " + std::string(e.what()));
  }
  check_keys(j, "", {"curve", "numeric", "output", "seed", "legendre", "classify", "eval",
                     "verify", "plotdata"});
  if (j.contains("curve")) {
    check_keys(j["curve"], "curve", {"p", "q"});
    read(j["curve"], "p", "curve", rc.p);
    read(j["curve"], "q", "curve", rc.q);
  }
  if (j.contains("numeric")) {
    const auto &n = j["numeric"];
    check_keys(n, "numeric", {"rel_tol", "abs_tol", "exponent_cutoff", "max_subdivisions"});
    read(n, "rel_tol", "numeric", rc.numeric.rel_tol);
    read(n, "abs_tol", "numeric", rc.numeric.abs_tol);
    read(n, "exponent_cutoff", "numeric", rc.numeric.exponent_cutoff);
    read(n, "max_subdivisions", "numeric", rc.numeric.max_subdivisions);
  }
  if (j.contains("output")) {
    check_keys(j["output"], "output", {"format", "path"});
    read(j["output"], "format", "output", rc.format);
    read(j["output"], "path", "output", rc.path);
  }
  read(j, "seed", "", rc.seed);
  if (j.contains("legendre")) {
    const auto &l = j["legendre"];
    check_keys(l, "legendre", {"eta_min", "eta_max", "step", "biconjugate"});
    read(l, "eta_min", "legendre", rc.legendre.eta_min);
    read(l, "eta_max", "legendre", rc.legendre.eta_max);
    read(l, "step", "legendre", rc.legendre.step);
    read(l, "biconjugate", "legendre", rc.legendre.biconjugate);
  }
  if (j.contains("classify")) {
    const auto &c = j["classify"];
    check_keys(c, "classify", {"min", "max", "step", "points"});
    read(c, "min", "classify", rc.classify.min);
    read(c, "max", "classify", rc.classify.max);
    read(c, "step", "classify", rc.classify.step);
    std::vector<std::array<double, 2>> pts;
    read(c, "points", "classify", pts);
    for (const auto &pt : pts)
      rc.classify.points.emplace_back(pt[0], pt[1]);
  }
  if (j.contains("eval")) {
    const auto &e = j["eval"];
    check_keys(e, "eval", {"points", "derivative"});
    if (e.contains("points")) {
      if (!e["points"].is_array())
        throw ConfigError("field eval.points must be an array");
      for (const auto &pt : e["points"])
        rc.eval.points.push_back(pair_from_json(pt, "eval.points[]"));
    }
    read(e, "derivative", "eval", rc.eval.derivative);
  }
  if (j.contains("verify")) {
    const auto &v = j["verify"];
    check_keys(v, "verify", {"suites", "samples"});
    read(v, "suites", "verify", rc.verify.suites);
    read(v, "samples", "verify", rc.verify.samples);
  }
  if (j.contains("plotdata")) {
    const auto &pl = j["plotdata"];
    check_keys(pl, "plotdata", {"kind", "n", "min", "max", "x", "r", "height", "deltas", "svg"});
    read(pl, "kind", "plotdata", rc.plot.kind);
    read(pl, "n", "plotdata", rc.plot.n);
    read(pl, "min", "plotdata", rc.plot.min);
    read(pl, "max", "plotdata", rc.plot.max);
    read(pl, "x", "plotdata", rc.plot.x);
    read(pl, "r", "plotdata", rc.plot.r);
    read(pl, "height", "plotdata", rc.plot.height);
    read(pl, "deltas", "plotdata", rc.plot.deltas);
    read(pl, "svg", "plotdata", rc.plot.svg);
  }
}

// --- Output ------------------------------------------------------------------

std::string fmt(double v) {
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json jnum(double v) {
  if (std::isfinite(v))
    return v;
  return fmt(v);
}

/// A table cell: number or text. Rendered as %.17g in CSV, native in JSON.
struct Cell {
  std::optional<double> num;
  std::string text;
  Cell(double v) : num(v) {}
  Cell(int v) : num(static_cast<double>(v)) {}
  Cell(std::string s) : text(std::move(s)) {}
  Cell(const char *s) : text(s) {}
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  [[nodiscard]] std::string csv() const {
    std::ostringstream o;
    for (std::size_t i = 0; i < columns.size(); ++i)
      o << (i ? "," : "") << columns[i];
    o << '\n';
    for (const auto &row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        o << (i ? "," : "") << (row[i].num ? fmt(*row[i].num) : row[i].text);
      o << '\n';
    }
    return o.str();
  }

  [[nodiscard]] std::string json_text() const {
    json arr = json::array();
    for (const auto &row : rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) {
        if (row[i].num)
          obj[columns[i]] = jnum(*row[i].num);
        else if (row[i].text.empty())
          obj[columns[i]] = nullptr;
        else
          obj[columns[i]] = row[i].text;
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
};

void emit(const RunConfig &rc, const std::string &text) {
  if (rc.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(rc.path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot write output.path " + rc.path);
  out << text;
}

void emit(const RunConfig &rc, const Table &t) {
  emit(rc, rc.format == "json" ? t.json_text() : t.csv());
}

void write_svg(const std::string &path, const std::string &svg) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot write plotdata.svg " + path);
  out << svg;
}

/// Points lo, lo + step, ... up to hi (inclusive within roundoff). Empty when hi < lo.
std::vector<double> range(double lo, double hi, double step, const char *field) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw ConfigError(std::string("field ") + field + " must be > 0");
  std::vector<double> out;
  if (hi < lo)
    return out;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i)
    out.push_back(lo + step * static_cast<double>(i));
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i)
    out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  return out;
}

// --- Commands ----------------------------------------------------------------

int cmd_legendre(const RunConfig &rc, const szego::QuarticCurve &curve) {
  const auto &lp = rc.legendre;
  Table t;
  t.columns = {"eta", "lambda", "b_star"};
  if (lp.biconjugate)
    t.columns.push_back("b_star_star");
  for (double eta : range(lp.eta_min, lp.eta_max, lp.step, "legendre.step")) {
    const auto v = szego::legendre_value(curve, eta);
    std::vector<Cell> row{eta, v.lambda_of_eta, v.b_star};
    if (lp.biconjugate)
      row.emplace_back(szego::b_star_star(curve, eta));
    t.rows.push_back(std::move(row));
  }
  emit(rc, t);
  return 0;
}

int cmd_classify(const RunConfig &rc, const szego::QuarticCurve &curve) {
  std::vector<std::pair<double, double>> pts = rc.classify.points;
  if (pts.empty()) {
    const auto g = range(rc.classify.min, rc.classify.max, rc.classify.step, "classify.step");
    for (double x : g)
      for (double r : g)
        pts.emplace_back(x, r);
  }
  Table t;
  t.columns = {"x", "r", "verdict", "margin"};
  for (const auto &[x, r] : pts) {
    const auto c = szego::classify(curve, {x, 0, 0, 0, r, 0, 0, 0});
    t.rows.push_back({x, r, szego::to_string(c.verdict), c.margin});
  }
  emit(rc, t);
  return 0;
}

int cmd_eval(const RunConfig &rc, const szego::QuarticCurve &curve) {
  const auto &d = rc.eval.derivative;
  if (d[0] < 0 || d[1] < 0 || d[2] < 0 || d[3] < 0 || d[0] + d[1] + d[2] + d[3] > 6)
    throw ConfigError("field eval.derivative must be non-negative with total order <= 6");
  Table t;
  t.columns = {"x", "y", "t", "h", "r", "s", "u", "k", "i1", "j1", "i2", "j2",
               "re", "im", "est_error", "status"};
  for (const auto &pp : rc.eval.points) {
    std::vector<Cell> row{pp.x, pp.y, pp.t, pp.h, pp.r, pp.s, pp.u, pp.k,
                          d[0], d[1], d[2], d[3]};
    try {
      const auto v =
          szego::szego_derivative_eval_detailed(curve, pp, d[0], d[1], d[2], d[3], rc.numeric);
      row.insert(row.end(), {v.value.real(), v.value.imag(), v.abs_error, "ok"});
    } catch (const szego::NotInConvergenceRegion &) {
      row.insert(row.end(), {"", "", "", "NotInConvergenceRegion"});
    } catch (const szego::InvalidArgument &) {
      row.insert(row.end(), {"", "", "", "InvalidArgument"});
    }
    t.rows.push_back(std::move(row));
  }
  emit(rc, t);
  return 0;
}

int cmd_verify(const RunConfig &rc, const szego::QuarticCurve &curve) {
  auto suites = rc.verify.suites;
  if (suites.empty())
    suites = szego::verify::suite_names();
  for (const auto &s : suites)
    if (!szego::verify::is_suite(s))
      throw ConfigError("unknown suite '" + s + "' in verify.suites");
  szego::verify::Options opt{rc.verify.samples, rc.seed};
  bool all = true;
  json reports = json::array();
  Table t;
  t.columns = {"suite", "pass", "n_samples", "ratio_min", "ratio_max"};
  for (const auto &s : suites) {
    const auto rep = szego::verify::run_suite(s, curve, rc.numeric, opt);
    all = all && rep.pass;
    reports.push_back(szego::to_json(rep));
    t.rows.push_back({rep.suite, rep.pass ? "true" : "false",
                      static_cast<double>(rep.n_samples), rep.ratio_min, rep.ratio_max});
  }
  emit(rc, rc.format == "csv" ? t.csv() : reports.dump(2) + "\n");
  return all ? 0 : 1;
}

int cmd_plotdata(const RunConfig &rc, const szego::QuarticCurve &curve) {
  const auto &pl = rc.plot;
  Table t;
  std::string svg;
  if (pl.kind == "kernel-slice") {
    const int n = pl.n < 0 ? 21 : pl.n;
    if (!(pl.height > 0.0))
      throw ConfigError("field plotdata.height must be > 0");
    t.columns = {"x", "re", "im", "est_error"};
    szego::svg::Series re{"Re S", {}, {}}, im{"Im S", {}, {}};
    for (double x : linspace(pl.min, pl.max, n)) {
      const szego::PointPair pp{x, 0, 0, pl.height, x, 0, 0, pl.height};
      const auto v = szego::szego_eval_detailed(curve, pp, rc.numeric);
      t.rows.push_back({x, v.value.real(), v.value.imag(), v.abs_error});
      re.x.push_back(x);
      re.y.push_back(v.value.real());
      im.x.push_back(x);
      im.y.push_back(v.value.imag());
    }
    svg = szego::svg::render(szego::svg::LineChart{
        "S(z, z) at height " + fmt(pl.height), "x", "S", false, false, {re, im}});
  } else if (pl.kind == "sigma-heatmap") {
    const int n = pl.n < 0 ? 201 : pl.n;
    t.columns = {"x", "r", "margin", "verdict"};
    const auto g = linspace(pl.min, pl.max, n);
    szego::svg::Heatmap hm{"inf of A over eta on the boundary", "x", "r", "margin", g, g, {}};
    hm.z.assign(g.size(), std::vector<double>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        const auto c = szego::classify(curve, {g[i], 0, 0, 0, g[j], 0, 0, 0});
        t.rows.push_back({g[i], g[j], c.margin, szego::to_string(c.verdict)});
        hm.z[j][i] = c.margin;
      }
    svg = szego::svg::render(hm);
  } else if (pl.kind == "probe") {
    t.columns = {"delta", "s_value"};
    const auto probe = szego::divergence_probe(curve, pl.x, pl.r, pl.deltas, rc.numeric);
    for (std::size_t i = 0; i < probe.deltas.size(); ++i)
      t.rows.push_back({probe.deltas[i], probe.s_values[i]});
    svg = szego::svg::render(szego::svg::LineChart{
        "absolute integral at (" + fmt(pl.x) + ", " + fmt(pl.r) + ")", "delta", "S",
        true, true, {{"S^delta", probe.deltas, probe.s_values}}});
  } else {
    throw ConfigError("field plotdata.kind must be kernel-slice, sigma-heatmap or probe");
  }
  emit(rc, t);
  if (!pl.svg.empty())
    write_svg(pl.svg, svg);
  return 0;
}

void validate(const RunConfig &rc) {
  if (!rc.format.empty() && rc.format != "csv" && rc.format != "json")
    throw ConfigError("field output.format must be csv or json");
  try {
    rc.numeric.validate();
  } catch (const szego::InvalidArgument &e) {
    throw ConfigError(e.what());
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Szego kernel of quartic tube domains: evaluation and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  double p = 0, q = 0, rel_tol = 0, cutoff = 0;
  std::uint64_t seed = 0;
  std::string out, format;
  auto *o_config = app.add_option("--config", config_path, "JSON run configuration");
  auto *o_p = app.add_option("--p", p, "curve coefficient p (< 0)");
  auto *o_q = app.add_option("--q", q, "curve coefficient q");
  auto *o_seed = app.add_option("--seed", seed, "seed for random sweeps (default 42)");
  auto *o_out = app.add_option("--out", out, "output file (default stdout)");
  auto *o_format = app.add_option("--format", format, "csv or json");
  auto *o_rel = app.add_option("--rel-tol", rel_tol, "relative quadrature tolerance");
  auto *o_cut = app.add_option("--cutoff", cutoff, "exponent cutoff for e^{-x} tails");

  double eta_min = 0, eta_max = 0, step = 0;
  auto *leg = app.add_subcommand("legendre", "lambda(eta), b*(eta) over an eta range");
  auto *o_emin = leg->add_option("--eta-min", eta_min);
  auto *o_emax = leg->add_option("--eta-max", eta_max);
  auto *o_estep = leg->add_option("--step", step);
  auto *o_bic = leg->add_flag("--biconjugate", "add a b_star_star column");

  double cmin = 0, cmax = 0, cstep = 0;
  std::vector<std::string> cpoints;
  auto *cls = app.add_subcommand("classify", "convergence verdict on boundary pairs (x, r)");
  auto *o_cmin = cls->add_option("--min", cmin);
  auto *o_cmax = cls->add_option("--max", cmax);
  auto *o_cstep = cls->add_option("--step", cstep);
  auto *o_cpts = cls->add_option("--point", cpoints, "x,r (repeatable)");

  std::vector<std::string> epoints;
  std::string deriv;
  auto *ev = app.add_subcommand("eval", "S(z, w) or a derivative at interior pairs");
  auto *o_epts = ev->add_option("--point", epoints, "x,y,t,h,r,s,u,k (repeatable)");
  auto *o_deriv = ev->add_option("--derivative", deriv, "i1,j1,i2,j2");

  std::vector<std::string> suites;
  std::size_t samples = 0;
  auto *ver = app.add_subcommand("verify", "property sweeps; exit 1 if any fails");
  auto *o_suite = ver->add_option("--suite", suites, "suite name (repeatable)");
  auto *o_samples = ver->add_option("--samples", samples, "random samples per sweep");

  std::string kind, svg_path;
  int pn = 0;
  double pmin = 0, pmax = 0, px = 0, pr = 0, ph = 0;
  std::vector<double> pdeltas;
  auto *plot = app.add_subcommand("plotdata", "CSV (and optional SVG) for plots");
  auto *o_kind = plot->add_option("--kind", kind, "kernel-slice, sigma-heatmap or probe");
  auto *o_pn = plot->add_option("--n", pn, "number of points per axis");
  auto *o_pmin = plot->add_option("--min", pmin);
  auto *o_pmax = plot->add_option("--max", pmax);
  auto *o_px = plot->add_option("--x", px);
  auto *o_pr = plot->add_option("--r", pr);
  auto *o_ph = plot->add_option("--height", ph, "h = k for kernel-slice");
  auto *o_pd = plot->add_option("--delta", pdeltas, "probe delta (repeatable)");
  auto *o_svg = plot->add_option("--svg", svg_path, "also write an SVG rendering");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  RunConfig rc;
  try {
    if (o_config->count())
      load_config_file(config_path, rc);
    if (o_p->count())
      rc.p = p;
    if (o_q->count())
      rc.q = q;
    if (o_seed->count())
      rc.seed = seed;
    if (o_out->count())
      rc.path = out;
    if (o_format->count())
      rc.format = format;
    if (o_rel->count())
      rc.numeric.rel_tol = rel_tol;
    if (o_cut->count())
      rc.numeric.exponent_cutoff = cutoff;

    if (o_emin->count())
      rc.legendre.eta_min = eta_min;
    if (o_emax->count())
      rc.legendre.eta_max = eta_max;
    if (o_estep->count())
      rc.legendre.step = step;
    if (o_bic->count())
      rc.legendre.biconjugate = true;

    if (o_cmin->count())
      rc.classify.min = cmin;
    if (o_cmax->count())
      rc.classify.max = cmax;
    if (o_cstep->count())
      rc.classify.step = cstep;
    if (o_cpts->count()) {
      rc.classify.points.clear();
      for (const auto &s : cpoints) {
        double x, r;
        char c;
        std::istringstream in(s);
        if (!(in >> x >> c >> r) || c != ',')
          throw ConfigError("field classify.points: cannot parse '" + s + "' as x,r");
        rc.classify.points.emplace_back(x, r);
      }
    }

    if (o_epts->count()) {
      rc.eval.points.clear();
      for (const auto &s : epoints) {
        std::array<double, 8> v{};
        std::istringstream in(s);
        char c = ',';
        for (int i = 0; i < 8; ++i)
          if (!(in >> v[i]) || (i < 7 && (!(in >> c) || c != ',')))
            throw ConfigError("field eval.points: cannot parse '" + s + "' as x,y,t,h,r,s,u,k");
        rc.eval.points.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
      }
    }
    if (o_deriv->count()) {
      std::istringstream in(deriv);
      char c = ',';
      auto &d = rc.eval.derivative;
      for (int i = 0; i < 4; ++i)
        if (!(in >> d[i]) || (i < 3 && (!(in >> c) || c != ',')))
          throw ConfigError("field eval.derivative: cannot parse '" + deriv + "' as i1,j1,i2,j2");
    }

    if (o_suite->count())
      rc.verify.suites = suites;
    if (o_samples->count())
      rc.verify.samples = samples;

    if (o_kind->count())
      rc.plot.kind = kind;
    if (o_pn->count())
      rc.plot.n = pn;
    if (o_pmin->count())
      rc.plot.min = pmin;
    if (o_pmax->count())
      rc.plot.max = pmax;
    if (o_px->count())
      rc.plot.x = px;
    if (o_pr->count())
      rc.plot.r = pr;
    if (o_ph->count())
      rc.plot.height = ph;
    if (o_pd->count())
      rc.plot.deltas = pdeltas;
    if (o_svg->count())
      rc.plot.svg = svg_path;
    if (rc.plot.n < -1)
      throw ConfigError("field plotdata.n must be >= 0");

    validate(rc);
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  std::optional<szego::QuarticCurve> curve;
  try {
    curve.emplace(rc.p, rc.q);
  } catch (const szego::InvalidArgument &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (leg->parsed())
      return cmd_legendre(rc, *curve);
    if (cls->parsed())
      return cmd_classify(rc, *curve);
    if (ev->parsed())
      return cmd_eval(rc, *curve);
    if (ver->parsed())
      return cmd_verify(rc, *curve);
    if (plot->parsed())
      return cmd_plotdata(rc, *curve);
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const szego::InvalidArgument &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const szego::NotSingularPair &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
