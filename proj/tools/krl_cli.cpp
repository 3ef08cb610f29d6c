#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "krl/boundary_flatten.hpp"
#include "krl/kfp_solver.hpp"
#include "krl/liouville.hpp"
#include "krl/poly_json.hpp"
#include "krl/probe.hpp"
#include "krl/suite.hpp"
#include "krl/tricomi.hpp"

using nlohmann::json;
using namespace krl;

namespace {

// Thrown for anything the user can fix by changing flags or the config file: exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string config;
};

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError(fmt::format("cannot open '{}'", path));
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void emit(const Common& c, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(c.out, std::ios::binary);
  if (!os || !(os << text)) throw std::runtime_error(fmt::format("cannot write report to '{}'", c.out));
}

json checks_json(const std::vector<Check>& checks, bool& pass) {
  json arr = json::array();
  pass = true;
  for (const auto& c : checks) {
    arr.push_back(to_json(c));
    pass = pass && c.pass;
  }
  return arr;
}

int finish(const Common& c, json report, const std::vector<Check>& checks) {
  bool pass = true;
  report["checks"] = checks_json(checks, pass);
  report["pass"] = pass;
  emit(c, report);
  return pass ? 0 : 1;
}

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(fmt::format("{}: cannot parse '{}'", what, item));
    }
  }
  return out;
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(fmt::format("{} must be positive and finite", name));
}

// ---- tricomi-verify

struct TricomiCfg {
  double A = 1.0;
  std::string csv;
};

int run_tricomi(const Common& c, const TricomiCfg& cfg) {
  require_positive(cfg.A, "--A");
  const TricomiParams P{cfg.A, 3};
  if (!cfg.csv.empty()) {
    std::vector<double> xs, vs;
    for (int i = 1; i <= 40; ++i) xs.push_back(i / 20.0);
    for (int j = -20; j <= 20; ++j) vs.push_back(j / 10.0);
    std::ofstream os(cfg.csv);
    if (!os) throw std::runtime_error(fmt::format("cannot write '{}'", cfg.csv));
    write_tricomi_csv(os, P, xs, vs);
  }
  json rep = {{"subcommand", "tricomi-verify"}, {"A", cfg.A}, {"lambda", 3}, {"seed", c.seed},
              {"cusp_ratio", cusp_ratio(P, 1.0)}, {"rhs_coefficient", exact_rhs(P, 1.0)}};
  return finish(c, rep, tricomi_checks(cfg.A, c.seed));
}

// ---- liouville-classify

struct LiouvilleCfg {
  std::string rhs;
  std::string A = "1";
};

int run_liouville(const Common& c, const LiouvilleCfg& cfg) {
  if (cfg.rhs.empty()) throw ConfigError("--rhs is required (a polynomial JSON file or inline JSON)");
  json pj;
  try {
    pj = json::parse(cfg.rhs.front() == '{' ? cfg.rhs : read_file(cfg.rhs));
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("--rhs: {}", e.what()));
  }
  HalfSpaceRHS rhs;
  try {
    rhs.p = polynomial_from_json(pj);
    rhs.A = parse_rational(cfg.A);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (rhs.A <= 0) throw ConfigError("--A must be positive");
  if (rhs.p.n() != 1) throw ConfigError("--rhs: only the one-dimensional half-space is classified");
  ClassificationResult res;
  try {
    res = classify(rhs);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const auto ver = verify_solution(res, rhs);
  json terms = json::array(), traces = json::array();
  for (const auto& t : res.tricomi_terms) terms.push_back({{"lambda", t.lambda}, {"m", t.m}});
  for (const auto& [l, tc] : res.trace_coefficients) traces.push_back({{"lambda", l}, {"c", tc.get_str()}});
  json rep = {{"subcommand", "liouville-classify"},
              {"A", rhs.A.get_str()},
              {"rhs", to_json(rhs.p)},
              {"case", res.is_polynomial ? "polynomial" : "tricomi"},
              {"is_polynomial", res.is_polynomial},
              {"particular", to_json(res.particular)},
              {"tricomi_terms", terms},
              {"trace_coefficients", traces},
              {"verification",
               {{"residual", ver.residual},
                {"trace_gap", ver.trace_gap},
                {"growth_inner", ver.growth_inner},
                {"growth_outer", ver.growth_outer},
                {"failures", ver.failures}}}};
  return finish(c, rep, {Check::eq("verify_solution", ver.passed ? 1 : 0, 1, ver.failures.empty() ? "" : ver.failures[0])});
}

// ---- solve-kfp

struct SolverCfg {
  int nx = 128;
  int nv = 0;  // 0: same as nx
  double A = 1.0;
  double x_max = 1.0;
  double v_max = 1.0;
  std::string bc = "specular";
  std::string source = "tricomi";
  std::string source_file;
  std::string scheme = "linear2";
  int levels = 3;
  std::string field_out;
  std::string table_out;
};

Scheme parse_scheme(const std::string& s) {
  if (s == "linear2") return Scheme::Linear2;
  if (s == "upwind1") return Scheme::Upwind1;
  if (s == "minmod2") return Scheme::Minmod2;
  throw ConfigError(fmt::format("--scheme: unknown scheme '{}'", s));
}

int run_solver(const Common& c, const SolverCfg& cfg) {
  require_positive(cfg.A, "--A");
  require_positive(cfg.x_max, "--x-max");
  require_positive(cfg.v_max, "--v-max");
  if (cfg.bc != "specular" && cfg.bc != "inflow") throw ConfigError("--bc must be specular or inflow");
  const X0Kind kind = cfg.bc == "specular" ? X0Kind::SpecularMirror : X0Kind::InFlow;
  SolverOptions opt;
  opt.scheme = parse_scheme(cfg.scheme);
  const int nv = cfg.nv == 0 ? cfg.nx : cfg.nv;
  const TricomiParams P{cfg.A, 3};

  PhaseFn src, data;
  std::optional<PhaseFn> exact;
  int levels = cfg.levels;
  if (cfg.source == "tricomi") {
    exact = [P](double x, double v) { return eval_tricomi(P, x, v); };
    data = *exact;
    src = [P](double, double v) { return exact_rhs(P, v); };
  } else if (cfg.source == "zero") {
    exact = [](double, double) { return 1.0; };
    data = *exact;
    src = [](double, double) { return 0.0; };
  } else if (cfg.source == "file") {
    if (cfg.source_file.empty()) throw ConfigError("--source file needs --source-file");
    std::ifstream is(cfg.source_file);
    if (!is) throw ConfigError(fmt::format("cannot open '{}'", cfg.source_file));
    Field sf;
    try {
      sf = read_csv(is);
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
    src = [sf](double x, double v) { return bilinear(sf, x, v); };
    data = [](double, double) { return 0.0; };
    levels = 1;
  } else {
    throw ConfigError(fmt::format("--source: unknown source '{}'", cfg.source));
  }
  if (levels < 1 || levels > 6) throw ConfigError("--levels must be in 1..6");
  const int div = 1 << (levels - 1);
  if (cfg.nx % div != 0 || nv % div != 0) throw ConfigError(fmt::format("--nx and --nv must be divisible by {}", div));

  BoundaryCondition bc;
  bc.at_x0 = kind;
  auto tdata = [data](double, double x, double v) { return data(x, v); };
  bc.inflow = tdata;
  bc.at_xmax = tdata;
  bc.at_vmax = tdata;

  json table = json::array();
  std::vector<double> errs;
  std::ostringstream csv;
  csv << "nx,nv,hx,hv,error,order,iterations\n";
  Field finest;
  for (int l = levels - 1; l >= 0; --l) {
    HalfStripGrid g;
    g.x_max = cfg.x_max;
    g.v_max = cfg.v_max;
    g.nx = cfg.nx >> l;
    g.nv = nv >> l;
    try {
      g.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(fmt::format("grid {}x{}: {}", g.nx, g.nv, e.what()));
    }
    SolveStats st;
    finest = solve_stationary(g, src, bc, cfg.A, opt, &st);
    json row = {{"nx", g.nx}, {"nv", g.nv}, {"hx", g.hx()}, {"hv", g.hv()}, {"iterations", st.iterations}};
    double err = std::nan(""), order = std::nan("");
    if (exact) {
      err = 0.0;
      for (int i = 0; i < finest.x_nodes(); ++i)
        for (int j = 0; j < g.nv; ++j) err = std::max(err, std::fabs(finest.at(i, j) - (*exact)(finest.x(i), g.v(j))));
      if (!errs.empty()) order = std::log2(errs.back() / err);
      errs.push_back(err);
      row["error"] = err;
      row["order"] = std::isnan(order) ? json(nullptr) : json(order);
    }
    row["max_abs"] = finest.max_abs();
    table.push_back(row);
    csv << fmt::format("{},{},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", g.nx, g.nv, g.hx(), g.hv(), err, order, st.iterations);
  }
  if (!cfg.field_out.empty()) {
    std::ofstream os(cfg.field_out);
    if (!os) throw std::runtime_error(fmt::format("cannot write '{}'", cfg.field_out));
    write_csv(os, finest);
  }
  if (!cfg.table_out.empty()) {
    std::ofstream os(cfg.table_out);
    if (!os || !(os << csv.str())) throw std::runtime_error(fmt::format("cannot write '{}'", cfg.table_out));
  }
  std::vector<Check> checks;
  if (cfg.source == "tricomi" && errs.size() >= 2) {
    int increases = 0;
    for (std::size_t k = 1; k < errs.size(); ++k)
      if (!(errs[k] < errs[k - 1])) ++increases;
    checks.push_back(Check::eq("error_decreases_under_refinement", increases, 0));
  }
  if (cfg.source == "zero") checks.push_back(Check::le("constant_recovered", errs.back(), 1e-8));
  checks.push_back(Check::eq("finite_solution", std::isfinite(finest.max_abs()) ? 1 : 0, 1));
  json rep = {{"subcommand", "solve-kfp"},
              {"A", cfg.A},
              {"bc", cfg.bc},
              {"source", cfg.source},
              {"scheme", cfg.scheme},
              {"x_max", cfg.x_max},
              {"v_max", cfg.v_max},
              {"convergence", table}};
  return finish(c, rep, checks);
}

// ---- probe-exponent

struct ProbeCfg {
  std::string field = "builtin:tricomi";
  std::string space = "p5";
  std::string z0 = "0,0,0";
  std::string radii = "1,0.5,0.25,0.125,0.0625,0.03125";
  double A = 1.0;
};

PolySpaceSpec parse_space(const std::string& s, double A) {
  if (s == "p3") return PolySpaceSpec::full(3);
  if (s == "p4") return PolySpaceSpec::full(4);
  if (s == "p5") return PolySpaceSpec::full(5);
  if (s == "specular5") return PolySpaceSpec::specular(5);
  if (s == "tricomi") return PolySpaceSpec::tricomi_augmented(A);
  throw ConfigError(fmt::format("--space: unknown space '{}' (p3, p4, p5, specular5, tricomi)", s));
}

int run_probe(const Common& c, const ProbeCfg& cfg) {
  require_positive(cfg.A, "--A");
  const auto spec = parse_space(cfg.space, cfg.A);
  const auto zc = parse_list(cfg.z0, "--z0");
  if (zc.size() != 3) throw ConfigError("--z0 needs three numbers t,x,v");
  if (zc[1] < 0.0) throw ConfigError("--z0 must lie in the closed half-space x >= 0");
  const auto z0 = point1(zc[0], zc[1], zc[2]);
  const auto radii = parse_list(cfg.radii, "--radii");

  Evaluable f;
  std::optional<Field> field;
  const TricomiParams P{cfg.A, 3};
  if (cfg.field == "builtin:tricomi") {
    f = [P](const KineticPoint& z) { return eval_tricomi(P, z.x[0], z.v[0]); };
  } else if (cfg.field == "builtin:smooth") {
    f = [](const KineticPoint& z) { return std::exp(z.x[0] - z.v[0]) * std::cos(z.t + z.v[0]); };
  } else {
    std::ifstream is(cfg.field);
    if (!is) throw ConfigError(fmt::format("--field: cannot open '{}'", cfg.field));
    try {
      field = read_csv(is);
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
    f = [&field](const KineticPoint& z) { return bilinear(*field, z.x[0], z.v[0]); };
  }
  ExponentFit fit;
  try {
    fit = exponent_fit(f, z0, spec, radii, ProbeOptions{c.seed});
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::vector<Check> checks;
  const bool grazing_origin = zc[1] == 0.0 && zc[2] == 0.0;
  if (cfg.field == "builtin:tricomi" && grazing_origin && (cfg.space == "p5" || cfg.space == "specular5")) {
    checks.push_back(Check::le("slope_near_five", std::fabs(fit.slope - 5.0), 0.1, fmt::format("slope {:.4f}", fit.slope)));
    checks.push_back(Check::eq("plateau", fit.plateau ? 1 : 0, 1));
  }
  if (cfg.field == "builtin:tricomi" && cfg.space == "tricomi")
    checks.push_back(Check::eq("tricomi_space_exact", fit.exact ? 1 : 0, 1));
  json rep = {{"subcommand", "probe-exponent"},
              {"field", cfg.field},
              {"space", cfg.space},
              {"z0", zc},
              {"seed", c.seed},
              {"radii", fit.radii},
              {"errors", fit.errors},
              {"slope", fit.exact ? json(nullptr) : json(fit.slope)},
              {"intercept", fit.intercept},
              {"r_squared", fit.r_squared},
              {"exact", fit.exact},
              {"plateau_ratio", fit.plateau_ratio},
              {"plateau", fit.plateau}};
  return finish(c, rep, checks);
}

// ---- counterexample-check

struct CounterCfg {
  std::string gamma = "builtin:parabola";
  double shape = 1.0;
  double patch = 0.25;
  std::string f_hessian = "[[2,0],[0,-2]]";
};

int run_counterexample(const Common& c, const CounterCfg& cfg) {
  GraphDomain dom;
  if (cfg.gamma == "builtin:parabola") {
    dom = GraphDomain::parabola(cfg.shape);
  } else if (cfg.gamma == "builtin:cubic") {
    dom = GraphDomain::cubic(cfg.shape);
  } else if (cfg.gamma == "builtin:flat") {
    dom = GraphDomain::flat();
  } else {
    throw ConfigError(fmt::format("--gamma: unknown domain '{}' (builtin:flat, builtin:parabola, builtin:cubic)", cfg.gamma));
  }
  require_positive(cfg.patch, "--patch");
  json hj;
  try {
    const auto& s = cfg.f_hessian;
    hj = json::parse(!s.empty() && s.front() == '[' ? s : read_file(s));
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("--f-hessian: {}", e.what()));
  }
  Eigen::MatrixXd hv(2, 2);
  try {
    if (hj.size() != 2 || hj[0].size() != 2 || hj[1].size() != 2) throw ConfigError("--f-hessian must be a 2x2 array");
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) hv(i, j) = hj[i][j].get<double>();
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("--f-hessian: {}", e.what()));
  }
  if (std::fabs(hv(0, 1) - hv(1, 0)) > 1e-12) throw ConfigError("--f-hessian must be symmetric");

  FlattenMap fm = [&] {
    try {
      return build_flatten(dom, cfg.patch);
    } catch (const FlattenError& e) {
      throw ConfigError(e.what());
    }
  }();
  const auto H2 = fm.d2_phi(Vec2::Zero());
  std::vector<Eigen::MatrixXd> H = {H2[0], H2[1]}, Hq;
  // Finite-difference Hessians go through exact rationals below; snap away the round-off first.
  for (const auto& m : H) Hq.push_back(m.unaryExpr([](double x) { return std::round(x * 1e8) / 1e8; }));
  const auto cond = counterexample_condition(H, hv);
  const auto restr = restrict_to_normal_line(limit_rhs_p1(Hq, 0.5 * hv));
  const double mixed = H[0](0, 1);
  const auto t0 = transform_coefficients(fm, Coefficients{}, Vec2::Zero(), Vec2(0.7, -0.4));

  std::vector<Check> checks = {
      Check::le("reflection_commutation", reflection_commutation_check(fm, 100), 1e-8),
      Check::eq("boundary_region_mismatches", boundary_region_mismatches(fm, 100), 0),
      Check::le("a_tilde_identity_at_origin", (t0.a - Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-10),
      Check::eq("condition_matches_normal_restriction", cond.violated == restr.obstructs() ? 1 : 0, 1),
  };
  if (hv(0, 1) == 0.0 && hv(0, 0) != 0.0)
    checks.push_back(Check::eq("violated_iff_mixed_derivative", cond.violated == (std::fabs(mixed) > 1e-6) ? 1 : 0, 1,
                               fmt::format("d_x1x2 phi^1(0) = {:.6g}", mixed)));
  auto mat = [](const Eigen::MatrixXd& m) { return json{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}; };
  json rep = {{"subcommand", "counterexample-check"},
              {"gamma", dom.name},
              {"patch_radius", cfg.patch},
              {"f_hessian", mat(hv)},
              {"d2phi_at_0", {mat(H[0]), mat(H[1])}},
              {"mixed_derivative", mixed},
              {"lhs", cond.lhs},
              {"rhs", cond.rhs},
              {"violated", cond.violated},
              {"expansion", cond.violated ? "obstructed" : "expandable"},
              {"normal_line", {{"alpha", restr.alpha.get_str()}, {"beta", restr.beta.get_str()}, {"obstructs", restr.obstructs()}}}};
  return finish(c, rep, checks);
}

// ---- suite

int run_suite_cmd(const Common& c, const std::string& only_s) {
  std::vector<int> only;
  for (double d : parse_list(only_s, "--only")) {
    if (d != std::floor(d) || d < 1 || d > kCriterionCount) throw ConfigError(fmt::format("--only: no criterion {}", d));
    only.push_back(static_cast<int>(d));
  }
  const auto t0 = std::chrono::steady_clock::now();
  auto reports = run_suite(c.seed, only);
  bool all = true;
  for (const auto& r : reports) {
    std::cerr << fmt::format("criterion {} {:<32} {} ({:.2f} s)\n", r.id, r.title, r.pass() ? "PASS" : "FAIL", r.seconds);
    for (const auto& k : r.checks)
      if (!k.pass) std::cerr << fmt::format("  failed {}: {} {} {} {}\n", k.name, k.value, k.op, k.threshold, k.detail);
    all = all && r.pass();
  }
  std::cerr << fmt::format("total {:.2f} s\n", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  emit(c, suite_report(reports, c.seed));
  return all ? 0 : 1;
}

// ---- config file: key = value lines; they override command-line flags.

std::vector<std::string> config_args(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError(fmt::format("--config: cannot open '{}'", path));
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(fmt::format("{}:{}: expected key = value", path, lineno));
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw ConfigError(fmt::format("{}:{}: empty key", path, lineno));
    if (key == "config") throw ConfigError(fmt::format("{}:{}: nested config files are not supported", path, lineno));
    for (auto& ch : key)
      if (ch == '_') ch = '-';
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("KRL_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (env[used] != '\0' || std::string(env).front() == '-') throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(fmt::format("KRL_SEED must be a non-negative integer, got '{}'", env));
  }
}

}  // namespace

int main(int argc, char** argv) {
  Common common;
  TricomiCfg tcfg;
  LiouvilleCfg lcfg;
  SolverCfg scfg;
  ProbeCfg pcfg;
  CounterCfg ccfg;
  std::string only;

  CLI::App app{"Kinetic regularity toolkit: verification suites and experiments"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Seed for randomized samples (default: $KRL_SEED or 0)");
    sub->add_option("--out", common.out, "Report path; '-' or empty for stdout");
    sub->add_option("--config", common.config, "key = value file; its entries override flags");
  };

  auto* tri = app.add_subcommand("tricomi-verify", "Homogeneity, residual, cusp and evenness checks of the Tricomi solution");
  tri->add_option("--A", tcfg.A, "Diffusion coefficient");
  tri->add_option("--csv", tcfg.csv, "Also write an x,v,T table to this path");
  add_common(tri);

  auto* lio = app.add_subcommand("liouville-classify", "Classify the half-space solution for a polynomial right-hand side");
  lio->add_option("--rhs", lcfg.rhs, "Polynomial JSON file or inline JSON");
  lio->add_option("--A", lcfg.A, "Diffusion coefficient, exact rational such as 3/2");
  add_common(lio);

  auto* sol = app.add_subcommand("solve-kfp", "Stationary solver on the half strip with a convergence table");
  sol->add_option("--nx", scfg.nx, "x intervals on the finest level");
  sol->add_option("--nv", scfg.nv, "velocity cells on the finest level (default: nx)");
  sol->add_option("--A", scfg.A, "Diffusion coefficient");
  sol->add_option("--x-max", scfg.x_max, "Strip length");
  sol->add_option("--v-max", scfg.v_max, "Velocity cutoff");
  sol->add_option("--bc", scfg.bc, "Condition at x = 0: specular or inflow");
  sol->add_option("--source", scfg.source, "tricomi, zero or file");
  sol->add_option("--source-file", scfg.source_file, "x,v,value CSV source for --source file");
  sol->add_option("--scheme", scfg.scheme, "linear2, upwind1 or minmod2");
  sol->add_option("--levels", scfg.levels, "Number of grids, each halving the previous");
  sol->add_option("--field-out", scfg.field_out, "Write the finest solution as x,v,value CSV");
  sol->add_option("--table-out", scfg.table_out, "Write the convergence table as CSV");
  add_common(sol);

  auto* prb = app.add_subcommand("probe-exponent", "Best-approximation errors over shrinking cylinders and their log-log slope");
  prb->add_option("--field", pcfg.field, "builtin:tricomi, builtin:smooth or an x,v,value CSV");
  prb->add_option("--space", pcfg.space, "p3, p4, p5, specular5 or tricomi");
  prb->add_option("--z0", pcfg.z0, "Center t,x,v");
  prb->add_option("--radii", pcfg.radii, "Comma-separated decreasing radii");
  prb->add_option("--A", pcfg.A, "Diffusion coefficient of the Tricomi field and space");
  add_common(prb);

  auto* cex = app.add_subcommand("counterexample-check", "Flattening checks and the grazing-point expansion condition");
  cex->add_option("--gamma", ccfg.gamma, "builtin:flat, builtin:parabola or builtin:cubic");
  cex->add_option("--shape", ccfg.shape, "Curvature of the parabola or coefficient of the cubic");
  cex->add_option("--patch", ccfg.patch, "Half-width of the flattening patch");
  cex->add_option("--f-hessian", ccfg.f_hessian, "Velocity Hessian of f at the grazing point, 2x2 JSON or file");
  add_common(cex);

  auto* sui = app.add_subcommand("suite", "Run every acceptance group and write one report");
  sui->add_option("--only", only, "Comma-separated criterion ids");
  add_common(sui);

  try {
    common.seed = default_seed();
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);  // CLI11 wants them reversed
    try {
      app.parse(args);
      if (!common.config.empty()) {
        // Second pass: flags first, then the file, so the file wins.
        auto extra = config_args(common.config);
        std::vector<std::string> all(argv + 1, argv + argc);
        all.insert(all.end(), extra.begin(), extra.end());
        std::reverse(all.begin(), all.end());
        app.clear();
        common = Common{default_seed(), {}, {}};
        app.parse(all);
      }
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }
    if (tri->parsed()) return run_tricomi(common, tcfg);
    if (lio->parsed()) return run_liouville(common, lcfg);
    if (sol->parsed()) return run_solver(common, scfg);
    if (prb->parsed()) return run_probe(common, pcfg);
    if (cex->parsed()) return run_counterexample(common, ccfg);
    return run_suite_cmd(common, only);
  } catch (const ConfigError& e) {
    std::cerr << json{{"error", {{"kind", "invalid_configuration"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", {{"kind", "invalid_configuration"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const SolverError& e) {
    std::cerr << json{{"error", {{"kind", "solver"}, {"message", e.what()}, {"history", e.history()}}}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "runtime"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
}
