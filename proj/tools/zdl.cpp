// zdl: command-line driver. A JSON job file is read first; flags given on the command line override it.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "zdl/dirichlet.hpp"
#include "zdl/errors.hpp"
#include "zdl/hardy.hpp"
#include "zdl/main_terms.hpp"
#include "zdl/meansquare.hpp"
#include "zdl/report.hpp"
#include "zdl/sweep.hpp"
#include "zdl/verify.hpp"
#include "zdl/zeros.hpp"

using nlohmann::json;
using namespace zdl;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// scalar or list in the config -> list
std::vector<double> doubles(const json& v) {
  if (v.is_array()) return v.get<std::vector<double>>();
  return {v.get<double>()};
}
std::vector<int> ints(const json& v) {
  if (v.is_array()) return v.get<std::vector<int>>();
  return {v.get<int>()};
}

json need(const json& cfg, const char* key) {
  require(cfg.contains(key), std::string("missing parameter '") + key + "'");
  return cfg.at(key);
}

PrecisionConfig precision(const json& cfg) {
  PrecisionConfig p;
  if (cfg.contains("precision")) {
    const json& j = cfg["precision"];
    p.working_digits = j.value("working_digits", p.working_digits);
    p.euler_maclaurin_terms = j.value("euler_maclaurin_terms", p.euler_maclaurin_terms);
    p.cutoff_multiplier = j.value("cutoff_multiplier", p.cutoff_multiplier);
    p.target_abs_tol = j.value("target_abs_tol", p.target_abs_tol);
    p.t_ceiling = j.value("t_ceiling", p.t_ceiling);
  }
  p.validate();
  return p;
}

WindowSpec window(const json& cfg) {
  const double T = need(cfg, "T").get<double>();
  const double theta = cfg.value("theta", 0.0);
  WindowSpec w = cfg.contains("H") ? WindowSpec::from_length(T, cfg["H"].get<double>(), theta)
                                   : WindowSpec::from_exponents(T, cfg.value("a", 0.75), theta);
  w.validate();
  return w;
}

mollifier::DirichletPolynomial coefficients(const json& cfg, double T, double theta) {
  const std::string src = cfg.value("coefficients", theta > 0.0 ? "mollifier" : "unit");
  if (src == "mollifier") return mollifier::build_mollifier(T, theta);
  if (src == "unit") return mollifier::unit_polynomial();
  return mollifier::read_coefficients_csv(src);
}

// writes to the configured path, or stdout
void emit(const json& cfg, const std::string& text) {
  const std::string out = cfg.value("out", "");
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  require(static_cast<bool>(f), "cannot open " + out);
  f << text;
}

int run_eval(const json& cfg) {
  const auto prec = precision(cfg);
  const auto ts = doubles(need(cfg, "t"));
  const auto ks = cfg.contains("k") ? ints(cfg["k"]) : std::vector<int>{cfg.value("k1", 0)};
  std::ostringstream os;
  os << "t,k,Z,method,est_error,imag_residue,method_gap,eta_re,eta_im\n";
  os.precision(17);
  for (double t : ts) {
    require(std::isfinite(t) && t >= 2.0, "eval needs t >= 2");
    for (int k : ks) {
      const auto z = hardy::Z_exact(t, k, prec);
      const cd e = hardy::eta_k({0.5, t}, k, prec);
      os << t << ',' << k << ',' << z.value << ',' << hardy::to_string(z.method) << ',' << z.est_error << ','
         << z.imag_residue << ',' << z.method_gap << ',' << e.real() << ',' << e.imag() << '\n';
    }
  }
  emit(cfg, os.str());
  return 0;
}

int run_meansquare(const json& cfg) {
  const auto prec = precision(cfg);
  const WindowSpec w = window(cfg);
  const auto p = coefficients(cfg, w.T, w.theta);
  const auto r = ms::mean_square_cell(p, w, cfg.value("k1", 0), cfg.value("k2", 0), prec);
  std::ostringstream os;
  report::write_csv(os, {r});
  emit(cfg, os.str());
  return 0;
}

int run_main_term(const json& cfg) {
  const WindowSpec w = window(cfg);
  const int k1 = cfg.value("k1", 0), k2 = cfg.value("k2", 0);
  const auto p = coefficients(cfg, w.T, w.theta);
  json j = {{"T", w.T}, {"a", w.a}, {"H", w.H}, {"theta", w.theta}, {"X", w.X}, {"k1", k1}, {"k2", k2},
            {"pair_sum", ms::main_term_thm4(p, w, k1, k2)}, {"vartheta", ms::vartheta(k1, k2)}};
  if (w.theta > 0.0 && cfg.value("coefficients", "mollifier") == "mollifier")
    j["mollifier_closed_form"] = ms::moment_prod_hardy(w, k1, k2);
  if (k1 == k2) j["diagonal"] = ms::main_term_thm0(p, w, k1);
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int run_zeros(const json& cfg) {
  const auto prec = precision(cfg);
  const auto fn = zeros::FunctionId::parse(cfg.value("function", "zeta_k"), cfg.value("k1", 0));
  const auto b = doubles(need(cfg, "box"));
  require(b.size() == 4, "box needs sigma_min,sigma_max,t_min,t_max");
  const auto zs = zeros::find_zeros_in_box(fn, {b[0], b[1], b[2], b[3]}, prec);
  const std::string out = cfg.value("out", "");
  if (!out.empty()) {
    zeros::write_zero_csv(zs, out);
    return 0;
  }
  std::printf("function,k,sigma,t,multiplicity,residual\n");
  for (const auto& z : zs)
    std::printf("%s,%d,%.17g,%.17g,%d,%.17g\n", z.fn.name().c_str(), z.fn.k, z.sigma, z.t, z.multiplicity,
                z.residual);
  return 0;
}

int run_sweep_cmd(const json& cfg) {
  sweep::SweepGrid g;
  g.T = doubles(need(cfg, "T"));
  g.a = doubles(cfg.value("a", json(0.75)));
  g.theta = doubles(cfg.value("theta", json(0.0)));
  if (cfg.contains("orders")) {
    for (const auto& o : cfg["orders"]) g.orders.emplace_back(o.at(0).get<int>(), o.at(1).get<int>());
  } else {
    for (int k1 : ints(cfg.value("k1", json(0))))
      for (int k2 : ints(cfg.value("k2", json(k1)))) g.orders.emplace_back(k1, k2);
  }
  const std::string src = cfg.value("coefficients", "mollifier");
  if (src == "unit") {
    g.coefficients = sweep::Coefficients::unit;
  } else if (src != "mollifier") {
    g.coefficients = sweep::Coefficients::file;
    g.coefficient_file = src;
  }
  sweep::SweepOptions o;
  o.out_csv = cfg.value("out", "");
  o.checkpoint_dir = cfg.value("checkpoint_dir", "");
  o.workers = cfg.value("workers", 0);
  require(o.workers >= 0, "workers must be >= 1");
  o.prec = precision(cfg);
  const auto r = sweep::run_sweep(g, o);
  if (o.out_csv.empty()) {
    std::vector<ms::MeanSquareReport> rows;
    for (const auto& c : r.cells) rows.push_back(c.report);
    report::write_csv(std::cout, rows);
  }
  for (const auto& c : r.cells)
    if (!c.ok) std::cerr << "cell " << c.spec.key() << " failed (" << to_string(c.error_kind) << "): " << c.error << '\n';
  return 0;
}

int run_verify_cmd(const json& cfg) {
  const std::string suite = cfg.value("suite", "all");
  if (!verify::is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'; available:";
    for (const auto& s : verify::suite_names()) std::cerr << ' ' << s;
    std::cerr << '\n';
    return kExitUsage;
  }
  verify::VerifyOptions opt;
  opt.prec = precision(cfg);
  const auto results = verify::run_suite(suite, opt);
  for (const auto& r : results) std::cerr << verify::summary_line(r) << '\n';
  const json v = verify::to_json(results);
  emit(cfg, v.dump(2) + "\n");
  return v["passed"].get<bool>() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zdl: Hardy Z derivatives, mollified mean squares and zero sums"};
  app.require_subcommand(1);

  std::string config;
  std::optional<double> T, a, theta, H;
  std::optional<int> workers;
  std::optional<std::string> out, suite, function, coeffs, ckpt;
  std::vector<int> k1, k2, k;
  std::vector<double> t, box;

  auto common = [&](CLI::App* c) {
    c->add_option("--config", config, "JSON job file")->check(CLI::ExistingFile);
    c->add_option("--T", T, "window start");
    c->add_option("--a", a, "window exponent, H = T^a");
    c->add_option("--H", H, "window length (overrides --a)");
    c->add_option("--theta", theta, "mollifier exponent, X = T^theta");
    c->add_option("--k1", k1, "first derivative order(s)");
    c->add_option("--k2", k2, "second derivative order(s)");
    c->add_option("--out", out, "output file");
    c->add_option("--workers", workers, "thread count")->check(CLI::PositiveNumber);
    c->add_option("--coefficients", coeffs, "mollifier | unit | CSV path");
  };
  auto* eval = app.add_subcommand("eval", "Z^(k)(t) and eta_k on the critical line");
  common(eval);
  eval->add_option("--t", t, "heights");
  eval->add_option("--k", k, "orders");
  auto* msq = app.add_subcommand("meansquare", "one mollified mean-square cell");
  common(msq);
  auto* mt = app.add_subcommand("main-term", "main terms for one window");
  common(mt);
  auto* zc = app.add_subcommand("zeros", "zeros in a rectangle");
  common(zc);
  zc->add_option("--function", function, "zeta_k | eta_k | Z_k | unit");
  zc->add_option("--box", box, "sigma_min sigma_max t_min t_max")->expected(4);
  auto* sw = app.add_subcommand("sweep", "grid of mean-square cells");
  common(sw);
  sw->add_option("--checkpoint-dir", ckpt, "resume directory");
  auto* ver = app.add_subcommand("verify", "acceptance suites");
  common(ver);
  ver->add_option("--suite", suite, "suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    json cfg = json::object();
    if (!config.empty()) {
      std::ifstream f(config);
      cfg = json::parse(f);
      require(cfg.is_object(), "config must be a JSON object");
    }
    auto set = [&](const char* key, const auto& v) {
      if (v) cfg[key] = *v;
    };
    set("T", T);
    set("a", a);
    set("theta", theta);
    set("workers", workers);
    set("out", out);
    set("suite", suite);
    set("function", function);
    set("coefficients", coeffs);
    set("checkpoint_dir", ckpt);
    if (H) cfg["H"] = *H;
    if (a && !H) cfg.erase("H");
    auto list = [&](const char* key, const auto& v) {
      if (v.size() == 1) cfg[key] = v[0];
      else if (!v.empty()) cfg[key] = v;
    };
    list("k1", k1);
    list("k2", k2);
    list("k", k);
    list("t", t);
    if (!box.empty()) cfg["box"] = box;

    auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (cfg.contains("command"))
      require(cfg["command"].get<std::string>() == name, "config command does not match '" + name + "'");
    if (cfg.contains("workers")) {
      require(cfg["workers"].get<int>() >= 1, "workers must be >= 1");
      omp_set_num_threads(cfg["workers"].get<int>());
    }
    if (name == "eval") return run_eval(cfg);
    if (name == "meansquare") return run_meansquare(cfg);
    if (name == "main-term") return run_main_term(cfg);
    if (name == "zeros") return run_zeros(cfg);
    if (name == "sweep") return run_sweep_cmd(cfg);
    return run_verify_cmd(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const json::exception& e) {
    std::cerr << "error (config): " << e.what() << '\n';
    return kExitUsage;
  }
}
