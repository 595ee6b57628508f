#include "zdl/meansquare.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "zdl/errors.hpp"
#include "zdl/hardy.hpp"
#include "zdl/main_terms.hpp"
#include "zdl/numeric.hpp"
#include "zdl/special.hpp"
#include "zdl/stieltjes.hpp"

namespace zdl::ms {

using mollifier::DirichletPolynomial;
using mollifier::PhiKernel;

double node_spacing(int order_sum, double tau0) {
  require(tau0 > 1.0, "tau0 must exceed 1");
  return kPi / (8.0 * (order_sum + 2) * std::log(tau0));
}

namespace {

constexpr int kMaxOrder = 7;

// full AFE error statement: both pieces of the lemma's estimate
double audit_budget(int k, const WindowSpec& w) {
  const double a = std::pow(w.T, -0.25) * std::pow(std::log(w.T), k);
  const double b = std::pow(w.H / w.T, k + 1) * std::pow(w.T, 0.25);
  return std::max(a, b);
}

quad::PanelPlan window_plan(const WindowSpec& w, int order_sum, double scale) {
  const double tau0 = std::sqrt(w.T / (2.0 * kPi));
  return quad::PanelPlan::for_spacing(w.T, w.T + w.H, scale * node_spacing(order_sum, tau0));
}

double samples_per_osc(const quad::PanelPlan& plan, int order_sum) {
  const double tau_end = std::sqrt(plan.b / (2.0 * kPi));
  const double period = kPi / ((order_sum + 2) * std::log(tau_end));
  return period / (plan.width() / 16.0);
}

// AFE values Z^{(j)}, j <= kmax, at every quadrature node; audit picks random nodes.
AuditSummary run_audit(const WindowSpec& w, const quad::PanelPlan& plan, int kmax, std::uint64_t N,
                       const hardy::AfeKernel& kern, const PrecisionConfig& prec, const IntegrationOptions& opt,
                       const int* orders, int norders) {
  AuditSummary s;
  if (!opt.audit) return s;
  const auto& rule = quad::GaussLegendre::gl16();
  const double total_nodes = static_cast<double>(plan.panels) * rule.size();
  s.nodes = std::min<std::size_t>(opt.audit_cap,
                                  static_cast<std::size_t>(std::ceil(opt.audit_fraction * total_nodes)));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_panel(0, plan.panels - 1);
  std::uniform_int_distribution<int> pick_node(0, rule.size() - 1);
  std::vector<double> ts(s.nodes);
  for (auto& t : ts) {
    const std::size_t i = pick_panel(rng);
    const double lo = plan.left(i), hi = (i + 1 == plan.panels) ? plan.b : plan.left(i + 1);
    t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.x[pick_node(rng)];
  }
  std::vector<double> disc(s.nodes, 0.0), ratio(s.nodes, 0.0);
  const auto n = static_cast<long long>(s.nodes);
#pragma omp parallel for schedule(dynamic, 1) if (opt.parallel)
  for (long long i = 0; i < n; ++i) {
    double afe[kMaxOrder + 1];
    kern.eval(ts[i], N, kmax, afe);
    const auto ex = hardy::Z_exact_all(ts[i], kmax, prec);
    for (int j = 0; j < norders; ++j) {
      const int k = orders[j];
      const double d = std::abs(afe[k] - ex[k].value);
      disc[i] = std::max(disc[i], d);
      ratio[i] = std::max(ratio[i], d / (opt.audit_factor * audit_budget(k, w)));
    }
  }
  for (std::size_t i = 0; i < s.nodes; ++i) {
    s.max_discrepancy = std::max(s.max_discrepancy, disc[i]);
    s.max_ratio = std::max(s.max_ratio, ratio[i]);
  }
  if (s.max_ratio > 1.0)
    fail(ErrorKind::audit, "AFE audit failed: discrepancy " + std::to_string(s.max_discrepancy) +
                               " exceeds " + std::to_string(opt.audit_factor) + "x the AFE budget");
  return s;
}

quad::QuadResult run(const quad::BatchIntegrand& f, const quad::PanelPlan& plan, const IntegrationOptions& opt) {
  quad::QuadOptions qo;
  qo.refine_stride = opt.refine_stride;
  qo.store = opt.store;
  return opt.parallel ? quad::integrate_parallel(f, plan, qo) : quad::integrate_serial(f, plan, qo);
}

MeanSquareReport base_report(const WindowSpec& w, int k1, int k2) {
  w.validate();
  require(k1 >= 0 && k2 >= 0 && k1 <= kMaxOrder && k2 <= kMaxOrder, "orders must lie in [0, 7]");
  require(w.T >= 2.0 * kPi * 4.0, "window must start at T >= 8 pi");
  MeanSquareReport r;
  r.window = w;
  r.k1 = k1;
  r.k2 = k2;
  const int kmax = std::max(k1, k2);
  r.afe_in_range = w.a < (4.0 * kmax + 3.0) / (4.0 * (kmax + 1.0));
  return r;
}

bool zero_poly(const DirichletPolynomial& p) {
  return std::all_of(p.b.begin(), p.b.end(), [](cd b) { return b == cd(0.0, 0.0); });
}

// (d/dt)^n e^{-i theta} / e^{-i theta}, n <= order
void phase_jet(const std::vector<long double>& th, int order, cd* E) {
  E[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    cd acc = 0.0;
    for (int m = 0; m < n; ++m)
      acc += binomial(n - 1, m) * cd(0.0, -static_cast<double>(th[m + 1])) * E[n - 1 - m];
    E[n] = acc;
  }
}

}  // namespace

MeanSquareReport integrate_JZ(const DirichletPolynomial& p, const WindowSpec& w, int k1, int k2,
                              const PrecisionConfig& prec, const IntegrationOptions& opt) {
  prec.validate();
  auto r = base_report(w, k1, k2);
  const auto plan = window_plan(w, k1 + k2, opt.spacing_scale);
  r.panels = plan.panels;
  r.samples_per_oscillation = samples_per_osc(plan, k1 + k2);
  if (zero_poly(p)) return r;
  const int kmax = std::max(k1, k2);
  const auto N = static_cast<std::uint64_t>(std::floor(std::sqrt(w.T / (2.0 * kPi))));
  const hardy::AfeKernel kern(N);
  const PhiKernel phi(p);
  const quad::BatchIntegrand f = [&](const double* ts, int n, double* out) {
    for (int i = 0; i < n; ++i) {
      double z[kMaxOrder + 1];
      kern.eval(ts[i], N, kmax, z);
      out[i] = z[k1] * z[k2] * std::norm(phi(ts[i]));
    }
  };
  const auto q = run(f, plan, opt);
  r.numeric_integral = q.value;
  r.quad_error = q.est_error;
  const int orders[2] = {k1, k2};
  r.audit = run_audit(w, plan, kmax, N, kern, prec, opt, orders, 2);
  return r;
}

MeanSquareReport integrate_Izeta(const DirichletPolynomial& p, const WindowSpec& w, int m, int n,
                                 const PrecisionConfig& prec, const IntegrationOptions& opt) {
  prec.validate();
  auto r = base_report(w, m, n);
  const auto plan = window_plan(w, m + n, opt.spacing_scale);
  r.panels = plan.panels;
  r.samples_per_oscillation = samples_per_osc(plan, m + n);
  if (zero_poly(p)) return r;
  const int kmax = std::max(m, n);
  const auto N = static_cast<std::uint64_t>(std::floor(std::sqrt(w.T / (2.0 * kPi))));
  const hardy::AfeKernel kern(N);
  const PhiKernel phi(p);
  // zeta^{(j)}(1/2+it) e^{i theta} = (-i)^j sum_r C(j,r) E_{j-r} Z^{(r)}
  auto zeta_rot = [&](double t, cd* zr) {
    double z[kMaxOrder + 1];
    kern.eval(t, N, kmax, z);
    cd E[kMaxOrder + 1];
    if (kmax > 0) phase_jet(sf::theta_derivatives(t, kmax), kmax, E);
    else E[0] = 1.0;
    for (int j = 0; j <= kmax; ++j) {
      cd acc = 0.0;
      for (int q = 0; q <= j; ++q) acc += binomial(j, q) * E[j - q] * z[q];
      zr[j] = ipow(-j) * acc;
    }
  };
  auto component = [&](bool imag) -> quad::BatchIntegrand {
    return [&, imag](const double* ts, int cnt, double* out) {
      for (int i = 0; i < cnt; ++i) {
        cd zr[kMaxOrder + 1];
        zeta_rot(ts[i], zr);
        const cd prod = zr[m] * std::conj(zr[n]);
        out[i] = (imag ? prod.imag() : prod.real()) * std::norm(phi(ts[i]));
      }
    };
  };
  const auto re = run(component(false), plan, opt);
  r.numeric_integral = re.value;
  r.quad_error = re.est_error;
  if (m != n) {
    IntegrationOptions o2 = opt;
    o2.store = nullptr;
    r.imag_part = run(component(true), plan, o2).value;
  }
  const int orders[kMaxOrder + 1] = {0, 1, 2, 3, 4, 5, 6, 7};
  r.audit = run_audit(w, plan, kmax, N, kern, prec, opt, orders, kmax + 1);
  return r;
}

MeanSquareReport mean_square_cell(const DirichletPolynomial& p, const WindowSpec& w, int k1, int k2,
                                  const PrecisionConfig& prec, const IntegrationOptions& opt) {
  // the smaller order carries the tighter cap
  if (p.scheme == mollifier::Scheme::mollifier) w.validate_for_order(std::min(k1, k2));
  auto r = integrate_JZ(p, w, k1, k2, prec, opt);
  if (p.scheme == mollifier::Scheme::mollifier) {
    r.main_term = moment_prod_hardy(w, k1, k2);
    r.main_term_source = "mollifier-closed-form";
    r.paper_error_scale = mollified_error_scale(w, k1, k2);
  } else {
    r.main_term = main_term_thm4(p, w, k1, k2);
    r.main_term_source = "pair-sum";
    r.paper_error_scale = k1 == k2 ? thm0_error_scale(w, k1, p.epsilon) : mollified_error_scale(w, k1, k2);
  }
  if (r.main_term != 0.0) r.ratio = r.numeric_integral / r.main_term;
  return r;
}

SecondMoment second_moment_Z(double T, int k, const PrecisionConfig& prec, double t_switch, bool parallel) {
  require(k >= 0 && k <= kMaxOrder, "order must lie in [0, 7]");
  require(T > t_switch && t_switch >= 2.0 * kPi, "need T > t_switch >= 2 pi");
  prec.validate();
  const double tau = std::sqrt(T / (2.0 * kPi));
  const double h = node_spacing(2 * k, tau);
  const auto Nmax = static_cast<std::uint64_t>(std::floor(tau)) + 1;
  const hardy::AfeKernel kern(Nmax);
  const quad::BatchIntegrand exact = [&](const double* ts, int n, double* out) {
    for (int i = 0; i < n; ++i) {
      const double z = ts[i] >= 2.0 ? hardy::Z_exact_all(ts[i], k, prec)[k].value
                                    : hardy::Z_leibniz_complex(ts[i], k, prec)[k].real();
      out[i] = z * z;
    }
  };
  const quad::BatchIntegrand afe = [&](const double* ts, int n, double* out) {
    for (int i = 0; i < n; ++i) {
      double z[kMaxOrder + 1];
      kern.eval(ts[i], hardy::afe_length_pointwise(ts[i]), k, z);
      out[i] = z[k] * z[k];
    }
  };
  quad::QuadOptions qo;
  const auto lowplan = quad::PanelPlan::for_spacing(0.0, t_switch, h);
  const auto hiplan = quad::PanelPlan::for_spacing(t_switch, T, h);
  const auto lo = parallel ? quad::integrate_parallel(exact, lowplan, qo) : quad::integrate_serial(exact, lowplan, qo);
  const auto hi = parallel ? quad::integrate_parallel(afe, hiplan, qo) : quad::integrate_serial(afe, hiplan, qo);
  SecondMoment s;
  s.numeric = lo.value + hi.value;
  s.quad_error = lo.est_error + hi.est_error;
  s.nodes = lo.nodes + hi.nodes;
  const double L = std::log(T / (2.0 * kPi));
  // leading behaviour: k = 0 keeps the constant term, k >= 1 only the top power
  if (k == 0)
    s.prediction = T * L + (2.0 * nt::stieltjes(0).gamma_k_prime - 1.0) * T;
  else
    s.prediction = T * std::pow(L, 2 * k + 1) / (std::pow(4.0, k) * (2 * k + 1));
  return s;
}

OscillatoryResult oscillatory_window_integral(double xi, int alpha, const WindowSpec& w, const PrecisionConfig&) {
  require(xi > 0.0, "xi must be positive");
  require(alpha >= 0, "alpha must be >= 0");
  w.validate();
  require(w.T > 2.0 * kPi, "window must start above 2 pi");
  OscillatoryResult r;
  const double T = w.T, H = w.H, E = T + H;
  r.in_regime = H >= std::sqrt(T) && H <= T / std::log(T);
  r.xi_in_window = xi >= T && xi <= E;
  const long double lxi1 = std::log(static_cast<long double>(xi)) + 1.0L;
  const double fmax = std::max(std::abs(std::log(T / xi)), std::abs(std::log(E / xi)));
  const double spacing = std::min(2.0 * kPi / (16.0 * std::max(fmax, 1e-6)), H / 1024.0);
  const auto plan = quad::PanelPlan::for_spacing(T, E, spacing);
  auto comp = [&](bool imag) -> quad::BatchIntegrand {
    return [&, imag](const double* ts, int n, double* out) {
      for (int i = 0; i < n; ++i) {
        const long double t = ts[i];
        const cd e = unit_phase(t * (std::log(t) - lxi1));
        const double amp = std::pow(0.5 * std::log(ts[i] / (2.0 * kPi)), -alpha);
        out[i] = amp * (imag ? e.imag() : e.real());
      }
    };
  };
  quad::QuadOptions qo;
  const auto re = quad::integrate_serial(comp(false), plan, qo);
  const auto im = quad::integrate_serial(comp(true), plan, qo);
  r.numeric = cd(re.value, im.value);
  r.nodes = re.nodes + im.nodes;
  if (r.xi_in_window)
    r.prediction = std::pow(2.0, alpha) * unit_phase(0.25L * kPiL - static_cast<long double>(xi)) *
                   std::sqrt(2.0 * kPi * xi) * std::pow(std::log(xi / (2.0 * kPi)), -alpha);
  const double Rxi = 1.0 + T / (std::abs(T - xi) + std::sqrt(T)) + E / (std::abs(E - xi) + std::sqrt(E));
  r.R = Rxi * std::pow(std::log(T), -alpha);
  return r;
}

}  // namespace zdl::ms
