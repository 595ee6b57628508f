#include "zdl/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zdl/errors.hpp"
#include "zdl/numeric.hpp"
#include "zdl/special.hpp"
#include "zdl/zeta.hpp"

namespace zdl::hardy {

namespace {

// below this |omega| the eta route is ill-conditioned (omega vanishes near t = 17.85)
constexpr double kEtaOmegaFloor = 0.05;

ComplexPoint on_line(double t) { return {0.5, t}; }

}  // namespace

const char* to_string(ZMethod m) {
  switch (m) {
    case ZMethod::exact_eta: return "exact-eta";
    case ZMethod::exact_leibniz: return "exact-leibniz";
    case ZMethod::afe: return "afe";
  }
  return "unknown";
}

AfeParams AfeParams::for_window(const WindowSpec& w) {
  w.validate();
  AfeParams p;
  p.window = w;
  p.tau0 = std::sqrt(w.T / (2.0 * kPi));
  return p;
}

void AfeParams::validate() const {
  require(tau0 > 0.0 && std::isfinite(tau0), "tau0 must be positive");
  window.validate();
}

std::vector<cd> eta_all(cd s, int kmax, const PrecisionConfig& prec) {
  require(kmax >= 0, "eta order must be >= 0");
  const auto z = sf::zeta_jet(ComplexPoint::from(s), kmax, prec);
  const cd w = sf::omega_jet(s, 0).value();
  if (std::abs(w) < 1e-14) fail(ErrorKind::division, "omega vanishes at s");
  const auto lam = sf::lambda_all(s, std::max(kmax, 1));
  std::vector<cd> eta(kmax + 1);
  eta[0] = -2.0 * z.d[0] / w;
  for (int k = 1; k <= kmax; ++k) {
    cd acc = lam[k] * z.d[0];
    for (int j = 1; j <= k - 1; ++j) acc += binomial(k, j) * lam[k - j] * z.d[j];
    acc -= 2.0 * z.d[k] / w;
    eta[k] = acc;
  }
  return eta;
}

cd eta_k(ComplexPoint s, int k, const PrecisionConfig& prec) { return eta_all(s.s(), k, prec)[k]; }

std::vector<cd> Z_leibniz_complex(double t, int kmax, const PrecisionConfig& prec) {
  require(t >= 0.0, "Z needs t >= 0");
  const auto z = sf::zeta_jet(on_line(t), kmax, prec);
  const auto th = sf::theta_derivatives(t, std::max(kmax, 1));
  // (e^{i theta})^{(n)} = e^{i theta} G_n
  std::vector<cd> G(kmax + 1);
  G[0] = 1.0;
  for (int n = 1; n <= kmax; ++n) {
    cd acc = 0.0;
    for (int m = 0; m <= n - 1; ++m)
      acc += binomial(n - 1, m) * cd(0.0, static_cast<double>(th[m + 1])) * G[n - 1 - m];
    G[n] = acc;
  }
  const cd g = unit_phase(th[0]);
  std::vector<cd> out(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    cd acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += binomial(k, j) * G[k - j] * ipow(j) * z.d[j];
    out[k] = g * acc;
  }
  return out;
}

std::vector<cd> Z_eta_complex(double t, int kmax, const PrecisionConfig& prec) {
  const auto th = sf::theta_derivatives(t, 1);
  const auto eta = eta_all(cd(0.5, t), kmax, prec);
  const cd g = unit_phase(th[0]);
  std::vector<cd> out(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    out[k] = ipow(k) * static_cast<double>(th[1]) * g * eta[k];
  return out;
}

std::vector<ZEvaluation> Z_exact_all(double t, int kmax, const PrecisionConfig& prec) {
  require(std::isfinite(t) && t >= 2.0, "Z_exact needs t >= 2");
  require(kmax >= 0, "order must be >= 0");
  prec.validate();
  const auto leib = Z_leibniz_complex(t, kmax, prec);
  const double w = -2.0 * sf::theta_prime(t);
  const bool eta_ok = std::abs(w) >= kEtaOmegaFloor;
  std::vector<cd> eta;
  if (eta_ok) eta = Z_eta_complex(t, kmax, prec);
  std::vector<ZEvaluation> out(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    ZEvaluation e;
    e.t = t;
    e.k = k;
    e.value = leib[k].real();
    e.imag_residue = std::abs(leib[k].imag());
    const double scale = std::max(1.0, std::abs(e.value));
    if (e.imag_residue > 10.0 * prec.target_abs_tol * scale)
      fail(ErrorKind::precision, "discarded imaginary part of Z^(" + std::to_string(k) + ")(" +
                                     std::to_string(t) + ") is " + std::to_string(e.imag_residue));
    if (eta_ok) {
      e.method = ZMethod::exact_eta;
      e.method_gap = std::abs(eta[k] - leib[k]);
      if (e.method_gap > 100.0 * prec.target_abs_tol * scale)
        fail(ErrorKind::method_disagreement,
             "eta and Leibniz routes differ by " + std::to_string(e.method_gap) + " at t = " +
                 std::to_string(t) + ", k = " + std::to_string(k));
    } else {
      e.method = ZMethod::exact_leibniz;
      e.method_gap = -1.0;
    }
    e.est_error = std::max(e.imag_residue, std::max(e.method_gap, 0.0));
    out[k] = e;
  }
  return out;
}

ZEvaluation Z_exact(double t, int k, const PrecisionConfig& prec) {
  return Z_exact_all(t, k, prec)[k];
}

double afe_error_budget(int k, const WindowSpec& w) {
  const double split = (2.0 * k + 1.0) / (2.0 * (k + 1.0));
  if (w.a <= split) return std::pow(w.T, -0.25) * std::pow(std::log(w.T), k);
  return std::pow(w.H / w.T, k + 1) * std::pow(w.T, 0.25);
}

AfeKernel::AfeKernel(std::uint64_t nmax) : nmax_(nmax), logn_(nmax + 1), rsqrt_(nmax + 1) {
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    logn_[n] = phase::split_log(n);
    rsqrt_[n] = 1.0 / std::sqrt(static_cast<double>(n));
  }
}

void AfeKernel::eval(double t, std::uint64_t N, int kmax, double* out) const {
  require(N <= nmax_, "AFE length exceeds kernel table");
  constexpr int kCap = 8;
  require(kmax >= 0 && kmax < kCap, "AFE order must lie in [0, 7]");
  thread_local std::vector<double> ang, cs, sn;
  if (ang.size() < N) {
    ang.resize(N);
    cs.resize(N);
    sn.resize(N);
  }
  const double th = static_cast<double>(reduce_angle(sf::theta(t)));
  for (std::uint64_t n = 1; n <= N; ++n) ang[n - 1] = th - phase::mul_mod_2pi(t, logn_[n]);
  phase::sincos_batch(ang.data(), N, cs.data(), sn.data());
  const double ltau = 0.5 * std::log(t / (2.0 * kPi));
  double re[kCap] = {}, im[kCap] = {};
  for (std::uint64_t n = 1; n <= N; ++n) {
    double a = rsqrt_[n] * cs[n - 1], b = rsqrt_[n] * sn[n - 1];
    re[0] += a;
    im[0] += b;
    const double L = ltau - logn_[n].hi;
    for (int j = 1; j <= kmax; ++j) {
      a *= L;
      b *= L;
      re[j] += a;
      im[j] += b;
    }
  }
  for (int j = 0; j <= kmax; ++j) out[j] = 2.0 * (ipow(j) * cd(re[j], im[j])).real();
}

std::uint64_t afe_length_pointwise(double t) {
  return static_cast<std::uint64_t>(std::floor(std::sqrt(t / (2.0 * kPi))));
}

ZEvaluation Z_afe(double t, int k, const AfeParams& params, const PrecisionConfig& prec) {
  prec.validate();
  params.validate();
  const WindowSpec& w = params.window;
  require(k >= 0, "order must be >= 0");
  const double lim = (4.0 * k + 3.0) / (4.0 * (k + 1.0));
  if (!(w.a < lim))
    fail(ErrorKind::validation, "window exponent a = " + std::to_string(w.a) +
                                    " violates the AFE range a < (4k+3)/(4(k+1))");
  const double slack = 1e-9 * w.T;
  require(t >= w.T - slack && t <= w.T + w.H + slack, "AFE point outside [T, T+H]");
  const auto N = static_cast<std::uint64_t>(std::floor(params.tau0));
  require(N >= 1, "AFE needs tau0 >= 1");
  AfeKernel kernel(N);
  std::vector<double> out(k + 1);
  kernel.eval(t, N, k, out.data());
  ZEvaluation e;
  e.t = t;
  e.k = k;
  e.value = out[k];
  e.method = ZMethod::afe;
  e.est_error = afe_error_budget(k, w);
  return e;
}

cd Zk_meromorphic(ComplexPoint s, int k, const PrecisionConfig& prec) {
  const cd w = sf::omega_jet(s.s(), 0).value();
  return w * eta_k(s, k, prec) / (2.0 * ipow(k));
}

double hall_identity_residual(double t, const PrecisionConfig& prec, HallDerivative how) {
  require(t >= 2.0, "Hall identity check needs t >= 2");
  auto Zval = [&](double u) { return Z_leibniz_complex(u, 0, prec)[0].real(); };
  const double Z = Zval(t);
  double Zp;
  if (how == HallDerivative::finite_difference) {
    // eighth-order central stencil
    constexpr double h = 5e-3;
    constexpr double c[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) acc += c[i] * (Zval(t + (i + 1) * h) - Zval(t - (i + 1) * h));
    Zp = acc / h;
  } else {
    Zp = Z_eta_complex(t, 1, prec)[1].real();
  }
  const auto th = sf::theta_derivatives(t, 1);
  const cd zp = sf::zeta_jet(on_line(t), 1, prec).d[1];
  const cd rhs = unit_phase_neg(th[0]) * (Zp - cd(0.0, static_cast<double>(th[1])) * Z);
  return std::abs(cd(0.0, 1.0) * zp - rhs);
}

PropositionCheck zeta_deriv_from_Z(double t, int n, const PrecisionConfig& prec, bool grouped) {
  require(t >= 10.0, "proposition check needs t >= 10");
  require(n >= 2, "proposition check needs n >= 2");
  const auto Z = Z_exact_all(t, n, prec);
  const double ltau = 0.5 * std::log(t / (2.0 * kPi));
  const cd L(0.0, -ltau);
  auto Lp = [&](int e) { return std::pow(L, e); };
  cd acc = 0.0;
  for (int j = 0; j <= n - 1; ++j) {
    const double c = binomial(n - 1, j);
    if (grouped)
      acc += c * Lp(n - 1 - j) * (Z[j + 1].value + L * Z[j].value);
    else
      acc += c * (Lp(n - 1 - j) * Z[j + 1].value + Lp(n - j) * Z[j].value);
  }
  PropositionCheck r;
  r.rhs = unit_phase_neg(sf::theta(t)) * acc;
  r.lhs = ipow(n) * sf::zeta_deriv(on_line(t), n, prec);
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

}  // namespace zdl::hardy
