#include "zdl/main_terms.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <vector>

#include "zdl/errors.hpp"
#include "zdl/numeric.hpp"
#include "zdl/quadrature.hpp"
#include "zdl/stieltjes.hpp"

namespace zdl::ms {

using mollifier::DirichletPolynomial;

double vartheta(int k1, int k2) {
  if ((k1 + k2) % 2) return 0.0;
  return ((k2 - k1) / 2) % 2 ? -1.0 : 1.0;
}

namespace {

void check_pairs(const DirichletPolynomial& p) {
  const double n = static_cast<double>(p.size());
  if (n * n > kMaxPairs)
    fail(ErrorKind::budget, "pair sum over " + std::to_string(p.size()) + " coefficients exceeds budget");
}

const quad::GaussLegendre& rule_for_degree(int deg) {
  static std::mutex mu;
  static std::vector<quad::GaussLegendre> cache;
  const int n = deg / 2 + 1;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() < static_cast<std::size_t>(n + 1)) cache.resize(n + 1);
  if (cache[n].x.empty()) cache[n] = quad::GaussLegendre::make(n);
  return cache[n];
}

// sum over pairs of b_l conj(b_q) (l,q)/(lq) * f(L, D)
template <class F>
double pair_sum(const DirichletPolynomial& p, double T, F&& f) {
  check_pairs(p);
  const std::size_t m = p.size();
  std::vector<double> logn(m);
  for (std::size_t i = 0; i < m; ++i) logn[i] = std::log(static_cast<double>(p.n[i]));
  const double logT2pi = std::log(T / (2.0 * kPi));
  Compensated acc;
  for (std::size_t i = 0; i < m; ++i) {
    CompensatedComplex row;
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t g = std::gcd(p.n[i], p.n[j]);
      const double lg = std::log(static_cast<double>(g));
      const double L = logT2pi + 2.0 * lg - logn[i] - logn[j];
      const double D = logn[j] - logn[i];  // log(q/l) with l = n_i, q = n_j
      const double w = static_cast<double>(g) / (static_cast<double>(p.n[i]) * static_cast<double>(p.n[j]));
      row.add(p.b[i] * std::conj(p.b[j]) * (w * f(L, D)));
    }
    acc.add(row.value().real());
  }
  return acc.value();
}

}  // namespace

double pair_thm0_inner(double L, double D, int k) {
  double s = 0.0;
  for (int j = 0; j <= k; ++j)
    s += binomial(k, j) * std::pow(L, 2 * j) * std::pow(-D * D, k - j) / (2 * j + 1);
  return s;
}

double pair_F(double L, double D, int k1, int k2) {
  const auto& g = rule_for_degree(k1 + k2);
  double s = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const double x = 0.5 * (g.x[i] + 1.0);
    s += 0.5 * g.w[i] * std::pow(x * L - D, k1) * std::pow(x * L + D, k2);
  }
  return L * s;
}

double pair_G(double D, int k1, int k2) {
  if (k1 == k2) return 0.0;
  const auto& g = rule_for_degree(k1 + k2);
  double s = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const double y = 0.5 * (g.x[i] + 1.0);
    s += 0.5 * g.w[i] *
         (std::pow(y + 1.0, k1) * std::pow(1.0 - y, k2) - std::pow(1.0 - y, k1) * std::pow(y + 1.0, k2));
  }
  return std::pow(0.5 * D, k1) * std::pow(-0.5 * D, k2 + 1) * s;
}

double main_term_thm0(const DirichletPolynomial& p, const WindowSpec& w, int k) {
  require(k >= 0, "order must be >= 0");
  w.validate();
  const double s = pair_sum(p, w.T, [k](double L, double D) { return L * pair_thm0_inner(L, D, k); });
  return w.H / std::pow(4.0, k) * s;
}

double main_term_thm4(const DirichletPolynomial& p, const WindowSpec& w, int k1, int k2) {
  require(k1 >= 0 && k2 >= 0, "orders must be >= 0");
  w.validate();
  const double v = vartheta(k1, k2);
  if (v == 0.0) return 0.0;
  const double s = pair_sum(p, w.T, [k1, k2](double L, double D) {
    return pair_F(L, D, k1, k2) + pair_G(D, k1, k2);
  });
  return w.H * v / std::pow(2.0, k1 + k2) * s;
}

double moment_prod_hardy_constant(int k1, int k2, double theta) {
  require(theta > 0.0, "theta must be positive");
  double c = 1.0 + 1.0 / ((k1 + k2 + 1) * theta);
  if (k1 > 0 && k2 > 0) c += 4.0 * k1 * k2 * theta / (3.0 * (k1 + k2 - 1));
  return vartheta(k1, k2) / std::pow(2.0, k1 + k2) * c;
}

double moment_prod_hardy(const WindowSpec& w, int k1, int k2) {
  return moment_prod_hardy_constant(k1, k2, w.theta) * w.H * std::pow(std::log(w.T / (2.0 * kPi)), k1 + k2);
}

double P_k_theta(int k, double theta) {
  require(k >= 0, "order must be >= 0");
  if (!(theta > 0.0 && theta < theta_cap(k)))
    fail(ErrorKind::validation, "theta outside (0, (2k+1)/(4(k+1)))");
  const double q = std::pow(4.0, k);
  double v = 1.0 / (q * (2 * k + 1) * theta) + 1.0 / q;
  if (k > 0) v += k * k * theta / (3.0 * (2 * k - 1) * std::pow(4.0, k - 1));
  return v;
}

double zeta_main_constant_thm5(int m, int n, double theta) {
  require(m >= 1 && n >= 1, "orders must be >= 1");
  const int k = std::min(m, n);
  if (!(theta > 0.0 && theta < theta_cap(k)))
    fail(ErrorKind::validation, "theta outside (0, (2k+1)/(4(k+1)))");
  return 0.5 + 1.0 / (theta * (m + n + 1)) + m * n * theta / (3.0 * (m + n - 1));
}

double zeta_main_term_thm5(const WindowSpec& w, int m, int n) {
  const double sgn = (m + n) % 2 ? -1.0 : 1.0;
  return sgn * zeta_main_constant_thm5(m, n, w.theta) * w.H * std::pow(std::log(w.T / (2.0 * kPi)), m + n);
}

double log_harmonic(double y, int r) {
  require(r >= 0 && r <= nt::kMaxStieltjesIndex, "log power out of range");
  if (y < 1.0) return 0.0;
  constexpr int kR = nt::kMaxStieltjesIndex + 1;
  static std::once_flag once[kR];
  static std::vector<double> table[kR];
  std::call_once(once[r], [r] {
    auto& tab = table[r];
    tab.assign(kHarmonicTable + 1, 0.0);
    Compensated acc;
    for (std::size_t n = 1; n <= kHarmonicTable; ++n) {
      const double l = std::log(static_cast<double>(n));
      acc.add(std::pow(l, r) / static_cast<double>(n));
      tab[n] = acc.value();
    }
  });
  const double fy = std::floor(y);
  if (fy <= static_cast<double>(kHarmonicTable)) return table[r][static_cast<std::size_t>(fy)];
  // Euler-Maclaurin with the sawtooth term
  const double l = std::log(y);
  const double frac = y - fy;
  return std::pow(l, r + 1) / (r + 1) + nt::stieltjes_gamma(r) - (frac - 0.5) * std::pow(l, r) / y;
}

double prop_L12_J(int r1, int r2, const DirichletPolynomial& p, double tau0, InnerLimit lim) {
  require(r1 >= 0 && r2 >= 0, "indices must be >= 0");
  require(tau0 >= 1.0, "tau0 must be >= 1");
  check_pairs(p);
  const std::size_t m = p.size();
  std::vector<double> logn(m);
  for (std::size_t i = 0; i < m; ++i) logn[i] = std::log(static_cast<double>(p.n[i]));
  Compensated acc;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto l = p.n[i], q = p.n[j];
      const std::uint64_t g = std::gcd(l, q);
      const double lg = std::log(static_cast<double>(g));
      const double a = logn[i] - lg, b = logn[j] - lg;  // log(l/(l,q)), log(q/(l,q))
      const double y = tau0 * static_cast<double>(g) / static_cast<double>(lim == InnerLimit::over_q ? q : l);
      double inner = 0.0;
      for (int m1 = 0; m1 <= r1; ++m1)
        for (int m2 = 0; m2 <= r2; ++m2)
          inner += binomial(r1, m1) * binomial(r2, m2) * std::pow(a, m1) * std::pow(b, m2) *
                   log_harmonic(y, r1 + r2 - m1 - m2);
      const double wgt = static_cast<double>(g) / (static_cast<double>(l) * static_cast<double>(q));
      acc.add((p.b[i] * std::conj(p.b[j])).real() * wgt * inner);
    }
  }
  return acc.value();
}

double prop_L12_J_mollifier(int r1, int r2, double theta, double tau0, InnerLimit lim) {
  require(theta > 0.0, "theta must be positive");
  const double L = std::log(tau0);
  // the two inner-limit variants differ by swapping the roles of r1 and r2 in the linear term
  const int rl = lim == InnerLimit::over_q ? r1 : r2;
  if (r1 == 0 && r2 == 0) return 1.0 / (2.0 * theta) + 0.5;
  if (r1 + r2 == 1) {
    if (rl == 1) return (1.0 / (4.0 * theta) + 2.0 * theta / 3.0) * L;
    return L / (4.0 * theta);
  }
  double c = 1.0 / (2.0 * theta * (r1 + r2 + 1)) - 2.0 * theta * rl / 3.0;
  if (r1 > 0 && r2 > 0) c += 2.0 * theta * r1 * r2 / (3.0 * (r1 + r2 - 1));
  return c * std::pow(L, r1 + r2);
}

double thm0_error_scale(const WindowSpec& w, int k, double epsilon) {
  const double lT = std::log(w.T);
  const double split = (4.0 * k + 3.0) / (4.0 * (k + 1.0));
  if (w.a < split)
    return w.H * std::pow(w.H / w.T, k) * std::pow(w.T, 0.25) * std::pow(w.X, epsilon) * std::pow(lT, k + 3) +
           std::pow(w.X, 1.0 + 2.0 * epsilon) * std::sqrt(w.T) * std::pow(lT, 2 * k + 3);
  return w.H * std::pow(w.T, -(2.0 * k + 1.0) / (4.0 * (k + 1.0)) + epsilon) * w.X * std::pow(lT, 2 * k + 3);
}

double mollified_error_scale(const WindowSpec& w, int k1, int k2) {
  const double lT = std::log(w.T);
  return w.H * std::pow(std::log(lT), 3) / lT * std::pow(std::log(w.T / (2.0 * kPi)), k1 + k2);
}

}  // namespace zdl::ms
