#include "zdl/stieltjes.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "zdl/errors.hpp"
#include "zdl/jet.hpp"
#include "zdl/special.hpp"
#include "zdl/zeta.hpp"

namespace zdl::nt {

namespace {

long double factorial_l(int n) {
  long double r = 1.0L;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// gamma_k = sum_{n<=N} f(n) - log^{k+1}N/(k+1) - f(N)/2 - sum_j B_{2j}/(2j)! f^{(2j-1)}(N),
// f(x) = log^k x / x; the neglected remainder is far below double precision for N = 2000.
long double classical_gamma_em(int k) {
  constexpr int N = 2000;
  constexpr int P = 12;
  long double acc = 0.0L;
  for (int n = N; n >= 1; --n) {
    const long double l = std::log(static_cast<long double>(n));
    acc += (k == 0 ? 1.0L : std::pow(l, k)) / n;
  }
  const long double lN = std::log(static_cast<long double>(N));
  acc -= std::pow(lN, k + 1) / (k + 1);
  const std::size_t order = 2 * P;
  const Jet<long double> x = Jet<long double>::variable(order, static_cast<long double>(N));
  const Jet<long double> lx = x.log();
  const Jet<long double> f = (k == 0 ? Jet<long double>(order, 1.0L) : lx.pow(k)) * x.reciprocal();
  acc -= f.value() / 2.0L;
  for (int j = 1; j <= P; ++j) {
    // f^{(2j-1)}(N) = (2j-1)! c_{2j-1}
    const long double deriv = f[2 * j - 1] * factorial_l(2 * j - 1);
    acc -= sf::bernoulli_even(j) / factorial_l(2 * j) * deriv;
  }
  return acc;
}

}  // namespace

const StieltjesTable& stieltjes(int k) {
  require(k >= 0 && k <= kMaxStieltjesIndex, "Stieltjes index out of range");
  static std::array<StieltjesTable, kMaxStieltjesIndex + 1> table;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int i = 0; i <= kMaxStieltjesIndex; ++i) {
      const long double g = classical_gamma_em(i);
      const long double sign = (i % 2) ? -1.0L : 1.0L;
      table[i] = {i, static_cast<double>(sign * g / factorial_l(i)), "euler-maclaurin-tail"};
    }
  });
  return table[k];
}

double stieltjes_gamma(int k) {
  const long double sign = (k % 2) ? -1.0L : 1.0L;
  return static_cast<double>(sign * factorial_l(k) * stieltjes(k).gamma_k_prime);
}

StieltjesTable stieltjes_laurent_oracle(int k) {
  require(k >= 0 && k <= kMaxStieltjesIndex, "Stieltjes index out of range");
  // zeta(s) - 1/(s-1) = sum_n (-1)^n gamma_n (s-1)^n / n!, entire
  PrecisionConfig prec;
  prec.target_abs_tol = 1e-14;
  constexpr int M = 64;
  constexpr double r = 1.0;
  std::complex<long double> acc = 0.0L;
  for (int j = 0; j < M; ++j) {
    const double ph = 2.0 * kPi * (j + 0.5) / M;
    const cd u(r * std::cos(ph), r * std::sin(ph));
    const cd s = 1.0 + u;
    const cd g = sf::zeta_deriv(ComplexPoint::from(s), 0, prec) - 1.0 / u;
    const double back = -ph * k;
    acc += std::complex<long double>(g * cd(std::cos(back), std::sin(back)));
  }
  const long double ck = (acc.real()) / M / std::pow(static_cast<long double>(r), k);
  // c_k = (-1)^k gamma_k / k!  =>  gamma'_k = (-1)^k gamma_k / k! = c_k
  return {k, static_cast<double>(ck), "laurent-cauchy-circle"};
}

}  // namespace zdl::nt
