#include "zdl/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zdl/errors.hpp"
#include "zdl/numeric.hpp"
#include "zdl/stieltjes.hpp"

namespace zdl::nt {

FactoredInteger FactoredInteger::of(std::uint64_t n) {
  require(n >= 1, "factorisation needs n >= 1");
  FactoredInteger f;
  f.n = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.prime_factors.emplace_back(p, e);
  }
  if (m > 1) f.prime_factors.emplace_back(m, 1);
  return f;
}

bool FactoredInteger::squarefree() const {
  return std::all_of(prime_factors.begin(), prime_factors.end(),
                     [](const auto& pe) { return pe.second == 1; });
}

void FactoredInteger::validate() const {
  std::uint64_t prod = 1;
  std::uint64_t last = 1;
  for (const auto& [p, e] : prime_factors) {
    require(p > last, "prime factors must be strictly increasing");
    require(e >= 1, "exponents must be >= 1");
    for (int i = 0; i < e; ++i) prod *= p;
    last = p;
  }
  require(prod == n, "factorisation does not multiply back to n");
}

int mobius(std::uint64_t n) {
  const auto f = FactoredInteger::of(n);
  if (!f.squarefree()) return 0;
  return (f.prime_factors.size() % 2) ? -1 : 1;
}

std::uint64_t euler_phi(std::uint64_t n) {
  const auto f = FactoredInteger::of(n);
  std::uint64_t r = n;
  for (const auto& pe : f.prime_factors) r = r / pe.first * (pe.first - 1);
  return r;
}

std::complex<double> f_factor(const FactoredInteger& d, std::complex<double> s) {
  std::complex<double> r = 1.0;
  for (const auto& pe : d.prime_factors)
    r *= 1.0 - std::exp(-s * std::log(static_cast<double>(pe.first)));
  return r;
}

double f_factor(const FactoredInteger& d, double s) {
  double r = 1.0;
  for (const auto& pe : d.prime_factors) r *= 1.0 - std::pow(static_cast<double>(pe.first), -s);
  return r;
}

BoundCheck prime_log_sum(const FactoredInteger& n, int k) {
  require(k >= 1, "prime_log_sum needs k >= 1");
  require(n.n >= 2, "prime_log_sum needs n >= 2");
  Compensated acc;
  for (const auto& pe : n.prime_factors) {
    const double p = static_cast<double>(pe.first);
    acc.add(std::pow(std::log(p), k) / p);
  }
  const double ll = n.n >= 3 ? std::log(std::log(static_cast<double>(n.n))) : 0.0;
  return {acc.value(), std::pow(std::max(ll, 0.0), k)};
}

BoundCheck moebius_log_divisor_sum(const FactoredInteger& n, int q) {
  require(q >= 0, "moebius_log_divisor_sum needs q >= 0");
  const auto& pf = n.prime_factors;
  const std::size_t r = pf.size();
  require(r < 40, "too many prime factors");
  Compensated acc;
  // squarefree divisors only: mu vanishes elsewhere
  for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
    double d = 1.0;
    double logd = 0.0;
    int sign = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (1ULL << i)) {
        d *= static_cast<double>(pf[i].first);
        logd += std::log(static_cast<double>(pf[i].first));
        sign = -sign;
      }
    }
    const double lq = q == 0 ? 1.0 : std::pow(logd, q);
    acc.add(sign * lq / d);
  }
  const double ll = n.n >= 3 ? std::max(std::log(std::log(static_cast<double>(n.n))), 0.0) : 0.0;
  return {acc.value(), f_factor(n, 1.0) * std::pow(ll, q)};
}

static std::uint64_t checked_floor(double x, std::uint64_t budget) {
  require(std::isfinite(x) && x >= 1.0, "summation limit must be finite and >= 1");
  const double fl = std::floor(x);
  if (fl > static_cast<double>(budget))
    fail(ErrorKind::budget, "direct summation to " + std::to_string(fl) + " exceeds budget " +
                                std::to_string(budget));
  return static_cast<std::uint64_t>(fl);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t N) {
  std::vector<bool> comp(N + 1, false);
  std::vector<std::uint64_t> ps;
  for (std::uint64_t i = 2; i <= N; ++i) {
    if (comp[i]) continue;
    ps.push_back(i);
    for (std::uint64_t j = i * i; j <= N; j += i) comp[j] = true;
  }
  return ps;
}

void for_each_mu_phi(std::uint64_t N,
                     const std::function<void(std::uint64_t, int, std::uint64_t)>& visit) {
  if (N == 0) return;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(N))) + 1;
  const auto ps = primes_up_to(root);
  constexpr std::uint64_t kBlock = 1ULL << 18;
  std::vector<std::uint64_t> rem(kBlock), phi(kBlock);
  std::vector<int> mu(kBlock);
  for (std::uint64_t lo = 1; lo <= N; lo += kBlock) {
    const std::uint64_t hi = std::min(N, lo + kBlock - 1);
    const std::uint64_t len = hi - lo + 1;
    for (std::uint64_t i = 0; i < len; ++i) {
      rem[i] = lo + i;
      phi[i] = lo + i;
      mu[i] = 1;
    }
    for (std::uint64_t p : ps) {
      if (p > hi) break;
      std::uint64_t first = ((lo + p - 1) / p) * p;
      for (std::uint64_t m = first; m <= hi; m += p) {
        const std::uint64_t i = m - lo;
        int e = 0;
        while (rem[i] % p == 0) {
          rem[i] /= p;
          ++e;
        }
        phi[i] = phi[i] / p * (p - 1);
        mu[i] = e >= 2 ? 0 : -mu[i];
      }
    }
    for (std::uint64_t i = 0; i < len; ++i) {
      if (rem[i] > 1) {  // one prime factor above the sieve limit
        phi[i] = phi[i] / rem[i] * (rem[i] - 1);
        mu[i] = -mu[i];
      }
      visit(lo + i, mu[i], phi[i]);
    }
  }
}

std::vector<signed char> mobius_table(std::uint64_t N) {
  std::vector<signed char> mu(N + 1, 0);
  for_each_mu_phi(N, [&](std::uint64_t n, int m, std::uint64_t) { mu[n] = static_cast<signed char>(m); });
  return mu;
}

SumWithPrediction coprime_mobius_log_sum(double x, int k, const FactoredInteger& d,
                                         std::uint64_t budget) {
  require(x >= 2.0, "coprime_mobius_log_sum needs x >= 2");
  require(k >= 1, "coprime_mobius_log_sum needs k >= 1");
  const std::uint64_t N = checked_floor(x, budget);
  const long double lx = std::log(static_cast<long double>(x));
  Compensated acc;
  for_each_mu_phi(N, [&](std::uint64_t n, int m, std::uint64_t) {
    if (m == 0) return;
    for (const auto& pe : d.prime_factors)
      if (n % pe.first == 0) return;
    const long double l = lx - std::log(static_cast<long double>(n));
    acc.add(static_cast<double>(m * std::pow(l, k) / static_cast<long double>(n)));
  });
  const double fd = f_factor(d, 1.0);
  const double pred = k == 1 ? 1.0 / fd : k * std::pow(static_cast<double>(lx), k - 1) / fd;
  return {acc.value(), pred, N};
}

SumWithPrediction log_power_harmonic_sum(double x, int k, std::uint64_t budget) {
  require(x >= 1.0, "log_power_harmonic_sum needs x >= 1");
  require(k >= 0, "log_power_harmonic_sum needs k >= 0");
  const std::uint64_t N = checked_floor(x, budget);
  Compensated acc;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const long double l = std::log(static_cast<long double>(n));
    const long double term = (k == 0 ? 1.0L : std::pow(l, k)) / static_cast<long double>(n);
    acc.add(static_cast<double>(term));
  }
  const double lx = std::log(x);
  const double pred = std::pow(lx, k + 1) / (k + 1) + stieltjes_gamma(k);
  return {acc.value(), pred, N};
}

SumWithPrediction squarefree_phi_weighted_sum(double x, const std::vector<double>& Q,
                                              std::uint64_t budget) {
  require(x >= 2.0, "squarefree_phi_weighted_sum needs x >= 2");
  require(!Q.empty(), "polynomial Q must have at least one coefficient");
  const std::uint64_t N = checked_floor(x, budget);
  const double lx = std::log(x);
  Compensated acc;
  for_each_mu_phi(N, [&](std::uint64_t n, int m, std::uint64_t ph) {
    if (m == 0) return;
    const double u = std::log(x / static_cast<double>(n)) / lx;
    double q = 0.0;
    for (std::size_t i = Q.size(); i-- > 0;) q = q * u + Q[i];
    acc.add(q / static_cast<double>(ph));
  });
  double integral = 0.0;
  for (std::size_t i = 0; i < Q.size(); ++i) integral += Q[i] / static_cast<double>(i + 1);
  return {acc.value(), lx * integral, N};
}

long long alternating_binomial_delta(int r, int n) {
  require(r >= 0 && n >= 0, "delta_r(n) needs r, n >= 0");
  require(n <= 50, "delta_r(n) supports n <= 50");
  long long acc = 0;
  long long c = 1;  // C(n, j)
  for (int j = 0; j <= n; ++j) {
    acc += ((j % 2) ? -1 : 1) * c * (j + r);
    c = c * (n - j) / (j + 1);
  }
  return acc;
}

long long alternating_binomial_delta_closed(int r, int n) {
  if (n == 0) return r;
  if (n == 1) return -1;
  return 0;
}

}  // namespace zdl::nt
