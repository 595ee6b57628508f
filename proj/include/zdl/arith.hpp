#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace zdl::nt {

inline constexpr std::uint64_t kDefaultTermBudget = 100'000'000ULL;

struct FactoredInteger {
  std::uint64_t n = 1;
  std::vector<std::pair<std::uint64_t, int>> prime_factors;  // increasing primes, exponents >= 1

  static FactoredInteger of(std::uint64_t n);
  bool squarefree() const;
  // throws validation error if the factorisation is inconsistent
  void validate() const;
};

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// prod_{p | d} (1 - p^{-s})
std::complex<double> f_factor(const FactoredInteger& d, std::complex<double> s);
double f_factor(const FactoredInteger& d, double s);

struct BoundCheck {
  double value = 0.0;
  double scale = 0.0;  // the comparison scale of the lemma bound
};

// sum_{p | n} log^k p / p, with scale (log log n)^k
BoundCheck prime_log_sum(const FactoredInteger& n, int k);

// F_q(n) = sum_{d | n} mu(d)/d log^q d, with scale f(n,1) (log log n)^q
BoundCheck moebius_log_divisor_sum(const FactoredInteger& n, int q);

struct SumWithPrediction {
  double exact = 0.0;
  double predicted = 0.0;
  std::uint64_t terms = 0;
};

// s_x(k) = sum_{n<=x, (n,d)=1} mu(n)/n (log(x/n))^k
SumWithPrediction coprime_mobius_log_sum(double x, int k, const FactoredInteger& d,
                                         std::uint64_t budget = kDefaultTermBudget);

// sum_{n<=x} log^k n / n with prediction log^{k+1}x/(k+1) + (-1)^k k! gamma'_k
SumWithPrediction log_power_harmonic_sum(double x, int k,
                                         std::uint64_t budget = kDefaultTermBudget);

// sum_{n<=x} mu^2(n)/phi(n) Q(log(x/n)/log x), Q(u) = sum Q[i] u^i
SumWithPrediction squarefree_phi_weighted_sum(double x, const std::vector<double>& Q,
                                              std::uint64_t budget = kDefaultTermBudget);

long long alternating_binomial_delta(int r, int n);
long long alternating_binomial_delta_closed(int r, int n);

// Visits n = 1..N in increasing order with (mu(n), phi(n)); segmented sieve.
void for_each_mu_phi(std::uint64_t N,
                     const std::function<void(std::uint64_t, int, std::uint64_t)>& visit);

// Dense mobius table for 0..N (entry 0 unused).
std::vector<signed char> mobius_table(std::uint64_t N);

std::vector<std::uint64_t> primes_up_to(std::uint64_t N);

}  // namespace zdl::nt
