#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "zdl/arith.hpp"
#include "zdl/errors.hpp"
#include "zdl/stieltjes.hpp"

using namespace zdl;
using namespace zdl::nt;

namespace {

int mobius_trial(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

std::uint64_t phi_gcd(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t j = 1; j <= n; ++j)
    if (std::gcd(j, n) == 1) ++c;
  return c;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t j = 1; j <= n; ++j)
    if (n % j == 0) d.push_back(j);
  return d;
}

}  // namespace

TEST_CASE("mobius examples") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
}

TEST_CASE("euler_phi examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("mobius and phi agree with brute force up to 1e4") {
  int bad_mu = 0, bad_phi = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (mobius(n) != mobius_trial(n)) ++bad_mu;
    if (n <= 3000 && euler_phi(n) != phi_gcd(n)) ++bad_phi;
  }
  CHECK(bad_mu == 0);
  CHECK(bad_phi == 0);
  // the phi oracle is quadratic, so the upper range is spot-checked by the multiplicative formula
  for (std::uint64_t n = 3001; n <= 10000; ++n) {
    double prod = static_cast<double>(n);
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        prod *= 1.0 - 1.0 / static_cast<double>(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) prod *= 1.0 - 1.0 / static_cast<double>(m);
    if (static_cast<double>(euler_phi(n)) != std::round(prod)) ++bad_phi;
  }
  CHECK(bad_phi == 0);
}

TEST_CASE("mobius_table matches pointwise mobius") {
  const auto t = mobius_table(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) REQUIRE(t[n] == mobius(n));
}

TEST_CASE("f_factor examples") {
  const auto one = FactoredInteger::of(1);
  CHECK(std::abs(f_factor(one, std::complex<double>(0.3, 17.0)) - 1.0) == 0.0);
  CHECK(f_factor(FactoredInteger::of(2), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f_factor(FactoredInteger::of(6), 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("FactoredInteger") {
  const auto f = FactoredInteger::of(360);
  REQUIRE(f.prime_factors.size() == 3);
  CHECK(f.prime_factors[0] == std::pair<std::uint64_t, int>{2, 3});
  CHECK(f.prime_factors[1] == std::pair<std::uint64_t, int>{3, 2});
  CHECK(f.prime_factors[2] == std::pair<std::uint64_t, int>{5, 1});
  CHECK_FALSE(f.squarefree());
  CHECK(FactoredInteger::of(30).squarefree());
  FactoredInteger bad{12, {{2, 1}, {3, 1}}};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("prime_log_sum examples") {
  CHECK(prime_log_sum(FactoredInteger::of(2), 1).value == doctest::Approx(std::log(2.0) / 2).epsilon(1e-14));
  CHECK(prime_log_sum(FactoredInteger::of(6), 1).value == doctest::Approx(0.71278).epsilon(1e-5));
  double oracle = 0.0;
  for (double p : {2.0, 3.0, 5.0}) oracle += std::log(p) * std::log(p) / p;
  CHECK(prime_log_sum(FactoredInteger::of(30), 2).value == doctest::Approx(oracle).epsilon(1e-14));
  // repeated primes count once
  CHECK(prime_log_sum(FactoredInteger::of(12), 1).value ==
        doctest::Approx(prime_log_sum(FactoredInteger::of(6), 1).value).epsilon(1e-15));
}

TEST_CASE("moebius_log_divisor_sum examples") {
  CHECK(moebius_log_divisor_sum(FactoredInteger::of(6), 0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  for (int q = 1; q <= 4; ++q) CHECK(moebius_log_divisor_sum(FactoredInteger::of(1), q).value == 0.0);
  double oracle = 0.0;
  for (auto d : divisors(30)) {
    const double l = std::log(static_cast<double>(d));
    oracle += mobius_trial(d) / static_cast<double>(d) * l * l;
  }
  CHECK(moebius_log_divisor_sum(FactoredInteger::of(30), 2).value == doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("lemma bounds: fitted constants over random squarefree n") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> E(std::log(1e3), std::log(1e8));
  double c_prime = 0.0, c_div = 0.0;
  int samples = 0;
  while (samples < 400) {
    const auto n = static_cast<std::uint64_t>(std::exp(E(rng)));
    if (mobius(n) == 0) continue;
    ++samples;
    const auto f = FactoredInteger::of(n);
    for (int k = 1; k <= 3; ++k) {
      const auto b = prime_log_sum(f, k);
      c_prime = std::max(c_prime, b.value / b.scale);
      const auto m = moebius_log_divisor_sum(f, k);
      c_div = std::max(c_div, std::abs(m.value) / m.scale);
    }
  }
  CHECK(c_prime <= 10.0);
  CHECK(c_div <= 10.0);
}

TEST_CASE("coprime_mobius_log_sum examples") {
  const auto one = FactoredInteger::of(1);
  CHECK(coprime_mobius_log_sum(2.0, 1, one).exact == doctest::Approx(std::log(2.0)).epsilon(1e-15));

  // direct oracle at x = 1e6, k = 1: main term 1/f(1,1) = 1
  const double x = 1e6;
  const auto mu = mobius_table(1000000);
  double s = 0.0, c = 0.0;
  for (std::uint64_t n = 1; n <= 1000000; ++n) {
    if (!mu[n]) continue;
    const double y = mu[n] / static_cast<double>(n) * std::log(x / static_cast<double>(n)) - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  const auto r = coprime_mobius_log_sum(x, 1, one);
  CHECK(r.exact == doctest::Approx(s).epsilon(1e-12));
  CHECK(r.predicted == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(r.exact - 1.0) < 0.01);

  const auto r3 = coprime_mobius_log_sum(1e5, 3, FactoredInteger::of(2));
  const double lx = std::log(1e5);
  CHECK(r3.predicted == doctest::Approx(6.0 * lx * lx).epsilon(1e-12));
  double o3 = 0.0;
  for (std::uint64_t n = 1; n <= 100000; n += 2) {
    if (!mu[n]) continue;
    const double l = std::log(1e5 / static_cast<double>(n));
    o3 += mu[n] / static_cast<double>(n) * l * l * l;
  }
  CHECK(r3.exact == doctest::Approx(o3).epsilon(1e-10));
  MESSAGE("x=1e5, k=3, d=2: exact / 6 log^2 x = " << r3.exact / r3.predicted);
}

TEST_CASE("coprime_mobius_log_sum relative error shrinks with x") {
  for (auto [k, d] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}, std::pair{1, 6}}) {
    const auto D = FactoredInteger::of(static_cast<std::uint64_t>(d));
    double prev = INFINITY;
    for (double x : {1e3, 1e4, 1e5, 1e6}) {
      const auto r = coprime_mobius_log_sum(x, k, D);
      const double rel = std::abs(r.exact - r.predicted) / std::abs(r.predicted);
      CHECK_MESSAGE(rel < prev, "k=" << k << " d=" << d << " x=" << x);
      prev = rel;
    }
  }
}

TEST_CASE("direct sums refuse to exceed their term budget") {
  CHECK_THROWS_AS(coprime_mobius_log_sum(1e6, 1, FactoredInteger::of(1), 1000), Error);
  try {
    log_power_harmonic_sum(1e6, 0, 1000);
    FAIL("no budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget);
  }
}

TEST_CASE("log_power_harmonic_sum examples") {
  CHECK(log_power_harmonic_sum(1.0, 0).exact == 1.0);

  // gamma'_0 oracle: H_N - log N - 1/(2N) + 1/(12 N^2)
  const double N = 1e6;
  double H = 0.0;
  for (int n = 1000000; n >= 1; --n) H += 1.0 / n;
  const double g0 = H - std::log(N) - 0.5 / N + 1.0 / (12.0 * N * N);
  CHECK(g0 == doctest::Approx(0.5772156649).epsilon(1e-10));
  CHECK(stieltjes(0).gamma_k_prime == doctest::Approx(g0).epsilon(1e-10));
  const auto r0 = log_power_harmonic_sum(1e6, 0);
  CHECK(std::abs(r0.exact - r0.predicted) <= 1.0 / 1e6);

  // gamma'_2 oracle: sum log^2 n / n - log^3 N / 3 - log^2 N / (2N)
  double S = 0.0;
  for (int n = 1000000; n >= 2; --n) {
    const double l = std::log(static_cast<double>(n));
    S += l * l / n;
  }
  const double lN = std::log(N);
  const double g2 = (S - lN * lN * lN / 3.0 - lN * lN / (2.0 * N)) / 2.0;
  CHECK(stieltjes(2).gamma_k_prime == doctest::Approx(g2).epsilon(1e-7));
  const double x = 1e5, lx = std::log(x);
  const auto r2 = log_power_harmonic_sum(x, 2);
  CHECK(r2.predicted == doctest::Approx(lx * lx * lx / 3.0 + 2.0 * g2).epsilon(1e-12));
  CHECK(std::abs(r2.exact - r2.predicted) <= lx * lx / x);
}

TEST_CASE("Stieltjes table agrees with the Laurent-coefficient route") {
  for (int k = 0; k <= 6; ++k) {
    const double a = stieltjes(k).gamma_k_prime;
    const double b = stieltjes_laurent_oracle(k).gamma_k_prime;
    CHECK_MESSAGE(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)), "k=" << k);
  }
  CHECK(stieltjes_gamma(1) == doctest::Approx(-0.0728158454836767).epsilon(1e-10));
  CHECK(stieltjes_gamma(2) == doctest::Approx(-0.00969036319287232).epsilon(1e-9));
}

TEST_CASE("squarefree_phi_weighted_sum examples") {
  CHECK(squarefree_phi_weighted_sum(2.0, {1.0}).exact == doctest::Approx(2.0).epsilon(1e-15));

  // trial-division oracle for Q(u) = u^2 at x = 1e5
  const double x = 1e5, lx = std::log(x);
  double s = 0.0;
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    if (mobius_trial(n) == 0) continue;
    std::uint64_t m = n, phi = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        phi *= p - 1;
        m /= p;
      }
    if (m > 1) phi *= m - 1;
    const double u = std::log(x / static_cast<double>(n)) / lx;
    s += u * u / static_cast<double>(phi);
  }
  const auto r = squarefree_phi_weighted_sum(x, {0.0, 0.0, 1.0});
  CHECK(r.exact == doctest::Approx(s).epsilon(1e-11));
  CHECK(r.predicted == doctest::Approx(lx / 3.0).epsilon(1e-12));
  MESSAGE("x=1e5, Q=u^2: exact / (log x / 3) = " << r.exact / r.predicted);
}

TEST_CASE("squarefree_phi_weighted_sum ratio tends to 1") {
  for (const auto& Q : {std::vector<double>{1.0}, std::vector<double>{0.0, 0.0, 1.0}}) {
    double prev = INFINITY;
    for (double x : {1e3, 1e4, 1e5, 1e6}) {
      const auto r = squarefree_phi_weighted_sum(x, Q);
      const double dev = std::abs(r.exact / r.predicted - 1.0);
      CHECK(dev < prev);
      prev = dev;
    }
  }
}

TEST_CASE("alternating_binomial_delta") {
  CHECK(alternating_binomial_delta(5, 0) == 5);
  CHECK(alternating_binomial_delta(3, 1) == -1);
  CHECK(alternating_binomial_delta(2, 7) == 0);
  for (int r = 0; r <= 20; ++r)
    for (int n = 0; n <= 20; ++n) REQUIRE(alternating_binomial_delta(r, n) == alternating_binomial_delta_closed(r, n));
}
