#include "zdl/special.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "zdl/errors.hpp"

namespace zdl::sf {

namespace {

constexpr int kMaxBernoulli = 40;

// zeta(s) for integer s >= 4 with an Euler-Maclaurin tail; long double throughout
long double zeta_even_integer(int s) {
  constexpr int M = 100;
  long double acc = 0.0L;
  for (int n = M - 1; n >= 1; --n) acc += std::pow(static_cast<long double>(n), -s);
  const long double m = M;
  const long double ms = std::pow(m, -s);
  long double tail = m * ms / (s - 1) + ms / 2 + s * ms / (12 * m);
  tail -= static_cast<long double>(s) * (s + 1) * (s + 2) * ms / (720 * m * m * m);
  tail += static_cast<long double>(s) * (s + 1) * (s + 2) * (s + 3) * (s + 4) * ms /
          (30240 * m * m * m * m * m);
  return acc + tail;
}

const std::array<long double, kMaxBernoulli + 1>& bernoulli_table() {
  static std::array<long double, kMaxBernoulli + 1> table{};
  static std::once_flag once;
  std::call_once(once, [] {
    table[0] = 1.0L;
    table[1] = 1.0L / 6.0L;
    long double fact = 2.0L;  // (2j)!
    long double twopi_pow = kTwoPiL * kTwoPiL;
    for (int j = 2; j <= kMaxBernoulli; ++j) {
      fact *= static_cast<long double>(2 * j - 1) * (2 * j);
      twopi_pow *= kTwoPiL * kTwoPiL;
      const long double sign = (j % 2) ? 1.0L : -1.0L;
      table[j] = sign * 2.0L * fact * zeta_even_integer(2 * j) / twopi_pow;
    }
  });
  return table;
}

void check_pole(cld z) {
  if (z.real() <= 0.5L) {
    const long double nearest = std::round(z.real());
    if (nearest <= 0.0L && std::abs(z - cld(nearest, 0.0L)) < 1e-14L)
      fail(ErrorKind::pole, "Gamma pole at non-positive integer");
  }
}

bool needs_shift(cld z) {
  return std::abs(z) < 20.0L || (z.real() < 0.0L && std::abs(z.imag()) < -2.0L * z.real());
}

}  // namespace

long double bernoulli_even(int j) {
  require(j >= 0 && j <= kMaxBernoulli, "bernoulli_even index out of range");
  return bernoulli_table()[j];
}

cld loggamma(cld z) {
  check_pole(z);
  cld shift_sum = 0.0L;
  while (needs_shift(z)) {
    shift_sum += std::log(z);
    z += 1.0L;
  }
  const cld inv = 1.0L / z;
  const cld inv2 = inv * inv;
  cld series = 0.0L;
  cld p = inv;
  for (int j = 1; j <= 16; ++j) {
    const cld term = bernoulli_even(j) / static_cast<long double>(2 * j * (2 * j - 1)) * p;
    series += term;
    if (std::abs(term) < 1e-22L * std::abs(series)) break;
    p *= inv2;
  }
  const cld r = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(kTwoPiL) + series;
  return r - shift_sum;
}

cld polygamma(int m, cld z) {
  require(m >= 0, "polygamma order must be >= 0");
  check_pole(z);
  long double mfact = 1.0L;
  for (int i = 2; i <= m; ++i) mfact *= i;
  const long double sign_m = (m % 2) ? -1.0L : 1.0L;  // (-1)^m
  cld correction = 0.0L;
  // psi^{(m)}(z) = psi^{(m)}(z+1) - (-1)^m m! / z^{m+1}
  while (needs_shift(z)) {
    correction -= sign_m * mfact / std::pow(z, m + 1);
    z += 1.0L;
  }
  const cld inv = 1.0L / z;
  const cld inv2 = inv * inv;
  cld r;
  if (m == 0) {
    r = std::log(z) - 0.5L * inv;
    cld p = inv2;
    for (int j = 1; j <= 16; ++j) {
      const cld term = bernoulli_even(j) / static_cast<long double>(2 * j) * p;
      r -= term;
      if (std::abs(term) < 1e-22L * std::abs(r)) break;
      p *= inv2;
    }
  } else {
    // (-1)^{m+1} [ (m-1)!/z^m + m!/(2 z^{m+1}) + sum_j B_{2j} (2j+m-1)!/((2j)! z^{2j+m}) ]
    const long double mm1 = mfact / m;
    const cld zm = std::pow(inv, m);
    cld s = mm1 * zm + 0.5L * mfact * zm * inv;
    cld p = zm * inv2;
    long double ratio = mfact;  // (2j+m-1)!/(2j)! built incrementally
    for (int j = 1; j <= 16; ++j) {
      // (2j+m-1)!/(2j)! from (2j+m-3)!/(2j-2)!
      if (j == 1)
        ratio = [&] {
          long double r1 = 1.0L;
          for (int i = 3; i <= m + 1; ++i) r1 *= i;  // (m+1)!/2
          return r1;
        }();
      else
        ratio *= static_cast<long double>(2 * j + m - 2) * (2 * j + m - 1) /
                 (static_cast<long double>(2 * j - 1) * (2 * j));
      const cld term = bernoulli_even(j) * ratio * p;
      s += term;
      if (std::abs(term) < 1e-22L * std::abs(s)) break;
      p *= inv2;
    }
    r = ((m % 2) ? 1.0L : -1.0L) * s;
  }
  return r + correction;
}

cld log_chi(cd s) {
  const cld sl(s.real(), s.imag());
  return (sl - 0.5L) * std::log(kPiL) + loggamma((1.0L - sl) / 2.0L) - loggamma(sl / 2.0L);
}

cd chi(ComplexPoint s, const PrecisionConfig&) {
  const cld l = log_chi(s.s());
  const long double ph = reduce_angle(l.imag());
  const long double mod = std::exp(l.real());
  return {static_cast<double>(mod * std::cos(ph)), static_cast<double>(mod * std::sin(ph))};
}

long double theta(double t) {
  require(t >= 0.0, "theta needs t >= 0");
  const cld z(0.25L, static_cast<long double>(t) / 2.0L);
  return loggamma(z).imag() - static_cast<long double>(t) / 2.0L * std::log(kPiL);
}

std::vector<long double> theta_derivatives(double t, int order) {
  require(order >= 0, "theta derivative order must be >= 0");
  std::vector<long double> d(order + 1);
  d[0] = theta(t);
  const cld z(0.25L, static_cast<long double>(t) / 2.0L);
  if (order >= 1) d[1] = 0.5L * polygamma(0, z).real() - 0.5L * std::log(kPiL);
  cld ih(0.0L, 0.5L);
  cld pw = ih;
  for (int j = 2; j <= order; ++j) {
    pw *= ih;
    d[j] = (pw * polygamma(j - 1, z)).imag();
  }
  return d;
}

double theta_prime(double t) { return static_cast<double>(theta_derivatives(t, 1)[1]); }

Jet<cd> omega_jet(cd s, std::size_t order) {
  const cld sl(s.real(), s.imag());
  const cld a = (1.0L - sl) / 2.0L;
  const cld b = sl / 2.0L;
  Jet<cd> j(order);
  long double fact = 1.0L;
  for (std::size_t m = 0; m <= order; ++m) {
    if (m >= 1) fact *= m;
    const long double ha = std::pow(-0.5L, static_cast<int>(m));
    const long double hb = std::pow(0.5L, static_cast<int>(m));
    cld v = -0.5L * (ha * polygamma(static_cast<int>(m), a) + hb * polygamma(static_cast<int>(m), b));
    if (m == 0) v += std::log(kPiL);
    v /= fact;
    j[m] = cd(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  return j;
}

cd omega(ComplexPoint s, const PrecisionConfig&) { return omega_jet(s.s(), 0).value(); }

Jet<cd> lambda_jet(cd s, std::size_t order) {
  const Jet<cd> w = omega_jet(s, order + 1);
  const Jet<cd> wd = w.derivative();
  const Jet<cd> w0 = w.truncated(order);
  if (std::abs(w0.value()) < 1e-300) fail(ErrorKind::division, "omega vanishes");
  return wd / w0 - w0 * cd(0.5, 0.0);
}

std::vector<cd> lambda_all(cd s, int kmax) {
  require(kmax >= 1, "lambda index must be >= 1");
  std::vector<cd> out(kmax + 1, cd(0.0, 0.0));
  out[1] = 1.0;
  if (kmax == 1) return out;
  const std::size_t K = static_cast<std::size_t>(kmax);
  const Jet<cd> L = lambda_jet(s, K);
  Jet<cd> cur(K, cd(1.0, 0.0));  // lambda_1
  bool constant = true;
  for (int k = 1; k < kmax; ++k) {
    Jet<cd> next;
    if (constant) {
      next = L.truncated(cur.order());
      constant = false;
    } else {
      const Jet<cd> d = cur.derivative();
      next = L.truncated(d.order()) * cur.truncated(d.order()) + d;
    }
    cur = next;
    out[k + 1] = cur.value();
  }
  return out;
}

cd lambda_k(ComplexPoint s, int k, const PrecisionConfig&) {
  require(k >= 1, "lambda_k needs k >= 1");
  return lambda_all(s.s(), k)[k];
}

std::vector<cd> cauchy_derivatives(const std::function<cd(cd)>& f, cd s, double radius, int nodes,
                                   int order) {
  require(radius > 0.0 && nodes >= 4 && order >= 0, "bad Cauchy circle parameters");
  std::vector<cd> vals(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double ph = 2.0 * kPi * j / nodes;
    vals[j] = f(s + radius * cd(std::cos(ph), std::sin(ph)));
  }
  std::vector<cd> out(order + 1);
  double fact = 1.0;
  for (int m = 0; m <= order; ++m) {
    if (m >= 1) fact *= m;
    cd acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
      const double ph = -2.0 * kPi * static_cast<double>(j) * m / nodes;
      acc += vals[j] * cd(std::cos(ph), std::sin(ph));
    }
    out[m] = acc * fact / (nodes * std::pow(radius, m));
  }
  return out;
}

namespace {

cd lambda_cauchy_rec(cd s, int k, double r) {
  if (k == 1) return 1.0;
  auto omega_f = [](cd z) { return omega_jet(z, 0).value(); };
  if (k == 2) {
    const auto w = cauchy_derivatives(omega_f, s, r, 32, 1);
    return w[1] / w[0] - 0.5 * w[0];
  }
  const cd lam = lambda_cauchy_rec(s, 2, r);
  const cd lk = lambda_cauchy_rec(s, k - 1, r);
  auto lk_f = [k, r](cd z) { return lambda_cauchy_rec(z, k - 1, r); };
  const auto d = cauchy_derivatives(lk_f, s, r, 32, 1);
  return lam * lk + d[1];
}

}  // namespace

cd lambda_k_cauchy(ComplexPoint s, int k) {
  require(k >= 1 && k <= 5, "lambda_k_cauchy supports 1 <= k <= 5");
  const double r = 1.0 / std::log(std::max(std::abs(s.t), 3.0));
  return lambda_cauchy_rec(s.s(), k, r);
}

}  // namespace zdl::sf
