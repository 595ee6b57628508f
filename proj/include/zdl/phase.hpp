#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace zdl::phase {

// log n as an unevaluated sum hi + lo (about 64 significant bits)
struct SplitLog {
  double hi = 0.0;
  double lo = 0.0;
};

inline SplitLog split_log(std::uint64_t n) {
  const long double l = std::log(static_cast<long double>(n));
  SplitLog s;
  s.hi = static_cast<double>(l);
  s.lo = static_cast<double>(l - static_cast<long double>(s.hi));
  return s;
}

// t (hi + lo) reduced mod 2 pi into about [-pi, pi]; absolute error near 1e-15 for |t log n| < 2^40.
inline double mul_mod_2pi(double t, SplitLog l) {
  // Cody-Waite split of 2 pi: c1, c2 carry 24 bits each so k * c1, k * c2 are exact for k < 2^29
  constexpr double c1 = 6.2831854820251465;
  constexpr double c2 = -1.7484555314695172e-07;
  constexpr double c3 = -6.8604979977715316e-15;
  constexpr double inv = 0.159154943091895335769;
  constexpr double magic = 6755399441055744.0;  // 1.5 * 2^52, rounds to nearest integer
  const double p = t * l.hi;
  const double e = std::fma(t, l.hi, -p) + t * l.lo;
  const double k = (p * inv + magic) - magic;
  return ((p - k * c1) - k * c2) - k * c3 + e;
}

// c[i] = cos(a[i]), s[i] = sin(a[i]); vectorised where the platform allows
void sincos_batch(const double* a, std::size_t n, double* c, double* s);

}  // namespace zdl::phase
