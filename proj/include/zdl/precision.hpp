#pragma once

#include <complex>
#include <cstdint>

namespace zdl {

using cd = std::complex<double>;
using cld = std::complex<long double>;

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;
inline constexpr long double kTwoPiL = 2.0L * kPiL;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Working precision is x87 extended (64-bit mantissa, ~19 digits) for phases,
// log-gamma and theta; bulk sums run in double.
inline constexpr int kMaxWorkingDigits = 19;

struct PrecisionConfig {
  int working_digits = 18;
  int euler_maclaurin_terms = 20;
  double cutoff_multiplier = 2.0;
  double target_abs_tol = 1e-10;
  double t_ceiling = 1e8;

  void validate() const;
};

struct ComplexPoint {
  double sigma = 0.5;
  double t = 0.0;

  cd s() const { return {sigma, t}; }
  static ComplexPoint from(cd s) { return {s.real(), s.imag()}; }
};

// x reduced to (-pi, pi] using extended precision.
long double reduce_angle(long double x);

// e^{-i x}, x given in extended precision.
cd unit_phase_neg(long double x);
cd unit_phase(long double x);

}  // namespace zdl
