#include "zdl/precision.hpp"

#include <cmath>
#include <string>

#include "zdl/errors.hpp"

namespace zdl {

void PrecisionConfig::validate() const {
  require(working_digits >= 15, "working_digits must be >= 15");
  require(working_digits <= kMaxWorkingDigits,
          "working_digits above " + std::to_string(kMaxWorkingDigits) + " is not supported");
  require(euler_maclaurin_terms >= 2 && euler_maclaurin_terms <= 30,
          "euler_maclaurin_terms must lie in [2, 30]");
  require(cutoff_multiplier >= 1.0 && cutoff_multiplier <= 16.0,
          "cutoff_multiplier must lie in [1, 16]");
  require(target_abs_tol > 0.0 && std::isfinite(target_abs_tol), "target_abs_tol must be positive");
  require(t_ceiling > 0.0 && t_ceiling <= 1e8, "t_ceiling must lie in (0, 1e8]");
}

long double reduce_angle(long double x) {
  constexpr long double inv = 1.0L / kTwoPiL;
  long double r = x - kTwoPiL * std::nearbyint(x * inv);
  return r;
}

cd unit_phase_neg(long double x) {
  const double r = static_cast<double>(reduce_angle(x));
  return {std::cos(r), -std::sin(r)};
}

cd unit_phase(long double x) {
  const double r = static_cast<double>(reduce_angle(x));
  return {std::cos(r), std::sin(r)};
}

}  // namespace zdl
