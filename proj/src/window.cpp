#include "zdl/window.hpp"

#include <cmath>

#include "zdl/errors.hpp"

namespace zdl {

double theta_cap(int k) { return (2.0 * k + 1.0) / (4.0 * (k + 1.0)); }

WindowSpec WindowSpec::from_exponents(double T, double a, double theta) {
  require(std::isfinite(T) && T > 1.0, "window needs T > 1");
  require(a > 0.0 && a <= 1.0, "window exponent a must lie in (0, 1]");
  require(theta >= 0.0 && theta < 1.0, "mollifier exponent theta must lie in [0, 1)");
  WindowSpec w;
  w.T = T;
  w.a = a;
  w.H = std::pow(T, a);
  w.theta = theta;
  w.X = std::pow(T, theta);
  w.validate();
  return w;
}

WindowSpec WindowSpec::from_length(double T, double H, double theta) {
  require(std::isfinite(T) && T > 1.0, "window needs T > 1");
  require(std::isfinite(H) && H > 0.0, "window needs H > 0");
  WindowSpec w;
  w.T = T;
  w.H = H;
  w.a = std::log(H) / std::log(T);
  w.theta = theta;
  w.X = std::pow(T, theta);
  w.validate();
  return w;
}

void WindowSpec::validate() const {
  require(std::isfinite(T) && T > 1.0, "window needs T > 1");
  require(std::isfinite(H) && H > 0.0, "window needs H > 0");
  require(H <= T * (1.0 + 1e-12), "window needs H <= T");
  require(theta >= 0.0, "theta must be >= 0");
  require(X >= 1.0 - 1e-12, "mollifier length X must be >= 1");
}

void WindowSpec::validate_for_order(int k) const {
  validate();
  require(k >= 0, "order must be >= 0");
  require(a > 0.5 && a <= 1.0 + 1e-12, "window exponent a must lie in (1/2, 1]");
  if (theta > 0.0) require(theta < theta_cap(k), "theta exceeds the order-k cap (2k+1)/(4(k+1))");
}

}  // namespace zdl
