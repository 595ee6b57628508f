#pragma once

namespace zdl {

// [T, T+H] with H = T^a and mollifier length X = T^theta
struct WindowSpec {
  double T = 1e4;
  double a = 0.75;
  double H = 1000.0;
  double theta = 0.0;
  double X = 1.0;

  static WindowSpec from_exponents(double T, double a, double theta);
  static WindowSpec from_length(double T, double H, double theta);

  // basic invariants: T > 0, 0 < H <= T, X >= 1
  void validate() const;
  // additionally a in (1/2, 1] and theta below (2k+1)/(4(k+1))
  void validate_for_order(int k) const;
};

double theta_cap(int k);

}  // namespace zdl
