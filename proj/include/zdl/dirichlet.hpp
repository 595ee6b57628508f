#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdl/phase.hpp"
#include "zdl/precision.hpp"

namespace zdl::mollifier {

enum class Scheme { explicit_coeffs, mollifier };

struct DirichletPolynomial {
  std::vector<std::uint64_t> n;  // strictly increasing
  std::vector<cd> b;             // coefficient of n^{-s}
  double length_X = 1.0;
  Scheme scheme = Scheme::explicit_coeffs;
  double theta = 0.0;     // mollifier exponent when scheme == mollifier
  double epsilon = 0.1;   // growth exponent for |b_n| <= n^epsilon

  std::size_t size() const { return n.size(); }
  bool real_coefficients() const;
  // throws validation error; growth check can be skipped by override
  void validate(bool check_growth = true) const;
};

// b_n = mu(n)(1 - log n / log X), X = T^theta
DirichletPolynomial build_mollifier(double T, double theta);
DirichletPolynomial build_mollifier_from_X(double X);

// arbitrary coefficients; zero entries dropped; X defaults to the largest n
DirichletPolynomial make_explicit(std::vector<std::pair<std::uint64_t, cd>> coeffs, double X = 0.0,
                                  double epsilon = 0.1, bool check_growth = true);

// only b_1 = 1
DirichletPolynomial unit_polynomial();

// CSV with header n,re,im
DirichletPolynomial read_coefficients_csv(const std::string& path, double epsilon = 0.1,
                                          bool check_growth = true);
void write_coefficients_csv(const DirichletPolynomial& p, const std::string& path);

// Phi(1/2 + it) = sum b_n n^{-1/2-it}
cd evaluate(const DirichletPolynomial& p, double t, const PrecisionConfig& prec = {});
// Phi(s) at a general point
cd evaluate_at(const DirichletPolynomial& p, cd s);
double abs_square(const DirichletPolynomial& p, double t, const PrecisionConfig& prec = {});

// precomputed logs and n^{-1/2} b_n for repeated evaluation on the critical line
class PhiKernel {
 public:
  explicit PhiKernel(const DirichletPolynomial& p);
  cd operator()(double t) const;

 private:
  std::vector<phase::SplitLog> logn_;
  std::vector<cd> w_;
};

}  // namespace zdl::mollifier
