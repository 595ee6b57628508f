#pragma once

#include <string>

namespace zdl::nt {

// gamma'_k in the normalisation sum_{n<=x} log^k n / n = log^{k+1}x/(k+1) + (-1)^k k! gamma'_k + ...
struct StieltjesTable {
  int k = 0;
  double gamma_k_prime = 0.0;
  std::string method;
};

// Cached table entry, built once (Euler-Maclaurin tail of the defining limit).
const StieltjesTable& stieltjes(int k);

// Independent route: Laurent coefficients of zeta(s) - 1/(s-1) around s = 1 by a Cauchy circle.
StieltjesTable stieltjes_laurent_oracle(int k);

// Classical normalisation gamma_k = (-1)^k k! gamma'_k.
double stieltjes_gamma(int k);

inline constexpr int kMaxStieltjesIndex = 12;

}  // namespace zdl::nt
