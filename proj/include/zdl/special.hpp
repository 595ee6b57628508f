#pragma once

#include <functional>
#include <vector>

#include "zdl/jet.hpp"
#include "zdl/precision.hpp"

namespace zdl::sf {

// B_{2j}, j >= 1, in extended precision (j <= 40)
long double bernoulli_even(int j);

// principal branch log Gamma, continuous off the negative real axis
cld loggamma(cld z);
// psi^{(m)}(z), m >= 0
cld polygamma(int m, cld z);

// chi(s) = h(1-s)/h(s), h(s) = pi^{-s/2} Gamma(s/2)
cd chi(ComplexPoint s, const PrecisionConfig& prec = {});
// log chi(s), imaginary part unreduced
cld log_chi(cd s);

// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, not reduced
long double theta(double t);
// theta^{(j)}(t) for j = 0..order (entry 0 is theta itself, unreduced)
std::vector<long double> theta_derivatives(double t, int order);
double theta_prime(double t);

cd omega(ComplexPoint s, const PrecisionConfig& prec = {});
// Taylor jet of omega around s (analytic polygamma derivatives)
Jet<cd> omega_jet(cd s, std::size_t order);
// lambda = omega'/omega - omega/2 as a jet
Jet<cd> lambda_jet(cd s, std::size_t order);
// lambda_1..lambda_kmax at s (index 0 unused)
std::vector<cd> lambda_all(cd s, int kmax);
cd lambda_k(ComplexPoint s, int k, const PrecisionConfig& prec = {});

// Derivatives 0..order of f at s from an equispaced circle of given radius.
std::vector<cd> cauchy_derivatives(const std::function<cd(cd)>& f, cd s, double radius, int nodes,
                                   int order);

// lambda_k via the recursion with Cauchy-circle derivatives (radius 1/log t, 32 nodes)
cd lambda_k_cauchy(ComplexPoint s, int k);

}  // namespace zdl::sf
