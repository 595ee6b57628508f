#pragma once

#include <cstddef>

#include "zdl/dirichlet.hpp"
#include "zdl/window.hpp"

namespace zdl::ms {

// sign factor for Z^{(k1)} Z^{(k2)} main terms: 0 for odd k1+k2, else (-1)^{(k2-k1)/2}
double vartheta(int k1, int k2);

inline constexpr double kMaxPairs = 1e8;

// (H/4^k) sum_{l,q} b_l conj(b_q) (l,q)/(lq) L ∫_0^1 (x^2 L^2 - log^2(q/l))^k dx, L = log(T(l,q)^2/(2 pi l q))
double main_term_thm0(const mollifier::DirichletPolynomial& p, const WindowSpec& w, int k);
// H vartheta/2^{k1+k2} sum b_l conj(b_q) (l,q)/(lq) (F + G)
double main_term_thm4(const mollifier::DirichletPolynomial& p, const WindowSpec& w, int k1, int k2);

// single-pair pieces, exposed for tests
double pair_F(double L, double D, int k1, int k2);   // D = log(q/l)
double pair_G(double D, int k1, int k2);
double pair_thm0_inner(double L, double D, int k);   // ∫_0^1 (x^2L^2 - D^2)^k dx by binomial expansion

// mollifier specialisation: vartheta/2^{k1+k2} (1 + 1/((k1+k2+1)theta) + 4 k1 k2 theta/(3(k1+k2-1))) H log^{k1+k2}(T/2pi)
double moment_prod_hardy(const WindowSpec& w, int k1, int k2);
double moment_prod_hardy_constant(int k1, int k2, double theta);

double P_k_theta(int k, double theta);
// 1/2 + 1/(theta(m+n+1)) + mn theta/(3(m+n-1)), m, n >= 1
double zeta_main_constant_thm5(int m, int n, double theta);
// (-1)^{m+n} constant H log^{m+n}(T/2pi)
double zeta_main_term_thm5(const WindowSpec& w, int m, int n);

enum class InnerLimit { over_q, over_l };

// J(r1, r2) quadruple sum; inner sum over y <= tau0 (l,q)/q (or /l)
double prop_L12_J(int r1, int r2, const mollifier::DirichletPolynomial& p, double tau0,
                  InnerLimit lim = InnerLimit::over_q);
// predicted mollifier-case value of J(r1, r2) for either inner limit
double prop_L12_J_mollifier(int r1, int r2, double theta, double tau0,
                            InnerLimit lim = InnerLimit::over_q);

// S_r(y) = sum_{n <= y} log^r n / n: exact prefix below the table limit, asymptotic beyond
double log_harmonic(double y, int r);
inline constexpr std::size_t kHarmonicTable = 1000000;

// error scales
double thm0_error_scale(const WindowSpec& w, int k, double epsilon);
double mollified_error_scale(const WindowSpec& w, int k1, int k2);

}  // namespace zdl::ms
