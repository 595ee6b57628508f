#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdl/phase.hpp"
#include "zdl/precision.hpp"
#include "zdl/window.hpp"

namespace zdl::hardy {

enum class ZMethod { exact_eta, exact_leibniz, afe };
const char* to_string(ZMethod m);

struct ZEvaluation {
  double t = 0.0;
  int k = 0;
  double value = 0.0;
  ZMethod method = ZMethod::exact_leibniz;
  double est_error = 0.0;
  double imag_residue = 0.0;  // imaginary part discarded (exact methods)
  double method_gap = 0.0;    // |eta route - Leibniz route|, negative when the eta route was skipped
};

struct AfeParams {
  double tau0 = 1.0;
  WindowSpec window;

  static AfeParams for_window(const WindowSpec& w);
  void validate() const;
};

// eta_k(s): k = 0 -> -2 zeta/omega, k >= 1 -> sum_j C(k,j) lambda_{k-j} zeta^{(j)} - (2/omega) zeta^{(k)}
cd eta_k(ComplexPoint s, int k, const PrecisionConfig& prec = {});
std::vector<cd> eta_all(cd s, int kmax, const PrecisionConfig& prec = {});

// Z^{(j)}(t), j <= kmax, by differentiating e^{i theta} zeta(1/2+it); complex before projection
std::vector<cd> Z_leibniz_complex(double t, int kmax, const PrecisionConfig& prec = {});
// same via the eta route: i^j theta' e^{i theta} eta_j
std::vector<cd> Z_eta_complex(double t, int kmax, const PrecisionConfig& prec = {});

// both exact routes, cross-checked
ZEvaluation Z_exact(double t, int k, const PrecisionConfig& prec = {});
std::vector<ZEvaluation> Z_exact_all(double t, int kmax, const PrecisionConfig& prec = {});

// Lemma-style approximate functional equation with sums of fixed length floor(tau0)
ZEvaluation Z_afe(double t, int k, const AfeParams& params, const PrecisionConfig& prec = {});

// Y_k(T) branch of the AFE error budget (constant 1)
double afe_error_budget(int k, const WindowSpec& w);

// Reusable AFE kernel: tables of log n and n^{-1/2} for n <= nmax.
class AfeKernel {
 public:
  explicit AfeKernel(std::uint64_t nmax);
  std::uint64_t nmax() const { return nmax_; }
  // out[j] = AFE value of Z^{(j)}(t), j <= kmax, using terms n <= N
  void eval(double t, std::uint64_t N, int kmax, double* out) const;

 private:
  std::uint64_t nmax_;
  std::vector<phase::SplitLog> logn_;
  std::vector<double> rsqrt_;
};

// N used when the sum length follows t itself: floor(sqrt(t/2pi))
std::uint64_t afe_length_pointwise(double t);

// Z_k(s) = omega eta_k / (2 i^k)
cd Zk_meromorphic(ComplexPoint s, int k, const PrecisionConfig& prec = {});

enum class HallDerivative { finite_difference, exact };
// |i zeta'(s) - e^{-i theta}(Z' - i theta' Z)| with zeta' the s-derivative
double hall_identity_residual(double t, const PrecisionConfig& prec = {},
                              HallDerivative how = HallDerivative::finite_difference);

struct PropositionCheck {
  cd lhs;  // (d/dt)^n zeta(1/2+it) = i^n zeta^{(n)}(s)
  cd rhs;
  double residual = 0.0;
};
// right-hand side built from Z^{(j)} and log tau; grouped = alternative summation order
PropositionCheck zeta_deriv_from_Z(double t, int n, const PrecisionConfig& prec = {},
                                   bool grouped = false);

}  // namespace zdl::hardy
