#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "zdl/dirichlet.hpp"
#include "zdl/precision.hpp"
#include "zdl/quadrature.hpp"
#include "zdl/window.hpp"

namespace zdl::ms {

struct IntegrationOptions {
  bool parallel = true;
  double spacing_scale = 1.0;   // multiplies the default node spacing
  std::size_t refine_stride = 32;
  bool audit = true;
  double audit_fraction = 0.01;
  std::size_t audit_cap = 128;
  double audit_factor = 5.0;    // abort when |afe - exact| > factor * budget
  std::uint64_t seed = 0x5eed5eedULL;
  const quad::ChunkStore* store = nullptr;
};

struct AuditSummary {
  std::size_t nodes = 0;
  double max_discrepancy = 0.0;
  double max_ratio = 0.0;  // discrepancy / (factor * budget), worst node and order
};

struct MeanSquareReport {
  WindowSpec window;
  int k1 = 0;
  int k2 = 0;
  double numeric_integral = 0.0;
  double imag_part = 0.0;  // zeta-product integrals only
  double main_term = 0.0;
  double ratio = std::numeric_limits<double>::quiet_NaN();
  double paper_error_scale = 0.0;
  std::size_t panels = 0;
  double samples_per_oscillation = 0.0;
  double quad_error = 0.0;
  bool afe_in_range = true;  // window exponent inside the AFE lemma's range
  std::string main_term_source;
  AuditSummary audit;
};

// pi / (8 (k1+k2+2) log tau0)
double node_spacing(int order_sum, double tau0);

// ∫_T^{T+H} Z^{(k1)} Z^{(k2)} |Phi|^2 with the fixed-length AFE and an exact-evaluation audit
MeanSquareReport integrate_JZ(const mollifier::DirichletPolynomial& p, const WindowSpec& w, int k1, int k2,
                              const PrecisionConfig& prec = {}, const IntegrationOptions& opt = {});

// ∫_T^{T+H} zeta^{(m)}(1/2+it) zeta^{(n)}(1/2-it) |Phi|^2, with zeta^{(j)} rebuilt from Z^{(r)} and theta
MeanSquareReport integrate_Izeta(const mollifier::DirichletPolynomial& p, const WindowSpec& w, int m, int n,
                                 const PrecisionConfig& prec = {}, const IntegrationOptions& opt = {});

// numeric integral plus main term (pair sum, or the mollifier closed form), ratio and error scale
MeanSquareReport mean_square_cell(const mollifier::DirichletPolynomial& p, const WindowSpec& w, int k1, int k2,
                                  const PrecisionConfig& prec = {}, const IntegrationOptions& opt = {});

struct SecondMoment {
  double numeric = 0.0;
  double prediction = 0.0;
  double quad_error = 0.0;
  std::size_t nodes = 0;
};
// ∫_0^T (Z^{(k)})^2: exact evaluation below t_switch, pointwise AFE above
SecondMoment second_moment_Z(double T, int k, const PrecisionConfig& prec = {}, double t_switch = 200.0,
                             bool parallel = true);

struct OscillatoryResult {
  cd numeric;
  cd prediction;     // zero when xi lies outside [T, T+H]
  double R = 0.0;    // R(xi) (log T)^{-alpha}
  bool xi_in_window = false;
  bool in_regime = false;  // sqrt(T) <= H <= T / log T
  std::size_t nodes = 0;
};
// ∫_T^{T+H} (t/(e xi))^{it} (log tau)^{-alpha} dt
OscillatoryResult oscillatory_window_integral(double xi, int alpha, const WindowSpec& w,
                                              const PrecisionConfig& prec = {});

}  // namespace zdl::ms
