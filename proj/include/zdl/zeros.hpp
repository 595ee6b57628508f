#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdl/dirichlet.hpp"
#include "zdl/precision.hpp"
#include "zdl/window.hpp"

namespace zdl::zeros {

// unit is the constant 1, useful as a plumbing check
enum class Family { zeta_k, eta_k, Z_k, unit };

struct FunctionId {
  Family family = Family::zeta_k;
  int k = 0;

  std::string name() const;  // zeta_k / eta_k / Z_k / unit
  static FunctionId parse(const std::string& name, int k);
};

struct RectBox {
  double sigma_min = 0.0;
  double sigma_max = 1.0;
  double t_min = 0.0;
  double t_max = 1.0;

  void validate() const;
  double width() const { return sigma_max - sigma_min; }
  double height() const { return t_max - t_min; }
  bool contains(cd s, double margin = 0.0) const;
  RectBox grown(double d) const { return {sigma_min - d, sigma_max + d, t_min - d, t_max + d}; }
};

struct ZeroRecord {
  FunctionId fn;
  double sigma = 0.0;
  double t = 0.0;
  int multiplicity = 1;
  double residual = 0.0;
};

// f(s), optionally multiplied by Phi(s)
cd evaluate(const FunctionId& fn, cd s, const PrecisionConfig& prec = {},
            const mollifier::DirichletPolynomial* poly = nullptr);

struct WindingResult {
  int zeros = 0;           // winding number plus pole orders inside
  int winding = 0;
  int poles = 0;
  double perturbation = 0.0;  // box growth actually used
  std::size_t evaluations = 0;
  RectBox box;             // box actually used
};

// Argument principle with adaptive boundary subdivision; perturbs the box by up to 1e-3.
WindingResult winding(const FunctionId& fn, const RectBox& box, const PrecisionConfig& prec = {},
                      const mollifier::DirichletPolynomial* poly = nullptr);
int winding_count(const FunctionId& fn, const RectBox& box, const PrecisionConfig& prec = {},
                  const mollifier::DirichletPolynomial* poly = nullptr);

// recursive subdivision down to isolating boxes, then Newton polishing
std::vector<ZeroRecord> find_zeros_in_box(const FunctionId& fn, const RectBox& box,
                                          const PrecisionConfig& prec = {},
                                          const mollifier::DirichletPolynomial* poly = nullptr);

// sign-change scan of Z^{(k)} on [t_min, t_max] plus bisection to 1e-9
std::vector<ZeroRecord> find_Zk_zeros(int k, double t_min, double t_max, const PrecisionConfig& prec = {});
double Zk_scan_step(double t_max);

enum class Side { right, left };

struct WeightedSum {
  double sum = 0.0;         // sum of |beta - 1/2| on the requested side
  double signed_sum = 0.0;  // sum of (beta - 1/2) over every zero found
  std::size_t zeros = 0;
  RectBox strip;
  std::vector<ZeroRecord> records;
};

// zeros with T <= gamma <= T+H; sigma_limit caps the right edge (default: zero-free bound for the family)
WeightedSum littlewood_weighted_sum(const FunctionId& fn, const WindowSpec& w, Side side,
                                    const mollifier::DirichletPolynomial* poly = nullptr,
                                    const PrecisionConfig& prec = {},
                                    std::optional<double> sigma_limit = std::nullopt);
// both sides at once
WeightedSum littlewood_full(const FunctionId& fn, const WindowSpec& w,
                            const mollifier::DirichletPolynomial* poly = nullptr,
                            const PrecisionConfig& prec = {});

// ∫_T^{T+H} log|f(sigma0+it) Phi(1/2+it)| dt, with critical-line zeros of zeta removed analytically
double log_modulus_line_integral(const FunctionId& fn, double sigma0, const WindowSpec& w,
                                 const mollifier::DirichletPolynomial* poly = nullptr,
                                 const PrecisionConfig& prec = {});

// zero database
void write_zero_csv(const std::vector<ZeroRecord>& zs, const std::string& path);
std::vector<ZeroRecord> read_zero_csv(const std::string& path);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs_main = 0.0;
  double slack = 0.0;
  double theta = 0.0;
  double margin = 0.0;  // rhs_main + slack - lhs
  bool holds = false;
};

// largest admissible theta (open interval) nearest the minimiser of the bound
double sharpest_theta_thm6(int k, const WindowSpec& w);
double sharpest_theta_thm2(int k, const WindowSpec& w);
double second_order_scale(const WindowSpec& w);  // H (log log T)^3 / log T

// 2 pi sum_{beta > 1/2} (beta - 1/2) against kH loglog(T/2pi) + (H/2) log(1 + ...) - Hk loglog 2
InequalityCheck thm6a_check(int k, const WindowSpec& w, double right_sum, double theta);
// sum_{beta < 1/2} (1/2 - beta) against (H/4pi) log(1/2 + ...)
InequalityCheck thm6b_check(int k, const WindowSpec& w, double left_sum, double theta);
// eta_k: sum (beta' - 1/2) against (log(4^k P_k)/2 + (k-1) log 2) H/2pi
InequalityCheck thm2_check(int k, const WindowSpec& w, double right_sum, double theta);
// kH loglog(T/2pi) + H(log 2/2 - k loglog 2)
double levinson_montgomery(int k, const WindowSpec& w);

}  // namespace zdl::zeros
