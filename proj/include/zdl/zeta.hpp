#pragma once

#include <cstdint>
#include <vector>

#include "zdl/precision.hpp"

namespace zdl::sf {

struct ZetaJet {
  std::vector<cd> d;      // zeta^{(j)}(s), j = 0..kmax
  double est_error = 0.0; // magnitude of the last Euler-Maclaurin correction
  std::uint64_t terms = 0;
};

// zeta^{(j)}(s), j <= kmax, by Euler-Maclaurin with termwise log-power derivatives
ZetaJet zeta_jet(ComplexPoint s, int kmax, const PrecisionConfig& prec = {});
cd zeta_deriv(ComplexPoint s, int k, const PrecisionConfig& prec = {});

// main sums sum_{n=1}^{N-1} (-log n)^j n^{-s}; serial reference and block-parallel kernel.
// Both reduce fixed-size blocks in index order, so the results are bitwise identical.
void zeta_main_sum_serial(cd s, std::uint64_t N, int kmax, std::vector<cd>& out);
void zeta_main_sum_parallel(cd s, std::uint64_t N, int kmax, std::vector<cd>& out);

// main-sum length used for a given s
std::uint64_t zeta_cutoff(cd s, const PrecisionConfig& prec);

}  // namespace zdl::sf
