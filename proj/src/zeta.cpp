#include "zdl/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zdl/errors.hpp"
#include "zdl/jet.hpp"
#include "zdl/numeric.hpp"
#include "zdl/phase.hpp"
#include "zdl/special.hpp"

namespace zdl::sf {

namespace {

constexpr std::uint64_t kBlock = 4096;
constexpr int kMaxOrder = 12;

void block_sum(cd s, std::uint64_t lo, std::uint64_t hi, int kmax, cd* acc) {
  const double t = s.imag();
  const double sigma = s.real();
  const std::size_t m = hi > lo ? hi - lo : 0;
  thread_local std::vector<double> ang, cs, sn, lg;
  if (ang.size() < m) {
    ang.resize(m);
    cs.resize(m);
    sn.resize(m);
    lg.resize(m);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto l = phase::split_log(lo + i);
    lg[i] = l.hi;
    ang[i] = phase::mul_mod_2pi(t, l);
  }
  phase::sincos_batch(ang.data(), m, cs.data(), sn.data());
  double re[kMaxOrder + 1] = {}, im[kMaxOrder + 1] = {};
  for (std::size_t i = 0; i < m; ++i) {
    const double mag = sigma == 0.5 ? 1.0 / std::sqrt(static_cast<double>(lo + i)) : std::exp(-sigma * lg[i]);
    double a = mag * cs[i], b = -mag * sn[i];
    re[0] += a;
    im[0] += b;
    const double ml = -lg[i];
    for (int j = 1; j <= kmax; ++j) {
      a *= ml;
      b *= ml;
      re[j] += a;
      im[j] += b;
    }
  }
  for (int j = 0; j <= kmax; ++j) acc[j] = cd(re[j], im[j]);
}

void reduce_blocks(const std::vector<cd>& partial, std::uint64_t blocks, int kmax,
                   std::vector<cd>& out) {
  out.assign(kmax + 1, cd(0.0, 0.0));
  for (int j = 0; j <= kmax; ++j) {
    CompensatedComplex c;
    for (std::uint64_t b = 0; b < blocks; ++b) c.add(partial[b * (kmax + 1) + j]);
    out[j] = c.value();
  }
}

}  // namespace

void zeta_main_sum_serial(cd s, std::uint64_t N, int kmax, std::vector<cd>& out) {
  const std::uint64_t count = N > 1 ? N - 1 : 0;
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<cd> partial(blocks * (kmax + 1));
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = 1 + b * kBlock;
    const std::uint64_t hi = std::min<std::uint64_t>(N, lo + kBlock);
    block_sum(s, lo, hi, kmax, &partial[b * (kmax + 1)]);
  }
  reduce_blocks(partial, blocks, kmax, out);
}

void zeta_main_sum_parallel(cd s, std::uint64_t N, int kmax, std::vector<cd>& out) {
  const std::uint64_t count = N > 1 ? N - 1 : 0;
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<cd> partial(blocks * (kmax + 1));
  const auto nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < nb; ++b) {
    const std::uint64_t lo = 1 + static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t hi = std::min<std::uint64_t>(N, lo + kBlock);
    block_sum(s, lo, hi, kmax, &partial[static_cast<std::uint64_t>(b) * (kmax + 1)]);
  }
  reduce_blocks(partial, blocks, kmax, out);
}

std::uint64_t zeta_cutoff(cd s, const PrecisionConfig& prec) {
  const double reach = std::abs(s) + 2.0 * prec.euler_maclaurin_terms;
  const double n = std::ceil(prec.cutoff_multiplier * reach / (2.0 * kPi));
  return std::max<std::uint64_t>(50, static_cast<std::uint64_t>(n));
}

namespace {

ZetaJet zeta_jet_with_cutoff(cd s, int kmax, std::uint64_t N, int p) {
  ZetaJet res;
  res.terms = N;
  std::vector<cd> main;
  if (N > 8 * kBlock)
    zeta_main_sum_parallel(s, N, kmax, main);
  else
    zeta_main_sum_serial(s, N, kmax, main);

  const std::size_t K = static_cast<std::size_t>(kmax);
  const long double lnN = std::log(static_cast<long double>(N));
  // N^{-(s+e)} as a jet
  Jet<cd> npow(K);
  {
    const long double mag = std::exp(-static_cast<long double>(s.real()) * lnN);
    const double r = static_cast<double>(reduce_angle(static_cast<long double>(s.imag()) * lnN));
    npow[0] = cd(static_cast<double>(mag) * std::cos(r), -static_cast<double>(mag) * std::sin(r));
    double c = 1.0;
    for (std::size_t m = 1; m <= K; ++m) {
      c *= -static_cast<double>(lnN) / static_cast<double>(m);
      npow[m] = npow[0] * c;
    }
  }
  const double Nd = static_cast<double>(N);
  const Jet<cd> svar = Jet<cd>::variable(K, s);
  Jet<cd> one(K, cd(1.0, 0.0));

  // N^{1-s}/(s-1) + N^{-s}/2
  Jet<cd> tail = npow * cd(Nd, 0.0) / (svar - one) + npow * cd(0.5, 0.0);

  // sum_j B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
  Jet<cd> poch = svar;  // s
  double nfac = 1.0 / Nd;
  long double fact = 2.0L;
  Jet<cd> last(K);
  for (int j = 1; j <= p; ++j) {
    if (j > 1) {
      poch = poch * (svar + Jet<cd>(K, cd(2.0 * j - 3, 0.0))) * (svar + Jet<cd>(K, cd(2.0 * j - 2, 0.0)));
      fact *= static_cast<long double>(2 * j - 1) * (2 * j);
      nfac /= Nd * Nd;
    }
    const double coef = static_cast<double>(bernoulli_even(j) / fact) * nfac;
    last = poch * npow * cd(coef, 0.0);
    tail += last;
  }

  res.d.resize(K + 1);
  double err = 0.0;
  double fm = 1.0;
  for (std::size_t m = 0; m <= K; ++m) {
    if (m >= 1) fm *= static_cast<double>(m);
    res.d[m] = main[m] + tail[m] * fm;
    err = std::max(err, std::abs(last[m]) * fm);
  }
  res.est_error = err;
  return res;
}

}  // namespace

ZetaJet zeta_jet(ComplexPoint sp, int kmax, const PrecisionConfig& prec) {
  require(std::isfinite(sp.sigma) && std::isfinite(sp.t), "s must be finite");
  require(kmax >= 0 && kmax <= kMaxOrder, "derivative order must lie in [0, 12]");
  if (std::abs(sp.t) > prec.t_ceiling)
    fail(ErrorKind::validation, "|t| above configured ceiling");
  const cd s = sp.s();
  if (std::abs(s - cd(1.0, 0.0)) < 1e-12) fail(ErrorKind::pole, "zeta pole at s = 1");
  std::uint64_t N = zeta_cutoff(s, prec);
  for (int attempt = 0; attempt < 4; ++attempt) {
    ZetaJet r = zeta_jet_with_cutoff(s, kmax, N, prec.euler_maclaurin_terms);
    if (r.est_error <= prec.target_abs_tol) return r;
    N *= 2;
  }
  fail(ErrorKind::precision, "Euler-Maclaurin depth check failed at s = (" +
                                 std::to_string(sp.sigma) + ", " + std::to_string(sp.t) + ")");
}

cd zeta_deriv(ComplexPoint s, int k, const PrecisionConfig& prec) {
  return zeta_jet(s, k, prec).d[k];
}

}  // namespace zdl::sf
