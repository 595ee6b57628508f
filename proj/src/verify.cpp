#include "zdl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "zdl/arith.hpp"
#include "zdl/dirichlet.hpp"
#include "zdl/errors.hpp"
#include "zdl/hardy.hpp"
#include "zdl/main_terms.hpp"
#include "zdl/meansquare.hpp"
#include "zdl/special.hpp"
#include "zdl/stieltjes.hpp"
#include "zdl/zeros.hpp"
#include "zdl/zeta.hpp"

namespace zdl::verify {

using nlohmann::json;

namespace {

// criterion 1
constexpr double kZImagTol = 1e-10;        // relative to max(1, |Z|)
constexpr double kHallTol = 1e-9;
constexpr double kEtaFeTol = 1e-7;
constexpr double kChiZetaFeTol = 1e-8;
constexpr double kZkFeTol = 1e-7;
// criterion 2
constexpr double kAfeDecadeLo = 0.15;      // log10 of the per-decade factor
constexpr double kAfeDecadeHi = 0.35;
constexpr double kAfeMaxC = 10.0;
// criterion 3
constexpr double kSecondMomentT = 5e4;
constexpr double kSecondMomentK0Tol = 0.10;
constexpr double kSecondMomentK1Lo = 0.8;
constexpr double kSecondMomentK1Hi = 1.3;
// criterion 4
constexpr double kMollTheta = 0.15;
constexpr double kMollA = 0.7;
constexpr double kMollRatioLo = 0.6;
constexpr double kMollRatioHi = 1.4;
// criterion 5
constexpr double kParityT = 1e5;
constexpr double kParityFactor = 10.0;
// criterion 6
constexpr int kMainTermPolys = 20;
constexpr double kMainTermExactRel = 1e-12;
constexpr double kMollCaseTol = 0.10;
// criterion 7
constexpr double kOscT = 1e4;
constexpr double kOscTol = 0.05;
// criterion 8
constexpr int kAdditivityBoxes = 50;
constexpr double kZeroLocTol = 1e-8;
// criterion 9
constexpr double kLemmaMaxC = 10.0;

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Builder {
  CriterionResult r;

  Check& add(const std::string& name, bool ok, json detail = json::object(), bool info = false) {
    r.checks.push_back({name, ok, info, std::move(detail)});
    return r.checks.back();
  }
  // run f, turning any library error into a failed check
  void guarded(const std::string& name, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name, false, {{"error", e.what()}});
    }
  }
};

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

cd chi_at(cd s, const PrecisionConfig& prec) { return sf::chi(ComplexPoint::from(s), prec); }

void identities(Builder& b, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const auto& prec = o.prec;

  b.guarded("Z real-valued", [&] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = 10.0 + (1e4 - 10.0) * U(rng);
      const auto z = hardy::Z_exact(t, 0, prec);
      worst = std::max(worst, z.imag_residue / std::max(1.0, std::abs(z.value)));
    }
    b.add("Z real-valued", worst < kZImagTol, {{"points", 1000}, {"max_rel_imag", worst}, {"tol", kZImagTol}});
  });
  b.guarded("Hall identity", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) worst = std::max(worst, hardy::hall_identity_residual(10.0 + 4990.0 * U(rng), prec));
    b.add("Hall identity", worst < kHallTol, {{"points", 100}, {"t_range", {10, 5000}}, {"max_residual", worst},
                                              {"tol", kHallTol}});
  });
  b.guarded("eta_k functional equation", [&] {
    json per_k = json::object();
    bool ok = true;
    for (int k = 0; k <= 4; ++k) {
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) {
        const cd s(0.2 + 0.6 * U(rng), 20.0 + 980.0 * U(rng));
        const double sg = (k % 2) ? -1.0 : 1.0;
        const cd lhs = hardy::eta_k(ComplexPoint::from(s), k, prec);
        const cd rhs = sg * chi_at(s, prec) * hardy::eta_k(ComplexPoint::from(1.0 - s), k, prec);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      per_k[std::to_string(k)] = worst;
      ok = ok && worst < kEtaFeTol;
    }
    b.add("eta_k functional equation", ok, {{"max_residual_by_k", per_k}, {"tol", kEtaFeTol}});
  });
  b.guarded("chi reflection and zeta functional equation", [&] {
    double wchi = 0.0, wz = 0.0;
    for (int i = 0; i < 100; ++i) {
      const cd s(-1.0 + 3.0 * U(rng), 10.0 + (1e4 - 10.0) * U(rng));
      const cd c = chi_at(s, prec);
      wchi = std::max(wchi, std::abs(c * chi_at(1.0 - s, prec) - 1.0));
      const cd z = sf::zeta_deriv(ComplexPoint::from(s), 0, prec);
      const cd zr = sf::zeta_deriv(ComplexPoint::from(1.0 - s), 0, prec);
      wz = std::max(wz, std::abs(z - c * zr));
    }
    b.add("chi reflection", wchi < kChiZetaFeTol, {{"max_residual", wchi}, {"tol", kChiZetaFeTol}});
    b.add("zeta functional equation", wz < kChiZetaFeTol, {{"max_residual", wz}, {"tol", kChiZetaFeTol}});
  });
  b.guarded("Z_k functional equation", [&] {
    json per_k = json::object();
    bool ok = true;
    for (int k = 0; k <= 4; ++k) {
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) {
        const cd s(0.2 + 0.6 * U(rng), 20.0 + 980.0 * U(rng));
        const double sg = (k % 2) ? -1.0 : 1.0;
        const cd lhs = hardy::Zk_meromorphic(ComplexPoint::from(s), k, prec);
        const cd rhs = sg * chi_at(s, prec) * hardy::Zk_meromorphic(ComplexPoint::from(1.0 - s), k, prec);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      per_k[std::to_string(k)] = worst;
      ok = ok && worst < kZkFeTol;
    }
    b.add("Z_k functional equation", ok, {{"max_residual_by_k", per_k}, {"tol", kZkFeTol}});
  });
  b.guarded("delta_r(n) closed form", [&] {
    int bad = 0;
    for (int r = 0; r <= 20; ++r)
      for (int n = 0; n <= 20; ++n)
        if (nt::alternating_binomial_delta(r, n) != nt::alternating_binomial_delta_closed(r, n)) ++bad;
    b.add("delta_r(n) closed form", bad == 0, {{"pairs", 441}, {"mismatches", bad}});
  });
}

// ten sub-windows per height with frac(tau0) spread evenly, ten points each, window exponent at the branch point
double afe_mean_error(int k, double T, const PrecisionConfig& prec) {
  const double a = (2.0 * k + 1.0) / (2.0 * (k + 1.0));
  const double base = std::floor(std::sqrt(T / (2.0 * kPi)));
  double acc = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double tau0 = base + 1.0 + (j + 0.5) / 10.0;
    const double Tj = 2.0 * kPi * tau0 * tau0;
    const WindowSpec w = WindowSpec::from_exponents(Tj, a, 0.0);
    const auto P = hardy::AfeParams::for_window(w);
    for (int i = 0; i < 10; ++i) {
      const double t = Tj + w.H * (i + 0.5) / 10.0;
      acc += std::abs(hardy::Z_afe(t, k, P, prec).value - hardy::Z_exact(t, k, prec).value);
    }
  }
  return acc / 100.0;
}

void afe(Builder& b, const VerifyOptions& o) {
  const double Ts[3] = {1e4, 1e5, 1e6};
  for (int k = 0; k <= 2; ++k) {
    b.guarded("AFE k=" + std::to_string(k), [&] {
      std::vector<double> mean, C;
      for (double T : Ts) {
        mean.push_back(afe_mean_error(k, T, o.prec));
        C.push_back(mean.back() / (std::pow(T, -0.25) * std::pow(std::log(T), k)));
      }
      std::vector<double> decade;
      bool ok = true;
      for (int i = 1; i < 3; ++i) {
        decade.push_back(std::log10(mean[i - 1] / mean[i]));
        ok = ok && decade.back() >= kAfeDecadeLo && decade.back() <= kAfeDecadeHi;
      }
      const double Cmax = *std::max_element(C.begin(), C.end());
      b.add("AFE k=" + std::to_string(k) + " decay per decade", ok,
            {{"T", Ts}, {"mean_abs_error", mean}, {"log10_decade_factor", decade},
             {"band", {kAfeDecadeLo, kAfeDecadeHi}}, {"window_a", (2.0 * k + 1) / (2.0 * (k + 1))}});
      b.add("AFE k=" + std::to_string(k) + " fitted constant", Cmax <= kAfeMaxC,
            {{"C_by_T", C}, {"max_C", Cmax}, {"limit", kAfeMaxC}});
    });
  }
}

void moments(Builder& b, const VerifyOptions& o) {
  const double T = kSecondMomentT;
  const double L = std::log(T / (2.0 * kPi));
  b.guarded("second moment k=0", [&] {
    const auto r = ms::second_moment_Z(T, 0, o.prec);
    const double rel = std::abs(r.numeric / r.prediction - 1.0);
    b.add("second moment k=0", rel <= kSecondMomentK0Tol,
          {{"T", T}, {"numeric", r.numeric}, {"prediction", r.prediction}, {"rel_diff", rel},
           {"tol", kSecondMomentK0Tol}});
  });
  b.guarded("second moment k=1", [&] {
    const auto r = ms::second_moment_Z(T, 1, o.prec);
    const double ratio = r.numeric * 12.0 / (T * L * L * L);
    b.add("second moment k=1", ratio >= kSecondMomentK1Lo && ratio <= kSecondMomentK1Hi,
          {{"T", T}, {"numeric", r.numeric}, {"normalised", ratio}, {"band", {kSecondMomentK1Lo, kSecondMomentK1Hi}}});
  });
}

void mollified(Builder& b, const VerifyOptions& o) {
  b.guarded("mollified mean square", [&] {
    const double Ts[3] = {1e5, 1e6, 1e7};
    std::vector<double> ratio, audit, scale;
    for (double T : Ts) {
      const WindowSpec w = WindowSpec::from_exponents(T, kMollA, kMollTheta);
      const auto p = mollifier::build_mollifier(T, kMollTheta);
      const auto r = ms::mean_square_cell(p, w, 0, 0, o.prec);
      ratio.push_back(r.ratio);
      audit.push_back(r.audit.max_ratio);
      scale.push_back(r.paper_error_scale / r.main_term);
    }
    const bool band = ratio[1] >= kMollRatioLo && ratio[1] <= kMollRatioHi;
    const bool trend = std::abs(ratio[2] - 1.0) < std::abs(ratio[0] - 1.0);
    json d = {{"T", Ts}, {"theta", kMollTheta}, {"a", kMollA}, {"ratio", ratio}, {"audit_max_ratio", audit},
              {"relative_error_scale", scale}};
    b.add("ratio at T=1e6 in band", band, {{"ratio", ratio[1]}, {"band", {kMollRatioLo, kMollRatioHi}}});
    b.add("ratio at T=1e7 closer to 1 than at T=1e5", trend, d);
  });
}

void parity(Builder& b, const VerifyOptions& o) {
  b.guarded("odd parity smallness", [&] {
    const double T = kParityT;
    const WindowSpec w = WindowSpec::from_exponents(T, kMollA, kMollTheta);
    const auto p = mollifier::build_mollifier(T, kMollTheta);
    const double lT = std::log(T);
    auto norm = [&](int k1, int k2) {
      const auto r = ms::integrate_JZ(p, w, k1, k2, o.prec);
      return std::abs(r.numeric_integral) / (w.H * std::pow(lT, k1 + k2));
    };
    const double odd = norm(0, 1), e00 = norm(0, 0), e02 = norm(0, 2);
    b.add("|JZ(0,1)| vs JZ(0,0)", odd * kParityFactor <= e00,
          {{"odd_normalised", odd}, {"even_normalised", e00}, {"factor", kParityFactor}});
    b.add("|JZ(0,1)| vs |JZ(0,2)|", odd * kParityFactor <= e02,
          {{"odd_normalised", odd}, {"even_normalised", e02}, {"factor", kParityFactor}});
  });
}

void main_terms(Builder& b, const VerifyOptions& o) {
  b.guarded("pair-sum main term at equal orders matches the diagonal formula", [&] {
    std::mt19937_64 rng(o.seed ^ 0x6d61696eULL);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < kMainTermPolys; ++i) {
      const int len = 1 + static_cast<int>(U(rng) * 40);
      std::vector<std::pair<std::uint64_t, cd>> c;
      for (std::uint64_t n = 1; n <= 400 && static_cast<int>(c.size()) < len; ++n)
        if (U(rng) < 0.3 || n == 1) c.emplace_back(n, cd(2.0 * U(rng) - 1.0, i % 2 ? 2.0 * U(rng) - 1.0 : 0.0));
      const auto p = mollifier::make_explicit(c, 0.0, 0.1, false);
      const WindowSpec w = WindowSpec::from_exponents(std::pow(10.0, 4.0 + 2.0 * U(rng)), 0.75 + 0.2 * U(rng), 0.0);
      const int k = i % 4;
      const double a = ms::main_term_thm4(p, w, k, k), z = ms::main_term_thm0(p, w, k);
      worst = std::max(worst, std::abs(a - z) / std::max(std::abs(z), 1e-300));
    }
    b.add("pair-sum main term at equal orders matches the diagonal formula", worst <= kMainTermExactRel,
          {{"polys", kMainTermPolys}, {"max_rel_diff", worst}, {"tol", kMainTermExactRel}});
  });
  b.guarded("mollifier-case ratio", [&] {
    const double Xs[3] = {1e2, 1e3, 1e4};
    for (auto [k1, k2] : {std::pair{0, 0}, std::pair{1, 1}, std::pair{0, 2}}) {
      std::vector<double> ratio, dev;
      for (double X : Xs) {
        const double T = std::pow(X, 1.0 / kMollTheta);
        const WindowSpec w = WindowSpec::from_exponents(T, kMollA, kMollTheta);
        const auto p = mollifier::build_mollifier(T, kMollTheta);
        ratio.push_back(ms::main_term_thm4(p, w, k1, k2) / ms::moment_prod_hardy(w, k1, k2));
        dev.push_back(std::abs(ratio.back() - 1.0));
      }
      const bool primary = k1 == 0 && k2 == 0;
      const std::string tag = "(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
      b.add("mollifier-case ratio " + tag + " trends to 1", strictly_decreasing(dev),
            {{"X", Xs}, {"theta", kMollTheta}, {"ratio", ratio}}, !primary);
      b.add("mollifier-case ratio " + tag + " within 10% at X=1e4", dev[2] <= kMollCaseTol,
            {{"ratio", ratio[2]}, {"tol", kMollCaseTol}}, !primary);
    }
  });
}

void oscillatory(Builder& b, const VerifyOptions& o) {
  b.guarded("stationary phase", [&] {
    for (double H : {kOscT, 1e3}) {
      const bool primary = H == kOscT;
      const WindowSpec w = WindowSpec::from_length(kOscT, H, 0.0);
      for (int alpha = 0; alpha <= 2; ++alpha) {
        const double xi = kOscT + H / 2.0;
        const auto r = ms::oscillatory_window_integral(xi, alpha, w, o.prec);
        const double rel = std::abs(r.numeric - r.prediction) / std::abs(r.prediction);
        std::ostringstream name;
        name << "alpha=" << alpha << " H=" << H;
        b.add(name.str(), rel <= kOscTol,
              {{"xi", xi}, {"rel_diff", rel}, {"tol", kOscTol}, {"in_regime", r.in_regime}}, !primary);
      }
    }
  });
}

void zeros_suite(Builder& b, const VerifyOptions& o) {
  using namespace zeros;
  const auto& prec = o.prec;
  b.guarded("low zeros of zeta", [&] {
    const FunctionId z0{Family::zeta_k, 0};
    const auto scan = find_Zk_zeros(0, 0.0, 50.0, prec);
    const auto boxed = find_zeros_in_box(z0, {0.0, 1.0, 2.0, 50.0}, prec);
    const int wc = winding_count(z0, {0.0, 1.0, 2.0, 50.0}, prec);
    double loc = 0.0;
    bool same = scan.size() == boxed.size();
    for (std::size_t i = 0; same && i < scan.size(); ++i)
      loc = std::max({loc, std::abs(scan[i].t - boxed[i].t), std::abs(boxed[i].sigma - 0.5)});
    const bool ok = same && scan.size() == 10 && wc == 10 && loc < kZeroLocTol;
    b.add("10 zeros below t=50", ok,
          {{"scan", scan.size()}, {"winding", wc}, {"located", boxed.size()}, {"max_location_diff", loc}});
  });
  b.guarded("subdivision additivity", [&] {
    std::mt19937_64 rng(o.seed ^ 0x7a65726fULL);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int bad = 0, total = 0;
    for (int k = 0; k <= 2; ++k) {
      const FunctionId fn{Family::zeta_k, k};
      for (int i = 0; i < kAdditivityBoxes; ++i) {
        const double s0 = -0.5 + 1.5 * U(rng), t0 = 10.0 + 190.0 * U(rng);
        const RectBox box{s0, s0 + 0.2 + 1.8 * U(rng), t0, t0 + 0.5 + 4.5 * U(rng)};
        const auto root = winding(fn, box, prec);
        const RectBox& B = root.box;
        const double sm = 0.5 * (B.sigma_min + B.sigma_max), tm = 0.5 * (B.t_min + B.t_max);
        int sum = 0;
        for (const RectBox& q : {RectBox{B.sigma_min, sm, B.t_min, tm}, RectBox{sm, B.sigma_max, B.t_min, tm},
                                 RectBox{B.sigma_min, sm, tm, B.t_max}, RectBox{sm, B.sigma_max, tm, B.t_max}})
          sum += winding_count(fn, q, prec);
        ++total;
        if (sum != root.zeros) ++bad;
      }
    }
    b.add("2x2 subdivision additivity", bad == 0, {{"boxes", total}, {"mismatches", bad}});
  });
  b.guarded("weighted zero-sum margins", [&] {
    const WindowSpec w = WindowSpec::from_length(1e3, 1e2, 0.0);
    for (int k = 1; k <= 2; ++k) {
      const FunctionId fn{Family::zeta_k, k};
      const auto R = littlewood_weighted_sum(fn, w, Side::right, nullptr, prec);
      const auto L = littlewood_weighted_sum(fn, w, Side::left, nullptr, prec);
      const double th = sharpest_theta_thm6(k, w);
      const auto ca = thm6a_check(k, w, R.sum, th), cb = thm6b_check(k, w, L.sum, th);
      auto det = [&](const InequalityCheck& c, std::size_t n) {
        return json{{"zeros", n}, {"lhs", c.lhs}, {"rhs_main", c.rhs_main}, {"slack", c.slack},
                    {"margin", c.margin}, {"theta", c.theta}};
      };
      b.add("weighted zero-sum bound (a) k=" + std::to_string(k), ca.holds, det(ca, R.zeros));
      b.add("weighted zero-sum bound (b) k=" + std::to_string(k), cb.holds, det(cb, L.zeros));
    }
  });
  b.guarded("Levinson-Montgomery trend", [&] {
    std::vector<double> rel;
    json d = json::array();
    for (double H : {50.0, 200.0}) {
      const WindowSpec w = WindowSpec::from_length(1e3, H, 0.0);
      const auto F = littlewood_full({Family::zeta_k, 1}, w, nullptr, prec);
      const double disc = 2.0 * kPi * F.signed_sum - levinson_montgomery(1, w);
      rel.push_back(std::abs(disc) / H);
      d.push_back({{"H", H}, {"zeros", F.zeros}, {"two_pi_signed_sum", 2.0 * kPi * F.signed_sum},
                   {"prediction", levinson_montgomery(1, w)}, {"rel_discrepancy", rel.back()}});
    }
    b.add("signed sum discrepancy shrinks from H=50 to H=200", rel[1] < rel[0], {{"windows", d}});
  });
}

void lemmas(Builder& b, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed ^ 0x6c656d6dULL);
  const double xs[4] = {1e3, 1e4, 1e5, 1e6};
  b.guarded("squarefree phi-weighted sum", [&] {
    for (auto Q : {std::vector<double>{1.0}, std::vector<double>{0.0, 0.0, 1.0}}) {
      std::vector<double> dev;
      for (double x : xs) {
        const auto r = nt::squarefree_phi_weighted_sum(x, Q);
        dev.push_back(std::abs(r.exact / r.predicted - 1.0));
      }
      b.add(std::string("squarefree phi-weighted sum ratio trend, Q=") + (Q.size() == 1 ? "1" : "u^2"), strictly_decreasing(dev),
            {{"x", xs}, {"abs_ratio_minus_1", dev}});
    }
  });
  auto random_squarefree = [&](double lo, double hi) {
    std::uniform_real_distribution<double> E(std::log(lo), std::log(hi));
    for (;;) {
      const auto n = static_cast<std::uint64_t>(std::exp(E(rng)));
      if (n >= 3 && nt::mobius(n) != 0) return n;
    }
  };
  b.guarded("prime log sum", [&] {
    double C = 0.0;
    for (int i = 0; i < 300; ++i) {
      const auto n = nt::FactoredInteger::of(random_squarefree(1e3, 1e8));
      for (int k = 1; k <= 3; ++k) {
        const auto c = nt::prime_log_sum(n, k);
        C = std::max(C, c.value / c.scale);
      }
    }
    b.add("prime log sum fitted constant", C <= kLemmaMaxC, {{"samples", 300}, {"k", {1, 3}}, {"C", C}, {"limit", kLemmaMaxC}});
  });
  b.guarded("Moebius log divisor sum", [&] {
    double C = 0.0;
    for (int i = 0; i < 300; ++i) {
      const auto n = nt::FactoredInteger::of(random_squarefree(1e3, 1e8));
      for (int q = 1; q <= 3; ++q) {
        const auto c = nt::moebius_log_divisor_sum(n, q);
        C = std::max(C, std::abs(c.value) / c.scale);
      }
    }
    b.add("Moebius log divisor sum fitted constant", C <= kLemmaMaxC, {{"samples", 300}, {"q", {1, 3}}, {"C", C}, {"limit", kLemmaMaxC}});
  });
  b.guarded("coprime Moebius log sum", [&] {
    for (auto [k, d] : {std::pair{1, 1}, std::pair{3, 2}, std::pair{2, 1}, std::pair{1, 6}}) {
      const auto D = nt::FactoredInteger::of(static_cast<std::uint64_t>(d));
      std::vector<double> dev;
      for (double x : xs) {
        const auto r = nt::coprime_mobius_log_sum(x, k, D);
        dev.push_back(std::abs(r.exact - r.predicted) / std::abs(r.predicted));
      }
      b.add("coprime Moebius log sum trend k=" + std::to_string(k) + " d=" + std::to_string(d), strictly_decreasing(dev),
            {{"x", xs}, {"rel_diff", dev}});
    }
  });
  b.guarded("log-power harmonic sum", [&] {
    const auto r0 = nt::log_power_harmonic_sum(1e6, 0);
    const double e0 = std::abs(r0.exact - r0.predicted);
    b.add("log-power harmonic sum k=0 x=1e6", e0 <= 1.0 / 1e6, {{"abs_diff", e0}, {"bound", 1.0 / 1e6}});
    const double x = 1e5, lx = std::log(x);
    const auto r2 = nt::log_power_harmonic_sum(x, 2);
    const double e2 = std::abs(r2.exact - r2.predicted);
    b.add("log-power harmonic sum k=2 x=1e5", e2 <= lx * lx / x, {{"abs_diff", e2}, {"bound", lx * lx / x}});
  });
}

struct Entry {
  int id;
  const char* suite;
  const char* title;
  void (*run)(Builder&, const VerifyOptions&);
};

const Entry kEntries[] = {
    {1, "identities", "exact identities", identities},
    {2, "afe", "approximate functional equation error decay", afe},
    {3, "moments", "second moment of Z and Z'", moments},
    {4, "mollified", "mollified mean square ratio and trend", mollified},
    {5, "parity", "odd-parity vanishing", parity},
    {6, "main-terms", "main-term engines", main_terms},
    {7, "oscillatory", "oscillatory window integral", oscillatory},
    {8, "zeros", "zero counting and weighted zero sums", zeros_suite},
    {9, "lemmas", "arithmetic lemma bounds and trends", lemmas},
};

CriterionResult run_entry(const Entry& e, const VerifyOptions& o) {
  Builder b;
  b.r.id = e.id;
  b.r.suite = e.suite;
  b.r.title = e.title;
  const auto t0 = std::chrono::steady_clock::now();
  e.run(b, o);
  b.r.seconds = elapsed(t0);
  b.r.passed = !b.r.checks.empty();
  for (const auto& c : b.r.checks)
    if (!c.informational && !c.passed) b.r.passed = false;
  return b.r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kEntries) v.emplace_back(e.suite);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& v = suite_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

std::vector<CriterionResult> run_suite(const std::string& name, const VerifyOptions& opt) {
  require(is_suite(name), "unknown suite '" + name + "'");
  std::vector<CriterionResult> out;
  for (const auto& e : kEntries)
    if (name == "all" || name == e.suite) out.push_back(run_entry(e, opt));
  return out;
}

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
  for (const auto& e : kEntries)
    if (e.id == id) return run_entry(e, opt);
  fail(ErrorKind::validation, "no criterion " + std::to_string(id));
}

json to_json(const std::vector<CriterionResult>& results) {
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"informational", c.informational},
                        {"detail", c.detail}});
    arr.push_back({{"criterion", r.id}, {"suite", r.suite}, {"title", r.title}, {"passed", r.passed},
                   {"seconds", r.seconds}, {"checks", checks}});
    all = all && r.passed;
  }
  return {{"passed", all}, {"criteria", arr}};
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << " [" << r.suite << "] " << r.title << " ("
     << std::fixed;
  os.precision(1);
  os << r.seconds << " s)";
  std::vector<std::string> failed;
  for (const auto& c : r.checks)
    if (!c.passed && !c.informational) failed.push_back(c.name);
  if (!failed.empty()) {
    os << "; failing:";
    for (const auto& f : failed) os << ' ' << '"' << f << '"';
  }
  return os.str();
}

}  // namespace zdl::verify
