#include <cmath>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "zdl/dirichlet.hpp"
#include "zdl/errors.hpp"
#include "zdl/hardy.hpp"
#include "zdl/meansquare.hpp"
#include "zdl/zeros.hpp"
#include "zdl/zeta.hpp"

using namespace zdl;
using namespace zdl::zeros;

namespace {

const FunctionId kZeta{Family::zeta_k, 0};
constexpr double kFirstZero = 14.134725141734693;

// sign-change scan plus bisection on Z, independent of the library's scan
std::vector<double> z_sign_zeros(double a, double b) {
  std::vector<double> out;
  auto Z = [](double t) { return hardy::Z_exact(t, 0).value; };
  const double step = 0.05;
  double t0 = a, z0 = Z(a);
  for (double t1 = a + step; t1 <= b; t1 += step) {
    const double z1 = Z(t1);
    if ((z0 < 0) != (z1 < 0)) {
      double lo = t0, hi = t1, flo = z0;
      for (int i = 0; i < 60; ++i) {
        const double m = 0.5 * (lo + hi), fm = Z(m);
        if ((fm < 0) == (flo < 0)) {
          lo = m;
          flo = fm;
        } else {
          hi = m;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    t0 = t1;
    z0 = z1;
  }
  return out;
}

// log|zeta'(2+it)| from a truncated Dirichlet series with an Euler-Maclaurin tail
double log_abs_zeta1_series(double t) {
  const int N = 2000;
  const cd s(2.0, t);
  cd acc = 0.0;
  for (int n = 2; n < N; ++n) acc -= std::log(static_cast<double>(n)) * std::exp(-s * std::log(static_cast<double>(n)));
  const double lN = std::log(static_cast<double>(N));
  const cd fN = -lN * std::exp(-s * lN);
  const cd tail = -std::exp((1.0 - s) * lN) * (lN / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
  return std::log(std::abs(acc + 0.5 * fN + tail));
}

}  // namespace

TEST_CASE("winding_count examples") {
  CHECK(winding_count(kZeta, {0.0, 1.0, 10.0, 20.0}) == 1);
  CHECK(winding_count(kZeta, {0.0, 1.0, 2.0, 10.0}) == 0);
  CHECK(winding_count({Family::eta_k, 1}, {2.2, 2.8, 20.0, 21.0}) == 0);
  CHECK(winding_count({Family::unit, 0}, {-3.0, 3.0, 5.0, 50.0}) == 0);
}

TEST_CASE("winding counts poles inside the box") {
  const auto r = winding(kZeta, {0.5, 1.5, -0.5, 0.5});
  CHECK(r.poles == 1);
  CHECK(r.winding == -1);
  CHECK(r.zeros == 0);
  const auto r1 = winding({Family::zeta_k, 1}, {0.5, 1.5, -0.5, 0.5});
  CHECK(r1.poles == 2);
  CHECK(r1.zeros == 0);
}

TEST_CASE("eta_k boxes touching omega poles are rejected") {
  CHECK_THROWS_AS(winding({Family::eta_k, 1}, {0.5, 1.5, -0.5, 0.5}), Error);
  CHECK_THROWS_AS(winding({Family::Z_k, 3}, {-2.5, -1.5, -0.5, 0.5}), Error);
  CHECK_THROWS_AS(RectBox({1.0, 0.0, 0.0, 1.0}).validate(), Error);
}

TEST_CASE("find_Zk_zeros examples") {
  const auto a = find_Zk_zeros(0, 10.0, 15.0);
  REQUIRE(a.size() == 1);
  CHECK(a[0].t == doctest::Approx(kFirstZero).epsilon(1e-9));
  CHECK(a[0].sigma == 0.5);
  CHECK(find_Zk_zeros(0, 2.0, 13.0).empty());

  const auto d = find_Zk_zeros(1, 1.0, 30.0);
  const int wc = winding_count({Family::Z_k, 1}, {0.4, 0.6, 1.0, 30.0});
  CHECK(static_cast<int>(d.size()) == wc);
  CHECK(d.size() == 5);
}

TEST_CASE("low zeros: library scan, box search and an independent sign scan agree") {
  const auto oracle = z_sign_zeros(2.0, 50.0);
  REQUIRE(oracle.size() == 10);
  const auto scan = find_Zk_zeros(0, 2.0, 50.0);
  const auto boxed = find_zeros_in_box(kZeta, {0.0, 1.0, 2.0, 50.0});
  REQUIRE(scan.size() == 10);
  REQUIRE(boxed.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(scan[i].t == doctest::Approx(oracle[i]).epsilon(1e-10));
    CHECK(std::abs(boxed[i].t - oracle[i]) < 1e-8);
    CHECK(std::abs(boxed[i].sigma - 0.5) < 1e-8);
    CHECK(boxed[i].multiplicity == 1);
    CHECK(boxed[i].residual < 1e-10);
  }
}

TEST_CASE("scan count matches winding count up to t = 100") {
  const auto scan = find_Zk_zeros(0, 0.0, 100.0);
  CHECK(static_cast<int>(scan.size()) == winding_count(kZeta, {0.0, 1.0, 0.0, 100.0}));
  CHECK(scan.size() == 29);
}

TEST_CASE("winding counts are additive under 2x2 subdivision") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int k = 0; k <= 2; ++k) {
    const FunctionId fn{Family::zeta_k, k};
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const double s0 = -0.5 + 1.5 * U(rng), t0 = 10.0 + 190.0 * U(rng);
      const auto root = winding(fn, {s0, s0 + 0.2 + 1.8 * U(rng), t0, t0 + 0.5 + 4.5 * U(rng)});
      const RectBox& B = root.box;
      const double sm = 0.5 * (B.sigma_min + B.sigma_max), tm = 0.5 * (B.t_min + B.t_max);
      const int sum = winding_count(fn, {B.sigma_min, sm, B.t_min, tm}) + winding_count(fn, {sm, B.sigma_max, B.t_min, tm}) +
                      winding_count(fn, {B.sigma_min, sm, tm, B.t_max}) + winding_count(fn, {sm, B.sigma_max, tm, B.t_max});
      if (sum != root.zeros) ++bad;
    }
    CHECK_MESSAGE(bad == 0, "k=" << k);
  }
}

TEST_CASE("eta_2 zeros near the line coincide with Z'' zeros") {
  const auto e = find_zeros_in_box({Family::eta_k, 2}, {0.3, 0.7, 100.0, 150.0});
  const auto z = find_Zk_zeros(2, 100.0, 150.0);
  REQUIRE(e.size() == z.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(std::abs(e[i].sigma - 0.5) < 1e-7);
    CHECK(std::abs(e[i].t - z[i].t) < 1e-7);
  }
}

TEST_CASE("multiplicity of a double zero") {
  // Phi(s) = (1 - 2^{1/2-s})^2 has a double zero at s = 1/2
  const auto p = mollifier::make_explicit({{1, cd(1.0)}, {2, cd(-2.0 * std::sqrt(2.0))}, {4, cd(2.0)}}, 0.0, 0.1, false);
  const auto zs = find_zeros_in_box({Family::unit, 0}, {0.3, 0.7, -1.0, 1.0}, {}, &p);
  REQUIRE(zs.size() == 1);
  CHECK(zs[0].multiplicity == 2);
  CHECK(std::abs(zs[0].sigma - 0.5) < 1e-4);
  CHECK(std::abs(zs[0].t) < 1e-4);
}

TEST_CASE("Littlewood sums for zeta' at T = 1e3, H = 1e2") {
  const WindowSpec w = WindowSpec::from_length(1e3, 1e2, 0.0);
  const FunctionId z1{Family::zeta_k, 1};
  const auto R = littlewood_weighted_sum(z1, w, Side::right);
  const auto L = littlewood_weighted_sum(z1, w, Side::left);
  CHECK(R.sum > 0.0);
  CHECK(R.zeros > 0);
  for (const auto& r : R.records) {
    CHECK(r.sigma > 0.5);
    CHECK(r.t >= w.T);
    CHECK(r.t <= w.T + w.H);
  }
  const double th = sharpest_theta_thm6(1, w);
  const auto a = thm6a_check(1, w, R.sum, th);
  const auto b = thm6b_check(1, w, L.sum, th);
  MESSAGE("zero-sum bound (a) margin " << a.margin << ", (b) margin " << b.margin);
  CHECK(a.holds);
  CHECK(b.holds);
  CHECK(a.margin == doctest::Approx(a.rhs_main + a.slack - a.lhs));
}

TEST_CASE("off-line count bound for eta_2 zeros right of the line") {
  const WindowSpec w = WindowSpec::from_length(1e2, 50.0, 0.0);
  const double th = sharpest_theta_thm2(2, w);
  for (double m : {3.0, 5.0, 10.0}) {
    const auto r = littlewood_weighted_sum({Family::eta_k, 2}, w, Side::right, nullptr, {}, m);
    const auto c = thm2_check(2, w, r.sum, th);
    CHECK_MESSAGE(c.holds, "m=" << m);
  }
}

TEST_CASE("Levinson-Montgomery discrepancy shrinks as H grows") {
  double prev = INFINITY;
  for (double H : {50.0, 200.0}) {
    const WindowSpec w = WindowSpec::from_length(1e3, H, 0.0);
    const auto F = littlewood_full({Family::zeta_k, 1}, w);
    const double rel = std::abs(2 * kPi * F.signed_sum - levinson_montgomery(1, w)) / H;
    CHECK(rel < prev);
    prev = rel;
  }
}

TEST_CASE("weighted sum over a zero-free function is zero") {
  const WindowSpec w = WindowSpec::from_length(1e3, 20.0, 0.0);
  const auto r = littlewood_weighted_sum({Family::unit, 0}, w, Side::right);
  CHECK(r.sum == 0.0);
  CHECK(r.zeros == 0);
}

TEST_CASE("log-modulus integral of the constant function") {
  const WindowSpec w = WindowSpec::from_length(1e3, 20.0, 0.0);
  CHECK(std::abs(log_modulus_line_integral({Family::unit, 0}, 0.5, w)) < 1e-14);
}

TEST_CASE("log-modulus integral of zeta' at sigma = 2 matches the series oracle") {
  const WindowSpec w = WindowSpec::from_length(1e3, 100.0, 0.0);
  const double lib = log_modulus_line_integral({Family::zeta_k, 1}, 2.0, w);
  const int n = 20000;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = w.T + w.H * i / n;
    s += log_abs_zeta1_series(t) * ((i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0));
  }
  s *= w.H / (3.0 * n);
  CHECK(std::abs(lib - s) < 1e-3);
  CHECK(std::abs(lib / (w.H * std::log(std::log(2.0) / 4.0)) - 1.0) < 0.05);
}

TEST_CASE("log-modulus of the mollified zeta is bounded by the log of its mean square") {
  const double T = 1e4, theta = 0.1;
  const WindowSpec w = WindowSpec::from_length(T, 1e2, theta);
  const auto p = mollifier::build_mollifier(T, theta);
  const double lhs = log_modulus_line_integral(kZeta, 0.5, w, &p);
  const double ms = ms::integrate_Izeta(p, w, 0, 0).numeric_integral;
  const double rhs = 0.5 * w.H * std::log(ms / w.H);
  MESSAGE("lhs " << lhs << " rhs " << rhs);
  CHECK(lhs <= rhs);
}

TEST_CASE("zero database round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "zdl_zero_db";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "z.csv").string();
  const auto zs = find_zeros_in_box({Family::zeta_k, 1}, {0.0, 3.0, 20.0, 40.0});
  write_zero_csv(zs, path);
  const auto back = read_zero_csv(path);
  REQUIRE(back.size() == zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    CHECK(back[i].fn.name() == "zeta_k");
    CHECK(back[i].fn.k == 1);
    CHECK(back[i].sigma == zs[i].sigma);
    CHECK(back[i].t == zs[i].t);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("function names") {
  CHECK(FunctionId::parse("eta_k", 3).name() == "eta_k");
  CHECK_THROWS_AS(FunctionId::parse("gamma", 0), Error);
}
