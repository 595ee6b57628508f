#include "zdl/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "zdl/errors.hpp"
#include "zdl/numeric.hpp"

namespace zdl::quad {

GaussLegendre GaussLegendre::make(int n) {
  require(n >= 1 && n <= 128, "Gauss-Legendre order out of range");
  GaussLegendre g;
  g.x.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(3.14159265358979323846L * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    g.x[n - 1 - i] = static_cast<double>(x);
    g.w[n - 1 - i] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
  }
  return g;
}

const GaussLegendre& GaussLegendre::gl16() {
  static const GaussLegendre g = make(16);
  return g;
}

PanelPlan PanelPlan::for_spacing(double a, double b, double spacing, int nodes_per_panel) {
  require(b > a, "integration interval must have b > a");
  require(spacing > 0.0, "node spacing must be positive");
  PanelPlan p;
  p.a = a;
  p.b = b;
  p.panels = static_cast<std::size_t>(std::ceil((b - a) / (spacing * nodes_per_panel)));
  p.panels = std::max<std::size_t>(p.panels, 1);
  return p;
}

double panel_sum(const BatchIntegrand& f, double lo, double hi, const GaussLegendre& rule) {
  constexpr int kMax = 128;
  const int n = rule.size();
  double ts[kMax], ys[kMax];
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i) ts[i] = c + h * rule.x[i];
  f(ts, n, ys);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += rule.w[i] * ys[i];
  return s * h;
}

BatchIntegrand batch(std::function<double(double)> f) {
  return [f = std::move(f)](const double* ts, int n, double* out) {
    for (int i = 0; i < n; ++i) out[i] = f(ts[i]);
  };
}

namespace {

struct PanelOut {
  double value = 0.0;
  double refine_diff = 0.0;
};

PanelOut do_panel(const BatchIntegrand& f, const PanelPlan& plan, std::size_t i, std::size_t stride) {
  const auto& rule = GaussLegendre::gl16();
  const double lo = plan.left(i);
  const double hi = (i + 1 == plan.panels) ? plan.b : plan.left(i + 1);
  PanelOut o;
  o.value = panel_sum(f, lo, hi, rule);
  if (stride && i % stride == stride / 2) {
    const double mid = 0.5 * (lo + hi);
    const double fine = panel_sum(f, lo, mid, rule) + panel_sum(f, mid, hi, rule);
    o.refine_diff = std::abs(fine - o.value);
  }
  return o;
}

template <bool Parallel>
QuadResult integrate_impl(const BatchIntegrand& f, const PanelPlan& plan, const QuadOptions& opt) {
  require(opt.chunk >= 1, "chunk size must be >= 1");
  const std::size_t P = plan.panels;
  const std::size_t nchunks = (P + opt.chunk - 1) / opt.chunk;
  QuadResult r;
  r.panels = P;
  const std::size_t npp = static_cast<std::size_t>(GaussLegendre::gl16().size());
  Compensated total;
  double diff_total = 0.0;
  std::size_t refined = 0;
  std::vector<PanelOut> buf(opt.chunk);
  for (std::size_t c = 0; c < nchunks; ++c) {
    const std::size_t p0 = c * opt.chunk;
    const std::size_t p1 = std::min(P, p0 + opt.chunk);
    if (opt.store && opt.store->load) {
      if (auto v = opt.store->load(c)) {
        total.add(*v);
        ++r.chunks_resumed;
        continue;
      }
    }
    const auto n = static_cast<long long>(p1 - p0);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (long long j = 0; j < n; ++j) buf[j] = do_panel(f, plan, p0 + j, opt.refine_stride);
    } else {
      for (long long j = 0; j < n; ++j) buf[j] = do_panel(f, plan, p0 + j, opt.refine_stride);
    }
    Compensated chunk_sum;
    for (long long j = 0; j < n; ++j) {
      chunk_sum.add(buf[j].value);
      if (opt.refine_stride && (p0 + j) % opt.refine_stride == opt.refine_stride / 2) {
        diff_total += buf[j].refine_diff;
        ++refined;
      }
      r.nodes += npp;
    }
    const double cv = chunk_sum.value();
    if (opt.store && opt.store->save) opt.store->save(c, cv);
    total.add(cv);
  }
  r.value = total.value();
  // mean refinement change per sampled panel, extrapolated to all panels
  r.est_error = refined ? diff_total / static_cast<double>(refined) * static_cast<double>(P) : 0.0;
  return r;
}

}  // namespace

QuadResult integrate_serial(const BatchIntegrand& f, const PanelPlan& plan, const QuadOptions& opt) {
  return integrate_impl<false>(f, plan, opt);
}

QuadResult integrate_parallel(const BatchIntegrand& f, const PanelPlan& plan, const QuadOptions& opt) {
  return integrate_impl<true>(f, plan, opt);
}

}  // namespace zdl::quad
