#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace zdl::quad {

struct GaussLegendre {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;

  static GaussLegendre make(int n);
  static const GaussLegendre& gl16();
  int size() const { return static_cast<int>(x.size()); }
};

// Uniform composite panels on [a, b].
struct PanelPlan {
  double a = 0.0;
  double b = 0.0;
  std::size_t panels = 1;

  double width() const { return (b - a) / static_cast<double>(panels); }
  double left(std::size_t i) const { return a + width() * static_cast<double>(i); }
  // panels sized so consecutive nodes are on average at most `spacing` apart
  static PanelPlan for_spacing(double a, double b, double spacing, int nodes_per_panel = 16);
};

// Batch integrand: fills out[i] = f(ts[i]) for i < n. Must be safe to call concurrently.
using BatchIntegrand = std::function<void(const double* ts, int n, double* out)>;

double panel_sum(const BatchIntegrand& f, double lo, double hi, const GaussLegendre& rule);

// Per-chunk persistence hook; chunk sums are stored exactly (hexfloat on disk).
struct ChunkStore {
  std::function<std::optional<double>(std::size_t chunk)> load;
  std::function<void(std::size_t chunk, double value)> save;
};

struct QuadResult {
  double value = 0.0;
  double est_error = 0.0;  // from halving every refine_stride-th panel
  std::size_t panels = 0;
  std::size_t nodes = 0;
  std::size_t chunks_resumed = 0;
};

struct QuadOptions {
  std::size_t chunk = 1024;        // panels per reduction / checkpoint unit
  std::size_t refine_stride = 32;  // every n-th panel is re-done as two halves
  const ChunkStore* store = nullptr;
};

// Serial reference and OpenMP kernel. Both reduce panel sums in panel order with
// compensated summation, so results are bit-identical for any thread count.
QuadResult integrate_serial(const BatchIntegrand& f, const PanelPlan& plan, const QuadOptions& opt = {});
QuadResult integrate_parallel(const BatchIntegrand& f, const PanelPlan& plan, const QuadOptions& opt = {});

// Scalar convenience wrapper.
BatchIntegrand batch(std::function<double(double)> f);

}  // namespace zdl::quad
