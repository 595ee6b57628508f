#include "zdl/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <omp.h>

#include "zdl/dirichlet.hpp"
#include "zdl/report.hpp"

namespace zdl::sweep {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hexfloat(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

class FileChunkStore {
 public:
  FileChunkStore(std::string path, std::size_t* saved, std::size_t limit)
      : path_(std::move(path)), saved_(saved), limit_(limit) {
    std::ifstream is(path_);
    std::string line;
    while (std::getline(is, line)) {
      std::istringstream ls(line);
      std::size_t c;
      std::string v;
      if (!(ls >> c >> v)) continue;  // a torn last line is simply recomputed
      values_[c] = std::strtod(v.c_str(), nullptr);
    }
    store_.load = [this](std::size_t c) -> std::optional<double> {
      auto it = values_.find(c);
      if (it == values_.end()) return std::nullopt;
      return it->second;
    };
    store_.save = [this](std::size_t c, double v) {
      std::ofstream os(path_, std::ios::app);
      os << c << ' ' << hexfloat(v) << '\n';
      os.flush();
      ++*saved_;
      if (limit_ && *saved_ >= limit_) throw Interrupted("sweep interrupted after checkpoint");
    };
  }
  const quad::ChunkStore* get() const { return &store_; }

 private:
  std::string path_;
  std::size_t* saved_;
  std::size_t limit_;
  std::map<std::size_t, double> values_;
  quad::ChunkStore store_;
};

mollifier::DirichletPolynomial polynomial_for(const SweepGrid& g, const CellSpec& c) {
  switch (g.coefficients) {
    case Coefficients::unit:
      return mollifier::unit_polynomial();
    case Coefficients::file:
      return mollifier::read_coefficients_csv(g.coefficient_file);
    case Coefficients::mollifier:
      if (c.theta == 0.0) return mollifier::unit_polynomial();
      return mollifier::build_mollifier(c.T, c.theta);
  }
  return mollifier::unit_polynomial();
}

}  // namespace

std::string CellSpec::key() const {
  std::ostringstream os;
  os << "T=" << hexfloat(T) << ";a=" << hexfloat(a) << ";theta=" << hexfloat(theta) << ";k1=" << k1
     << ";k2=" << k2;
  return os.str();
}

std::vector<CellSpec> expand(const SweepGrid& g) {
  std::vector<CellSpec> cells;
  for (double T : g.T)
    for (double a : g.a)
      for (double th : g.theta)
        for (auto [k1, k2] : g.orders) {
          CellSpec c;
          c.index = cells.size();
          c.T = T;
          c.a = a;
          c.theta = th;
          c.k1 = k1;
          c.k2 = k2;
          cells.push_back(c);
        }
  return cells;
}

SweepResult run_sweep(const SweepGrid& grid, const SweepOptions& opt) {
  opt.prec.validate();
  if (opt.workers > 0) omp_set_num_threads(opt.workers);
  if (!opt.checkpoint_dir.empty()) std::filesystem::create_directories(opt.checkpoint_dir);
  SweepResult res;
  std::size_t saved = 0;
  for (const auto& cell : expand(grid)) {
    CellOutcome out;
    out.spec = cell;
    auto& r = out.report;
    r.window.T = cell.T;
    r.window.a = cell.a;
    r.window.theta = cell.theta;
    r.window.H = std::pow(cell.T, cell.a);
    r.window.X = std::pow(cell.T, cell.theta);
    r.k1 = cell.k1;
    r.k2 = cell.k2;
    r.numeric_integral = r.main_term = r.paper_error_scale = std::numeric_limits<double>::quiet_NaN();
    try {
      const WindowSpec w = WindowSpec::from_exponents(cell.T, cell.a, cell.theta);
      const auto poly = polynomial_for(grid, cell);
      ms::IntegrationOptions io = opt.integration;
      std::unique_ptr<FileChunkStore> store;
      if (!opt.checkpoint_dir.empty()) {
        std::ostringstream name;
        name << "cell-" << cell.index << '-' << std::hex << fnv1a(cell.key()) << ".ckpt";
        store = std::make_unique<FileChunkStore>(
            (std::filesystem::path(opt.checkpoint_dir) / name.str()).string(), &saved,
            opt.interrupt_after_chunks);
        io.store = store->get();
      }
      out.report = ms::mean_square_cell(poly, w, cell.k1, cell.k2, opt.prec, io);
      out.ok = true;
    } catch (const Interrupted&) {
      throw;
    } catch (const Error& e) {
      out.error = e.what();
      out.error_kind = e.kind();
    } catch (const std::exception& e) {
      out.error = e.what();
      out.error_kind = ErrorKind::validation;
    }
    if (!out.ok) ++res.failed;
    res.cells.push_back(std::move(out));
  }
  if (!opt.out_csv.empty()) {
    std::vector<ms::MeanSquareReport> rows;
    for (const auto& c : res.cells) rows.push_back(c.report);
    report::write_csv_file(opt.out_csv, rows);
  }
  return res;
}

}  // namespace zdl::sweep
