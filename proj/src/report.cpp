#include "zdl/report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "zdl/errors.hpp"

namespace zdl::report {

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

nlohmann::json jnum(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

std::string csv_row(const ms::MeanSquareReport& r) {
  const auto& w = r.window;
  std::ostringstream os;
  os << num(w.T) << ',' << num(w.a) << ',' << num(w.H) << ',' << num(w.theta) << ',' << num(w.X) << ',' << r.k1
     << ',' << r.k2 << ',' << num(r.numeric_integral) << ',' << num(r.main_term) << ',' << num(r.ratio) << ','
     << num(r.paper_error_scale) << ',' << r.panels;
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<ms::MeanSquareReport>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << csv_row(r) << '\n';
}

void write_csv_file(const std::string& path, const std::vector<ms::MeanSquareReport>& rows) {
  std::ofstream os(path);
  require(static_cast<bool>(os), "cannot open " + path + " for writing");
  write_csv(os, rows);
}

std::string to_json(const std::vector<ms::MeanSquareReport>& rows, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"T", r.window.T},
                   {"a", r.window.a},
                   {"H", r.window.H},
                   {"theta", r.window.theta},
                   {"X", r.window.X},
                   {"k1", r.k1},
                   {"k2", r.k2},
                   {"numeric", jnum(r.numeric_integral)},
                   {"main_term", jnum(r.main_term)},
                   {"ratio", jnum(r.ratio)},
                   {"err_scale", jnum(r.paper_error_scale)},
                   {"panels", r.panels}});
  }
  return arr.dump(indent);
}

}  // namespace zdl::report
