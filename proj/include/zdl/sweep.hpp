#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zdl/errors.hpp"
#include "zdl/meansquare.hpp"

namespace zdl::sweep {

enum class Coefficients { mollifier, unit, file };

struct SweepGrid {
  std::vector<double> T;
  std::vector<double> a;
  std::vector<double> theta;
  std::vector<std::pair<int, int>> orders;  // (k1, k2)
  Coefficients coefficients = Coefficients::mollifier;
  std::string coefficient_file;

  std::size_t size() const { return T.size() * a.size() * theta.size() * orders.size(); }
};

struct CellSpec {
  std::size_t index = 0;
  double T = 0.0, a = 0.0, theta = 0.0;
  int k1 = 0, k2 = 0;

  // stable text key, also hashed into the checkpoint file name
  std::string key() const;
};

// cells in T, a, theta, order nesting
std::vector<CellSpec> expand(const SweepGrid& g);

struct CellOutcome {
  CellSpec spec;
  bool ok = false;
  ms::MeanSquareReport report;  // parameters filled even on failure, numbers NaN
  std::string error;
  ErrorKind error_kind = ErrorKind::validation;
};

struct SweepOptions {
  std::string out_csv;          // empty: no file
  std::string checkpoint_dir;   // empty: no checkpointing
  int workers = 0;              // 0 leaves the OpenMP default
  PrecisionConfig prec;
  ms::IntegrationOptions integration;
  std::size_t interrupt_after_chunks = 0;  // test hook: simulate a kill after this many saved chunks
};

struct SweepResult {
  std::vector<CellOutcome> cells;
  std::size_t failed = 0;
};

class Interrupted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every cell runs even if earlier cells fail; the CSV is written once, after the last cell.
SweepResult run_sweep(const SweepGrid& grid, const SweepOptions& opt);

}  // namespace zdl::sweep
