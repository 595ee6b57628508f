#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdl/precision.hpp"

namespace zdl::verify {

struct Check {
  std::string name;
  bool passed = false;
  bool informational = false;  // reported, not part of the verdict
  nlohmann::json detail;
};

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::vector<Check> checks;
};

struct VerifyOptions {
  PrecisionConfig prec;
  std::uint64_t seed = 20240611ULL;
};

// identities, afe, moments, mollified, parity, main-terms, oscillatory, zeros, lemmas (criteria 1..9) and all
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// unknown suite -> validation error
std::vector<CriterionResult> run_suite(const std::string& name, const VerifyOptions& opt = {});
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});

nlohmann::json to_json(const std::vector<CriterionResult>& results);
std::string summary_line(const CriterionResult& r);

}  // namespace zdl::verify
