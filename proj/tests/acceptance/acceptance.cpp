// One PASS/FAIL line per acceptance criterion; tolerances are pinned in the verify module.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zdl/errors.hpp"
#include "zdl/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> ids;
  std::string json_out;
  app.add_option("--criterion", ids, "criterion numbers (default: all)")->check(CLI::Range(1, 9));
  app.add_option("--json", json_out, "write the detailed verdict here");
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int i = 1; i <= 9; ++i) ids.push_back(i);

  std::vector<zdl::verify::CriterionResult> results;
  bool all = true;
  for (int id : ids) {
    auto r = zdl::verify::run_criterion(id);
    std::cout << zdl::verify::summary_line(r) << std::endl;
    for (const auto& c : r.checks)
      std::cout << "    " << (c.passed ? "ok  " : (c.informational ? "info" : "FAIL")) << ' ' << c.name << ' '
                << c.detail.dump() << '\n';
    all = all && r.passed;
    results.push_back(std::move(r));
  }
  if (!json_out.empty()) std::ofstream(json_out) << zdl::verify::to_json(results).dump(2) << '\n';
  return all ? 0 : 1;
}
