// Runs every acceptance criterion and prints one verdict line per criterion.

#include <iostream>
#include <string>

#include "polycfg.hpp"

int main(int argc, char** argv) {
  polycfg::AcceptanceOptions opt;
  std::vector<polycfg::CriterionResult> results;
  for (const auto& c : polycfg::acceptance_criteria()) {
    bool selected = argc < 2;
    for (int i = 1; i < argc; ++i) selected = selected || std::to_string(c.id) == argv[i];
    if (!selected) continue;
    results.push_back(polycfg::run_criterion(c, opt));
    std::cout << polycfg::format_result(results.back()) << std::endl;
  }
  int code = polycfg::acceptance_exit_code(results);
  std::cout << (code == 0 ? "all criteria passed" : "some criteria did not pass") << std::endl;
  return code;
}
