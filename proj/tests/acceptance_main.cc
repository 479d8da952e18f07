#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance_suite.h"

// Runs every acceptance criterion and prints one line per criterion. Optional
// arguments: --seed N, --only K (repeatable).
int main(int argc, char** argv) {
  thetanull::acceptance::SuiteOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::stoull(argv[++i]);
    } else if (arg == "--only" && i + 1 < argc) {
      options.only.push_back(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance_test [--seed N] [--only K]...\n";
      return 2;
    }
  }
  std::cout << "seed " << options.seed << std::endl;
  int failed = 0;
  for (int id = 1; id <= thetanull::acceptance::kNumCriteria; ++id) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) ==
            options.only.end()) {
      continue;
    }
    const auto r = thetanull::acceptance::RunCriterion(id, options);
    std::cout << thetanull::acceptance::FormatResult(r) << std::endl;
    failed += r.passed ? 0 : 1;
  }
  std::cout << failed << " criteria failed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
