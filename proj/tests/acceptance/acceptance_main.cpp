#include <iostream>

#include <CLI11.hpp>

#include "criteria.hpp"

int main(int argc, char** argv) {
  conway::acceptance::Options options;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--seed", options.seed, "Seed for randomized checks");
  app.add_option("--workers", options.workers, "Enumeration worker threads");
  app.add_flag("--stretch", options.stretch, "Also run the 2-(12,4,3) count");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  int conflicts = 0;
  for (const auto& outcome : conway::acceptance::RunAll(options)) {
    conway::acceptance::Print(std::cout, outcome);
    if (outcome.passed) continue;
    if (outcome.known_conflict) ++conflicts;
    else ++failed;
  }
  std::cout << failed << " unexpected failures, " << conflicts << " known conflicts" << std::endl;
  return failed == 0 ? 0 : 1;
}
