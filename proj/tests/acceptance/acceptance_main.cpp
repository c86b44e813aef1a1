#include <iostream>

#include "CLI11.hpp"
#include "shortness/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  shortness::acceptance::Options opt;
  int only = 0;
  app.add_flag("--quick", opt.quick, "smaller randomized harnesses");
  app.add_option("--threads", opt.threads, "worker threads (0: all cores)");
  app.add_option("--seed", opt.seed, "harness seed");
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(0, shortness::acceptance::kCriteria));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (int i = 1; i <= shortness::acceptance::kCriteria; ++i) {
    if (only && i != only) continue;
    const auto c = shortness::acceptance::run_criterion(i, opt);
    std::cout << shortness::acceptance::format(c) << std::endl;
    all = all && c.passed;
  }
  return all ? 0 : 1;
}
