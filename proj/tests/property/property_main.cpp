#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "shortness/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"property suites"};
  std::uint64_t seed = 20240601;
  bool quick = false;
  app.add_option("--seed", seed, "seed");
  app.add_flag("--quick", quick, "10 random instances per suite instead of 50");
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (const auto& r : shortness::properties::run_all(seed, quick)) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    for (const auto& m : r.messages) std::cout << "     " << m << "\n";
    failures += r.ok() ? 0 : 1;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
