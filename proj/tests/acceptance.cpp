// One PASS/FAIL line per criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>

#include "circdet/acceptance.hpp"

int main(int argc, char** argv) {
  circdet::AcceptanceOptions opt;
  if (argc > 1) opt.workers = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
  auto suite = circdet::acceptance_suite(opt);
  int failed = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    circdet::CriterionResult r = circdet::run_criterion(suite[i], static_cast<int>(i) + 1);
    std::printf("%s criterion %d %s (%.2f s): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(suite.size()) - failed, suite.size());
  return failed ? 1 : 0;
}
