// One line per acceptance criterion; exit status 1 if any is red.
#include <cstdio>

#include "affgr/verify.hpp"

int main() {
  const char* labels[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7"};
  bool ok = true;
  int k = 0;
  for (const auto& r : affgr::run_suite("all")) {
    ok = ok && r.passed;
    std::printf("%s %-15s %s  %s [%.1fs]\n", labels[k++], r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.summary.c_str(), r.seconds);
    for (const auto& f : r.failures) std::printf("      %s\n", f.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
