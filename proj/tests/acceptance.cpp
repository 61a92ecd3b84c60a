// Acceptance suite: one PASS/FAIL line per criterion, with the individual
// checks listed underneath. Exit status is nonzero if any criterion fails
// or exceeds its time limit.

#include <cstdio>

#include "subshift/claims.hpp"

int main() {
  using namespace subshift;
  int failed = 0;
  for (const auto& result : claims::run_all()) {
    std::printf("[%s] criterion %d (%s): %s  %.2fs / %.0fs\n", result.passed() ? "PASS" : "FAIL",
                result.number, result.group.c_str(), result.title.c_str(), result.seconds,
                result.time_limit);
    for (const auto& check : result.checks) {
      std::printf("    %s %s%s%s\n", check.passed ? "ok  " : "FAIL", check.name.c_str(),
                  check.detail.empty() ? "" : " -- ", check.detail.c_str());
    }
    if (!result.within_time()) std::printf("    FAIL time limit exceeded\n");
    if (!result.passed()) ++failed;
  }
  std::printf("%s: %d criteria failed\n", failed ? "FAILED" : "ALL PASSED", failed);
  return failed ? 1 : 0;
}
