// Acceptance gate: runs the twelve numbered criteria and prints one line per
// criterion. Exit status is the number of failed criteria, so any red line
// fails the build.

#include "staircase/suite.hpp"

#include <cstdio>

int main() {
  const auto results = staircase::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-32s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL",
                r.number, r.name.c_str(), r.seconds, r.detail.c_str());
    if (!r.passed) {
      ++failed;
    }
  }
  std::printf("%d/12 criteria passed\n", 12 - failed);
  return failed;
}
