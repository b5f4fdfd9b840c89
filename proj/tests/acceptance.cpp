// Prints one PASS/FAIL line per acceptance criterion. With a check name as
// the argument only that check runs; the exit status is nonzero iff any
// printed line failed.
#include <cstdio>
#include <exception>
#include <vector>

#include "dweights/verification.hpp"

int main(int argc, char** argv) {
  try {
    const auto results = argc > 1 ? dweights::run_check(argv[1]) : dweights::run_all_checks();
    int failed = 0;
    for (const auto& r : results) {
      std::printf("%s %s  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
      failed += r.passed ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 2;
  }
}
