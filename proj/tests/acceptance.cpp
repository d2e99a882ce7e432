// Runs the verification suite and prints one line per acceptance criterion.
// Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <string>

#include "autofrob/verify.hpp"

using namespace autofrob;

int main() {
  // Criterion k is the k-th check of the suite.
  const auto checks = verify_checks();
  int failed = 0, k = 0;
  const auto results = run_verify({}, [&](const CheckResult& r) {
    ++k;
    std::printf("criterion %2d  %-4s  %-16s %7.2f s  %s\n", k, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.title.c_str());
    for (const auto& d : r.details) std::printf("                %s\n", d.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  if (results.size() != 10 || checks.size() != 10) {
    std::printf("expected 10 criteria, ran %zu\n", results.size());
    return 1;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
