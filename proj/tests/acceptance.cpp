// One line per acceptance criterion; exit status is non-zero if any fails.
#include <chrono>
#include <cstdio>

#include "discpot/validation.hpp"

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = discpot::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", discpot::format_check(r).c_str());
    if (!r.pass) ++failed;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%zu criteria, %d failed, %.1f s\n", results.size(), failed, secs);
  return failed == 0 ? 0 : 1;
}
