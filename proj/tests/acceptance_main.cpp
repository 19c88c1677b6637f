// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure.
#include <cstdio>

#include "elax/acceptance.hpp"

int main() {
  auto results = elax::run_acceptance("acceptance_scratch");
  bool all_ok = true;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-30s %s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && r.pass;
  }
  return all_ok ? 0 : 1;
}
