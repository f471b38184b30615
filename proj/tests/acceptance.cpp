#include <cstdio>
#include <cstdlib>
#include <string>

#include "afweak/suites.hpp"

int main(int argc, char** argv) {
  using namespace afweak::suites;
  const auto seed = seed_from_env();
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  for (int k = 1; k <= 10; ++k) {
    if (only && k != only) continue;
    CheckResult r = criterion(k, seed);
    failed += !r.pass;
    std::printf("criterion %2d %s  %-40s %8.2fs  %s\n", k, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
